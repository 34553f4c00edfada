#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sadic/core_ops.hpp"

namespace sadic {

/// One way of reading a pattern as a grid of image blocks of a single
/// substitution. `offset` is the position of the pattern's (0,0) cell inside
/// the first (bottom-left) block; re-applying the substitution to `preimage`
/// and shifting by the offset reproduces the pattern wherever both overlap,
/// exactly when `cropped` is false.
struct ParseResult {
    std::string substitution;
    int member = -1;
    int dx = 0;
    int dy = 0;
    RectPattern preimage;
    bool cropped = false;

    friend bool operator==(const ParseResult&, const ParseResult&) = default;
};

enum class ParseMode {
    anchored, // full blocks only, first block at (0,0)
    windowed  // blocks may be cut at all four margins, every offset searched
};

/// Every tiling of p by image blocks of a single member of the set, in
/// canonical order (name, offset, preimage). Empty list means unparseable.
std::vector<ParseResult> desubstitute(const RectPattern& p, const SubstitutionSet& set,
                                      ParseMode mode);

/// Tilings by one fixed member.
std::vector<ParseResult> desubstitute_by(const RectPattern& p, const SubstitutionSet& set,
                                         int member, ParseMode mode);

/// Candidates that could not be separated at the largest sample requested.
struct AmbiguityReport {
    std::vector<ParseResult> survivors; // >= 2 entries
    int sample_level = 0;
    int sample_width = 0;
    int sample_height = 0;
};

struct RecoveryOutcome {
    std::vector<std::string> names; // recovered prefix; partial on ambiguity
    std::optional<AmbiguityReport> ambiguity;

    bool ok() const { return !ambiguity.has_value(); }
};

/// Level-indexed oracle for patterns of the target language; patterns must
/// grow with the level.
using SampleProvider = std::function<RectPattern(int)>;

/// Recovers the first `depth` substitutions of the sequence behind the
/// samples: at each stage every (member, offset) that parses all provided
/// samples stays alive, samples grow until a single member survives, then
/// the stage recurses on the preimages. When the level budget runs out with
/// several members alive the partial prefix is returned with an
/// AmbiguityReport instead.
RecoveryOutcome recover_sequence(const SampleProvider& provider, const SubstitutionSet& set,
                                 int depth, int max_sample_level = 12);

struct DerivationCounterexample {
    RectPattern window;
    std::vector<ParseResult> parses; // >= 2 entries
};

struct UniqueDerivationOutcome {
    std::optional<DerivationCounterexample> counterexample;

    bool no_counterexample() const { return !counterexample.has_value(); }
};

/// Bounded probe: collects side x side windows of S-patterns (levels are
/// grown until every pattern reaches the window side) and reports the first
/// window admitting two distinct windowed parses. Finding none is a bounded
/// certificate only.
UniqueDerivationOutcome unique_derivation_check(const SubstitutionSet& set, int side,
                                                std::size_t budget);

} // namespace sadic
