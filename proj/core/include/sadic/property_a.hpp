#pragma once

#include <optional>
#include <vector>

#include "sadic/core_ops.hpp"

namespace sadic {

enum class PropertyAStatus {
    holds_uniform_support,
    holds_singleton,
    no_counterexample_up_to_bounds,
    counterexample,
    unknown,
};

const char* to_string(PropertyAStatus status);

/// A derivation chain of a 2x2 sub-block that no substitution-pattern chain
/// compatible with the enclosing S-pattern can reproduce.
struct PropertyAWitness {
    RectPattern pattern; // the S-pattern p
    int block_x = 0;     // placement of the 2x2 block l inside p
    int block_y = 0;
    std::vector<SubstitutionPattern> chain; // substitution patterns applied to l
    std::vector<RectPattern> derived;       // l_0 = l, l_1, ..., l_n
};

struct PropertyAVerdict {
    PropertyAStatus status = PropertyAStatus::unknown;
    std::optional<PropertyAWitness> witness;
};

/// Cheap sufficient conditions: a one-member set, or letter-independent
/// image supports for every member.
PropertyAVerdict sufficient_property_a(const SubstitutionSet& set);

/// Exhaustive search up to the bounds: S-patterns up to level `max_level`,
/// derivation chains of the 2x2 blocks up to length `max_depth`. Every chain
/// must extend to a chain on the whole pattern whose blocks derived from the
/// 2x2 placement are exactly the chain's patterns; the first chain that does
/// not extend is returned as a counterexample.
PropertyAVerdict bounded_property_a(const SubstitutionSet& set, int max_level, int max_depth,
                                    std::size_t budget);

/// Independent replay of a witness: the chain must reproduce its derived
/// patterns from the block, and the exhaustive extension search on the
/// enclosing pattern must come up empty (candidates visited in reverse
/// order, so the outcome does not depend on the original search order).
bool verify_property_a_witness(const SubstitutionSet& set, const PropertyAWitness& witness);

/// Support rectangle of the cells [x0, x0+w) x [y0, y0+h) after one
/// application with the given profile; this is how a block placement is
/// tracked through a derivation.
struct TrackedRect {
    int x0 = 0, y0 = 0, w = 0, h = 0;
};
TrackedRect track_through(const SizeProfile& profile, int x0, int y0, int w, int h);

} // namespace sadic
