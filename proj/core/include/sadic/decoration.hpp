#pragma once

#include <string>
#include <vector>

#include "sadic/core_ops.hpp"

namespace sadic {

/// Letter of the decorated alphabet: the base letter plus the two
/// substitution decorations it carries (member indices of the base set).
struct DecoratedLetter {
    Letter base;
    int v_dec = 0;
    int h_dec = 0;

    friend bool operator==(const DecoratedLetter&, const DecoratedLetter&) = default;
};

/// Base set together with its lift to the decorated alphabet. The lifted
/// image of (a, sV, sH) under s~ copies s(a) cellwise; the V decoration is s
/// everywhere except the rightmost column (which passes sV on), the H
/// decoration is s everywhere except the top row (which passes sH on).
/// Iterating a lifted sequence therefore records, along each row of V
/// decorations, the substitutions applied so far.
class DecoratedSystem {
public:
    static DecoratedSystem lift(const SubstitutionSet& base);

    const SubstitutionSet& base_set() const { return base_; }
    const SubstitutionSet& lifted_set() const { return lifted_; }

    Letter encode(const DecoratedLetter& d) const;
    DecoratedLetter decode(Letter lifted_letter) const;

    /// Member order is preserved by the lift, so the indices carry over.
    SequenceSpec lift_sequence(const SequenceSpec& seq) const { return seq; }

    RectPattern project_base(const RectPattern& decorated) const;
    SubstitutionPattern project_v(const RectPattern& decorated) const;
    SubstitutionPattern project_h(const RectPattern& decorated) const;

    /// True when H decorations are constant along every column and V
    /// decorations constant along every row.
    bool sync_check(const RectPattern& decorated) const;

private:
    DecoratedSystem(SubstitutionSet base, SubstitutionSet lifted);

    SubstitutionSet base_;
    SubstitutionSet lifted_;
};

/// Marker appended to member names by the lift.
inline constexpr char kLiftMarker = '~';

/// The lifted image rule for one member, as a substitution over the
/// decorated alphabet.
Substitution lift_substitution(const SubstitutionSet& set, std::string_view name);

/// V decorations of the bottom row of the level-n lifted iterate on the
/// seed, left to right, as member names of the base set.
std::vector<std::string> history_word(const SubstitutionSet& set, const SequenceSpec& seq,
                                      int level, const DecoratedLetter& seed);

} // namespace sadic
