#pragma once

#include <functional>

#include "sadic/substitution.hpp"

namespace sadic {

/// Extent-agreement condition for one substitution: cells sharing a column
/// must have equally wide images, cells sharing a row equally tall ones.
bool check_compat_uniform(const Substitution& s, const RectPattern& p);

/// Same condition for a per-cell choice of substitutions.
bool check_compat_nonuniform(const SubstitutionSet& set, const SubstitutionPattern& sp,
                             const RectPattern& p);

/// Column widths and row heights of the image blocks. Throws
/// IncompatibleError when the extents disagree somewhere.
SizeProfile size_profile(const SubstitutionSet& set, const SubstitutionPattern& sp,
                         const RectPattern& p);
SizeProfile size_profile_uniform(const Substitution& s, const RectPattern& p);

/// Grid map: phi(0) = 0, phi(r) for r > 0 sums the extents of cells 0..r-1,
/// and for r < 0 the negative of the extents of cells r..-1. phi(r) is the
/// lower corner of cell r's image block.
int phi(const AxisProfile& profile, int r);
int phi(const SizeProfile& profile, int r, Axis axis);

/// Places each cell's image block at (phi_h(x), phi_v(y)).
RectPattern apply_nonuniform(const SubstitutionSet& set, const SubstitutionPattern& sp,
                             const RectPattern& p);
RectPattern apply_uniform(const Substitution& s, const RectPattern& p);

/// Image of every letter is outer applied to inner's image; fails with the
/// two-cell witness when some inner image breaks outer's extent agreement.
Substitution compose(const Substitution& outer, const Substitution& inner);

/// s_0 ( s_1 ( ... s_level(a) ... ) ), applied innermost first. An
/// incompatibility is reported with the stage index at which it happened.
RectPattern iterate(const SubstitutionSet& set, const SequenceSpec& seq, int level, Letter seed);

/// Visits every substitution pattern over p's support that is compatible
/// with p, in canonical order (row-major cells, members by index). The
/// visitor returns false to stop early.
void for_each_compatible(const SubstitutionSet& set, const RectPattern& p,
                         const std::function<bool(const SubstitutionPattern&)>& visit);

} // namespace sadic
