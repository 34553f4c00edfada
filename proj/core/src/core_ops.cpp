#include "sadic/core_ops.hpp"

#include <utility>

namespace sadic {

namespace {

// Shared profile computation; `member_at` resolves the substitution used on
// each cell.
SizeProfile profile_impl(const std::function<const Substitution&(int, int)>& member_at,
                         const RectPattern& p) {
    std::vector<int> widths(static_cast<std::size_t>(p.width()), 0);
    std::vector<int> heights(static_cast<std::size_t>(p.height()), 0);
    for (int y = 0; y < p.height(); ++y) {
        for (int x = 0; x < p.width(); ++x) {
            const Substitution& s = member_at(x, y);
            const RectPattern& img = s.image(p.at(x, y));
            int& w = widths[static_cast<std::size_t>(x)];
            int& h = heights[static_cast<std::size_t>(y)];
            if (w == 0) {
                w = img.width();
            } else if (w != img.width()) {
                throw IncompatibleError("column " + std::to_string(x) +
                                        ": image widths disagree (" + std::to_string(w) + " vs " +
                                        std::to_string(img.width()) + " at row " +
                                        std::to_string(y) + ")");
            }
            if (h == 0) {
                h = img.height();
            } else if (h != img.height()) {
                throw IncompatibleError("row " + std::to_string(y) + ": image heights disagree (" +
                                        std::to_string(h) + " vs " + std::to_string(img.height()) +
                                        " at column " + std::to_string(x) + ")");
            }
        }
    }
    return SizeProfile{AxisProfile(0, std::move(widths)), AxisProfile(0, std::move(heights))};
}

RectPattern apply_impl(const std::function<const Substitution&(int, int)>& member_at,
                       const RectPattern& p) {
    SizeProfile profile = profile_impl(member_at, p);
    RectPattern out(profile.horizontal.total(), profile.vertical.total());
    int block_y = 0;
    for (int y = 0; y < p.height(); ++y) {
        int block_x = 0;
        for (int x = 0; x < p.width(); ++x) {
            const RectPattern& img = member_at(x, y).image(p.at(x, y));
            for (int j = 0; j < img.height(); ++j) {
                for (int i = 0; i < img.width(); ++i) {
                    out.set(block_x + i, block_y + j, img.at(i, j));
                }
            }
            block_x += img.width();
        }
        block_y += profile.vertical.extent(y);
    }
    return out;
}

void require_letters_in_range(const Substitution& s, const RectPattern& p) {
    if (p.max_letter_index() >= s.letter_count()) {
        throw DomainError("substitution '" + s.name() +
                          "' and pattern do not share an alphabet");
    }
}

void require_shape_match(const SubstitutionPattern& sp, const RectPattern& p) {
    if (sp.width() != p.width() || sp.height() != p.height()) {
        throw DomainError("substitution pattern shape " + std::to_string(sp.width()) + "x" +
                          std::to_string(sp.height()) + " does not match pattern shape " +
                          std::to_string(p.width()) + "x" + std::to_string(p.height()));
    }
}

} // namespace

bool check_compat_uniform(const Substitution& s, const RectPattern& p) {
    require_letters_in_range(s, p);
    try {
        profile_impl([&](int, int) -> const Substitution& { return s; }, p);
        return true;
    } catch (const IncompatibleError&) {
        return false;
    }
}

bool check_compat_nonuniform(const SubstitutionSet& set, const SubstitutionPattern& sp,
                             const RectPattern& p) {
    try {
        size_profile(set, sp, p);
        return true;
    } catch (const IncompatibleError&) {
        return false;
    }
}

SizeProfile size_profile(const SubstitutionSet& set, const SubstitutionPattern& sp,
                         const RectPattern& p) {
    require_shape_match(sp, p);
    if (p.max_letter_index() >= set.alphabet().size()) {
        throw DomainError("pattern uses letters outside the set's alphabet");
    }
    return profile_impl(
        [&](int x, int y) -> const Substitution& { return set.member(sp.member_at(x, y)); }, p);
}

SizeProfile size_profile_uniform(const Substitution& s, const RectPattern& p) {
    require_letters_in_range(s, p);
    return profile_impl([&](int, int) -> const Substitution& { return s; }, p);
}

int phi(const AxisProfile& profile, int r) {
    int sum = 0;
    if (r >= 0) {
        for (int j = 0; j < r; ++j) sum += profile.extent(j);
    } else {
        for (int j = r; j < 0; ++j) sum -= profile.extent(j);
    }
    return sum;
}

int phi(const SizeProfile& profile, int r, Axis axis) { return phi(profile.axis(axis), r); }

RectPattern apply_nonuniform(const SubstitutionSet& set, const SubstitutionPattern& sp,
                             const RectPattern& p) {
    require_shape_match(sp, p);
    if (p.max_letter_index() >= set.alphabet().size()) {
        throw DomainError("pattern uses letters outside the set's alphabet");
    }
    return apply_impl(
        [&](int x, int y) -> const Substitution& { return set.member(sp.member_at(x, y)); }, p);
}

RectPattern apply_uniform(const Substitution& s, const RectPattern& p) {
    require_letters_in_range(s, p);
    return apply_impl([&](int, int) -> const Substitution& { return s; }, p);
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
    if (outer.letter_count() != inner.letter_count()) {
        throw DomainError("compose: '" + outer.name() + "' and '" + inner.name() +
                          "' have different alphabets");
    }
    const int n = inner.letter_count();
    // The extent condition only ever relates two cells sharing a coordinate,
    // so checking all inner-compatible two-cell patterns decides
    // compatibility of the composition on every input.
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (Axis axis : {Axis::horizontal, Axis::vertical}) {
                RectPattern pair = axis == Axis::horizontal ? RectPattern(2, 1) : RectPattern(1, 2);
                pair.set(0, 0, Letter{a});
                pair.set(axis == Axis::horizontal ? 1 : 0, axis == Axis::horizontal ? 0 : 1,
                         Letter{b});
                if (!check_compat_uniform(inner, pair)) continue;
                if (!check_compat_uniform(outer, apply_uniform(inner, pair))) {
                    throw IncompatibleError(
                        "compose: '" + outer.name() + "' is not compatible with '" + inner.name() +
                        "' on the " +
                        (axis == Axis::horizontal ? std::string("horizontal") : std::string("vertical")) +
                        " pair of letters (" + std::to_string(a) + ", " + std::to_string(b) + ")");
                }
            }
        }
    }
    std::vector<RectPattern> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        images.push_back(apply_uniform(outer, inner.image(Letter{a})));
    }
    return Substitution(outer.name() + "∘" + inner.name(), std::move(images));
}

RectPattern iterate(const SubstitutionSet& set, const SequenceSpec& seq, int level, Letter seed) {
    if (level < 0) throw DomainError("iterate: level must be >= 0");
    if (seed.index < 0 || seed.index >= set.alphabet().size()) {
        throw DomainError("iterate: seed letter outside the alphabet");
    }
    RectPattern p(1, 1, seed);
    for (int stage = level; stage >= 0; --stage) {
        const Substitution& s = set.member(seq.member_at(static_cast<std::size_t>(stage)));
        try {
            p = apply_uniform(s, p);
        } catch (const IncompatibleError& e) {
            throw IncompatibleError("stage " + std::to_string(stage) + " ('" + s.name() +
                                    "'): " + e.what());
        }
    }
    return p;
}

void for_each_compatible(const SubstitutionSet& set, const RectPattern& p,
                         const std::function<bool(const SubstitutionPattern&)>& visit) {
    const int w = p.width();
    const int h = p.height();
    std::vector<int> entries(static_cast<std::size_t>(w) * h, -1);
    std::vector<int> col_w(static_cast<std::size_t>(w), 0);
    std::vector<int> row_h(static_cast<std::size_t>(h), 0);
    bool keep_going = true;

    // Backtracking over cells in row-major order (bottom row first); the
    // column-width / row-height constraints prune as soon as they are set.
    auto rec = [&](auto&& self, int cell) -> void {
        if (!keep_going) return;
        if (cell == w * h) {
            keep_going = visit(SubstitutionPattern(w, h, entries));
            return;
        }
        const int x = cell % w;
        const int y = cell / w;
        const Letter a = p.at(x, y);
        for (int m = 0; m < set.size() && keep_going; ++m) {
            const RectPattern& img = set.member(m).image(a);
            const int cw = col_w[static_cast<std::size_t>(x)];
            const int rh = row_h[static_cast<std::size_t>(y)];
            if (cw != 0 && cw != img.width()) continue;
            if (rh != 0 && rh != img.height()) continue;
            entries[static_cast<std::size_t>(cell)] = m;
            col_w[static_cast<std::size_t>(x)] = img.width();
            row_h[static_cast<std::size_t>(y)] = img.height();
            self(self, cell + 1);
            col_w[static_cast<std::size_t>(x)] = cw;
            row_h[static_cast<std::size_t>(y)] = rh;
        }
        entries[static_cast<std::size_t>(cell)] = -1;
    };
    rec(rec, 0);
}

} // namespace sadic
