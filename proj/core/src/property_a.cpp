#include "sadic/property_a.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sadic/language.hpp"

namespace sadic {

namespace {

struct SearchBudget {
    std::size_t remaining;

    void spend(const char* what) {
        if (remaining == 0) throw BudgetExceededError(std::string(what) + ": budget exceeded", 0);
        --remaining;
    }
};

// Compatible-grid DFS with optional pins (pinned[cell] >= 0 fixes the
// member there). Stops when the visitor returns false; its own return value
// says whether the walk ran to completion.
bool walk_compatible(const SubstitutionSet& set, const RectPattern& p,
                     const std::vector<int>& pinned, bool reversed, SearchBudget& budget,
                     const std::function<bool(const std::vector<int>&)>& visit) {
    const int w = p.width();
    const int h = p.height();
    std::vector<int> entries(static_cast<std::size_t>(w) * h, -1);
    std::vector<int> col_w(static_cast<std::size_t>(w), 0);
    std::vector<int> row_h(static_cast<std::size_t>(h), 0);
    bool keep_going = true;

    auto rec = [&](auto&& self, int cell) -> void {
        if (!keep_going) return;
        if (cell == w * h) {
            keep_going = visit(entries);
            return;
        }
        budget.spend("property A search");
        const int x = cell % w;
        const int y = cell / w;
        const Letter a = p.at(x, y);
        const int pin = pinned.empty() ? -1 : pinned[static_cast<std::size_t>(cell)];
        for (int step = 0; step < set.size() && keep_going; ++step) {
            const int m = reversed ? set.size() - 1 - step : step;
            if (pin >= 0 && m != pin) continue;
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
    return keep_going;
}

bool completion_exists(const SubstitutionSet& set, const RectPattern& p,
                       const std::vector<int>& pinned, bool reversed, SearchBudget& budget) {
    bool found = false;
    walk_compatible(set, p, pinned, reversed, budget, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

// Does some chain of substitution patterns compatible with p map the tracked
// block to targets[stage], targets[stage+1], ...? The entries over the
// tracked cells determine the derived block, so they are enumerated on the
// sub-pattern first and the rest of the grid is only completed (or, before
// the last stage, enumerated) afterwards.
bool extension_exists(const SubstitutionSet& set, const RectPattern& p,
                      const std::vector<RectPattern>& targets, std::size_t stage,
                      TrackedRect tracked, SearchBudget& budget, bool reversed) {
    if (stage == targets.size()) return true;
    const RectPattern sub = p.window(tracked.x0, tracked.y0, tracked.w, tracked.h);
    const RectPattern& target = targets[stage];

    bool found = false;
    walk_compatible(set, sub, {}, reversed, budget, [&](const std::vector<int>& sub_entries) {
        SubstitutionPattern sub_sp(sub.width(), sub.height(), sub_entries);
        if (apply_nonuniform(set, sub_sp, sub) != target) return true;

        // pin the tracked cells and extend over the rest of p
        std::vector<int> pinned(static_cast<std::size_t>(p.width()) * p.height(), -1);
        for (int y = 0; y < sub.height(); ++y) {
            for (int x = 0; x < sub.width(); ++x) {
                pinned[static_cast<std::size_t>(tracked.y0 + y) * p.width() + (tracked.x0 + x)] =
                    sub_sp.member_at(x, y);
            }
        }
        if (stage + 1 == targets.size()) {
            if (completion_exists(set, p, pinned, reversed, budget)) {
                found = true;
                return false;
            }
            return true;
        }
        // deeper stages depend on the cells outside the tracked block, so
        // every completion has to be tried
        return walk_compatible(set, p, pinned, reversed, budget,
                               [&](const std::vector<int>& entries) {
            SubstitutionPattern sp(p.width(), p.height(), entries);
            SizeProfile profile = size_profile(set, sp, p);
            TrackedRect next =
                track_through(profile, tracked.x0, tracked.y0, tracked.w, tracked.h);
            RectPattern image = apply_nonuniform(set, sp, p);
            if (extension_exists(set, image, targets, stage + 1, next, budget, reversed)) {
                found = true;
                return false;
            }
            return true;
        });
    });
    return found;
}

using ChainMemo = std::map<RectPattern, std::vector<SubstitutionPattern>>;

const std::vector<SubstitutionPattern>& compatible_patterns_memo(const SubstitutionSet& set,
                                                                 const RectPattern& p,
                                                                 ChainMemo& memo,
                                                                 SearchBudget& budget) {
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    std::vector<SubstitutionPattern> out;
    walk_compatible(set, p, {}, false, budget, [&](const std::vector<int>& entries) {
        out.emplace_back(p.width(), p.height(), entries);
        return true;
    });
    return memo.emplace(p, std::move(out)).first->second;
}

// Depth-first walk over derivation chains of the 2x2 block at (x0, y0);
// returns a witness for the first chain that cannot be reproduced inside p.
std::optional<PropertyAWitness> search_block(const SubstitutionSet& set, const RectPattern& p,
                                             int x0, int y0, int max_depth, ChainMemo& memo,
                                             SearchBudget& budget) {
    const RectPattern l = p.window(x0, y0, 2, 2);
    std::vector<SubstitutionPattern> chain;
    std::vector<RectPattern> derived{l};

    auto rec = [&](auto&& self) -> std::optional<PropertyAWitness> {
        const int depth = static_cast<int>(chain.size());
        if (depth >= 1) {
            std::vector<RectPattern> targets(derived.begin() + 1, derived.end());
            if (!extension_exists(set, p, targets, 0, TrackedRect{x0, y0, 2, 2}, budget, false)) {
                return PropertyAWitness{p, x0, y0, chain, derived};
            }
        }
        if (depth == max_depth) return std::nullopt;
        for (const SubstitutionPattern& sp : compatible_patterns_memo(set, derived.back(), memo,
                                                                      budget)) {
            chain.push_back(sp);
            derived.push_back(apply_nonuniform(set, sp, derived.back()));
            if (auto w = self(self)) return w;
            derived.pop_back();
            chain.pop_back();
        }
        return std::nullopt;
    };
    return rec(rec);
}

} // namespace

const char* to_string(PropertyAStatus status) {
    switch (status) {
    case PropertyAStatus::holds_uniform_support: return "holds-uniform-support";
    case PropertyAStatus::holds_singleton: return "holds-singleton";
    case PropertyAStatus::no_counterexample_up_to_bounds: return "no-counterexample-up-to-bounds";
    case PropertyAStatus::counterexample: return "counterexample";
    case PropertyAStatus::unknown: return "unknown";
    }
    return "unknown";
}

TrackedRect track_through(const SizeProfile& profile, int x0, int y0, int w, int h) {
    TrackedRect out;
    out.x0 = phi(profile.horizontal, x0);
    out.y0 = phi(profile.vertical, y0);
    out.w = phi(profile.horizontal, x0 + w) - out.x0;
    out.h = phi(profile.vertical, y0 + h) - out.y0;
    return out;
}

PropertyAVerdict sufficient_property_a(const SubstitutionSet& set) {
    if (set.size() == 1) return {PropertyAStatus::holds_singleton, std::nullopt};
    const bool uniform = [&] {
        for (int m = 0; m < set.size(); ++m) {
            if (!set.member(m).uniform_support()) return false;
        }
        return true;
    }();
    if (uniform) return {PropertyAStatus::holds_uniform_support, std::nullopt};
    return {PropertyAStatus::unknown, std::nullopt};
}

PropertyAVerdict bounded_property_a(const SubstitutionSet& set, int max_level, int max_depth,
                                    std::size_t budget) {
    if (max_level < 1) {
        throw DomainError("bounded_property_a: level bound must be >= 1 (letters contain no 2x2 "
                          "block)");
    }
    if (max_depth < 1) throw DomainError("bounded_property_a: depth bound must be >= 1");

    SearchBudget guard{budget};
    ChainMemo memo;
    std::set<RectPattern> patterns;
    for (const auto& level : s_patterns_by_level(set, max_level, budget)) {
        for (const RectPattern& p : level) {
            if (p.width() >= 2 && p.height() >= 2) patterns.insert(p);
        }
    }
    for (const RectPattern& p : patterns) {
        for (int y0 = 0; y0 + 2 <= p.height(); ++y0) {
            for (int x0 = 0; x0 + 2 <= p.width(); ++x0) {
                if (auto witness = search_block(set, p, x0, y0, max_depth, memo, guard)) {
                    return {PropertyAStatus::counterexample, std::move(witness)};
                }
            }
        }
    }
    return {PropertyAStatus::no_counterexample_up_to_bounds, std::nullopt};
}

bool verify_property_a_witness(const SubstitutionSet& set, const PropertyAWitness& witness) {
    const RectPattern& p = witness.pattern;
    if (witness.block_x < 0 || witness.block_y < 0 || witness.block_x + 2 > p.width() ||
        witness.block_y + 2 > p.height()) {
        return false;
    }
    if (witness.derived.empty() || witness.chain.size() + 1 != witness.derived.size()) return false;
    if (witness.derived.front() != p.window(witness.block_x, witness.block_y, 2, 2)) return false;

    // The chain itself must replay on the block.
    for (std::size_t t = 0; t < witness.chain.size(); ++t) {
        const RectPattern& from = witness.derived[t];
        const SubstitutionPattern& sp = witness.chain[t];
        if (sp.width() != from.width() || sp.height() != from.height()) return false;
        if (!check_compat_nonuniform(set, sp, from)) return false;
        if (apply_nonuniform(set, sp, from) != witness.derived[t + 1]) return false;
    }

    // And no compatible chain on p may reproduce it; reversed visiting order
    // decouples the verdict from the original search order.
    SearchBudget guard{std::size_t{1} << 40};
    std::vector<RectPattern> targets(witness.derived.begin() + 1, witness.derived.end());
    TrackedRect tracked{witness.block_x, witness.block_y, 2, 2};
    return !extension_exists(set, p, targets, 0, tracked, guard, true);
}

} // namespace sadic
