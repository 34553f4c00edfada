#include "sadic/language.hpp"

#include <algorithm>
#include <set>

namespace sadic {

namespace {

// Guard against duplicate-heavy systems spinning forever while the result
// set stays under budget.
constexpr std::size_t kApplicationCap = 4'000'000;

std::vector<RectPattern> sorted_vector(std::set<RectPattern>&& s) {
    return std::vector<RectPattern>(std::make_move_iterator(s.begin()),
                                    std::make_move_iterator(s.end()));
}

void insert_windows(std::set<RectPattern>& out, const RectPattern& p, int w, int h) {
    for (int y = 0; y + h <= p.height(); ++y) {
        for (int x = 0; x + w <= p.width(); ++x) {
            out.insert(p.window(x, y, w, h));
        }
    }
}

// Covering shape: a w-wide window of an image touches at most
// ceil(w / min_extent) + 1 consecutive source cells per axis.
int covering_extent(int w, int min_extent) { return (w + min_extent - 1) / min_extent + 1; }

// All patterns of exactly the given shape, visited in canonical order.
void for_each_source(const Alphabet& alphabet, int w, int h,
                     const std::function<void(const RectPattern&)>& visit) {
    RectPattern p(w, h);
    const int cells = w * h;
    auto rec = [&](auto&& self, int cell) -> void {
        if (cell == cells) {
            visit(p);
            return;
        }
        for (int a = 0; a < alphabet.size(); ++a) {
            p.set(cell % w, cell / w, Letter{a});
            self(self, cell + 1);
        }
    };
    rec(rec, 0);
}

} // namespace

bool WindowSet::contains(const RectPattern& p) const {
    return std::binary_search(members.begin(), members.end(), p);
}

bool WindowSet::subset_of(const WindowSet& other) const {
    return std::all_of(members.begin(), members.end(),
                       [&](const RectPattern& p) { return other.contains(p); });
}

std::vector<std::vector<RectPattern>> s_patterns_by_level(const SubstitutionSet& set, int level,
                                                          std::size_t budget) {
    if (level < 0) throw DomainError("s_patterns: level must be >= 0");
    std::vector<std::vector<RectPattern>> levels;
    std::set<RectPattern> current;
    for (int a = 0; a < set.alphabet().size(); ++a) {
        current.insert(RectPattern(1, 1, Letter{a}));
    }
    levels.push_back(sorted_vector(std::set<RectPattern>(current)));
    std::size_t applications = 0;
    for (int lvl = 1; lvl <= level; ++lvl) {
        std::set<RectPattern> next;
        for (const RectPattern& q : current) {
            for_each_compatible(set, q, [&](const SubstitutionPattern& sp) {
                next.insert(apply_nonuniform(set, sp, q));
                if (next.size() > budget) {
                    throw BudgetExceededError("s_patterns: more than " + std::to_string(budget) +
                                                  " patterns at level " + std::to_string(lvl),
                                              budget);
                }
                if (++applications > kApplicationCap) {
                    throw BudgetExceededError("s_patterns: application cap exhausted", next.size());
                }
                return true;
            });
        }
        current = std::move(next);
        levels.push_back(sorted_vector(std::set<RectPattern>(current)));
    }
    return levels;
}

std::vector<RectPattern> s_patterns(const SubstitutionSet& set, int level, std::size_t budget) {
    return s_patterns_by_level(set, level, budget).back();
}

std::vector<RectPattern> windows_of(const RectPattern& p, int w, int h) {
    if (w < 1 || h < 1) throw DomainError("windows_of: shape must be >= 1x1");
    if (w > p.width() || h > p.height()) {
        throw DomainError("windows_of: window " + std::to_string(w) + "x" + std::to_string(h) +
                          " larger than pattern " + std::to_string(p.width()) + "x" +
                          std::to_string(p.height()));
    }
    std::set<RectPattern> out;
    insert_windows(out, p, w, h);
    return sorted_vector(std::move(out));
}

std::vector<Window> occurrences(const RectPattern& host, const RectPattern& needle) {
    std::vector<Window> out;
    for (int y = 0; y + needle.height() <= host.height(); ++y) {
        for (int x = 0; x + needle.width() <= host.width(); ++x) {
            bool match = true;
            for (int j = 0; match && j < needle.height(); ++j) {
                for (int i = 0; match && i < needle.width(); ++i) {
                    match = host.at(x + i, y + j) == needle.at(i, j);
                }
            }
            if (match) out.push_back(Window{needle, x, y});
        }
    }
    return out;
}

WindowSet local_language(const SubstitutionSet& set, const SequenceSpec& seq, int level, int w,
                         int h) {
    if (level < 0 || w < 1 || h < 1) throw DomainError("local_language: bad parameters");
    std::set<RectPattern> out;
    bool any_fit = false;
    for (int m = 0; m <= level; ++m) {
        for (int a = 0; a < set.alphabet().size(); ++a) {
            RectPattern p = iterate(set, seq, m, Letter{a});
            if (p.width() < w || p.height() < h) continue;
            any_fit = true;
            insert_windows(out, p, w, h);
        }
    }
    if (!any_fit) {
        throw DomainError("local_language: window " + std::to_string(w) + "x" + std::to_string(h) +
                          " does not fit inside any iterate up to level " + std::to_string(level));
    }
    return WindowSet{w, h, level, sorted_vector(std::move(out))};
}

WindowSet local_language_set(const SubstitutionSet& set, int level, int w, int h,
                             std::size_t budget) {
    if (level < 0 || w < 1 || h < 1) throw DomainError("local_language_set: bad parameters");
    std::set<RectPattern> out;
    for (const auto& lvl : s_patterns_by_level(set, level, budget)) {
        for (const RectPattern& p : lvl) {
            if (p.width() < w || p.height() < h) continue;
            insert_windows(out, p, w, h);
        }
    }
    return WindowSet{w, h, level, sorted_vector(std::move(out))};
}

WindowSet global_language(const SubstitutionSet& set, const SequenceSpec* seq, int level, int w,
                          int h, std::size_t budget) {
    if (level < 0 || w < 1 || h < 1) throw DomainError("global_language: bad parameters");
    const int min_extent = set.min_extent();

    // Stage t consumes sources of shape `shapes[t+1]` and yields windows of
    // shape `shapes[t]`; stage `level` consumes arbitrary patterns.
    std::vector<std::pair<int, int>> shapes(static_cast<std::size_t>(level) + 2);
    shapes[0] = {w, h};
    for (int t = 1; t <= level + 1; ++t) {
        shapes[static_cast<std::size_t>(t)] = {
            covering_extent(shapes[static_cast<std::size_t>(t - 1)].first, min_extent),
            covering_extent(shapes[static_cast<std::size_t>(t - 1)].second, min_extent)};
    }

    std::size_t applications = 0;
    auto expand = [&](const std::set<RectPattern>& sources, int stage,
                      std::pair<int, int> target) {
        std::set<RectPattern> next;
        auto add = [&](const SubstitutionPattern& sp, const RectPattern& q) {
            RectPattern img = apply_nonuniform(set, sp, q);
            if (img.width() < target.first || img.height() < target.second) return;
            insert_windows(next, img, target.first, target.second);
            if (next.size() > budget) {
                throw BudgetExceededError("global_language: window budget exceeded at stage " +
                                              std::to_string(stage),
                                          budget);
            }
            if (++applications > kApplicationCap) {
                throw BudgetExceededError("global_language: application cap exhausted", next.size());
            }
        };
        for (const RectPattern& q : sources) {
            if (seq != nullptr) {
                const int m = seq->member_at(static_cast<std::size_t>(stage));
                SubstitutionPattern sp = SubstitutionPattern::constant(m, q.width(), q.height());
                if (check_compat_nonuniform(set, sp, q)) add(sp, q);
            } else {
                for_each_compatible(set, q, [&](const SubstitutionPattern& sp) {
                    add(sp, q);
                    return true;
                });
            }
        }
        return next;
    };

    const auto [sw, sh] = shapes[static_cast<std::size_t>(level) + 1];
    double source_count = 1;
    for (int i = 0; i < sw * sh; ++i) source_count *= set.alphabet().size();
    if (source_count > static_cast<double>(kApplicationCap)) {
        throw BudgetExceededError("global_language: too many source patterns of shape " +
                                      std::to_string(sw) + "x" + std::to_string(sh),
                                  0);
    }

    std::set<RectPattern> sources;
    for_each_source(set.alphabet(), sw, sh, [&](const RectPattern& p) { sources.insert(p); });

    std::set<RectPattern> cur = std::move(sources);
    for (int stage = level; stage >= 0; --stage) {
        cur = expand(cur, stage, shapes[static_cast<std::size_t>(stage)]);
    }
    return WindowSet{w, h, level, sorted_vector(std::move(cur))};
}

WindowSet language(const SubstitutionSet& set, const SequenceSpec& seq, const LanguageQuery& query,
                   std::size_t budget) {
    switch (query.mode) {
    case LanguageMode::local_seq:
        return local_language(set, seq, query.level, query.width, query.height);
    case LanguageMode::local_set:
        return local_language_set(set, query.level, query.width, query.height, budget);
    case LanguageMode::global_seq:
        return global_language(set, &seq, query.level, query.width, query.height, budget);
    case LanguageMode::global_set:
        return global_language(set, nullptr, query.level, query.width, query.height, budget);
    }
    throw DomainError("language: unknown mode");
}

std::vector<Letter> row_word(const RectPattern& p, Axis axis, int index) {
    std::vector<Letter> out;
    if (axis == Axis::horizontal) {
        if (index < 0 || index >= p.height()) throw DomainError("row_word: row index out of range");
        out.reserve(static_cast<std::size_t>(p.width()));
        for (int x = 0; x < p.width(); ++x) out.push_back(p.at(x, index));
    } else {
        if (index < 0 || index >= p.width()) {
            throw DomainError("row_word: column index out of range");
        }
        out.reserve(static_cast<std::size_t>(p.height()));
        for (int y = 0; y < p.height(); ++y) out.push_back(p.at(index, y));
    }
    return out;
}

} // namespace sadic
