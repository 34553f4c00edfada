#include "sadic/derivation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace sadic {

namespace {

// Backtracking grid search for tilings of p by image blocks of one
// substitution. Column widths are fixed while the bottom block row is laid
// out, row heights when each row's first block is chosen; contents are
// checked block by block, so dead branches die early.
class GridParser {
public:
    GridParser(const RectPattern& p, const SubstitutionSet& set, int member, bool anchored,
               int dx, int dy, std::vector<ParseResult>& out)
        : p_(p), set_(set), sub_(set.member(member)), member_(member), anchored_(anchored),
          dx_(dx), dy_(dy), out_(out) {}

    void run() { place_row(0, -dy_); }

private:
    void place_row(int bj, int y0) {
        if (row_h_.size() == static_cast<std::size_t>(bj)) row_h_.push_back(0);
        letters_.emplace_back();
        place_block(bj, y0, 0, -dx_);
        letters_.pop_back();
        row_h_.resize(static_cast<std::size_t>(bj));
    }

    void place_block(int bj, int y0, int bi, int x0) {
        if (x0 >= p_.width()) {
            // row complete; rows after the first must consume every column
            if (bj > 0 && bi != static_cast<int>(col_w_.size())) return;
            finish_row(bj, y0);
            return;
        }
        if (bj > 0 && bi == static_cast<int>(col_w_.size())) return; // column structure exhausted

        const int alpha = set_.alphabet().size();
        std::set<std::pair<int, int>> cropped_geoms;
        for (int a = 0; a < alpha; ++a) {
            const RectPattern& img = sub_.image(Letter{a});
            const int w = img.width();
            const int h = img.height();
            if (bj > 0 && w != col_w_[static_cast<std::size_t>(bi)]) continue;
            if (bi > 0 && h != row_h_[static_cast<std::size_t>(bj)]) continue;
            if (bi == 0 && bj == 0 && (w <= dx_ || h <= dy_)) continue;
            if (anchored_ && (x0 + w > p_.width() || y0 + h > p_.height())) continue;

            const bool crop = x0 < 0 || y0 < 0 || x0 + w > p_.width() || y0 + h > p_.height();
            // hidden cells leave the letter of a cropped block underdetermined;
            // keep the first matching letter per block geometry
            if (crop && cropped_geoms.count({w, h})) continue;
            if (!matches(img, x0, y0)) continue;
            if (crop) cropped_geoms.insert({w, h});

            const int saved_h = row_h_[static_cast<std::size_t>(bj)];
            row_h_[static_cast<std::size_t>(bj)] = h;
            if (bj == 0) col_w_.push_back(w);
            letters_.back().push_back(a);

            place_block(bj, y0, bi + 1, x0 + w);

            letters_.back().pop_back();
            if (bj == 0) col_w_.pop_back();
            row_h_[static_cast<std::size_t>(bj)] = saved_h;
        }
    }

    void finish_row(int bj, int y0) {
        const int h = row_h_[static_cast<std::size_t>(bj)];
        const int y_next = y0 + h;
        if (y_next >= p_.height()) {
            if (anchored_ && y_next != p_.height()) return;
            emit();
            return;
        }
        place_row(bj + 1, y_next);
    }

    bool matches(const RectPattern& img, int x0, int y0) const {
        const int xa = std::max(x0, 0);
        const int xb = std::min(x0 + img.width(), p_.width());
        const int ya = std::max(y0, 0);
        const int yb = std::min(y0 + img.height(), p_.height());
        for (int y = ya; y < yb; ++y) {
            for (int x = xa; x < xb; ++x) {
                if (p_.at(x, y) != img.at(x - x0, y - y0)) return false;
            }
        }
        return true;
    }

    void emit() {
        const int cols = static_cast<int>(col_w_.size());
        const int rows = static_cast<int>(letters_.size());
        RectPattern preimage(cols, rows);
        for (int bj = 0; bj < rows; ++bj) {
            for (int bi = 0; bi < cols; ++bi) {
                preimage.set(bi, bj,
                             Letter{letters_[static_cast<std::size_t>(bj)]
                                            [static_cast<std::size_t>(bi)]});
            }
        }
        bool crop = dx_ > 0 || dy_ > 0;
        int x_end = -dx_;
        for (int w : col_w_) x_end += w;
        int y_end = -dy_;
        for (int bj = 0; bj < rows; ++bj) y_end += row_h_[static_cast<std::size_t>(bj)];
        crop = crop || x_end > p_.width() || y_end > p_.height();
        out_.push_back(ParseResult{sub_.name(), member_, dx_, dy_, std::move(preimage), crop});
    }

    const RectPattern& p_;
    const SubstitutionSet& set_;
    const Substitution& sub_;
    int member_;
    bool anchored_;
    int dx_, dy_;
    std::vector<int> col_w_;
    std::vector<int> row_h_;                // height per block row (0 = unset)
    std::vector<std::vector<int>> letters_; // [block row][block col]
    std::vector<ParseResult>& out_;
};

bool parse_less(const ParseResult& a, const ParseResult& b) {
    if (a.substitution != b.substitution) return a.substitution < b.substitution;
    if (a.dx != b.dx) return a.dx < b.dx;
    if (a.dy != b.dy) return a.dy < b.dy;
    return a.preimage < b.preimage;
}

} // namespace

std::vector<ParseResult> desubstitute_by(const RectPattern& p, const SubstitutionSet& set,
                                         int member, ParseMode mode) {
    if (p.empty()) throw DomainError("desubstitute: empty pattern");
    std::vector<ParseResult> out;
    if (mode == ParseMode::anchored) {
        GridParser(p, set, member, true, 0, 0, out).run();
    } else {
        const Substitution& s = set.member(member);
        for (int dx = 0; dx < s.max_image_width(); ++dx) {
            for (int dy = 0; dy < s.max_image_height(); ++dy) {
                GridParser(p, set, member, false, dx, dy, out).run();
            }
        }
    }
    std::sort(out.begin(), out.end(), parse_less);
    return out;
}

std::vector<ParseResult> desubstitute(const RectPattern& p, const SubstitutionSet& set,
                                      ParseMode mode) {
    std::vector<ParseResult> out;
    for (int m = 0; m < set.size(); ++m) {
        auto partial = desubstitute_by(p, set, m, mode);
        out.insert(out.end(), std::make_move_iterator(partial.begin()),
                   std::make_move_iterator(partial.end()));
    }
    std::sort(out.begin(), out.end(), parse_less);
    return out;
}

RecoveryOutcome recover_sequence(const SampleProvider& provider, const SubstitutionSet& set,
                                 int depth, int max_sample_level) {
    if (depth < 0) throw DomainError("recover_sequence: depth must be >= 0");

    RecoveryOutcome outcome;
    std::vector<int> chosen; // member index per recovered stage

    // Stage-t view of provider(n): the sample descended through the
    // substitutions recovered so far.
    std::map<int, RectPattern> stage_samples;
    auto descend = [&](const RectPattern& q, int member) {
        auto parses = desubstitute_by(q, set, member, ParseMode::windowed);
        if (parses.empty()) {
            throw DomainError("recover_sequence: sample stopped parsing under '" +
                              set.member(member).name() + "'");
        }
        return parses.front().preimage;
    };
    auto stage_sample = [&](int n, int stage) -> const RectPattern& {
        auto it = stage_samples.find(n);
        if (it == stage_samples.end()) {
            RectPattern q = provider(n);
            for (int k = 0; k < stage; ++k) q = descend(q, chosen[static_cast<std::size_t>(k)]);
            it = stage_samples.emplace(n, std::move(q)).first;
        }
        return it->second;
    };
    auto parse_keys = [&](const RectPattern& q) {
        std::set<std::tuple<int, int, int>> keys;
        for (const ParseResult& r : desubstitute(q, set, ParseMode::windowed)) {
            keys.insert({r.member, r.dx, r.dy});
        }
        return keys;
    };

    for (int stage = 0; stage < depth; ++stage) {
        int n = stage;
        if (n > max_sample_level) {
            throw DomainError("recover_sequence: sample budget smaller than requested depth");
        }
        std::set<std::tuple<int, int, int>> survivors = parse_keys(stage_sample(n, stage));
        if (survivors.empty()) {
            throw DomainError("recover_sequence: sample at level " + std::to_string(n) +
                              " is unparseable by every member");
        }
        auto member_count = [&] {
            std::set<int> members;
            for (const auto& k : survivors) members.insert(std::get<0>(k));
            return members;
        };
        while (member_count().size() > 1) {
            if (n == max_sample_level) {
                AmbiguityReport report;
                const RectPattern& last = stage_sample(n, stage);
                for (const ParseResult& r : desubstitute(last, set, ParseMode::windowed)) {
                    if (survivors.count({r.member, r.dx, r.dy})) report.survivors.push_back(r);
                }
                report.sample_level = n;
                report.sample_width = last.width();
                report.sample_height = last.height();
                outcome.ambiguity = std::move(report);
                return outcome;
            }
            ++n;
            auto keys = parse_keys(stage_sample(n, stage));
            std::set<std::tuple<int, int, int>> intersected;
            for (const auto& k : survivors) {
                if (keys.count(k)) intersected.insert(k);
            }
            survivors = std::move(intersected);
            if (survivors.empty()) {
                throw DomainError("recover_sequence: samples admit no common parse at level " +
                                  std::to_string(n));
            }
        }
        const int member = *member_count().begin();
        chosen.push_back(member);
        outcome.names.push_back(set.member(member).name());

        // Move the cache one stage down; samples below the next stage index
        // can no longer be descended and are dropped.
        std::map<int, RectPattern> next;
        for (auto& [lvl, q] : stage_samples) {
            if (lvl >= stage + 1) next.emplace(lvl, descend(q, member));
        }
        stage_samples = std::move(next);
    }
    return outcome;
}

UniqueDerivationOutcome unique_derivation_check(const SubstitutionSet& set, int side,
                                                std::size_t budget) {
    if (side < set.max_extent()) {
        throw DomainError("unique_derivation_check: side " + std::to_string(side) +
                          " smaller than the largest image extent " +
                          std::to_string(set.max_extent()));
    }

    // Grow S-pattern levels until every pattern admits side x side windows.
    std::set<RectPattern> windows;
    std::set<RectPattern> current;
    for (int a = 0; a < set.alphabet().size(); ++a) current.insert(RectPattern(1, 1, Letter{a}));
    std::size_t work = 0;
    for (int level = 1; level <= 64; ++level) {
        std::set<RectPattern> next;
        for (const RectPattern& q : current) {
            for_each_compatible(set, q, [&](const SubstitutionPattern& sp) {
                next.insert(apply_nonuniform(set, sp, q));
                if (next.size() > budget || ++work > budget * 64) {
                    throw BudgetExceededError("unique_derivation_check: pattern budget exceeded",
                                              next.size());
                }
                return true;
            });
        }
        current = std::move(next);
        bool all_fit = true;
        for (const RectPattern& q : current) {
            if (q.width() >= side && q.height() >= side) {
                for (int y = 0; y + side <= q.height(); ++y) {
                    for (int x = 0; x + side <= q.width(); ++x) {
                        windows.insert(q.window(x, y, side, side));
                        if (windows.size() > budget) {
                            throw BudgetExceededError(
                                "unique_derivation_check: window budget exceeded", windows.size());
                        }
                    }
                }
            } else {
                all_fit = false;
            }
        }
        if (all_fit) break;
    }

    for (const RectPattern& w : windows) {
        auto parses = desubstitute(w, set, ParseMode::windowed);
        if (parses.size() >= 2) {
            return UniqueDerivationOutcome{DerivationCounterexample{w, std::move(parses)}};
        }
    }
    return UniqueDerivationOutcome{};
}

} // namespace sadic
