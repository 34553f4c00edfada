#pragma once

#include <cstddef>
#include <vector>

#include "sadic/core_ops.hpp"

namespace sadic {

/// Deduplicated collection of same-shape windows, kept in canonical order.
struct WindowSet {
    int width = 0;
    int height = 0;
    int level = 0;
    std::vector<RectPattern> members; // sorted, unique

    bool contains(const RectPattern& p) const;
    bool subset_of(const WindowSet& other) const;
};

enum class LanguageMode { local_seq, global_seq, local_set, global_set };

struct LanguageQuery {
    LanguageMode mode = LanguageMode::local_seq;
    int level = 0;
    int width = 1;
    int height = 1;
};

/// Patterns reachable from a single letter by exactly `level` rounds of
/// compatible substitution patterns. Level 0 is the letters themselves.
/// Throws BudgetExceededError when more than `budget` distinct patterns
/// would be produced at some level.
std::vector<RectPattern> s_patterns(const SubstitutionSet& set, int level, std::size_t budget);

/// Levels 0..level at once, one vector per level.
std::vector<std::vector<RectPattern>> s_patterns_by_level(const SubstitutionSet& set, int level,
                                                          std::size_t budget);

/// All w x h sub-blocks of p, deduplicated.
std::vector<RectPattern> windows_of(const RectPattern& p, int w, int h);

/// Every placement of needle inside host, with the anchor of the match.
std::vector<Window> occurrences(const RectPattern& host, const RectPattern& needle);

/// Windows of the iterates of the sequence: union over stages m <= level and
/// seed letters of the w x h windows of iterate(set, seq, m, a).
WindowSet local_language(const SubstitutionSet& set, const SequenceSpec& seq, int level, int w,
                         int h);

/// Windows of S-patterns of level <= `level`.
WindowSet local_language_set(const SubstitutionSet& set, int level, int w, int h,
                             std::size_t budget);

/// Windows that occur in a (level+1)-fold image of some configuration; with
/// a sequence the stages follow it, without one each cell of each stage picks
/// freely. Computed stage by stage: the sources fed to stage t are the
/// stage-(t+1) windows at the covering shape, so only boundedly many finite
/// patterns are ever touched.
WindowSet global_language(const SubstitutionSet& set, const SequenceSpec* seq, int level, int w,
                          int h, std::size_t budget);

WindowSet language(const SubstitutionSet& set, const SequenceSpec& seq, const LanguageQuery& query,
                   std::size_t budget);

/// Letters along one row (left to right) or one column (bottom to top).
std::vector<Letter> row_word(const RectPattern& p, Axis axis, int index);

} // namespace sadic
