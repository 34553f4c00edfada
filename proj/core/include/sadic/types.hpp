#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sadic/errors.hpp"

namespace sadic {

/// Index into an Alphabet.
struct Letter {
    int index = 0;

    friend constexpr auto operator<=>(Letter, Letter) = default;
};

/// Ordered set of distinct printable glyphs; letter i prints as glyphs()[i].
class Alphabet {
public:
    explicit Alphabet(std::string_view glyphs);

    int size() const { return static_cast<int>(glyphs_.size()); }
    char glyph(Letter l) const;
    std::optional<Letter> find(char glyph) const;
    const std::string& glyphs() const { return glyphs_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string glyphs_;
};

/// Finite rectangular block of letters. Coordinates are (x, y) with y growing
/// upward, cell (0,0) at the bottom-left. The text form lists rows top to
/// bottom, matrix style, so the printed block looks the way it tiles.
class RectPattern {
public:
    RectPattern() = default;
    RectPattern(int width, int height, Letter fill = {});

    int width() const { return width_; }
    int height() const { return height_; }
    bool empty() const { return width_ == 0 || height_ == 0; }

    Letter at(int x, int y) const { return cells_[static_cast<std::size_t>(y) * width_ + x]; }
    void set(int x, int y, Letter l) { cells_[static_cast<std::size_t>(y) * width_ + x] = l; }
    bool in_range(int x, int y) const { return x >= 0 && x < width_ && y >= 0 && y < height_; }

    /// Sub-block of shape w x h whose bottom-left corner sits at (x0, y0),
    /// re-anchored at the origin.
    RectPattern window(int x0, int y0, int w, int h) const;

    int max_letter_index() const;

    /// Rows top to bottom; separator is '/' for inline text, '\n' in files.
    static RectPattern parse(std::string_view text, const Alphabet& alphabet);
    static RectPattern from_rows(const std::vector<std::string>& rows_top_to_bottom,
                                 const Alphabet& alphabet);
    std::string to_text(const Alphabet& alphabet, char row_sep = '/') const;

    friend bool operator==(const RectPattern&, const RectPattern&) = default;

    /// Canonical order: (width, height, rows read top to bottom).
    friend std::strong_ordering operator<=>(const RectPattern& a, const RectPattern& b);

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<Letter> cells_; // row-major, bottom row first
};

/// A pattern together with the absolute offset of its (0,0) cell.
struct Window {
    RectPattern pattern;
    int anchor_x = 0;
    int anchor_y = 0;

    friend bool operator==(const Window&, const Window&) = default;
};

} // namespace sadic
