#include "sadic/types.hpp"

#include <algorithm>

namespace sadic {

Alphabet::Alphabet(std::string_view glyphs) : glyphs_(glyphs) {
    if (glyphs_.empty()) {
        throw FormatError("alphabet: must contain at least one glyph");
    }
    for (std::size_t i = 0; i < glyphs_.size(); ++i) {
        if (glyphs_[i] <= ' ' || glyphs_[i] > '~') {
            throw FormatError("alphabet: glyphs must be printable, non-space characters");
        }
        if (glyphs_.find(glyphs_[i], i + 1) != std::string::npos) {
            throw FormatError(std::string("alphabet: duplicate glyph '") + glyphs_[i] + "'");
        }
    }
}

char Alphabet::glyph(Letter l) const {
    if (l.index < 0 || l.index >= size()) {
        throw DomainError("letter index " + std::to_string(l.index) + " outside alphabet of size " +
                          std::to_string(size()));
    }
    return glyphs_[static_cast<std::size_t>(l.index)];
}

std::optional<Letter> Alphabet::find(char glyph) const {
    auto pos = glyphs_.find(glyph);
    if (pos == std::string::npos) return std::nullopt;
    return Letter{static_cast<int>(pos)};
}

RectPattern::RectPattern(int width, int height, Letter fill)
    : width_(width), height_(height),
      cells_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {
    if (width < 1 || height < 1) {
        throw DomainError("pattern extents must be at least 1x1");
    }
}

RectPattern RectPattern::window(int x0, int y0, int w, int h) const {
    if (w < 1 || h < 1 || x0 < 0 || y0 < 0 || x0 + w > width_ || y0 + h > height_) {
        throw DomainError("window outside pattern bounds");
    }
    RectPattern out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            out.set(x, y, at(x0 + x, y0 + y));
        }
    }
    return out;
}

int RectPattern::max_letter_index() const {
    int m = -1;
    for (Letter l : cells_) m = std::max(m, l.index);
    return m;
}

RectPattern RectPattern::parse(std::string_view text, const Alphabet& alphabet) {
    std::vector<std::string> rows;
    std::string cur;
    for (char c : text) {
        if (c == '/' || c == '\n') {
            rows.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) rows.push_back(cur);
    return from_rows(rows, alphabet);
}

RectPattern RectPattern::from_rows(const std::vector<std::string>& rows, const Alphabet& alphabet) {
    if (rows.empty()) throw FormatError("pattern: no rows");
    const int h = static_cast<int>(rows.size());
    const int w = static_cast<int>(rows.front().size());
    if (w == 0) throw FormatError("pattern: empty row");
    RectPattern out(w, h);
    for (int r = 0; r < h; ++r) {
        const std::string& row = rows[static_cast<std::size_t>(r)];
        if (static_cast<int>(row.size()) != w) {
            throw FormatError("pattern: ragged rows (row " + std::to_string(r) + " has length " +
                              std::to_string(row.size()) + ", expected " + std::to_string(w) + ")");
        }
        for (int x = 0; x < w; ++x) {
            auto l = alphabet.find(row[static_cast<std::size_t>(x)]);
            if (!l) {
                throw FormatError(std::string("pattern: unknown glyph '") +
                                  row[static_cast<std::size_t>(x)] + "'");
            }
            out.set(x, h - 1 - r, *l); // first text row is the top row
        }
    }
    return out;
}

std::string RectPattern::to_text(const Alphabet& alphabet, char row_sep) const {
    std::string out;
    out.reserve(static_cast<std::size_t>(width_ + 1) * height_);
    for (int y = height_ - 1; y >= 0; --y) {
        for (int x = 0; x < width_; ++x) {
            out.push_back(alphabet.glyph(at(x, y)));
        }
        if (y > 0) out.push_back(row_sep);
    }
    return out;
}

std::strong_ordering operator<=>(const RectPattern& a, const RectPattern& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    if (auto c = a.height_ <=> b.height_; c != 0) return c;
    for (int y = a.height_ - 1; y >= 0; --y) {
        for (int x = 0; x < a.width_; ++x) {
            if (auto c = a.at(x, y).index <=> b.at(x, y).index; c != 0) return c;
        }
    }
    return std::strong_ordering::equal;
}

} // namespace sadic
