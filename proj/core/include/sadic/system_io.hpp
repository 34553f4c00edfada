#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "sadic/decoration.hpp"
#include "sadic/substitution.hpp"

namespace sadic {

/// In-memory form of a system document.
struct LoadedSystem {
    SubstitutionSet set;
    SequenceSpec sequence;
    bool non_degenerate = true;
};

/// JSON document:
/// {
///   "alphabet": ["o", "b"],
///   "substitutions": { "s": { "o": ["oo", "oo"], "b": ["oo", "bo"] } },
///   "sequence": { "prefix": [], "period": ["s"] },
///   "flags": { "non_degenerate": true }
/// }
/// Image rows are listed top to bottom. Validation errors name the offending
/// key.
LoadedSystem parse_system(const std::string& json_text);
LoadedSystem load_system(const std::filesystem::path& path);
std::string save_system(const LoadedSystem& system);

/// Pattern files: glyph rows, newline separated, top row first.
RectPattern load_pattern(const std::filesystem::path& path, const Alphabet& alphabet);

/// Decorated pattern text: rows top to bottom, cells whitespace separated,
/// each cell "glyph:vname:hname".
RectPattern parse_decorated_pattern(const std::string& text, const DecoratedSystem& system);
std::string decorated_pattern_to_text(const RectPattern& decorated, const DecoratedSystem& system);

using Rgb = std::array<std::uint8_t, 3>;

/// Evenly spaced grayscale by letter index.
std::vector<Rgb> default_palette(int letters);

/// The canonical glyph rows, '\n' separated, no trailing newline.
std::string render_ascii(const RectPattern& p, const Alphabet& alphabet);

/// Binary P6: "P6\n<w> <h>\n255\n" then rows top first, one RGB triple per
/// cell. Throws when the palette does not cover the pattern's letters.
std::string render_ppm(const RectPattern& p, const std::vector<Rgb>& palette);

} // namespace sadic
