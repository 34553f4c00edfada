#include "sadic/system_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sadic {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& key, const std::string& what) {
    throw FormatError("system document: " + key + ": " + what);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> string_list(const Json& j, const std::string& key) {
    if (!j.is_array()) fail(key, "expected an array of strings");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string()) fail(key, "expected an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

} // namespace

LoadedSystem parse_system(const std::string& json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("system document: not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("(document)", "expected a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "alphabet" && key != "substitutions" && key != "sequence" && key != "flags" &&
            key != "legend") {
            fail(key, "unknown key");
        }
    }

    if (!doc.contains("alphabet")) fail("alphabet", "missing");
    std::string glyphs;
    for (const std::string& g : string_list(doc["alphabet"], "alphabet")) {
        if (g.size() != 1) fail("alphabet", "each glyph must be a single character");
        glyphs += g;
    }
    Alphabet alphabet = [&] {
        try {
            return Alphabet(glyphs);
        } catch (const FormatError& e) {
            fail("alphabet", e.what());
        }
    }();

    bool non_degenerate = true;
    if (doc.contains("flags")) {
        const Json& flags = doc["flags"];
        if (!flags.is_object()) fail("flags", "expected an object");
        for (const auto& [key, value] : flags.items()) {
            if (key != "non_degenerate") fail("flags." + key, "unknown flag");
            if (!value.is_boolean()) fail("flags.non_degenerate", "expected a boolean");
            non_degenerate = value.get<bool>();
        }
    }

    if (!doc.contains("substitutions")) fail("substitutions", "missing");
    const Json& subs = doc["substitutions"];
    if (!subs.is_object() || subs.empty()) {
        fail("substitutions", "expected a nonempty object of name -> rules");
    }
    std::vector<Substitution> members;
    for (const auto& [name, rules] : subs.items()) {
        const std::string where = "substitutions." + name;
        if (!rules.is_object()) fail(where, "expected an object glyph -> rows");
        std::vector<RectPattern> images(static_cast<std::size_t>(alphabet.size()),
                                        RectPattern(1, 1));
        std::vector<bool> seen(static_cast<std::size_t>(alphabet.size()), false);
        for (const auto& [glyph, rows] : rules.items()) {
            const std::string key = where + "." + glyph;
            if (glyph.size() != 1) fail(key, "image keys must be single glyphs");
            auto letter = alphabet.find(glyph[0]);
            if (!letter) fail(key, "unknown glyph");
            try {
                images[static_cast<std::size_t>(letter->index)] =
                    RectPattern::from_rows(string_list(rows, key), alphabet);
            } catch (const FormatError& e) {
                fail(key, e.what());
            }
            seen[static_cast<std::size_t>(letter->index)] = true;
        }
        for (int a = 0; a < alphabet.size(); ++a) {
            if (!seen[static_cast<std::size_t>(a)]) {
                fail(where, std::string("missing image for glyph '") +
                                alphabet.glyph(Letter{a}) + "'");
            }
        }
        members.emplace_back(name, std::move(images));
    }
    SubstitutionSet set = [&] {
        try {
            return SubstitutionSet(std::move(alphabet), std::move(members), non_degenerate);
        } catch (const FormatError& e) {
            fail("substitutions", e.what());
        }
    }();

    if (!doc.contains("sequence")) fail("sequence", "missing");
    const Json& seq = doc["sequence"];
    if (!seq.is_object()) fail("sequence", "expected an object with prefix and period");
    for (const auto& [key, value] : seq.items()) {
        if (key != "prefix" && key != "period") fail("sequence." + key, "unknown key");
    }
    std::vector<std::string> prefix;
    if (seq.contains("prefix")) prefix = string_list(seq["prefix"], "sequence.prefix");
    if (!seq.contains("period")) fail("sequence.period", "missing");
    std::vector<std::string> period = string_list(seq["period"], "sequence.period");
    SequenceSpec sequence = [&] {
        try {
            return SequenceSpec::parse(set, prefix, period);
        } catch (const FormatError& e) {
            throw FormatError(std::string("system document: ") + e.what());
        }
    }();

    return LoadedSystem{std::move(set), std::move(sequence), non_degenerate};
}

LoadedSystem load_system(const std::filesystem::path& path) {
    return parse_system(read_file(path));
}

std::string save_system(const LoadedSystem& system) {
    const SubstitutionSet& set = system.set;
    const Alphabet& alphabet = set.alphabet();
    Json doc;
    doc["alphabet"] = Json::array();
    for (int a = 0; a < alphabet.size(); ++a) {
        doc["alphabet"].push_back(std::string(1, alphabet.glyph(Letter{a})));
    }
    doc["substitutions"] = Json::object();
    for (int m = 0; m < set.size(); ++m) {
        const Substitution& s = set.member(m);
        Json rules = Json::object();
        for (int a = 0; a < alphabet.size(); ++a) {
            const RectPattern& img = s.image(Letter{a});
            Json rows = Json::array();
            for (int y = img.height() - 1; y >= 0; --y) {
                std::string row;
                for (int x = 0; x < img.width(); ++x) row += alphabet.glyph(img.at(x, y));
                rows.push_back(row);
            }
            rules[std::string(1, alphabet.glyph(Letter{a}))] = rows;
        }
        doc["substitutions"][s.name()] = rules;
    }
    auto names = [&](const std::vector<int>& indices) {
        Json arr = Json::array();
        for (int i : indices) arr.push_back(set.member(i).name());
        return arr;
    };
    doc["sequence"] = Json::object();
    doc["sequence"]["prefix"] = names(system.sequence.prefix());
    doc["sequence"]["period"] = names(system.sequence.period());
    doc["flags"] = Json::object();
    doc["flags"]["non_degenerate"] = system.non_degenerate;
    return doc.dump(2) + "\n";
}

RectPattern load_pattern(const std::filesystem::path& path, const Alphabet& alphabet) {
    std::string text = read_file(path);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return RectPattern::parse(text, alphabet);
}

RectPattern parse_decorated_pattern(const std::string& text, const DecoratedSystem& system) {
    const SubstitutionSet& base = system.base_set();
    std::vector<std::vector<Letter>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::vector<Letter> row;
        std::istringstream cells(line);
        std::string cell;
        while (cells >> cell) {
            auto first = cell.find(':');
            auto second = cell.find(':', first + 1);
            if (first == std::string::npos || second == std::string::npos || first != 1) {
                throw FormatError("decorated pattern: cell '" + cell +
                                  "' is not of the form glyph:vname:hname");
            }
            auto letter = base.alphabet().find(cell[0]);
            if (!letter) {
                throw FormatError(std::string("decorated pattern: unknown glyph '") + cell[0] +
                                  "'");
            }
            auto v = base.find(cell.substr(2, second - 2));
            auto h = base.find(cell.substr(second + 1));
            if (!v || !h) throw FormatError("decorated pattern: unknown substitution name in '" +
                                            cell + "'");
            row.push_back(system.encode(DecoratedLetter{*letter, *v, *h}));
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw FormatError("decorated pattern: no cells");
    const int h = static_cast<int>(rows.size());
    const int w = static_cast<int>(rows.front().size());
    RectPattern out(w, h);
    for (int r = 0; r < h; ++r) {
        if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != w) {
            throw FormatError("decorated pattern: ragged rows");
        }
        for (int x = 0; x < w; ++x) {
            out.set(x, h - 1 - r, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)]);
        }
    }
    return out;
}

std::string decorated_pattern_to_text(const RectPattern& decorated,
                                      const DecoratedSystem& system) {
    const SubstitutionSet& base = system.base_set();
    std::ostringstream out;
    for (int y = decorated.height() - 1; y >= 0; --y) {
        for (int x = 0; x < decorated.width(); ++x) {
            if (x > 0) out << ' ';
            const DecoratedLetter d = system.decode(decorated.at(x, y));
            out << base.alphabet().glyph(d.base) << ':' << base.member(d.v_dec).name() << ':'
                << base.member(d.h_dec).name();
        }
        if (y > 0) out << '\n';
    }
    return out.str();
}

std::vector<Rgb> default_palette(int letters) {
    if (letters < 1) throw DomainError("palette: need at least one letter");
    std::vector<Rgb> out(static_cast<std::size_t>(letters));
    for (int i = 0; i < letters; ++i) {
        const int v = letters == 1 ? 0 : (255 * i) / (letters - 1);
        out[static_cast<std::size_t>(i)] = {static_cast<std::uint8_t>(v),
                                            static_cast<std::uint8_t>(v),
                                            static_cast<std::uint8_t>(v)};
    }
    return out;
}

std::string render_ascii(const RectPattern& p, const Alphabet& alphabet) {
    return p.to_text(alphabet, '\n');
}

std::string render_ppm(const RectPattern& p, const std::vector<Rgb>& palette) {
    if (p.max_letter_index() >= static_cast<int>(palette.size())) {
        throw DomainError("palette underspecified: pattern uses letter index " +
                          std::to_string(p.max_letter_index()) + " but palette has " +
                          std::to_string(palette.size()) + " entries");
    }
    std::string out = "P6\n" + std::to_string(p.width()) + " " + std::to_string(p.height()) +
                      "\n255\n";
    out.reserve(out.size() + static_cast<std::size_t>(p.width()) * p.height() * 3);
    for (int y = p.height() - 1; y >= 0; --y) {
        for (int x = 0; x < p.width(); ++x) {
            const Rgb& c = palette[static_cast<std::size_t>(p.at(x, y).index)];
            out.push_back(static_cast<char>(c[0]));
            out.push_back(static_cast<char>(c[1]));
            out.push_back(static_cast<char>(c[2]));
        }
    }
    return out;
}

} // namespace sadic
