// Command-line front end: system documents in, patterns/languages/verdicts
// out. Exit codes: 0 success, 1 domain verdicts or domain errors
// (incompatible, unparseable, ambiguous), 2 usage and file errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sadic/core_ops.hpp"
#include "sadic/decoration.hpp"
#include "sadic/derivation.hpp"
#include "sadic/language.hpp"
#include "sadic/property_a.hpp"
#include "sadic/system_io.hpp"

namespace {

using namespace sadic;

std::pair<int, int> parse_window(const std::string& text) {
    auto x = text.find('x');
    if (x == std::string::npos || x == 0 || x + 1 == text.size()) {
        throw FormatError("--window expects WxH, e.g. 2x2");
    }
    try {
        return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
    } catch (const std::exception&) {
        throw FormatError("--window expects WxH, e.g. 2x2");
    }
}

Letter parse_letter(const Alphabet& alphabet, const std::string& glyph) {
    if (glyph.size() != 1) throw FormatError("--letter expects a single glyph");
    auto l = alphabet.find(glyph[0]);
    if (!l) throw FormatError("glyph '" + glyph + "' is not in the alphabet");
    return *l;
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<Rgb> parse_palette(const std::string& text) {
    std::vector<Rgb> out;
    for (const std::string& tok : split_names(text)) {
        if (tok.size() != 6 || tok.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos) {
            throw FormatError("--palette expects comma-separated RRGGBB values");
        }
        auto byte = [&](int i) {
            return static_cast<std::uint8_t>(std::stoi(tok.substr(static_cast<std::size_t>(i), 2),
                                                       nullptr, 16));
        };
        out.push_back(Rgb{byte(0), byte(2), byte(4)});
    }
    return out;
}

void write_output(const std::string& bytes, const std::string& out_path, bool text) {
    if (out_path.empty()) {
        std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (text) std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw FormatError("cannot write '" + out_path + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (text) out << '\n';
}

void print_window_set(const WindowSet& windows, const Alphabet& alphabet) {
    bool first = true;
    for (const RectPattern& p : windows.members) {
        if (!first) std::cout << '\n';
        std::cout << p.to_text(alphabet, '\n') << '\n';
        first = false;
    }
}

void print_parse(const ParseResult& r, const Alphabet& alphabet) {
    std::cout << r.substitution << " offset=(" << r.dx << "," << r.dy << ") cropped="
              << (r.cropped ? "true" : "false") << '\n'
              << r.preimage.to_text(alphabet, '\n') << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"substitution system workbench"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string system_path, pattern_path, out_path, window = "2x2", letter, subs_grid, sub_name;
    std::string samples_seq, palette_text, vdec, hdec;
    std::string gen_format = "ascii", render_format = "ppm";
    std::string glang_mode = "seq", parse_mode_opt = "anchored", propa_mode = "sufficient";
    int level = 0, depth = 1, k_bound = 2;
    std::size_t budget = 200000;
    int recover_budget = 12;
    bool emit_pattern = false;

    auto add_system = [&](CLI::App* cmd) {
        cmd->add_option("--system", system_path, "system document (JSON)")->required();
    };

    // gen
    auto* gen = app.add_subcommand("gen", "iterate the sequence on a letter");
    add_system(gen);
    gen->add_option("--level", level, "iteration level")->required();
    gen->add_option("--letter", letter, "seed glyph")->required();
    gen->add_option("--format", gen_format, "ascii or ppm");
    gen->add_option("--out", out_path, "output file (default stdout)");
    gen->callback([&] {
        LoadedSystem sys = load_system(system_path);
        RectPattern p = iterate(sys.set, sys.sequence, level, parse_letter(sys.set.alphabet(), letter));
        if (gen_format == "ppm") {
            write_output(render_ppm(p, default_palette(sys.set.alphabet().size())), out_path, false);
        } else if (gen_format == "ascii") {
            write_output(render_ascii(p, sys.set.alphabet()), out_path, out_path.empty());
        } else {
            throw FormatError("--format must be ascii or ppm");
        }
    });

    // lang / global-lang / spatterns
    auto* lang = app.add_subcommand("lang", "windows of the sequence iterates");
    add_system(lang);
    lang->add_option("--level", level, "level bound")->required();
    lang->add_option("--window", window, "window shape WxH")->required();
    lang->callback([&] {
        LoadedSystem sys = load_system(system_path);
        auto [w, h] = parse_window(window);
        print_window_set(local_language(sys.set, sys.sequence, level, w, h), sys.set.alphabet());
    });

    auto* glang = app.add_subcommand("global-lang", "windows with preimages of every order");
    add_system(glang);
    glang->add_option("--level", level, "level bound")->required();
    glang->add_option("--window", window, "window shape WxH")->required();
    glang->add_option("--mode", glang_mode, "seq or set");
    glang->add_option("--budget", budget, "enumeration budget");
    glang->callback([&] {
        LoadedSystem sys = load_system(system_path);
        auto [w, h] = parse_window(window);
        if (glang_mode != "seq" && glang_mode != "set") {
            throw FormatError("--mode must be seq or set");
        }
        const SequenceSpec* seq = glang_mode == "seq" ? &sys.sequence : nullptr;
        print_window_set(global_language(sys.set, seq, level, w, h, budget), sys.set.alphabet());
    });

    auto* spat = app.add_subcommand("spatterns", "patterns reachable at exactly one level");
    add_system(spat);
    spat->add_option("--level", level, "level")->required();
    spat->add_option("--budget", budget, "enumeration budget");
    spat->callback([&] {
        LoadedSystem sys = load_system(system_path);
        bool first = true;
        for (const RectPattern& p : s_patterns(sys.set, level, budget)) {
            if (!first) std::cout << '\n';
            std::cout << p.to_text(sys.set.alphabet(), '\n') << '\n';
            first = false;
        }
    });

    // decorate / history / check-sync
    auto* dec = app.add_subcommand("decorate", "print the history-recording lift");
    add_system(dec);
    dec->add_option("--sub", sub_name, "only this substitution");
    dec->callback([&] {
        LoadedSystem sys = load_system(system_path);
        DecoratedSystem lifted = DecoratedSystem::lift(sys.set);
        bool first = true;
        for (int m = 0; m < sys.set.size(); ++m) {
            if (!sub_name.empty() && sys.set.member(m).name() != sub_name) continue;
            for (int a = 0; a < sys.set.alphabet().size(); ++a) {
                for (int v = 0; v < sys.set.size(); ++v) {
                    for (int h = 0; h < sys.set.size(); ++h) {
                        DecoratedLetter d{Letter{a}, v, h};
                        if (!first) std::cout << '\n';
                        std::cout << lifted.lifted_set().member(m).name() << " ("
                                  << sys.set.alphabet().glyph(d.base) << ","
                                  << sys.set.member(v).name() << "," << sys.set.member(h).name()
                                  << ") ->\n"
                                  << decorated_pattern_to_text(
                                         lifted.lifted_set().member(m).image(lifted.encode(d)),
                                         lifted)
                                  << '\n';
                        first = false;
                    }
                }
            }
        }
        if (first) throw FormatError("--sub does not name a member of the set");
    });

    auto* hist = app.add_subcommand("history", "substitution names recorded along the bottom row");
    add_system(hist);
    hist->add_option("--level", level, "iteration level")->required();
    hist->add_option("--letter", letter, "seed glyph (default: first letter)");
    hist->add_option("--vdec", vdec, "seed V decoration (default: last member)");
    hist->add_option("--hdec", hdec, "seed H decoration (default: last member)");
    hist->add_flag("--emit-pattern", emit_pattern, "print the decorated iterate instead");
    hist->callback([&] {
        LoadedSystem sys = load_system(system_path);
        const SubstitutionSet& set = sys.set;
        DecoratedLetter seed;
        seed.base = letter.empty() ? Letter{0} : parse_letter(set.alphabet(), letter);
        auto resolve = [&](const std::string& name) {
            if (name.empty()) return set.size() - 1;
            auto idx = set.find(name);
            if (!idx) throw FormatError("unknown substitution name '" + name + "'");
            return *idx;
        };
        seed.v_dec = resolve(vdec);
        seed.h_dec = resolve(hdec);
        if (emit_pattern) {
            DecoratedSystem lifted = DecoratedSystem::lift(set);
            RectPattern p = iterate(lifted.lifted_set(), lifted.lift_sequence(sys.sequence), level,
                                    lifted.encode(seed));
            std::cout << decorated_pattern_to_text(p, lifted) << '\n';
            return;
        }
        bool first = true;
        for (const std::string& name : history_word(set, sys.sequence, level, seed)) {
            if (!first) std::cout << ' ';
            std::cout << name;
            first = false;
        }
        std::cout << '\n';
    });

    auto* sync = app.add_subcommand("check-sync", "synchronization of a decorated pattern");
    add_system(sync);
    sync->add_option("--pattern", pattern_path, "decorated pattern file")->required();
    sync->callback([&] {
        LoadedSystem sys = load_system(system_path);
        DecoratedSystem lifted = DecoratedSystem::lift(sys.set);
        std::ifstream in(pattern_path, std::ios::binary);
        if (!in) throw FormatError("cannot open '" + pattern_path + "'");
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (lifted.sync_check(parse_decorated_pattern(text, lifted))) {
            std::cout << "synchronized\n";
        } else {
            std::cout << "not synchronized\n";
            exit_code = 1;
        }
    });

    // parse / recover
    auto* parse = app.add_subcommand("parse", "desubstitute a pattern");
    add_system(parse);
    parse->add_option("--pattern", pattern_path, "pattern file")->required();
    parse->add_option("--mode", parse_mode_opt, "anchored or windowed");
    parse->callback([&] {
        LoadedSystem sys = load_system(system_path);
        if (parse_mode_opt != "anchored" && parse_mode_opt != "windowed") {
            throw FormatError("--mode must be anchored or windowed");
        }
        RectPattern p = load_pattern(pattern_path, sys.set.alphabet());
        auto results = desubstitute(
            p, sys.set, parse_mode_opt == "anchored" ? ParseMode::anchored : ParseMode::windowed);
        if (results.empty()) {
            std::cout << "unparseable\n";
            exit_code = 1;
            return;
        }
        bool first = true;
        for (const ParseResult& r : results) {
            if (!first) std::cout << '\n';
            print_parse(r, sys.set.alphabet());
            first = false;
        }
    });

    auto* recover = app.add_subcommand("recover", "recover the sequence prefix from samples");
    add_system(recover);
    recover->add_option("--samples-from-seq", samples_seq,
                        "comma-separated names; samples are iterates of this sequence")
        ->required();
    recover->add_option("--depth", depth, "stages to recover")->required();
    recover->add_option("--letter", letter, "sample seed glyph (default: first letter)");
    recover->add_option("--budget", recover_budget, "largest sample level");
    recover->callback([&] {
        LoadedSystem sys = load_system(system_path);
        const SubstitutionSet& set = sys.set;
        SequenceSpec sample_seq = SequenceSpec::parse(set, {}, split_names(samples_seq));
        Letter seed = letter.empty() ? Letter{0} : parse_letter(set.alphabet(), letter);
        SampleProvider provider = [&](int n) { return iterate(set, sample_seq, n, seed); };
        RecoveryOutcome got = recover_sequence(provider, set, depth, recover_budget);
        if (!got.ok()) {
            std::cout << "ambiguous at sample level " << got.ambiguity->sample_level << ":\n";
            for (const ParseResult& r : got.ambiguity->survivors) {
                std::cout << r.substitution << " offset=(" << r.dx << "," << r.dy << ")\n";
            }
            exit_code = 1;
            return;
        }
        bool first = true;
        for (const std::string& name : got.names) {
            if (!first) std::cout << ' ';
            std::cout << name;
            first = false;
        }
        std::cout << '\n';
    });

    // check-compat / check-propa
    auto* compat = app.add_subcommand("check-compat", "extent agreement of a grid on a pattern");
    add_system(compat);
    compat->add_option("--pattern", pattern_path, "pattern file")->required();
    compat->add_option("--subs", subs_grid, "substitution grid, rows split by '/'");
    compat->add_option("--sub", sub_name, "single substitution applied uniformly");
    compat->callback([&] {
        LoadedSystem sys = load_system(system_path);
        RectPattern p = load_pattern(pattern_path, sys.set.alphabet());
        bool ok = false;
        if (!subs_grid.empty()) {
            ok = check_compat_nonuniform(sys.set, SubstitutionPattern::parse(sys.set, subs_grid), p);
        } else if (!sub_name.empty()) {
            ok = check_compat_uniform(sys.set.by_name(sub_name), p);
        } else {
            throw FormatError("check-compat needs --subs or --sub");
        }
        std::cout << (ok ? "compatible" : "incompatible") << '\n';
        if (!ok) exit_code = 1;
    });

    auto* propa = app.add_subcommand("check-propa", "property A checks");
    add_system(propa);
    propa->add_option("--mode", propa_mode, "sufficient or bounded");
    propa->add_option("--level", k_bound, "pattern level bound (bounded mode)");
    propa->add_option("--depth", depth, "derivation depth bound (bounded mode)");
    propa->add_option("--budget", budget, "search budget");
    propa->callback([&] {
        LoadedSystem sys = load_system(system_path);
        PropertyAVerdict verdict;
        if (propa_mode == "sufficient") {
            verdict = sufficient_property_a(sys.set);
        } else if (propa_mode == "bounded") {
            verdict = bounded_property_a(sys.set, k_bound, depth, budget);
        } else {
            throw FormatError("--mode must be sufficient or bounded");
        }
        std::cout << to_string(verdict.status) << '\n';
        if (verdict.witness) {
            const PropertyAWitness& w = *verdict.witness;
            std::cout << "pattern:\n"
                      << w.pattern.to_text(sys.set.alphabet(), '\n') << '\n'
                      << "block at (" << w.block_x << "," << w.block_y << "), chain:";
            for (const SubstitutionPattern& sp : w.chain) std::cout << " [" << sp.to_text(sys.set) << "]";
            std::cout << '\n';
        }
        if (verdict.status == PropertyAStatus::counterexample) exit_code = 1;
    });

    // render
    auto* render = app.add_subcommand("render", "render a pattern or an iterate");
    add_system(render);
    render->add_option("--pattern", pattern_path, "pattern file");
    render->add_option("--level", level, "iteration level (with --letter)");
    render->add_option("--letter", letter, "seed glyph (with --level)");
    render->add_option("--format", render_format, "ppm or ascii");
    render->add_option("--palette", palette_text, "comma-separated RRGGBB per letter");
    render->add_option("--out", out_path, "output file (default stdout)");
    render->callback([&] {
        LoadedSystem sys = load_system(system_path);
        RectPattern p = [&] {
            if (!pattern_path.empty()) return load_pattern(pattern_path, sys.set.alphabet());
            if (letter.empty()) throw FormatError("render needs --pattern or --level/--letter");
            return iterate(sys.set, sys.sequence, level,
                           parse_letter(sys.set.alphabet(), letter));
        }();
        if (render_format == "ascii") {
            write_output(render_ascii(p, sys.set.alphabet()), out_path, out_path.empty());
            return;
        }
        if (render_format != "ppm") throw FormatError("--format must be ppm or ascii");
        std::vector<Rgb> palette = palette_text.empty()
                                       ? default_palette(sys.set.alphabet().size())
                                       : parse_palette(palette_text);
        if (static_cast<int>(palette.size()) < sys.set.alphabet().size()) {
            throw DomainError("palette underspecified: " + std::to_string(palette.size()) +
                              " colors for " + std::to_string(sys.set.alphabet().size()) +
                              " letters");
        }
        write_output(render_ppm(p, palette), out_path, false);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
