#include <doctest.h>

#include <cstring>

#include "sadic/core_ops.hpp"
#include "sadic/system_io.hpp"
#include "support/test_systems.hpp"

using namespace sadic;

namespace {

const char* kEx1Doc = R"({
  "alphabet": ["o", "b"],
  "substitutions": { "s": { "o": ["oo", "oo"], "b": ["oo", "bo"] } },
  "sequence": { "prefix": [], "period": ["s"] },
  "flags": { "non_degenerate": true }
})";

} // namespace

TEST_CASE("loading the one-substitution document") {
    LoadedSystem sys = parse_system(kEx1Doc);
    CHECK(sys.set.size() == 1);
    CHECK(sys.set.alphabet().glyphs() == "ob");
    CHECK(sys.set.member(0).image(Letter{1}).to_text(sys.set.alphabet()) == "oo/bo");
    CHECK(sys.sequence.member_at(17) == 0);
    CHECK(sys.non_degenerate);
}

TEST_CASE("document validation names the offending key") {
    auto message_of = [](const std::string& doc) {
        try {
            parse_system(doc);
            return std::string();
        } catch (const FormatError& e) {
            return std::string(e.what());
        }
    };

    SUBCASE("ragged rows") {
        std::string msg = message_of(R"({
          "alphabet": ["o", "b"],
          "substitutions": { "s": { "o": ["oo", "o"], "b": ["oo", "bo"] } },
          "sequence": { "prefix": [], "period": ["s"] }
        })");
        CHECK(msg.find("substitutions.s.o") != std::string::npos);
        CHECK(msg.find("ragged") != std::string::npos);
    }

    SUBCASE("unknown glyph") {
        std::string msg = message_of(R"({
          "alphabet": ["o", "b"],
          "substitutions": { "s": { "o": ["ox", "oo"], "b": ["oo", "bo"] } },
          "sequence": { "prefix": [], "period": ["s"] }
        })");
        CHECK(msg.find("substitutions.s.o") != std::string::npos);
        CHECK(msg.find("unknown glyph") != std::string::npos);
    }

    SUBCASE("degenerate image under the default flag") {
        std::string msg = message_of(R"({
          "alphabet": ["o", "b"],
          "substitutions": { "s": { "o": ["o"], "b": ["oo", "bo"] } },
          "sequence": { "prefix": [], "period": ["s"] }
        })");
        CHECK(msg.find("degenerate") != std::string::npos);

        // and it is accepted when the flag is off
        LoadedSystem sys = parse_system(R"({
          "alphabet": ["o", "b"],
          "substitutions": { "s": { "o": ["o"], "b": ["oo", "bo"] } },
          "sequence": { "prefix": [], "period": ["s"] },
          "flags": { "non_degenerate": false }
        })");
        CHECK_FALSE(sys.non_degenerate);
    }

    SUBCASE("missing image") {
        std::string msg = message_of(R"({
          "alphabet": ["o", "b"],
          "substitutions": { "s": { "o": ["oo", "oo"] } },
          "sequence": { "prefix": [], "period": ["s"] }
        })");
        CHECK(msg.find("substitutions.s") != std::string::npos);
        CHECK(msg.find("missing image") != std::string::npos);
    }

    SUBCASE("unknown sequence name") {
        std::string msg = message_of(R"({
          "alphabet": ["o", "b"],
          "substitutions": { "s": { "o": ["oo", "oo"], "b": ["oo", "bo"] } },
          "sequence": { "prefix": [], "period": ["zzz"] }
        })");
        CHECK(msg.find("sequence.period") != std::string::npos);
    }

    SUBCASE("not JSON at all") {
        CHECK(message_of("pure garbage").find("not valid JSON") != std::string::npos);
    }
}

TEST_CASE("the shipped system documents load and round trip") {
    for (const char* name : {"ex1.json", "ex3.json", "ruler3.json"}) {
        LoadedSystem sys = load_system(std::string(SADIC_SYSTEMS_DIR) + "/" + name);
        CHECK(sys.set.size() >= 1);
        CHECK(sys.non_degenerate);
        LoadedSystem again = parse_system(save_system(sys));
        CHECK(save_system(again) == save_system(sys));
    }
    CHECK_THROWS_AS(load_system("/no/such/file.json"), FormatError);
}

TEST_CASE("save and reload is the identity on the canonical form") {
    LoadedSystem sys = parse_system(kEx1Doc);
    std::string text = save_system(sys);
    LoadedSystem again = parse_system(text);
    CHECK(save_system(again) == text);
    CHECK(again.set.size() == sys.set.size());
    CHECK(again.set.member(0).image(Letter{1}) == sys.set.member(0).image(Letter{1}));
    CHECK(again.sequence.prefix() == sys.sequence.prefix());
    CHECK(again.sequence.period() == sys.sequence.period());
}

TEST_CASE("decorated pattern text round trip") {
    SubstitutionSet ex3 = fixtures::example3();
    DecoratedSystem sys = DecoratedSystem::lift(ex3);
    SequenceSpec seq = SequenceSpec::parse(ex3, {}, {"a", "c"});
    RectPattern lifted =
        iterate(sys.lifted_set(), seq, 1, sys.encode(DecoratedLetter{Letter{1}, 3, 3}));
    std::string text = decorated_pattern_to_text(lifted, sys);
    RectPattern back = parse_decorated_pattern(text, sys);
    CHECK(back == lifted);

    CHECK_THROWS_AS(parse_decorated_pattern("o:a\n", sys), FormatError);
    CHECK_THROWS_AS(parse_decorated_pattern("o:a:zz\n", sys), FormatError);
}

TEST_CASE("ascii rendering") {
    const Alphabet ob = fixtures::ob_alphabet();
    CHECK(render_ascii(fixtures::pat(ob, "oo/bo"), ob) == "oo\nbo");
}

TEST_CASE("ppm rendering") {
    const Alphabet ob = fixtures::ob_alphabet();
    RectPattern p = fixtures::pat(ob, "oo/bo");
    std::string ppm = render_ppm(p, default_palette(2));

    const std::string header = "P6\n2 2\n255\n";
    REQUIRE(ppm.size() == header.size() + 12);
    CHECK(ppm.compare(0, header.size(), header) == 0);

    // top row first: o o / b o with o -> 0 and b -> 255
    const unsigned char* px = reinterpret_cast<const unsigned char*>(ppm.data() + header.size());
    CHECK(px[0] == 0);
    CHECK(px[3] == 0);
    CHECK(px[6] == 255);
    CHECK(px[7] == 255);
    CHECK(px[8] == 255);
    CHECK(px[9] == 0);

    CHECK_THROWS_AS(render_ppm(p, default_palette(1)), DomainError);

    SUBCASE("level-4 image keeps a single bullet pixel at the bottom left") {
        SubstitutionSet ex1 = fixtures::example1();
        RectPattern big = iterate(ex1, SequenceSpec({}, {0}), 4, Letter{1});
        REQUIRE(big.width() == 32);
        REQUIRE(big.height() == 32);
        std::string img = render_ppm(big, default_palette(2));
        const std::string hdr = "P6\n32 32\n255\n";
        const unsigned char* data =
            reinterpret_cast<const unsigned char*>(img.data() + hdr.size());
        int bullets = 0;
        int bullet_index = -1;
        for (int i = 0; i < 32 * 32; ++i) {
            if (data[3 * i] == 255) {
                ++bullets;
                bullet_index = i;
            }
        }
        CHECK(bullets == 1);
        // last pixel row, first column
        CHECK(bullet_index == 31 * 32);
    }
}
