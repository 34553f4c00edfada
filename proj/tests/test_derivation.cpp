#include <doctest.h>

#include <random>
#include <set>

#include "sadic/derivation.hpp"
#include "support/test_systems.hpp"

using namespace sadic;
using fixtures::pat;

namespace {

const Alphabet kOb = fixtures::ob_alphabet();

// Re-application must reproduce the parsed pattern wherever the shifted
// image and the pattern overlap.
void check_sound(const ParseResult& r, const RectPattern& p, const SubstitutionSet& set) {
    RectPattern image = apply_uniform(set.member(r.member), r.preimage);
    if (!r.cropped) {
        REQUIRE(r.dx == 0);
        REQUIRE(r.dy == 0);
        CHECK(image == p);
        return;
    }
    for (int y = 0; y < p.height(); ++y) {
        for (int x = 0; x < p.width(); ++x) {
            const int ix = x + r.dx;
            const int iy = y + r.dy;
            if (ix < image.width() && iy < image.height()) {
                CHECK(image.at(ix, iy) == p.at(x, y));
            }
        }
    }
}

} // namespace

TEST_CASE("anchored desubstitution") {
    SubstitutionSet ex1 = fixtures::example1();

    auto one = desubstitute(pat(kOb, "oo/bo"), ex1, ParseMode::anchored);
    REQUIRE(one.size() == 1);
    CHECK(one[0].substitution == "s");
    CHECK(one[0].dx == 0);
    CHECK(one[0].dy == 0);
    CHECK(one[0].preimage == pat(kOb, "b"));
    CHECK_FALSE(one[0].cropped);

    auto two = desubstitute(pat(kOb, "oooo/oooo/oooo/booo"), ex1, ParseMode::anchored);
    REQUIRE(two.size() == 1);
    CHECK(two[0].preimage == pat(kOb, "oo/bo"));

    // a pattern that is no image at all
    CHECK(desubstitute(pat(kOb, "bb/bb"), ex1, ParseMode::anchored).empty());
    // odd width cannot be tiled by 2x2 blocks
    CHECK(desubstitute(pat(kOb, "ooo/ooo"), ex1, ParseMode::anchored).empty());
}

TEST_CASE("windowed desubstitution of the all-o square") {
    SubstitutionSet ex1 = fixtures::example1();
    RectPattern allo(4, 4, Letter{0});

    auto parses = desubstitute(allo, ex1, ParseMode::windowed);
    REQUIRE(parses.size() == 4);
    std::vector<std::pair<int, int>> offsets;
    for (const ParseResult& r : parses) {
        offsets.emplace_back(r.dx, r.dy);
        CHECK(r.substitution == "s");
        CHECK(r.preimage.max_letter_index() == 0); // all-o preimages
        check_sound(r, allo, ex1);
    }
    CHECK(offsets == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK_FALSE(parses[0].cropped);
    CHECK(parses[1].cropped);
}

TEST_CASE("windowed desubstitution crops on every margin") {
    SubstitutionSet ex3 = fixtures::example3();
    SequenceSpec seq = SequenceSpec::parse(ex3, {}, {"d", "c", "a"});
    RectPattern big = iterate(ex3, seq, 2, Letter{1});

    // interior window straddling block boundaries of the outer d-layer;
    // its (0,0) cell sits at position (1,1) of a d block
    RectPattern window = big.window(1, 1, big.width() - 2, big.height() - 2);
    auto parses = desubstitute(window, ex3, ParseMode::windowed);
    bool found_d = false;
    for (const ParseResult& r : parses) {
        check_sound(r, window, ex3);
        if (r.substitution == "d" && r.dx == 1 && r.dy == 1) found_d = true;
    }
    CHECK(found_d);
}

TEST_CASE("letter ambiguity is enumerated for full blocks") {
    // two letters with identical images
    Alphabet ab("xy");
    SubstitutionSet twin(ab, {fixtures::make_sub(ab, "t", {"xx/xx", "xx/xx"})});
    auto parses = desubstitute(RectPattern(2, 2, Letter{0}), twin, ParseMode::anchored);
    REQUIRE(parses.size() == 2); // preimage may be x or y
    CHECK(parses[0].preimage == RectPattern(1, 1, Letter{0}));
    CHECK(parses[1].preimage == RectPattern(1, 1, Letter{1}));
}

TEST_CASE("parse and apply round trip on random systems") {
    std::mt19937 rng(71);
    int parses_checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        SubstitutionSet set = fixtures::random_uniform_set(rng);
        SequenceSpec seq = fixtures::random_sequence(rng, set);
        std::uniform_int_distribution<int> l_d(0, set.alphabet().size() - 1);
        std::uniform_int_distribution<int> n_d(1, 3);
        const int n = n_d(rng);
        Letter a{l_d(rng)};
        RectPattern p = iterate(set, seq, n, a);
        if (p.width() > 64 || p.height() > 64) continue;

        // anchored parse by the outermost substitution recovers the next level
        const int outer = seq.member_at(0);
        auto parses = desubstitute_by(p, set, outer, ParseMode::anchored);
        SequenceSpec shifted({}, {0});
        shifted.set_rule([&seq](std::size_t i) { return seq.member_at(i + 1); });
        RectPattern preimage = iterate(set, shifted, n - 1, a);
        bool found = false;
        for (const ParseResult& r : parses) {
            check_sound(r, p, set);
            ++parses_checked;
            if (r.preimage == preimage && !r.cropped) found = true;
        }
        CHECK(found);
    }
    CHECK(parses_checked > 0);
}

TEST_CASE("sequence recovery") {
    SubstitutionSet ex3 = fixtures::example3();

    SUBCASE("round trip on a three-stage prefix") {
        SequenceSpec seq = SequenceSpec::parse(ex3, {}, {"d", "c", "a"});
        SampleProvider provider = [&](int n) { return iterate(ex3, seq, n, Letter{1}); };
        RecoveryOutcome got = recover_sequence(provider, ex3, 3, 8);
        REQUIRE(got.ok());
        CHECK(got.names == std::vector<std::string>{"d", "c", "a"});
    }

    SUBCASE("singleton sets recover themselves at any depth") {
        SubstitutionSet ex1 = fixtures::example1();
        SequenceSpec constant({}, {0});
        SampleProvider provider = [&](int n) { return iterate(ex1, constant, n, Letter{0}); };
        RecoveryOutcome got = recover_sequence(provider, ex1, 4, 8);
        REQUIRE(got.ok());
        CHECK(got.names == std::vector<std::string>{"s", "s", "s", "s"});
    }

    SUBCASE("renamed copies are reported ambiguous") {
        SubstitutionSet twins(kOb, {fixtures::make_sub(kOb, "p", {"oo/oo", "oo/bo"}),
                                    fixtures::make_sub(kOb, "q", {"oo/oo", "oo/bo"})});
        SequenceSpec constant({}, {0});
        SampleProvider provider = [&](int n) { return iterate(twins, constant, n, Letter{1}); };
        RecoveryOutcome got = recover_sequence(provider, twins, 2, 5);
        REQUIRE_FALSE(got.ok());
        CHECK(got.names.empty());
        CHECK(got.ambiguity->survivors.size() >= 2);
        CHECK(got.ambiguity->sample_level == 5);
        std::set<std::string> names;
        for (const auto& r : got.ambiguity->survivors) names.insert(r.substitution);
        CHECK(names == std::set<std::string>{"p", "q"});
    }

    SUBCASE("foreign samples are rejected") {
        SubstitutionSet ex1 = fixtures::example1();
        SampleProvider provider = [&](int) { return pat(kOb, "bbb/bbb"); };
        CHECK_THROWS_AS(recover_sequence(provider, ex1, 1, 4), DomainError);
    }
}

TEST_CASE("unique derivation probe") {
    SubstitutionSet ex1 = fixtures::example1();

    SUBCASE("the all-o window is ambiguous") {
        auto outcome = unique_derivation_check(ex1, 4, 200000);
        REQUIRE_FALSE(outcome.no_counterexample());
        const auto& cex = *outcome.counterexample;
        CHECK(cex.window == RectPattern(4, 4, Letter{0}));
        CHECK(cex.parses.size() == 4);
        for (const ParseResult& r : cex.parses) check_sound(r, cex.window, ex1);
    }

    SUBCASE("rigid fixture has no small counterexample") {
        // distinct letters at the image origins, distinct extents, and
        // contents that match no shifted placement of either image
        Alphabet ab("xy");
        SubstitutionSet rigid(ab, {fixtures::make_sub(ab, "r", {"yx/xy", "xxx/xxy/yyx"})});
        auto outcome = unique_derivation_check(rigid, 3, 200000);
        CHECK(outcome.no_counterexample());
    }

    SUBCASE("side below the largest extent is rejected") {
        SubstitutionSet ex3 = fixtures::example3();
        CHECK_THROWS_AS(unique_derivation_check(ex3, 2, 1000), DomainError);
    }
}
