#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubemorse/cover.hpp"

using namespace cubemorse;
using namespace cubemorse::cover;

TEST_CASE("voltage table is the product rule") {
    VoltageCover c = build_voltage_cover(2, Int(5));
    CHECK(c.side_size() == 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(c.voltage[i][j] == mod_reduce(Int(i + 1) * (j + 1), 5));
    CHECK(c.base_label(0) == "x1");
    CHECK(c.base_label(1) == "x2");
    CHECK(c.base_label(2) == "y1");
    CHECK(c.base_label(3) == "y2");
    CHECK_THROWS(build_voltage_cover(1, Int(5)));
    CHECK_THROWS(build_voltage_cover(2, Int(6)));   // composite
    CHECK_THROWS(build_voltage_cover(2, Int(3)));   // p <= 2n
}

TEST_CASE("derived graph is a connected cover with full 4-cycle lifts") {
    for (auto [n, p] : {std::pair<int, long>{2, 5}, {2, 7}, {3, 7}, {3, 11}}) {
        VoltageCover c = build_voltage_cover(n, Int(p));
        CoverReport rep = verify_cover_properties(c);
        CHECK(rep.covering.verdict == Verdict::Pass);
        CHECK(rep.connected.verdict == Verdict::Pass);
        CHECK(rep.four_cycle_lifts.verdict == Verdict::Pass);
        CHECK(c.num_derived_vertices() == 2L * c.side_size() * p);
    }
}

TEST_CASE("zero voltages break connectivity and cycle lifting") {
    VoltageCover c = build_voltage_cover(2, Int(5));
    for (auto& row : c.voltage)
        for (auto& v : row) v = 0;
    CoverReport rep = verify_cover_properties(c);
    CHECK(rep.covering.verdict == Verdict::Pass);  // still a local bijection
    CHECK(rep.connected.verdict == Verdict::Fail);
    CHECK(rep.four_cycle_lifts.verdict == Verdict::Fail);
    CHECK(rep.overall() == Verdict::Fail);
    CHECK(!rep.first_witness().empty());
}

TEST_CASE("derived neighbors respect the voltage rule") {
    VoltageCover c = build_voltage_cover(2, Int(5));
    long v = c.derived_vertex(0, 1, 2);  // (x2 on side F1, fiber 2)
    int side, idx;
    long k;
    c.derived_decode(v, side, idx, k);
    CHECK(side == 0);
    CHECK(idx == 1);
    CHECK(k == 2);
    auto nbrs = c.derived_neighbors(v);
    CHECK(nbrs.size() == static_cast<std::size_t>(c.side_size()));
    for (long w : nbrs) {
        c.derived_decode(w, side, idx, k);
        CHECK(side == 1);
        CHECK(mod_reduce(Int(k) - 2, 5) == c.voltage[1][idx]);
    }
}

TEST_CASE("preimages of joins stay connected for the product voltages") {
    VoltageCover c = build_voltage_cover(2, Int(5));
    CHECK(preimage_join_connected(c, {0, 1}, {2, 3}));
    CHECK(preimage_join_connected(c, {0, 1, 2}, {3}) ==
          preimage_join_connected(c, {3}, {0, 1, 2}));
    // a single base edge lifts to a perfect matching on the fibers, and a
    // star with a single hub fans out into p disjoint stars
    CHECK(!preimage_join_connected(c, {0}, {2}));
    CHECK(!preimage_join_connected(c, {0, 1}, {2}));
    VoltageCover z = c;
    for (auto& row : z.voltage)
        for (auto& v : row) v = 0;
    CHECK(!preimage_join_connected(z, {0, 1}, {2, 3}));
}

TEST_CASE("fiber translation is a deck transformation on living subgraphs") {
    VoltageCover c = build_voltage_cover(3, Int(7));
    for (const auto& ch : morse::enumerate_chambers(morse::Family::Theta, 3))
        CHECK(verify_deck_invariance(c, ch.representative).verdict == Verdict::Pass);
}

TEST_CASE("full hypothesis grid over the cover, every chamber") {
    for (auto [n, p] : {std::pair<int, long>{2, 5}, {3, 7}}) {
        VoltageCover c = build_voltage_cover(n, Int(p));
        REQUIRE(verify_cover_properties(c).overall() == Verdict::Pass);
        for (const auto& ch : morse::enumerate_chambers(morse::Family::Theta, n)) {
            CHECK(check_type1_hypotheses(n, ch.representative).overall() == Verdict::Pass);
            CHECK(check_type2_hypotheses(c, ch.representative).overall() == Verdict::Pass);
        }
    }
}

TEST_CASE("type-2 checks fail with named witnesses on the broken cover") {
    VoltageCover c = build_voltage_cover(2, Int(5));
    for (auto& row : c.voltage)
        for (auto& v : row) v = 0;
    auto chi = morse::Character::make(morse::Family::Theta, 2, {Rational(1)});
    auto rep = check_type2_hypotheses(c, chi);
    CHECK(rep.overall() == Verdict::Fail);
    CHECK(rep.first_witness().find("disconnected") != std::string::npos);
}

TEST_CASE("oversized fibers are refused early") {
    VoltageCover c;
    c.n = 2;
    c.p = Int("1000000007");
    c.voltage.assign(4, std::vector<Int>(4, 1));
    CHECK_THROWS(c.fiber_size());
}
