#include <doctest.h>

#include <random>

#include "gwx/errors.hpp"
#include "gwx/gv.hpp"

using namespace gwx;

namespace {

const GenusTable kLineGW{InvariantKind::GW, 4, true, 2, {{0, Rat(1)}, {1, Rat(-1, 12)}, {2, Rat(1, 360)}}};

}  // namespace

TEST_CASE("gate predicate") {
    CHECK(gv_identification_applies(1, false));
    CHECK(gv_identification_applies(0, true));
    CHECK_FALSE(gv_identification_applies(0, false));
    CHECK_FALSE(gv_identification_applies(-1, true));
}

TEST_CASE("gv_from_gw: line in P^3") {
    const GVReport r = gv_from_gw(kLineGW);
    CHECK(r.table.kind == InvariantKind::GV);
    CHECK(r.table.values == std::map<int, Rat>{{0, Rat(1)}, {1, Rat(0)}, {2, Rat(0)}});
    CHECK(r.integral);
    CHECK(r.non_integral_genera.empty());
    REQUIRE(r.largest_nonzero_genus.has_value());
    CHECK(*r.largest_nonzero_genus == 0);
    CHECK(r.truncation_caveat.find("2") != std::string::npos);
}

TEST_CASE("gv_from_gw: perturbation is caught") {
    GenusTable t = kLineGW;
    t.values[2] += Rat(1, 1000);
    const GVReport r = gv_from_gw(t);
    CHECK_FALSE(r.integral);
    CHECK(r.non_integral_genera == std::vector<int>{2});
    CHECK(*r.largest_nonzero_genus == 2);
}

TEST_CASE("gv_from_gw: uncovered classes are refused") {
    GenusTable t = kLineGW;
    t.c = -1;
    CHECK_THROWS_AS(gv_from_gw(t), ClassNotCovered);
    t.c = 0;
    t.primitive = false;
    CHECK_THROWS_AS(gv_from_gw(t), ClassNotCovered);
    t.primitive = true;
    CHECK_NOTHROW(gv_from_gw(t));
    GenusTable gv = t;
    gv.kind = InvariantKind::GV;
    gv.primitive = false;
    CHECK_THROWS_AS(gw_from_gv(gv), ClassNotCovered);
    CHECK_THROWS_AS(gv_from_gw(gv), KindMismatch);
}

TEST_CASE("gw_from_gv") {
    const GenusTable line{InvariantKind::GV, 4, true, 2, {{0, Rat(1)}}};
    CHECK(gw_from_gv(line).values == kLineGW.values);

    const GenusTable g1{InvariantKind::GV, 2, true, 2, {{0, Rat(0)}, {1, Rat(1)}}};
    const GenusTable gw = gw_from_gv(g1);
    CHECK(gw.value(0) == Rat(0));
    CHECK(gw.value(1) == Rat(1));
    CHECK(gw.value(2) == Rat(-1, 12));

    const GenusTable zeros{InvariantKind::GV, 1, false, 3, {{0, Rat(0)}, {1, Rat(0)}, {2, Rat(0)}, {3, Rat(0)}}};
    for (const auto& [g, v] : gw_from_gv(zeros).values) CHECK(v.is_zero());
}

TEST_CASE("property: GV round trip and denominator bound") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> cdist(0, 9);
    std::uniform_int_distribution<int> vdist(-20, 20);
    for (int trial = 0; trial < 50; ++trial) {
        GenusTable gv{InvariantKind::GV, cdist(rng), true, 5, {}};
        for (int g = 0; g <= gv.g_max; ++g) gv.values[g] = Rat(vdist(rng));
        const GenusTable gw = gw_from_gv(gv);
        const GVReport back = gv_from_gw(gw);
        CHECK(back.table == gv);
        CHECK(back.integral);
        // denominators of GW_h divide (4^h (2h+1)!)^h
        for (const auto& [h, v] : gw.values) {
            BigInt bound = 1;
            const BigInt step = factorial(2 * h + 1) * (BigInt(1) << (2 * h));
            for (int i = 0; i < h; ++i) bound *= step;
            CHECK(bound % v.den() == 0);
        }
    }
}
