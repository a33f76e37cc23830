#include "lyness/map.hpp"

#include <doctest.h>

#include <random>

using namespace lyness;

TEST_CASE("step") {
    CHECK(step({Rational(7)}, {Rational(3, 2), Rational(5, 7)}) ==
          PlanePoint{Rational(5, 7), Rational(36, 7)});
    CHECK(step({Rational(1)}, {Rational(1), Rational(1)}) == PlanePoint{Rational(1), Rational(2)});
    // a = 0: x_{n+2} = x_{n+1}/x_n, the 6-cycle 1,2,2,1,1/2,1/2
    CHECK(step({Rational(0)}, {Rational(1), Rational(2)}) == PlanePoint{Rational(2), Rational(2)});
    CHECK_THROWS_AS(step({Rational(2)}, {Rational(0), Rational(1)}), ForbiddenSet);
}

TEST_CASE("step_back inverts step") {
    CHECK(step_back({Rational(7)}, {Rational(5, 7), Rational(36, 7)}) ==
          PlanePoint{Rational(3, 2), Rational(5, 7)});
    CHECK(step_back({Rational(1)}, {Rational(1), Rational(2)}) ==
          PlanePoint{Rational(1), Rational(1)});
    MapParams a{Rational(3, 2)};
    PlanePoint p{Rational(-2), Rational(3, 5)};
    CHECK(step_back(a, step(a, p)) == p);
    CHECK_THROWS_AS(step_back(a, PlanePoint{Rational(1), Rational(0)}), ForbiddenSet);
}

TEST_CASE("invariant_h") {
    CHECK(invariant_h({Rational(7)}, {Rational(3, 2), Rational(5, 7)}) == Rational(258, 7));
    CHECK(invariant_h({Rational(21, 37)},
                      {Rational(BigInt("-2719003411664"), BigInt("4342282089993")),
                       Rational(BigInt("25886110233337"), BigInt("102273997737527"))}) ==
          Rational(-16528, 28749));
    CHECK(invariant_h({Rational(1)}, {Rational(1), Rational(1)}) == Rational(12));
    CHECK_THROWS_AS(invariant_h({Rational(1)}, {Rational(0), Rational(2)}), NotOnAffineChart);
}

TEST_CASE("detect_period on known periodic seeds") {
    auto r9 = detect_period({Rational(7)}, {Rational(3, 2), Rational(5, 7)});
    REQUIRE(r9.is_periodic());
    CHECK(r9.period() == 9);
    CHECK(r9.orbit.size() == 9);

    auto r10 = detect_period({Rational(3, 2)}, {Rational(-2), Rational(3, 5)});
    REQUIRE(r10.is_periodic());
    CHECK(r10.period() == 10);

    auto r12 = detect_period({Rational(12, 13)}, {Rational(-4, 9), Rational(-10, 13)});
    REQUIRE(r12.is_periodic());
    CHECK(r12.period() == 12);

    auto r5 = detect_period({Rational(1)}, {Rational(2), Rational(3)});
    REQUIRE(r5.is_periodic());
    CHECK(r5.period() == 5);
}

TEST_CASE("detect_period statuses") {
    auto forb = detect_period({Rational(2)}, {Rational(-1), Rational(-1)});
    // (-1,-1) -> (-1,-1): fixed point for a = 2
    CHECK(forb.is_periodic());
    CHECK(forb.period() == 1);

    auto hit = detect_period({Rational(2)}, {Rational(0), Rational(1)});
    CHECK(std::holds_alternative<HitForbiddenSet>(hit.status));

    auto ap = detect_period({Rational(5)}, {Rational(1), Rational(1)}, 25);
    CHECK(std::holds_alternative<Aperiodic>(ap.status));
}

TEST_CASE("growth guard trips on aperiodic blowup") {
    CHECK_THROWS_AS(detect_period({Rational(5)}, {Rational(10, 3), Rational(1, 7)}, 100, 64),
                    GrowthLimitExceeded);
}

TEST_CASE("invariant is conserved along random orbits") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> d(-12, 12), den(1, 7);
    int done = 0;
    while (done < 50) {
        Rational a(d(rng), den(rng)), x(d(rng), den(rng)), y(d(rng), den(rng));
        if (x.is_zero() || y.is_zero()) continue;
        MapParams params{a};
        PlanePoint p{x, y};
        Rational h = invariant_h(params, p);
        bool full = true;
        for (int i = 0; i < 30; ++i) {
            if (p.x.is_zero() || p.y.is_zero()) {
                full = false;
                break;
            }
            p = step(params, p);
            if (p.x.is_zero() || p.y.is_zero()) {
                full = false;
                break;
            }
            CHECK(invariant_h(params, p) == h);
        }
        if (full) ++done;
    }
}

TEST_CASE("a=1 and a=0 are globally periodic") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-9, 9), den(1, 5);
    for (int i = 0; i < 40; ++i) {
        Rational x(d(rng), den(rng)), y(d(rng), den(rng));
        if (x.is_zero() || y.is_zero()) continue;
        auto r1 = detect_period({Rational(1)}, {x, y}, 10);
        if (r1.is_periodic()) CHECK(5 % r1.period() == 0);
        auto r0 = detect_period({Rational(0)}, {x, y}, 10);
        if (r0.is_periodic()) CHECK(6 % r0.period() == 0);
    }
}
