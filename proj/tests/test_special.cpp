#include "lyness/special.hpp"

#include <doctest.h>

using namespace lyness;

namespace {

Rational h9(const Rational& a) { return std::get<Rational>(h_for_period(9, a)); }

// Iterate a Mobius map on the projective line; smallest return time <= depth.
std::optional<int> mobius_orbit_period(const MobiusMap& m, const Rational& t0, int depth) {
    std::optional<Rational> t = t0;
    for (int i = 1; i <= depth; ++i) {
        t = m.apply(t);
        if (t && *t == t0) return i;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("mobius_classify") {
    // f(x) = (-x + a - 1)/x at a = 1/2 and a = 2/3
    CHECK(mobius_classify({-1, Rational(-1, 2), 1, 0}) ==
          MobiusClass{MobiusClass::GloballyPeriodic, 4});
    CHECK(mobius_classify({-1, Rational(-1, 3), 1, 0}) ==
          MobiusClass{MobiusClass::GloballyPeriodic, 6});
    // f(y) = (1-a)/(y+a) at a = 0
    CHECK(mobius_classify({0, 1, 1, 0}) == MobiusClass{MobiusClass::GloballyPeriodic, 2});
    // rational-cubic branch map at b = 5: r = 7/3, not periodic
    MobiusMap f{1, Rational(-6, 14), 1, 0};
    CHECK(mobius_classify(f) == MobiusClass{MobiusClass::NonPeriodic});
    CHECK(!mobius_orbit_period(f, Rational(2, 3), 12).has_value());
    CHECK(mobius_classify({3, 0, 0, 3}) == MobiusClass{MobiusClass::Identity});
    CHECK_THROWS_AS(mobius_classify({1, 2, 2, 4}), ZeroDeterminant);
}

TEST_CASE("globally periodic mobius maps really close up") {
    MobiusMap f4{-1, Rational(-1, 2), 1, 0};
    CHECK(mobius_orbit_period(f4, Rational(3, 7), 6) == 4);
    MobiusMap f6{-1, Rational(-1, 3), 1, 0};
    CHECK(mobius_orbit_period(f6, Rational(3, 7), 8) == 6);
}

TEST_CASE("nonelliptic_dynamics branches") {
    auto r8 = nonelliptic_dynamics(Rational(1, 2), Rational(-1, 2));
    CHECK(r8.branch == LevelSetTag::LineHyperbola);
    CHECK(r8.step_multiplier == 2);
    CHECK(r8.lyness_period == 8);

    auto r12 = nonelliptic_dynamics(Rational(2, 3), Rational(-1, 3));
    CHECK(r12.lyness_period == 12);

    auto r6 = nonelliptic_dynamics(Rational(0), Rational(0));
    CHECK(r6.branch == LevelSetTag::ThreeLines);
    CHECK(r6.lyness_period == 6);

    auto rc = nonelliptic_dynamics(Rational(2), Rational(27, 2));
    CHECK(rc.branch == LevelSetTag::RationalCubic);
    CHECK(rc.cubic_b == Rational(3));
    CHECK(rc.mobius.tag == MobiusClass::NonPeriodic);
    CHECK(!rc.lyness_period.has_value());

    CHECK_THROWS_AS(nonelliptic_dynamics(Rational(7), Rational(258, 7)), WrongClass);
}

TEST_CASE("mobius period translates into the Lyness period by iteration") {
    // h = a-1 branch: line points (t, -1-t) under F_a
    for (const Rational& t : {Rational(1), Rational(4), Rational(-3, 2)}) {
        auto r = detect_period({Rational(1, 2)}, {t, -1 - t});
        REQUIRE(r.is_periodic());
        CHECK(r.period() == 8);
    }
    // h = 0 branch, a = 0: line {x+1=0} under the globally 6-periodic map
    auto r = detect_period({Rational(0)}, {Rational(-1), Rational(5)});
    REQUIRE(r.is_periodic());
    CHECK(6 % r.period() == 0);
}

TEST_CASE("rational_cubic_point lies on the critical level set") {
    Rational b = 3, a = 2;  // 4a+1 = 9
    Rational h = pow_int(b + 3, 3) / (4 * (b + 1));  // 27/2
    for (const Rational& t : {Rational(2), Rational(3), Rational(-1, 2)}) {
        PlanePoint p = rational_cubic_point(b, t);
        CHECK(invariant_h({a}, p) == h);
    }
    CHECK_THROWS_AS(rational_cubic_point(b, Rational(1)), ExcludedParameter);
}

TEST_CASE("family_point") {
    FamilySeed f1 = family_point(1, Rational(3));
    CHECK(f1.a == Rational(6));
    CHECK(f1.x0 == Rational(3));
    CHECK(detect_period({f1.a}, {f1.x0, f1.x1}).period() == 1);

    FamilySeed f7 = family_point(7, Rational(3));
    CHECK(f7.a == Rational(8, 5));
    CHECK(f7.x0 == Rational(8, 7));
    CHECK(f7.x1 == Rational(-8, 7));
    CHECK(detect_period({f7.a}, {f7.x0, f7.x1}).period() == 7);

    FamilySeed f8 = family_point(8, Rational(2));
    CHECK(f8.a == Rational(3, 7));
    CHECK(f8.x0 == Rational(3, 5));
    CHECK(detect_period({f8.a}, {f8.x0, f8.x1}).period() == 8);

    CHECK_THROWS_AS(family_point(1, Rational(0)), ExcludedParameter);
    CHECK_THROWS_AS(family_point(7, Rational(1, 2)), ExcludedParameter);
    CHECK_THROWS_AS(family_point(4, Rational(2)), std::domain_error);
}

TEST_CASE("family invariants match h_for_period for periods 7 and 8") {
    for (const Rational& u : {Rational(3), Rational(4), Rational(5, 2)}) {
        FamilySeed f7 = family_point(7, u);
        CHECK(invariant_h({f7.a}, {f7.x0, f7.x1}) ==
              std::get<Rational>(h_for_period(7, f7.a)));
        FamilySeed f8 = family_point(8, u);
        CHECK(invariant_h({f8.a}, {f8.x0, f8.x1}) ==
              std::get<Rational>(h_for_period(8, f8.a)));
    }
}

TEST_CASE("period12_parametrization") {
    auto [a2, h2] = period12_parametrization(Rational(2));
    CHECK(a2 == Rational(12, 13));
    CHECK(h2 == Rational(-5, 78));
    CHECK(std::get<size_t>(order_of(LynessCurve(a2, h2), translation_point())) == 12);

    auto [a3, h3] = period12_parametrization(Rational(3));
    CHECK(a3 == Rational(6, 7));
    CHECK(h3 == Rational(-5, 42));
    CHECK(std::get<size_t>(order_of(LynessCurve(a3, h3), translation_point())) == 12);

    CHECK_THROWS_AS(period12_parametrization(Rational(1)), ExcludedParameter);
}

TEST_CASE("coexistence_tests") {
    auto f20 = coexistence_tests(Rational(20));
    CHECK(f20.fixed_point_rational);       // 81 = 9^2
    CHECK(!f20.two_periodic_rational);     // 77
    CHECK(f20.fixed_x == Rational(5));
    auto f2 = coexistence_tests(Rational(2));
    CHECK(f2.fixed_point_rational);
    CHECK(!f2.two_periodic_rational);
    auto f3 = coexistence_tests(Rational(3));
    CHECK(!f3.fixed_point_rational);       // 13
    CHECK(f3.two_periodic_rational);       // 9
    // the period-2 seed from the family at a = 3 (u = 1)
    FamilySeed f = family_point(2, Rational(1));
    CHECK(f.a == Rational(3));
    CHECK(detect_period({f.a}, {f.x0, f.x1}).period() == 2);
}

TEST_CASE("delta3 and friends") {
    CHECK(delta3(Rational(4)) == Rational(0));
    CHECK(!sqrt_exact(delta3(Rational(6))).has_value());
    CHECK_THROWS_AS(delta2(Rational(4)), Pole);
    CHECK_THROWS_AS(product_at_nine_sum(Rational(-1, 2)), Pole);

    // Delta2 at a = 391/370 is the square of (x-y)/2 scaling chain
    Rational a(391, 370);
    auto r = sqrt_exact(delta2(a));
    REQUIRE(r.has_value());
    Rational S = nine_sum();
    Rational delta = S * S - 4 * product_at_nine_sum(a);
    CHECK(delta == delta2(a));
    CHECK(*r == Rational(16399, 2112));

    CHECK(!beyond_a1(Rational(5)));           // below a1
    CHECK(beyond_a1(Rational(6)));            // above a1
    CHECK(beyond_a1(Rational(391, 370)) == false);
}

TEST_CASE("pipeline_constants self-checks") {
    PipelineConstants pc = pipeline_constants();
    CHECK(pc.quartic.w2 == Rational(BigInt("-36024561"), BigInt("2238728")));
    CHECK(pc.cubic.contains(pc.r.X, pc.r.Y));
    CHECK(quartic_to_cubic(pc.quartic) == pc.cubic);
}

TEST_CASE("generate_nine_periodic") {
    auto r1 = generate_nine_periodic(1);
    auto* s1 = std::get_if<NineSeed>(&r1);
    REQUIRE(s1 != nullptr);
    CHECK(s1->a == Rational(391, 370));
    CHECK(s1->x == Rational(28543, 4224));
    CHECK(s1->y == Rational(-4255, 4224));
    CHECK(!s1->positive);
    CHECK(s1->x + s1->y == nine_sum());
    CHECK(invariant_h({s1->a}, {s1->x, s1->y}) == h9(s1->a));

    CHECK_THROWS_AS(generate_nine_periodic(0), std::domain_error);

    for (long k : {-1L, 2L, 3L, -2L}) {
        auto r = generate_nine_periodic(k);
        if (auto* s = std::get_if<NineSeed>(&r)) {
            CHECK(s->x + s->y == nine_sum());
            CHECK(invariant_h({s->a}, {s->x, s->y}) == h9(s->a));
            if (s->positive) CHECK(beyond_a1(s->a));
        }
    }
}

TEST_CASE("known_nine_witnesses all verify") {
    for (const auto& w : known_nine_witnesses()) {
        CHECK(LynessCurve(w.a, h9(w.a)).contains(ProjectivePoint::affine(w.x, w.y)));
        auto r = detect_period({w.a}, {w.x, w.y});
        REQUIRE(r.is_periodic());
        CHECK(r.period() == 9);
    }
}
