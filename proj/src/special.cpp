#include "lyness/special.hpp"

namespace lyness {

std::optional<Rational> MobiusMap::apply(const std::optional<Rational>& t) const {
    if (!t) {
        if (C.is_zero()) return std::nullopt;
        return A / C;
    }
    Rational den = C * *t + D;
    if (den.is_zero()) return std::nullopt;
    return (A * *t + B) / den;
}

MobiusClass mobius_classify(const MobiusMap& m) {
    if (m.det().is_zero()) throw ZeroDeterminant{};
    if (m.is_scalar()) return {MobiusClass::Identity};
    Rational r = m.trace() * m.trace() / m.det();
    if (r == Rational(0)) return {MobiusClass::GloballyPeriodic, 2};
    if (r == Rational(1)) return {MobiusClass::GloballyPeriodic, 3};
    if (r == Rational(2)) return {MobiusClass::GloballyPeriodic, 4};
    if (r == Rational(3)) return {MobiusClass::GloballyPeriodic, 6};
    return {MobiusClass::NonPeriodic};
}

PlanePoint rational_cubic_point(const Rational& b, const Rational& t) {
    Rational den_x = 2 * (b + 1) * (t - 1);
    Rational den_y = 2 * t * (b + 1);
    if (den_x.is_zero() || den_y.is_zero()) throw ExcludedParameter("t in {0, 1} or b = -1");
    Rational x = (3 * t + t * b - 2) * (2 * t * b + 4 * t - b - 1) / den_x;
    Rational y = -(3 * t + t * b - b - 1) * (2 * t * b + 4 * t - 3 - b) / den_y;
    return {x, y};
}

NonEllipticReport nonelliptic_dynamics(const Rational& a, const Rational& h) {
    LevelSetClass cls = classify_level_set(a, h);
    NonEllipticReport rep;
    rep.branch = cls.tag;
    switch (cls.tag) {
        case LevelSetTag::Elliptic:
            throw WrongClass{};
        case LevelSetTag::ThreeLines:
            // F^3 on {x+1=0}: y -> (1-a)/(y+a)
            rep.induced = {0, 1 - a, 1, a};
            rep.step_multiplier = 3;
            break;
        case LevelSetTag::LineHyperbola:
            // F^2 on {x+y+1=0}: x -> (-x+a-1)/x
            rep.induced = {-1, a - 1, 1, 0};
            rep.step_multiplier = 2;
            break;
        case LevelSetTag::RationalCubic: {
            auto s = sqrt_exact(4 * a + 1);
            if (!s) throw std::logic_error("rational cubic with irrational sqrt(4a+1)");
            // Pick the root sign matching h = (b+3)^3 / (4(b+1)).
            Rational b = *s;
            auto hc = [](const Rational& b) { return pow_int(b + 3, 3) / (4 * (b + 1)); };
            if (b + 1 == Rational(0) || hc(b) != h) b = -*s;
            if (b + 1 == Rational(0) || hc(b) != h)
                throw std::logic_error("h does not match either critical level");
            rep.cubic_b = b;
            Rational shift = (b + 1) / (2 * b + 4);
            rep.induced = {1, -shift, 1, 0};
            rep.step_multiplier = 1;
            break;
        }
        case LevelSetTag::DegenerateOther:
            throw std::domain_error("nonelliptic_dynamics: unsupported degenerate case");
    }
    rep.mobius = mobius_classify(rep.induced);
    if (rep.mobius.tag == MobiusClass::GloballyPeriodic)
        rep.lyness_period = rep.step_multiplier * rep.mobius.period;
    else if (rep.mobius.tag == MobiusClass::Identity)
        rep.lyness_period = rep.step_multiplier;
    return rep;
}

FamilySeed family_point(int period, const Rational& u) {
    switch (period) {
        case 1:
            if (u.is_zero()) throw ExcludedParameter("u = 0");
            return {u * u - u, u, u};
        case 2:
            if (u.is_zero() || u == Rational(-1)) throw ExcludedParameter("u in {-1, 0}");
            return {u * u + u + 1, u, -u - 1};
        case 3:
            if (u == Rational(1)) throw ExcludedParameter("u = 1");
            return {u, -1, -1};
        case 7: {
            if (2 * u - 1 == Rational(0) || u == Rational(1) || u == Rational(-1))
                throw ExcludedParameter("u in {-1, 1/2, 1}");
            Rational x0 = (u * u - 1) / (u * u - u + 1);
            return {(u * u - 1) / (2 * u - 1), x0, -x0};
        }
        case 8: {
            if (u == Rational(1) || u == Rational(-1)) throw ExcludedParameter("u in {-1, 1}");
            Rational x0 = (u * u - 1) / (u * u + 1);
            return {(u * u - 1) / (u * u + 2 * u - 1), x0, -x0};
        }
    }
    throw std::domain_error("family_point: period must be in {1, 2, 3, 7, 8}");
}

std::pair<Rational, Rational> period12_parametrization(const Rational& t) {
    if (t.is_zero() || t == Rational(1) || t == Rational(-1))
        throw ExcludedParameter("t in {0, 1, -1}");
    Rational a = 2 * t * (1 + t) / (3 * t * t + 1);
    Rational h = -(t - 1) * (t - 1) * (t * t + 1) / (t * (1 + t) * (3 * t * t + 1));
    return {a, h};
}

CoexistenceFlags coexistence_tests(const Rational& a) {
    CoexistenceFlags flags{};
    auto s1 = sqrt_exact(4 * a + 1);
    flags.fixed_point_rational = s1.has_value();
    if (s1) flags.fixed_x = (1 + *s1) / Rational(2);
    flags.two_periodic_rational = sqrt_exact(4 * a - 3).has_value();
    return flags;
}

Rational delta3(const Rational& a) {
    return (a - 4) * (pow_int(a, 3) - Rational(2019, 529) * a * a - Rational(777, 92) * a - 1);
}

Rational delta2(const Rational& a) {
    Rational d = 4 * (1 + 2 * a) * (a - 4);
    if (d.is_zero()) throw Pole("a in {4, -1/2}");
    Rational f = Rational(46) / d;
    return delta3(a) * f * f;
}

Rational product_at_nine_sum(const Rational& a) {
    Rational d = (a - 4) * (1 + 2 * a) * (1 + 2 * a);
    if (d.is_zero()) throw Pole("a in {4, -1/2}");
    return Rational(27, 4) * a * (4 * a + 23) / d;
}

bool beyond_a1(const Rational& a) {
    return a > Rational(4) && delta3(a) >= Rational(0);
}

PipelineConstants pipeline_constants() {
    PipelineConstants pc;
    pc.quartic = {Rational(BigInt("-36024561"), BigInt("2238728")),
                  Rational(BigInt("-38272338"), BigInt("148035889")),
                  Rational(BigInt("1009624858257249"), BigInt("20047612231936"))};
    pc.cubic = {Rational(BigInt("-1288423179"), BigInt("71639296")),
                Rational(BigInt("8775405707427"), BigInt("303177500672"))};
    pc.r = SWPoint::affine(Rational(18243, 8464), Rational(81, 184));
    if (quartic_to_cubic(pc.quartic) != pc.cubic)
        throw std::logic_error("pipeline constants: quartic image mismatch");
    if (!pc.cubic.contains(pc.r.X, pc.r.Y))
        throw std::logic_error("pipeline constants: seed point off the cubic");
    return pc;
}

std::variant<NineSeed, Skipped> generate_nine_periodic(long k) {
    if (k == 0) throw std::domain_error("generate_nine_periodic: k must be nonzero");
    static const PipelineConstants pc = pipeline_constants();

    SWPoint kr = sw_mul(pc.cubic, pc.r, k);
    if (kr.infinity) return Skipped{"kR is the point at infinity"};
    auto pulled = cubic_point_to_quartic(pc.quartic, kr.X, kr.Y);
    if (std::holds_alternative<AtInfinityBranch>(pulled))
        return Skipped{"kR pulls back to a point at infinity of the quartic"};
    auto [A, K] = std::get<std::pair<Rational, Rational>>(pulled);

    Rational a = A + nine_a_shift();
    if (a == Rational(4) || a == Rational(-1, 2) || a.is_zero())
        return Skipped{"a hits a pole of the construction"};
    Rational S = nine_sum();
    Rational P = product_at_nine_sum(a);
    auto root = sqrt_exact(S * S - 4 * P);
    if (!root)
        throw std::logic_error("generate_nine_periodic: discriminant not a square for an on-quartic point");
    Rational x = (S + *root) / Rational(2);
    Rational y = (S - *root) / Rational(2);
    if (x.is_zero() || y.is_zero()) return Skipped{"seed on the forbidden set"};

    PeriodReport rep = detect_period({a}, {x, y}, 20);
    if (!rep.is_periodic() || rep.period() != 9)
        throw std::logic_error("generate_nine_periodic: constructed seed is not 9-periodic");
    bool positive = a > Rational(0) && x > Rational(0) && y > Rational(0);
    return NineSeed{k, a, x, y, positive};
}

std::vector<NineWitness> known_nine_witnesses() {
    auto q = [](const char* n, const char* d) { return Rational(BigInt(n), BigInt(d)); };
    return {
        {Rational(7), Rational(3, 2), Rational(5, 7)},
        {Rational(11), Rational(29, 82), Rational(19, 22)},
        {Rational(13), q("1584676", "61133"), q("335937", "856427")},
        {Rational(19), q("4259697", "16150"), q("5178617", "168283")},
        {Rational(408, 23), q("15708", "38617"), q("1275", "4346")},
        {Rational(408, 23), q("117348775936", "1130069373"), q("17875982344", "22803541107")},
        {Rational(408, 23), q("-5313", "5186"), q("199644", "17")},
        {Rational(408, 23), q("96539240", "980237"), q("892914", "1232041")},
        {Rational(9), Rational(-3, 70), Rational(-1273, 105)},
    };
}

}  // namespace lyness
