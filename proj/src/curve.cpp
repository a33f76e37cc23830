#include "lyness/curve.hpp"

#include <cassert>

namespace lyness {

namespace {

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

}  // namespace

ProjectivePoint::ProjectivePoint(const BigInt& x, const BigInt& y, const BigInt& z)
    : x_(x), y_(y), z_(z) {
    if (x_ == 0 && y_ == 0 && z_ == 0)
        throw std::domain_error("projective point: all coordinates zero");
    BigInt g = gcd3(abs(x_), abs(y_), abs(z_));
    x_ /= g;
    y_ /= g;
    z_ /= g;
    const BigInt& lead = x_ != 0 ? x_ : (y_ != 0 ? y_ : z_);
    if (lead < 0) {
        x_ = -x_;
        y_ = -y_;
        z_ = -z_;
    }
}

ProjectivePoint::ProjectivePoint(const Rational& x, const Rational& y, const Rational& z) {
    BigInt l;  // lcm of denominators
    mpz_lcm(l.get_mpz_t(), x.den().get_mpz_t(), y.den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.den().get_mpz_t());
    *this = ProjectivePoint(x.num() * (l / x.den()), y.num() * (l / y.den()),
                            z.num() * (l / z.den()));
}

ProjectivePoint ProjectivePoint::parse(std::string_view s) {
    std::string str(s);
    if (str.find(',') != std::string::npos) {
        auto comma = str.find(',');
        return affine(Rational::parse(str.substr(0, comma)), Rational::parse(str.substr(comma + 1)));
    }
    auto c1 = str.find(':');
    auto c2 = c1 == std::string::npos ? std::string::npos : str.find(':', c1 + 1);
    if (c2 == std::string::npos) throw ParseError("bad point: '" + str + "'");
    return {Rational::parse(str.substr(0, c1)), Rational::parse(str.substr(c1 + 1, c2 - c1 - 1)),
            Rational::parse(str.substr(c2 + 1))};
}

Rational ProjectivePoint::affine_x() const {
    if (z_ == 0) throw std::domain_error("projective point: at infinity");
    return Rational(x_, z_);
}

Rational ProjectivePoint::affine_y() const {
    if (z_ == 0) throw std::domain_error("projective point: at infinity");
    return Rational(y_, z_);
}

std::string ProjectivePoint::str() const {
    return x_.get_str() + ":" + y_.get_str() + ":" + z_.get_str();
}

std::string to_string(LevelSetTag tag) {
    switch (tag) {
        case LevelSetTag::Elliptic: return "elliptic";
        case LevelSetTag::ThreeLines: return "three-lines";
        case LevelSetTag::LineHyperbola: return "line-hyperbola";
        case LevelSetTag::RationalCubic: return "rational-cubic";
        case LevelSetTag::DegenerateOther: return "degenerate-other";
    }
    return "?";
}

LevelSetClass classify_level_set(const Rational& a, const Rational& h) {
    if (h.is_zero()) return {LevelSetTag::ThreeLines};
    if (h == a - 1) return {LevelSetTag::LineHyperbola};
    if (!a.is_zero()) {
        // h = h_c^{+-} iff (2ah - 2a^2 - 10a + 1)^2 = (4a+1)^3
        Rational lhs = 2 * a * h - 2 * a * a - 10 * a + 1;
        Rational rhs = pow_int(4 * a + 1, 3);
        if (lhs * lhs == rhs) return {LevelSetTag::RationalCubic};
    }
    if (!a.is_zero() && a != 1) return {LevelSetTag::Elliptic};
    return {LevelSetTag::DegenerateOther};
}

namespace {

// Defining cubic with denominators of a and h cleared:
//   F(x,y,z) = dh*(x+z)(y+z)*(da*x + da*y + na*z) - da*nh*x*y*z
struct CurvePoly {
    BigInt da, na, dh, nh;

    explicit CurvePoly(const LynessCurve& c)
        : da(c.a().den()), na(c.a().num()), dh(c.h().den()), nh(c.h().num()) {}

    BigInt eval(const BigInt& x, const BigInt& y, const BigInt& z) const {
        return dh * (x + z) * (y + z) * (da * x + da * y + na * z) - da * nh * x * y * z;
    }

    // Exact gradient of the homogeneous cubic.
    std::array<BigInt, 3> gradient(const BigInt& x, const BigInt& y, const BigInt& z) const {
        BigInt A = x + z, B = y + z;
        BigInt L = da * x + da * y + na * z;
        BigInt M = da * nh;
        return {dh * (B * L + A * B * da) - M * y * z,
                dh * (A * L + A * B * da) - M * x * z,
                dh * (A * B * na + A * L + B * L) - M * x * y};
    }
};

// Restrict the cubic to the line {u*p + v*q}: a binary cubic
// c3 u^3 + c2 u^2 v + c1 u v^2 + c0 v^3, recovered from four evaluations.
struct BinaryCubic {
    BigInt c3, c2, c1, c0;
};

BinaryCubic restrict_to_line(const CurvePoly& f, const std::array<BigInt, 3>& p,
                             const std::array<BigInt, 3>& q) {
    auto at = [&](const BigInt& u, const BigInt& v) {
        return f.eval(u * p[0] + v * q[0], u * p[1] + v * q[1], u * p[2] + v * q[2]);
    };
    BinaryCubic c;
    c.c3 = at(1, 0);
    c.c0 = at(0, 1);
    BigInt s = at(1, 1), d = at(1, -1);
    c.c2 = (s - d) / 2 - c.c0;
    c.c1 = (s + d) / 2 - c.c3;
    return c;
}

std::array<BigInt, 3> coords(const ProjectivePoint& p) { return {p.x(), p.y(), p.z()}; }

ProjectivePoint combine(const BigInt& u, const std::array<BigInt, 3>& p, const BigInt& v,
                        const std::array<BigInt, 3>& q) {
    return {u * p[0] + v * q[0], u * p[1] + v * q[1], u * p[2] + v * q[2]};
}

}  // namespace

bool LynessCurve::contains(const ProjectivePoint& p) const {
    return CurvePoly(*this).eval(p.x(), p.y(), p.z()) == 0;
}

ProjectivePoint projective_step(const Rational& a, const ProjectivePoint& p) {
    // [xy : az^2 + yz : xz], scaled by den(a)
    const BigInt &x = p.x(), &y = p.y(), &z = p.z();
    BigInt da = a.den(), na = a.num();
    BigInt ix = da * x * y, iy = na * z * z + da * y * z, iz = da * x * z;
    if (ix == 0 && iy == 0 && iz == 0) throw BasePoint{};
    return {ix, iy, iz};
}

ProjectivePoint third_intersection(const LynessCurve& curve, const ProjectivePoint& p,
                                   const ProjectivePoint& q) {
    if (!curve.is_elliptic()) throw SingularCurve{};
    if (!curve.contains(p) || !curve.contains(q)) throw NotOnCurve{};
    CurvePoly f(curve);

    if (p != q) {
        BinaryCubic c = restrict_to_line(f, coords(p), coords(q));
        // p, q are roots: c3 = F(p) = 0, c0 = F(q) = 0; factor uv remains.
        if (c.c1 == 0 && c.c2 == 0)
            throw std::logic_error("curve: line contained in the cubic");
        return combine(c.c1, coords(p), -c.c2, coords(q));
    }

    // Tangent line at p from the gradient; pick an auxiliary point spanning it.
    auto g = f.gradient(p.x(), p.y(), p.z());
    if (g[0] == 0 && g[1] == 0 && g[2] == 0) throw ZeroGradient{};
    std::array<std::array<BigInt, 3>, 3> cand = {{{-g[1], g[0], BigInt(0)},
                                                  {-g[2], BigInt(0), g[0]},
                                                  {BigInt(0), -g[2], g[1]}}};
    auto pc = coords(p);
    const std::array<BigInt, 3>* aux = nullptr;
    for (const auto& v : cand) {
        if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
        // independent of p iff cross product nonzero
        BigInt cx = pc[1] * v[2] - pc[2] * v[1];
        BigInt cy = pc[2] * v[0] - pc[0] * v[2];
        BigInt cz = pc[0] * v[1] - pc[1] * v[0];
        if (cx != 0 || cy != 0 || cz != 0) {
            aux = &v;
            break;
        }
    }
    if (aux == nullptr) throw ZeroGradient{};
    BinaryCubic c = restrict_to_line(f, pc, *aux);
    // p is a double root of the restriction: c3 = c2 = 0.
    if (c.c3 != 0 || c.c2 != 0)
        throw std::logic_error("curve: tangent restriction is not doubly vanishing");
    if (c.c1 == 0 && c.c0 == 0)
        throw std::logic_error("curve: tangent line contained in the cubic");
    return combine(c.c0, pc, -c.c1, *aux);
}

ProjectivePoint add(const LynessCurve& curve, const ProjectivePoint& p, const ProjectivePoint& q) {
    return third_intersection(curve, neutral_point(), third_intersection(curve, p, q));
}

ProjectivePoint neg(const LynessCurve& curve, const ProjectivePoint& p) {
    // -P is the third point on the line through P and the tangential of O.
    return third_intersection(curve, p, third_intersection(curve, neutral_point(), neutral_point()));
}

ProjectivePoint mul(const LynessCurve& curve, const ProjectivePoint& p, long k) {
    if (k == 0) return neutral_point();
    if (k < 0) return neg(curve, mul(curve, p, -k));
    ProjectivePoint acc = neutral_point(), base = p;
    unsigned long n = static_cast<unsigned long>(k);
    while (n) {
        if (n & 1) acc = (acc == neutral_point()) ? base : add(curve, acc, base);
        n >>= 1;
        if (n) base = add(curve, base, base);
    }
    return acc;
}

std::variant<size_t, InfiniteOrPastCap> order_of(const LynessCurve& curve,
                                                 const ProjectivePoint& p, size_t cap) {
    const ProjectivePoint O = neutral_point();
    ProjectivePoint acc = p;
    for (size_t n = 1; n <= cap; ++n) {
        if (acc == O) return n;
        acc = add(curve, acc, p);
    }
    return InfiniteOrPastCap{};
}

ProjectivePoint q_multiples(const Rational& a, const Rational& h, int k) {
    if (k < -5 || k > 7) throw std::domain_error("q_multiples: k outside [-5, 7]");
    const Rational one = 1;
    auto div = [](const Rational& n, const Rational& d) {
        if (d.is_zero()) throw FormulaPole{};
        return n / d;
    };
    // Shared subexpressions of the closed forms.
    Rational e1 = a * h - a + 1;            // ah - a + 1
    Rational e2 = -a * a - a * h + 2 * a - 1;  // -a^2 - ah + 2a - 1
    switch (k) {
        case 0: return neutral_point();
        case 1: return translation_point();
        case 2: return ProjectivePoint::affine(-1, 0);
        case 3: return ProjectivePoint::affine(0, -a);
        case 4: return ProjectivePoint::affine(-a, div(e1, a - 1));
        case 5: return ProjectivePoint::affine(div(e1, a - 1), div(e2, a * (a - 1)));
        case 6:
            return ProjectivePoint::affine(div(e2, a * (a - 1)),
                                           div(a * a * a - 2 * a * a - a * h + 2 * a - 1, a * e1));
        case 7: {
            Rational num = -pow_int(a, 4) * h + pow_int(a, 3) * h + pow_int(a, 3) + a * a * h -
                           3 * a * a - a * h + 3 * a - 1;
            Rational den = pow_int(a, 3) * h - pow_int(a, 3) + a * a * h * h - 3 * a * a * h +
                           3 * a * a + 2 * a * h - 3 * a + 1;
            return ProjectivePoint::affine(
                div(a * a * a - 2 * a * a - a * h + 2 * a - 1, a * e1), div(num, den));
        }
        case -1: return {BigInt(0), BigInt(1), BigInt(0)};
        case -2: return ProjectivePoint::affine(0, -1);
        case -3: return ProjectivePoint::affine(-a, 0);
        case -4: return ProjectivePoint::affine(div(e1, a - 1), -a);
        case -5: return ProjectivePoint::affine(div(e2, a * (a - 1)), div(e1, a - 1));
    }
    throw std::logic_error("unreachable");
}

std::variant<Rational, PeriodConstraint> h_for_period(int n, const Rational& a) {
    auto guard = [&](const Rational& d) {
        if (d.is_zero()) throw FormulaPole{};
    };
    switch (n) {
        case 5: return PeriodConstraint{Rational(1), "globally 5-periodic; every h occurs"};
        case 6: return PeriodConstraint{Rational(0), "globally 6-periodic; every h occurs"};
        case 7: guard(a); return (a - 1) / a;
        case 8: guard(a); return -(a - 1) * (a - 1) / a;
        case 9: guard(a); return (a - 1) * (a * a - a + 1) / a;
        case 10: guard(a * (a + 1)); return (a - 1) / (a * (a + 1));
        case 12: return PeriodConstraint{std::nullopt, "use the period-12 parametrization in t"};
    }
    throw std::domain_error("h_for_period: n must be in {5,6,7,8,9,10,12}");
}

std::array<ProjectivePoint, 9> torsion9_points(const Rational& a) {
    if (a.is_zero() || a == 1) throw std::domain_error("torsion9_points: need a(a-1) != 0");
    Rational m = a * (a - 1);
    return {translation_point(),
            ProjectivePoint::affine(-1, 0),
            ProjectivePoint::affine(0, -a),
            ProjectivePoint::affine(-a, m),
            ProjectivePoint::affine(m, -a),
            ProjectivePoint::affine(-a, 0),
            ProjectivePoint::affine(0, -1),
            ProjectivePoint{BigInt(0), BigInt(1), BigInt(0)},
            neutral_point()};
}

}  // namespace lyness
