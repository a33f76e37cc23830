#include "lyness/forms.hpp"

namespace lyness {

bool TateCurve::contains(const ProjectivePoint& p) const {
    Rational X(p.x()), Y(p.y()), Z(p.z());
    return Y * Y * Z + (1 - c) * X * Y * Z - b * Y * Z * Z - pow_int(X, 3) + b * X * X * Z ==
           Rational(0);
}

TateCurve lyness_to_tate(const Rational& a, const Rational& h) {
    Rational d = a - 1 - h;
    if (d.is_zero()) throw DegenerateParameters{};
    Rational c = Rational(1) / d;
    return {-h * c * c, c};
}

std::pair<Rational, Rational> tate_to_lyness(const TateCurve& t) {
    if (t.c.is_zero()) throw DegenerateParameters{};
    Rational c2 = t.c * t.c;
    return {(c2 + t.c - t.b) / c2, -t.b / c2};
}

ProjectivePoint lyness_point_to_tate(const Rational& a, const Rational& h,
                                     const ProjectivePoint& p) {
    TateCurve t = lyness_to_tate(a, h);
    if (t.c == Rational(-1)) throw PoleOfMap{};
    if (!LynessCurve(a, h).contains(p)) throw NotOnCurve{};
    Rational x(p.x()), y(p.y()), z(p.z());
    Rational s = Rational(1) / (t.c + 1);
    Rational X = -t.b * s * z;
    Rational Y = -t.b * t.c * s * (y + z);
    Rational Z = -t.c * s * (x + y) - z;
    return {X, Y, Z};
}

ShortWeierstrass tate_to_short_weierstrass(const TateCurve& t) {
    // a1 = 1-c, a2 = -b, a3 = -b, a4 = a6 = 0
    Rational a1 = 1 - t.c, a2 = -t.b, a3 = -t.b;
    Rational b2 = a1 * a1 + 4 * a2;
    Rational b4 = a1 * a3;
    Rational b6 = a3 * a3;
    Rational c4 = b2 * b2 - 24 * b4;
    Rational c6 = -pow_int(b2, 3) + 36 * b2 * b4 - 216 * b6;
    ShortWeierstrass w{-c4 / Rational(48), -c6 / Rational(864)};
    if (w.is_singular()) throw SingularImage{};
    return w;
}

SWPoint tate_point_to_sw(const TateCurve& t, const ProjectivePoint& p) {
    if (p.at_infinity()) return SWPoint::at_infinity();
    Rational a1 = 1 - t.c, a2 = -t.b, a3 = -t.b;
    Rational b2 = a1 * a1 + 4 * a2;
    Rational x = p.affine_x(), y = p.affine_y();
    return SWPoint::affine(x + b2 / Rational(12), y + (a1 * x + a3) / Rational(2));
}

ShortWeierstrass lyness_to_sw(const Rational& a, const Rational& h) {
    return tate_to_short_weierstrass(lyness_to_tate(a, h));
}

SWPoint lyness_point_to_sw(const Rational& a, const Rational& h, const ProjectivePoint& p) {
    TateCurve t = lyness_to_tate(a, h);
    return tate_point_to_sw(t, lyness_point_to_tate(a, h, p));
}

ShortWeierstrass quartic_to_cubic(const QuarticCurve& q) {
    Rational p = -(q.w2 * q.w2 / Rational(48) + q.w0 / Rational(4));
    Rational c = q.w1 * q.w1 / Rational(64) + pow_int(q.w2, 3) / Rational(864) -
                 q.w0 * q.w2 / Rational(24);
    ShortWeierstrass w{p, c};
    if (w.is_singular()) throw SingularImage{};
    return w;
}

std::pair<Rational, Rational> quartic_point_to_cubic(const QuarticCurve& q, const Rational& A,
                                                     const Rational& K) {
    if (!q.contains(A, K)) throw NotOnQuartic{};
    Rational X = (A * A + K + q.w2 / Rational(6)) / Rational(2);
    Rational Y = (A / Rational(2)) * (A * A + K + q.w2 / Rational(2)) + q.w1 / Rational(8);
    return {X, Y};
}

std::variant<std::pair<Rational, Rational>, AtInfinityBranch> cubic_point_to_quartic(
    const QuarticCurve& q, const Rational& X, const Rational& Y) {
    if (!quartic_to_cubic(q).contains(X, Y)) throw NotOnCurve{};
    Rational d = X + q.w2 / Rational(6);
    if (d.is_zero()) return AtInfinityBranch{};
    Rational A = (Y - q.w1 / Rational(8)) / d;
    Rational K = 2 * X - q.w2 / Rational(6) - A * A;
    return std::pair{A, K};
}

SWPoint sw_neg(const SWPoint& p) {
    if (p.infinity) return p;
    return SWPoint::affine(p.X, -p.Y);
}

SWPoint sw_add(const ShortWeierstrass& c, const SWPoint& p1, const SWPoint& p2) {
    if (p1.infinity) {
        if (!p2.infinity && !c.contains(p2.X, p2.Y)) throw NotOnCurve{};
        return p2;
    }
    if (p2.infinity) {
        if (!c.contains(p1.X, p1.Y)) throw NotOnCurve{};
        return p1;
    }
    if (!c.contains(p1.X, p1.Y) || !c.contains(p2.X, p2.Y)) throw NotOnCurve{};
    Rational lambda;
    if (p1.X == p2.X) {
        if (p1.Y == -p2.Y) return SWPoint::at_infinity();
        lambda = (3 * p1.X * p1.X + c.p) / (2 * p1.Y);
    } else {
        lambda = (p2.Y - p1.Y) / (p2.X - p1.X);
    }
    Rational X3 = lambda * lambda - p1.X - p2.X;
    Rational Y3 = lambda * (p1.X - X3) - p1.Y;
    return SWPoint::affine(X3, Y3);
}

SWPoint sw_mul(const ShortWeierstrass& c, const SWPoint& p, long k) {
    if (k == 0) return SWPoint::at_infinity();
    if (k < 0) return sw_neg(sw_mul(c, p, -k));
    SWPoint acc = SWPoint::at_infinity(), base = p;
    unsigned long n = static_cast<unsigned long>(k);
    while (n) {
        if (n & 1) acc = sw_add(c, acc, base);
        n >>= 1;
        if (n) base = sw_add(c, base, base);
    }
    return acc;
}

}  // namespace lyness
