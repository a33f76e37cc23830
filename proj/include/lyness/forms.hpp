#pragma once

#include "lyness/curve.hpp"
#include "lyness/rational.hpp"

#include <utility>
#include <variant>

namespace lyness {

struct DegenerateParameters : std::domain_error {
    DegenerateParameters() : std::domain_error("forms: parameters degenerate (h = a-1 or c = 0)") {}
};
struct PoleOfMap : std::domain_error {
    PoleOfMap() : std::domain_error("forms: change of variables has a pole (c = -1)") {}
};
struct NotOnQuartic : std::domain_error {
    NotOnQuartic() : std::domain_error("forms: point does not satisfy the quartic") {}
};
struct SingularImage : std::domain_error {
    SingularImage() : std::domain_error("forms: image cubic is singular") {}
};

// Tate normal form Y^2 + (1-c)XY - bY = X^3 - bX^2 with marked point (0,0).
struct TateCurve {
    Rational b, c;
    bool contains(const ProjectivePoint& p) const;
    friend bool operator==(const TateCurve&, const TateCurve&) = default;
};

// Y^2 = X^3 + pX + q
struct ShortWeierstrass {
    Rational p, q;
    bool is_singular() const { return (4 * pow_int(p, 3) + 27 * q * q).is_zero(); }
    bool contains(const Rational& X, const Rational& Y) const {
        return Y * Y == pow_int(X, 3) + p * X + q;
    }
    friend bool operator==(const ShortWeierstrass&, const ShortWeierstrass&) = default;
};

// K^2 = A^4 + w2 A^2 + w1 A + w0
struct QuarticCurve {
    Rational w2, w1, w0;
    bool contains(const Rational& A, const Rational& K) const {
        return K * K == pow_int(A, 4) + w2 * A * A + w1 * A + w0;
    }
};

// Affine Weierstrass point or the point at infinity.
struct SWPoint {
    bool infinity = true;
    Rational X, Y;
    static SWPoint at_infinity() { return {}; }
    static SWPoint affine(Rational X, Rational Y) { return {false, std::move(X), std::move(Y)}; }
    friend bool operator==(const SWPoint& a, const SWPoint& b) {
        if (a.infinity != b.infinity) return false;
        return a.infinity || (a.X == b.X && a.Y == b.Y);
    }
};

// c = 1/(a-1-h), b = -h c^2; inverse of h = -b/c^2, a = (c^2+c-b)/c^2.
TateCurve lyness_to_tate(const Rational& a, const Rational& h);
std::pair<Rational, Rational> tate_to_lyness(const TateCurve& t);

// Projective change of variables sending O to [0:1:0] and Q to (0,0).
ProjectivePoint lyness_point_to_tate(const Rational& a, const Rational& h,
                                     const ProjectivePoint& p);

// Complete the Tate equation to Y^2 = X^3 + pX + q (absorb the XY, Y and X^2
// terms by the standard substitutions).
ShortWeierstrass tate_to_short_weierstrass(const TateCurve& t);
SWPoint tate_point_to_sw(const TateCurve& t, const ProjectivePoint& p);

// Composite isomorphism C_{a,h} -> short Weierstrass; the independent
// group-law oracle route.
ShortWeierstrass lyness_to_sw(const Rational& a, const Rational& h);
SWPoint lyness_point_to_sw(const Rational& a, const Rational& h, const ProjectivePoint& p);

ShortWeierstrass quartic_to_cubic(const QuarticCurve& q);
std::pair<Rational, Rational> quartic_point_to_cubic(const QuarticCurve& q, const Rational& A,
                                                     const Rational& K);

struct AtInfinityBranch {};
std::variant<std::pair<Rational, Rational>, AtInfinityBranch> cubic_point_to_quartic(
    const QuarticCurve& q, const Rational& X, const Rational& Y);

// Standard chord law on Y^2 = X^3 + pX + q with infinity as identity.
SWPoint sw_neg(const SWPoint& p);
SWPoint sw_add(const ShortWeierstrass& c, const SWPoint& p1, const SWPoint& p2);
SWPoint sw_mul(const ShortWeierstrass& c, const SWPoint& p, long k);

}  // namespace lyness
