#pragma once

#include "lyness/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lyness {

struct NotOnCurve : std::domain_error {
    NotOnCurve() : std::domain_error("curve: point does not satisfy the cubic") {}
};
struct SingularCurve : std::domain_error {
    SingularCurve() : std::domain_error("curve: level set is not elliptic") {}
};
struct ZeroGradient : std::logic_error {
    ZeroGradient() : std::logic_error("curve: zero gradient on a smooth cubic") {}
};
struct BasePoint : std::domain_error {
    BasePoint() : std::domain_error("curve: base point of the projective map") {}
};
struct FormulaPole : std::domain_error {
    FormulaPole() : std::domain_error("curve: closed-form denominator vanishes") {}
};

/// Point of the projective plane as a canonical coprime integer triple,
/// first nonzero coordinate positive. Equality is exact.
class ProjectivePoint {
  public:
    ProjectivePoint(const BigInt& x, const BigInt& y, const BigInt& z);
    ProjectivePoint(const Rational& x, const Rational& y, const Rational& z);

    static ProjectivePoint affine(const Rational& x, const Rational& y) {
        return {x, y, Rational(1)};
    }
    // Accepts "x:y:z" (projective) or "x,y" (affine), rational entries.
    static ProjectivePoint parse(std::string_view s);

    const BigInt& x() const { return x_; }
    const BigInt& y() const { return y_; }
    const BigInt& z() const { return z_; }

    bool at_infinity() const { return z_ == 0; }
    Rational affine_x() const;  // throws NotOnAffineChart-like domain_error when z=0
    Rational affine_y() const;

    std::string str() const;  // "x:y:z"

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

  private:
    BigInt x_, y_, z_;
};

inline ProjectivePoint neutral_point() { return {BigInt(1), BigInt(-1), BigInt(0)}; }      // O
inline ProjectivePoint translation_point() { return {BigInt(1), BigInt(0), BigInt(0)}; }   // Q

enum class LevelSetTag { Elliptic, ThreeLines, LineHyperbola, RationalCubic, DegenerateOther };

struct LevelSetClass {
    LevelSetTag tag;
    friend bool operator==(const LevelSetClass&, const LevelSetClass&) = default;
};

std::string to_string(LevelSetTag tag);

LevelSetClass classify_level_set(const Rational& a, const Rational& h);

/// The invariant cubic (x+z)(y+z)(x+y+az) - hxyz = 0 with its cached
/// level-set classification.
class LynessCurve {
  public:
    LynessCurve(Rational a, Rational h)
        : a_(std::move(a)), h_(std::move(h)), cls_(classify_level_set(a_, h_)) {}

    const Rational& a() const { return a_; }
    const Rational& h() const { return h_; }
    const LevelSetClass& level_set() const { return cls_; }
    bool is_elliptic() const { return cls_.tag == LevelSetTag::Elliptic; }

    bool contains(const ProjectivePoint& p) const;

  private:
    Rational a_, h_;
    LevelSetClass cls_;
};

// One Lyness step on the projective plane: [x:y:z] -> [xy : az^2+yz : xz].
ProjectivePoint projective_step(const Rational& a, const ProjectivePoint& p);

// Third point of the cubic on the line through p and q (tangent when p == q).
ProjectivePoint third_intersection(const LynessCurve& curve, const ProjectivePoint& p,
                                   const ProjectivePoint& q);

// Chord-tangent group law with neutral element O = [1:-1:0].
ProjectivePoint add(const LynessCurve& curve, const ProjectivePoint& p, const ProjectivePoint& q);
ProjectivePoint neg(const LynessCurve& curve, const ProjectivePoint& p);
ProjectivePoint mul(const LynessCurve& curve, const ProjectivePoint& p, long k);

struct InfiniteOrPastCap {};
std::variant<size_t, InfiniteOrPastCap> order_of(const LynessCurve& curve,
                                                 const ProjectivePoint& p, size_t cap = 30);

// Closed forms for kQ, k in [-5, 7]; must agree with mul(Q, k).
ProjectivePoint q_multiples(const Rational& a, const Rational& h, int k);

struct PeriodConstraint {
    std::optional<Rational> required_a;  // a = 1 (period 5), a = 0 (period 6)
    std::string note;
};

// h making Q a point of order n; Constraint for n in {5, 6, 12}.
std::variant<Rational, PeriodConstraint> h_for_period(int n, const Rational& a);

// The nine 9-torsion points of C_{a, (a-1)(a^2-a+1)/a}.
std::array<ProjectivePoint, 9> torsion9_points(const Rational& a);

}  // namespace lyness
