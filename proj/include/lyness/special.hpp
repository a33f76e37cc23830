#pragma once

#include "lyness/curve.hpp"
#include "lyness/forms.hpp"
#include "lyness/map.hpp"
#include "lyness/rational.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lyness {

struct ZeroDeterminant : std::domain_error {
    ZeroDeterminant() : std::domain_error("mobius: zero determinant") {}
};
struct ExcludedParameter : std::domain_error {
    explicit ExcludedParameter(const std::string& what) : std::domain_error("excluded parameter: " + what) {}
};
struct WrongClass : std::domain_error {
    WrongClass() : std::domain_error("level set is elliptic; no non-elliptic dynamics") {}
};
struct Pole : std::domain_error {
    explicit Pole(const std::string& what) : std::domain_error("pole: " + what) {}
};

// t -> (At + B) / (Ct + D)
struct MobiusMap {
    Rational A, B, C, D;
    Rational det() const { return A * D - B * C; }
    Rational trace() const { return A + D; }
    bool is_scalar() const { return B.is_zero() && C.is_zero() && A == D; }
    // Evaluation on the projective line; nullopt is the point at infinity.
    std::optional<Rational> apply(const std::optional<Rational>& t) const;
};

struct MobiusClass {
    enum Tag { GloballyPeriodic, Identity, NonPeriodic } tag;
    int period = 0;  // set when GloballyPeriodic; one of 2, 3, 4, 6
    friend bool operator==(const MobiusClass&, const MobiusClass&) = default;
};

/// Classifies by r = tr(M)^2 / det(M): the map is globally p-periodic for
/// r = 0, 1, 2, 3 (p = 2, 3, 4, 6) and only then; this is the exact-arithmetic
/// form of the rational-cosine criterion.
MobiusClass mobius_classify(const MobiusMap& m);

struct NonEllipticReport {
    LevelSetTag branch;
    MobiusMap induced;           // linear fractional map driving the dynamics
    MobiusClass mobius;
    int step_multiplier;         // F_a-period = multiplier * mobius period (3, 2, 1)
    std::optional<int> lyness_period;      // set when the induced map is periodic
    std::optional<Rational> cubic_b;       // b = +-sqrt(4a+1) on the rational-cubic branch
};

NonEllipticReport nonelliptic_dynamics(const Rational& a, const Rational& h);

// Joint parametrization of C_{a,hc} (rational-cubic branch), b^2 = 4a+1.
PlanePoint rational_cubic_point(const Rational& b, const Rational& t);

struct FamilySeed {
    Rational a, x0, x1;
};

// One-parameter families of seeds with the given period (1, 2, 3, 7 or 8).
FamilySeed family_point(int period, const Rational& u);

// (a, h) with Q of order 12; t outside {0, 1, -1}.
std::pair<Rational, Rational> period12_parametrization(const Rational& t);

struct CoexistenceFlags {
    bool fixed_point_rational;    // 4a+1 a rational square
    bool two_periodic_rational;   // 4a-3 a rational square
    std::optional<Rational> fixed_x;  // (1 + sqrt(4a+1))/2 when rational
};

CoexistenceFlags coexistence_tests(const Rational& a);

inline Rational nine_sum() { return {23, 4}; }        // S = 23/4
inline Rational nine_a_shift() { return {4135, 2116}; }

// (a-4)(a^3 - 2019/529 a^2 - 777/92 a - 1)
Rational delta3(const Rational& a);
// Scaled discriminant (46 / (4(1+2a)(a-4)))^2 * delta3; poles at a = 4, -1/2.
Rational delta2(const Rational& a);
// xy at x+y = 23/4: (27/4) a(4a+23) / ((a-4)(1+2a)^2); same poles.
Rational product_at_nine_sum(const Rational& a);

// Exact test for a >= a1 (the biggest root of the cubic factor of delta3).
bool beyond_a1(const Rational& a);

struct PipelineConstants {
    QuarticCurve quartic;
    ShortWeierstrass cubic;
    SWPoint r;
};

// The fixed quartic/cubic pair and seed point of the 9-periodic construction;
// self-checks that quartic_to_cubic maps one onto the other and r is on it.
PipelineConstants pipeline_constants();

struct NineSeed {
    long k;
    Rational a, x, y;
    bool positive;  // a, x and y all positive
};
struct Skipped {
    std::string reason;
};

/// Multiplies the seed point by k on the fixed cubic, pulls back through the
/// quartic to a value of a, and splits S = 23/4 into an exact 9-periodic pair
/// (x, y). Every emitted seed is re-verified by iteration.
std::variant<NineSeed, Skipped> generate_nine_periodic(long k);

struct NineWitness {
    Rational a, x, y;
};

// Known 9-periodic seeds: the simple points of the introduction, the four
// a = 408/23 generators, and the a = 9 generator with a negative coordinate.
std::vector<NineWitness> known_nine_witnesses();

}  // namespace lyness
