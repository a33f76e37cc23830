#pragma once

#include "lyness/rational.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace lyness {

struct ForbiddenSet : std::domain_error {
    ForbiddenSet() : std::domain_error("lyness: iterate hit the forbidden set (division by zero)") {}
};

struct NotOnAffineChart : std::domain_error {
    NotOnAffineChart() : std::domain_error("lyness: invariant undefined when x*y = 0") {}
};

struct GrowthLimitExceeded : std::runtime_error {
    explicit GrowthLimitExceeded(size_t bits)
        : std::runtime_error("lyness: coordinate numerator exceeded " + std::to_string(bits) +
                             " bits; orbit looks aperiodic") {}
};

struct MapParams {
    Rational a;
};

struct PlanePoint {
    Rational x, y;
    friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

// F_a(x,y) = (y, (a+y)/x)
PlanePoint step(const MapParams& params, const PlanePoint& p);

// Inverse map: (x,y) -> ((a+x)/y, x)
PlanePoint step_back(const MapParams& params, const PlanePoint& p);

// The conserved quantity h with (x+1)(y+1)(x+y+a) = h*x*y.
Rational invariant_h(const MapParams& params, const PlanePoint& p);

struct Periodic {
    size_t period;
};
struct Aperiodic {
    size_t steps_tried;
};
struct HitForbiddenSet {
    size_t step_index;
};

struct PeriodReport {
    std::variant<Periodic, Aperiodic, HitForbiddenSet> status;
    // One full period when periodic (seed first); the points visited otherwise.
    std::vector<PlanePoint> orbit;

    bool is_periodic() const { return std::holds_alternative<Periodic>(status); }
    size_t period() const { return std::get<Periodic>(status).period; }
};

inline constexpr size_t kDefaultMaxSteps = 100;
inline constexpr size_t kDefaultMaxBits = 1'000'000;

/// Exact first-return period detection: the map is invertible, so the
/// minimal p with F_a^p(seed) = seed is the prime period.
PeriodReport detect_period(const MapParams& params, const PlanePoint& seed,
                           size_t max_steps = kDefaultMaxSteps,
                           size_t max_bits = kDefaultMaxBits);

}  // namespace lyness
