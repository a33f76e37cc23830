#include "lyness/map.hpp"

namespace lyness {

PlanePoint step(const MapParams& params, const PlanePoint& p) {
    if (p.x.is_zero()) throw ForbiddenSet{};
    return {p.y, (params.a + p.y) / p.x};
}

PlanePoint step_back(const MapParams& params, const PlanePoint& p) {
    if (p.y.is_zero()) throw ForbiddenSet{};
    return {(params.a + p.x) / p.y, p.x};
}

Rational invariant_h(const MapParams& params, const PlanePoint& p) {
    if (p.x.is_zero() || p.y.is_zero()) throw NotOnAffineChart{};
    return (p.x + 1) * (p.y + 1) * (p.x + p.y + params.a) / (p.x * p.y);
}

PeriodReport detect_period(const MapParams& params, const PlanePoint& seed, size_t max_steps,
                           size_t max_bits) {
    PeriodReport report;
    report.orbit.push_back(seed);
    PlanePoint cur = seed;
    for (size_t n = 1; n <= max_steps; ++n) {
        if (cur.x.is_zero()) {
            report.status = HitForbiddenSet{n - 1};
            return report;
        }
        cur = step(params, cur);
        if (cur.x.num_bits() > max_bits || cur.y.num_bits() > max_bits)
            throw GrowthLimitExceeded{max_bits};
        if (cur == seed) {
            report.status = Periodic{n};
            return report;
        }
        report.orbit.push_back(cur);
    }
    report.status = Aperiodic{max_steps};
    return report;
}

}  // namespace lyness
