#include "uan/band_plan.hpp"

#include <cmath>
#include <stdexcept>

namespace uan {

BandPlan make_plan(double f_lo, double f_hi, double delta_f) {
    if (!(f_lo >= 0.0 && f_lo < f_hi))
        throw std::domain_error("make_plan: interval must satisfy 0 <= f_lo < f_hi");
    if (!(delta_f > 0.0 && delta_f <= f_hi - f_lo))
        throw std::domain_error("make_plan: band width must lie in (0, f_hi - f_lo]");

    BandPlan plan;
    plan.delta_f = delta_f;
    const auto count = static_cast<std::size_t>(std::ceil((f_hi - f_lo) / delta_f - 1e-12));
    plan.bands.reserve(count);
    double edge = f_lo;
    for (std::size_t i = 0; i + 1 < count; ++i) {
        plan.bands.push_back(Band{edge, edge + delta_f});
        edge += delta_f;
    }
    plan.bands.push_back(Band{edge, f_hi});
    return plan;
}

BandAssignment locate_band(double f_khz, const BandPlan& plan) {
    if (plan.bands.empty())
        throw std::domain_error("locate_band: empty plan");
    if (f_khz < plan.f_lo())
        return {0, true};
    if (f_khz >= plan.f_hi())
        return {plan.bands.size() - 1, f_khz > plan.f_hi()};
    // half-open [f_min, f_max): an interior edge belongs to the band that
    // starts at it; the top band alone is closed above
    for (std::size_t i = 0; i < plan.bands.size(); ++i) {
        if (f_khz >= plan.bands[i].f_min && f_khz < plan.bands[i].f_max)
            return {i, false};
    }
    return {plan.bands.size() - 1, false};
}

BandAssignment assign_band(double l_km, const BandPlan& plan, const ChannelParams& params) {
    const CenterFrequency fc = optimal_center_frequency(l_km, params);
    return locate_band(fc.f_khz, plan);
}

} // namespace uan
