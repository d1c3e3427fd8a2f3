#ifndef UAN_WATERFILL_HPP
#define UAN_WATERFILL_HPP

#include "uan/channel.hpp"

#include <vector>

namespace uan {

/// One contiguous transmission band in kHz.
struct Band {
    double f_min;
    double f_max;
    double width() const { return f_max - f_min; }
    bool contains(double f_khz) const { return f_khz >= f_min && f_khz <= f_max; }
};

struct CapacityAtLevel {
    double capacity;          ///< integral of log2(K / AN) over the bands
    std::vector<Band> bands;  ///< sub-level set {f : A(l,f)N(f) < K}, sorted, disjoint
    bool clipped;             ///< a band edge sits on the frequency-domain boundary
};

/// Capacity and band for a given water level K. A level at or below the
/// global minimum of A*N yields an empty band and zero capacity.
CapacityAtLevel capacity_given_k(double l_km, double k_level, const ChannelParams& params);

/// Waterfilling solution for one link.
struct WaterfillSolution {
    double k_level = 0.0;
    std::vector<Band> bands;
    double power = 0.0;
    double capacity = 0.0;
    bool narrowband = true;  ///< cubic power law reproduces the power within 20%
    bool clipped = false;    ///< band hit the frequency-domain edge; best-effort result
};

/// Find the water level reaching a target capacity (monotone bisection on
/// K, 1e-9 relative on capacity), then fill in band, power and flags.
/// target 0 returns the zero-power solution with an empty band.
WaterfillSolution solve_for_capacity(double l_km, double target_capacity,
                                     const ChannelParams& params);

/// Same, driving the power integral to a budget instead.
WaterfillSolution solve_for_power(double l_km, double power_budget,
                                  const ChannelParams& params);

/// Same, driving the total band width to delta_f.
WaterfillSolution solve_for_bandwidth(double l_km, double delta_f,
                                      const ChannelParams& params);

struct NarrowbandPower {
    double power;        ///< Upsilon / 12 * delta_f^3
    double model_error;  ///< worst relative error of the quadratic A*N model at the band edges
    bool regime_ok;      ///< model_error <= 20%
};

/// Cubic narrowband power law for a band of width delta_f centered on f_c.
NarrowbandPower narrowband_power(double l_km, double delta_f, const ChannelParams& params);

} // namespace uan

#endif
