#ifndef UAN_SCALING_HPP
#define UAN_SCALING_HPP

#include "uan/waterfill.hpp"

#include <functional>
#include <span>
#include <vector>

namespace uan {

/// Branch zero of the Lambert function on [0, inf): returns w >= 0 with
/// w * e^w = x to 1e-12 relative. Halley iteration, log-asymptotic seed.
double lambert_w0(double x);

/// A network transmitting in one arbitrarily chosen narrow band.
struct NarrowbandScenario {
    double n;       ///< node count
    double alpha;   ///< spreading factor
    double beta;    ///< SINR threshold
    double w_rate;  ///< transmission rate W in bps
    double a_f;     ///< absorption at the chosen band, >= 1
};

/// Multi-node hopping over a set of disjoint sub-bands.
struct MultiBandScenario {
    double n;
    double alpha;
    double beta;
    double delta_w;                        ///< per-band rate in bps
    std::vector<double> band_absorptions;  ///< a(f_m) >= 1 per band
};

struct BandPopulation {
    double a_f;  ///< absorption of the band
    double n;    ///< transmitters confined to it
};

/// Direct (single-hop) transmissions with distance-based band membership.
struct DirectScenario {
    double alpha;
    double beta;
    double delta_w;
    std::vector<BandPopulation> per_band;
};

/// High-power transmission over a wide band with a frequency-dependent
/// SINR threshold.
struct WidebandScenario {
    double n;
    double alpha;
    Band band;
    std::function<double(double)> beta_of_f;
    /// Absorption model over the band; defaults to Thorp when empty.
    std::function<double(double)> absorption;
};

/// Transport-capacity upper bound for one scenario.
struct BoundResult {
    double transport_bound;  ///< bound on lambda * n * Lbar, bit-distance/s
    double per_pair_bound;   ///< bound on lambda * Lbar = transport / n
    double phi_or_theta;     ///< the scenario constant Phi (or Theta)
    double lambert_arg;      ///< argument handed to W0 in the bound
};

BoundResult bound_fixed_narrowband(const NarrowbandScenario& sc);
BoundResult bound_multiband(const MultiBandScenario& sc);
std::vector<BoundResult> bound_direct_per_band(const DirectScenario& sc);
BoundResult bound_wideband(const WidebandScenario& sc);

struct BoundCurveRow {
    double a_f;
    double n;
    double per_pair_bound;
    double transport_bound;
};

/// Per-pair bound swept over (a_f, n); rows ordered by (a_f, n).
std::vector<BoundCurveRow> bound_curve(double alpha, double beta, double w_rate,
                                       std::span<const double> a_f_family,
                                       std::span<const double> n_values);

} // namespace uan

#endif
