#ifndef UAN_SWEEPS_HPP
#define UAN_SWEEPS_HPP

#include "uan/netsim.hpp"
#include "uan/scaling.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace uan {

/// Serial is the reference implementation; Parallel fans independent
/// trials out across OpenMP threads. Both produce identical results for
/// identical configs (per-trial seeds are derived, reductions are
/// order-independent), so Serial stays available to test Parallel against.
enum class ExecutionPolicy { Serial, Parallel };

/// Monte Carlo counterexample search for the feasibility sum bound:
/// random deployments, random transmitter subsets with log-uniform powers,
/// pruned to the members that pass sinr_feasible, margin checked on the
/// surviving set. Parameter combinations cycle deterministically through
/// the (alpha, a_f, beta) grid.
struct InequalitySweepConfig {
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    std::vector<double> alphas{1.0, 1.5, 2.0};
    std::vector<double> absorptions{1.0, 10.0, 1000.0};
    std::vector<double> betas{1.0, 2.0, 10.0};
    std::size_t max_nodes = 16;
    double band_center_khz = 30.0;
    ChannelParams channel{};
};

struct InequalitySweepResult {
    std::size_t trials = 0;
    std::size_t nonempty_sets = 0;
    std::size_t members_total = 0;
    std::size_t violations = 0;
    double margin_min = 0.0;
};

InequalitySweepResult run_inequality_sweep(const InequalitySweepConfig& cfg,
                                           ExecutionPolicy policy = ExecutionPolicy::Serial);

/// One simulation run: deployment, greedy schedule, achieved transport,
/// worst margin, and the matching narrowband bound.
struct SimRecord {
    std::uint64_t seed;
    std::size_t n;
    double alpha;
    double beta;
    double a_f;
    double margin_min;
    double transport_achieved;
    double transport_bound;
};

/// Seeded runs with n cycling over [n_min, n_max]; run r uses seed
/// cfg.seed + r. Records come back ordered by seed.
struct TransportSweepConfig {
    std::size_t runs = 100;
    std::uint64_t seed = 1;
    std::size_t n_min = 4;
    std::size_t n_max = 64;
    double beta = 2.0;
    double band_center_khz = 50.0;
    double delta_f_khz = 1.0;
    std::optional<double> a_f;  ///< absorption override; Thorp at the band center otherwise
    std::size_t slots = 32;
    ChannelParams channel{};
};

std::vector<SimRecord> run_transport_sweep(const TransportSweepConfig& cfg,
                                           ExecutionPolicy policy = ExecutionPolicy::Serial);

/// Single run, exposed for the sweep and for replaying one record.
SimRecord run_transport_once(const TransportSweepConfig& cfg, std::size_t run_index);

} // namespace uan

#endif
