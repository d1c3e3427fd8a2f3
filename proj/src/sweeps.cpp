#include "uan/sweeps.hpp"
#include "uan/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace uan {

namespace {

struct TrialOutcome {
    double margin;
    bool violation;
    std::size_t members;
};

// One randomized feasible set and its margin. Fully determined by
// (cfg.seed, index), so execution order cannot matter.
TrialOutcome run_inequality_trial(const InequalitySweepConfig& cfg, std::size_t index) {
    SplitMix64 rng(SplitMix64::derive(cfg.seed, index));

    const std::size_t combos =
        cfg.alphas.size() * cfg.absorptions.size() * cfg.betas.size();
    std::size_t combo = index % combos;
    const double alpha = cfg.alphas[combo % cfg.alphas.size()];
    combo /= cfg.alphas.size();
    const double a_f = cfg.absorptions[combo % cfg.absorptions.size()];
    combo /= cfg.absorptions.size();
    const double beta = cfg.betas[combo % cfg.betas.size()];

    ChannelParams params = cfg.channel;
    params.alpha = alpha;

    const std::size_t n = 2 + rng.below(cfg.max_nodes - 1);
    const Deployment d = deploy(n, DeployMode::UniformRandom, rng.next());

    const BandChannel channel{cfg.band_center_khz, a_f,
                              noise_psd(cfg.band_center_khz, params), 1.0};
    const std::span<const BandChannel> channels(&channel, 1);

    // random transmitter subset, powers log-uniform over ten decades of
    // the noise floor
    TransmissionSet candidate;
    for (std::size_t i = 0; i < n; ++i) {
        if (rng.uniform() < 0.5) {
            Transmission t;
            t.tx = i;
            t.rx = d.dest[i];
            t.band = 0;
            t.source = i;
            t.power = channel.noise * std::pow(10.0, rng.uniform(0.0, 10.0));
            candidate.members.push_back(t);
        }
    }

    // removing a transmitter only raises the SINR of the others, so one
    // pruning pass leaves a set whose members are all feasible
    const std::vector<bool> ok = sinr_feasible(candidate, d, channels, params, beta);
    TransmissionSet feasible;
    for (std::size_t m = 0; m < candidate.members.size(); ++m)
        if (ok[m])
            feasible.members.push_back(candidate.members[m]);

    const double margin = verify_sum_inequality(feasible, d, channels, params, beta);
    const double gamma_scale =
        std::pow(2.0 * std::numbers::inv_sqrtpi, alpha) *
        std::pow(a_f, 2.0 * std::numbers::inv_sqrtpi) * (beta + 1.0) / beta;

    TrialOutcome out;
    out.margin = margin;
    out.violation = margin < -1e-9 * gamma_scale;
    out.members = feasible.members.size();
    return out;
}

} // namespace

InequalitySweepResult run_inequality_sweep(const InequalitySweepConfig& cfg,
                                           ExecutionPolicy policy) {
    if (cfg.trials == 0)
        throw std::domain_error("inequality sweep: need at least one trial");
    if (cfg.max_nodes < 2)
        throw std::domain_error("inequality sweep: need at least 2 nodes");
    if (cfg.alphas.empty() || cfg.absorptions.empty() || cfg.betas.empty())
        throw std::domain_error("inequality sweep: empty parameter grid");

    InequalitySweepResult result;
    result.trials = cfg.trials;
    double margin_min = std::numeric_limits<double>::infinity();
    std::size_t nonempty = 0;
    std::size_t members = 0;
    std::size_t violations = 0;

    const auto count = static_cast<std::ptrdiff_t>(cfg.trials);
    if (policy == ExecutionPolicy::Parallel) {
#pragma omp parallel for schedule(static) reduction(min : margin_min) \
    reduction(+ : nonempty, members, violations)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            const TrialOutcome t = run_inequality_trial(cfg, static_cast<std::size_t>(i));
            margin_min = std::min(margin_min, t.margin);
            nonempty += t.members > 0 ? 1 : 0;
            members += t.members;
            violations += t.violation ? 1 : 0;
        }
    } else {
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            const TrialOutcome t = run_inequality_trial(cfg, static_cast<std::size_t>(i));
            margin_min = std::min(margin_min, t.margin);
            nonempty += t.members > 0 ? 1 : 0;
            members += t.members;
            violations += t.violation ? 1 : 0;
        }
    }

    result.margin_min = margin_min;
    result.nonempty_sets = nonempty;
    result.members_total = members;
    result.violations = violations;
    return result;
}

SimRecord run_transport_once(const TransportSweepConfig& cfg, std::size_t run_index) {
    const std::uint64_t run_seed = cfg.seed + run_index;
    const std::size_t span = cfg.n_max - cfg.n_min + 1;
    const std::size_t n = cfg.n_min + run_index % span;

    const Deployment d =
        deploy(n, DeployMode::UniformRandom, SplitMix64::derive(run_seed, 0));

    BandPlan plan = make_plan(cfg.band_center_khz - 0.5 * cfg.delta_f_khz,
                              cfg.band_center_khz + 0.5 * cfg.delta_f_khz, cfg.delta_f_khz);
    std::vector<double> override_values;
    if (cfg.a_f)
        override_values.push_back(*cfg.a_f);
    const std::vector<BandChannel> channels =
        band_channels(plan, cfg.channel, override_values);

    const GreedySchedule schedule =
        greedy_schedule(d, channels, cfg.channel, cfg.beta, cfg.slots);
    const double achieved = measure_transport(schedule.slots, d, channels, cfg.beta);

    const double w_rate = cfg.delta_f_khz * std::log2(1.0 + cfg.beta);
    const BoundResult bound = bound_fixed_narrowband(NarrowbandScenario{
        static_cast<double>(n), cfg.channel.alpha, cfg.beta, w_rate, channels[0].a_f});

    SimRecord rec;
    rec.seed = run_seed;
    rec.n = n;
    rec.alpha = cfg.channel.alpha;
    rec.beta = cfg.beta;
    rec.a_f = channels[0].a_f;
    rec.margin_min = schedule.margin_min;
    rec.transport_achieved = achieved;
    rec.transport_bound = bound.transport_bound;
    return rec;
}

std::vector<SimRecord> run_transport_sweep(const TransportSweepConfig& cfg,
                                           ExecutionPolicy policy) {
    if (cfg.runs == 0)
        throw std::domain_error("transport sweep: need at least one run");
    if (cfg.n_min < 2 || cfg.n_min > cfg.n_max)
        throw std::domain_error("transport sweep: need 2 <= n_min <= n_max");
    if (!(cfg.beta > 0.0))
        throw std::domain_error("transport sweep: beta must be positive");

    std::vector<SimRecord> records(cfg.runs);
    const auto count = static_cast<std::ptrdiff_t>(cfg.runs);
    if (policy == ExecutionPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < count; ++i)
            records[static_cast<std::size_t>(i)] =
                run_transport_once(cfg, static_cast<std::size_t>(i));
    } else {
        for (std::ptrdiff_t i = 0; i < count; ++i)
            records[static_cast<std::size_t>(i)] =
                run_transport_once(cfg, static_cast<std::size_t>(i));
    }
    return records;
}

} // namespace uan
