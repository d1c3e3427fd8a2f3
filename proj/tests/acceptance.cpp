// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries its own runtime budget.

#include "uan/channel.hpp"
#include "uan/numerics.hpp"
#include "uan/rng.hpp"
#include "uan/scaling.hpp"
#include "uan/sweeps.hpp"
#include "uan/waterfill.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

using namespace uan;

namespace {

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> body;
};

bool within(double value, double expect, double rel) {
    return std::abs(value - expect) <= rel * std::abs(expect);
}

// --- 1. Gupta-Kumar reduction ------------------------------------------------

bool crit_gupta_kumar(std::string& detail) {
    SplitMix64 rng(101);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double alpha = rng.uniform(1.0, 2.0);
        const double beta = std::pow(10.0, rng.uniform(-1.0, 1.5));
        const double w = std::pow(10.0, rng.uniform(-1.0, 4.0));
        const double n = 1.0 + std::floor(rng.uniform(0.0, 1e6));
        const BoundResult r = bound_fixed_narrowband({n, alpha, beta, w, 1.0});
        const double closed = std::numbers::inv_sqrtpi *
                              std::pow((2.0 * beta + 2.0) / beta, 1.0 / alpha) * w *
                              std::pow(n, (alpha - 1.0) / alpha);
        worst = std::max(worst, std::abs(r.transport_bound - closed) / closed);
    }
    detail = "worst relative error " + std::to_string(worst);
    return worst <= 1e-12;
}

// --- 2. Lambert W0 -----------------------------------------------------------

bool crit_lambert(std::string& detail) {
    if (lambert_w0(0.0) != 0.0) {
        detail = "W0(0) != 0";
        return false;
    }
    if (!within(lambert_w0(std::numbers::e), 1.0, 1e-12)) {
        detail = "W0(e) != 1";
        return false;
    }
    SplitMix64 rng(102);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.uniform();
        const double x = 1e9 * u * u * u;
        const double w = lambert_w0(x);
        if (x > 0.0)
            worst = std::max(worst, std::abs(w * std::exp(w) - x) / x);
    }
    detail = "worst inverse residual " + std::to_string(worst);
    return worst <= 1e-12;
}

// --- 3. Lambert-chain tightness ----------------------------------------------

double chain_bisection(double psi, double alpha) {
    auto g = [&](double x) { return alpha * std::log(x) + x - std::log(psi); };
    double hi = 1.0;
    while (g(hi) < 0.0)
        hi *= 2.0;
    double lo = hi * 1e-18;
    for (int i = 0; i < 500; ++i) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
        if (hi - lo <= 1e-14 * hi)
            break;
    }
    return 0.5 * (lo + hi);
}

bool crit_chain(std::string& detail) {
    SplitMix64 rng(103);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double psi = std::pow(10.0, rng.uniform(-3.0, 6.0));
        const double alpha = rng.uniform(1.0, 2.0);
        const double closed = std::pow(psi, 1.0 / alpha) *
                              std::exp(-lambert_w0(std::pow(psi, 1.0 / alpha) / alpha));
        const double x_star = chain_bisection(psi, alpha);
        worst = std::max(worst, std::abs(x_star - closed) / x_star);
    }
    detail = "worst relative gap " + std::to_string(worst);
    return worst <= 1e-9;
}

// --- 4. Figure-family reproduction -------------------------------------------

bool crit_figure(std::string& detail) {
    const std::vector<double> family{1.0, 10.0, 100.0, 1000.0, 10000.0};
    auto per_pair = [&](double n, double a_f) {
        return bound_fixed_narrowband({n, 1.0, 2.0, 1.0, a_f}).per_pair_bound;
    };

    // monotone decreasing in n along a deduplicated log grid of integers
    std::vector<double> ns;
    for (double n = 1.0; n <= 1e6; n *= 1.5849) {
        const double v = std::floor(n);
        if (ns.empty() || v > ns.back())
            ns.push_back(v);
    }
    for (double a_f : family) {
        double prev = 1e300;
        for (double n : ns) {
            const double pp = per_pair(n, a_f);
            if (!(pp < prev)) {
                detail = "per-pair not decreasing at a_f " + std::to_string(a_f);
                return false;
            }
            prev = pp;
        }
    }

    // family ordering: the exponential term rules at n = 1 (descending in
    // a_f), the Phi constant at n = 1e6 (ascending)
    for (std::size_t i = 1; i < family.size(); ++i) {
        if (!(per_pair(1.0, family[i]) < per_pair(1.0, family[i - 1]))) {
            detail = "small-n family ordering broken";
            return false;
        }
        if (!(per_pair(1e6, family[i]) > per_pair(1e6, family[i - 1]))) {
            detail = "large-n family ordering broken";
            return false;
        }
    }

    const double plateau = per_pair(100.0, 1e4) / per_pair(1.0, 1e4);
    if (!(plateau >= 0.5)) {
        detail = "a_f=1e4 plateau ratio " + std::to_string(plateau);
        return false;
    }

    const double gk_ratio = per_pair(100.0, 1.0) / per_pair(1.0, 1.0);
    if (!within(gk_ratio, 1e-2, 1e-13)) {
        detail = "a_f=1 ratio " + std::to_string(gk_ratio);
        return false;
    }

    for (double a_f : family) {
        const BoundResult r = bound_fixed_narrowband({1e12, 1.0, 2.0, 1.0, a_f});
        const double limit = r.phi_or_theta * 1.0;
        if (!within(r.per_pair_bound * 1e12, limit, 1e-3)) {
            detail = "asymptote off at a_f " + std::to_string(a_f);
            return false;
        }
    }
    detail = "plateau ratio " + std::to_string(plateau);
    return true;
}

// --- 5. feasibility sum-bound oracle ------------------------------------------

bool crit_sum_bound(std::string& detail) {
    InequalitySweepConfig cfg;
    cfg.trials = 100000;
    cfg.seed = 424242;
    cfg.alphas = {1.0, 1.5, 2.0};
    cfg.absorptions = {1.0, 10.0, 1000.0};
    cfg.betas = {1.0, 2.0, 10.0};
    const InequalitySweepResult r = run_inequality_sweep(cfg, ExecutionPolicy::Parallel);
    detail = std::to_string(r.violations) + " violations over " + std::to_string(r.trials) +
             " feasible sets (" + std::to_string(r.members_total) +
             " transmissions), min margin " + std::to_string(r.margin_min);
    return r.violations == 0 && r.margin_min >= 0.0;
}

// --- 6. waterfilling consistency ----------------------------------------------

bool crit_waterfill(std::string& detail) {
    const ChannelParams params{};
    for (double l : {1.0, 10.0, 100.0}) {
        for (double target : {1.0, 5.0}) {
            const WaterfillSolution a = solve_for_capacity(l, target, params);
            const WaterfillSolution b = solve_for_power(l, a.power, params);
            if (!within(b.capacity, target, 1e-6)) {
                detail = "round trip failed at l " + std::to_string(l);
                return false;
            }
        }
        const double fc = optimal_center_frequency(l, params).f_khz;
        double prev_gap = -1.0;
        for (double df : {fc / 5.0, fc / 10.0, fc / 20.0}) {
            const double full = solve_for_bandwidth(l, df, params).power;
            const double cubic = narrowband_power(l, df, params).power;
            const double gap = std::abs(cubic - full) / full;
            if (!(gap < 0.05)) {
                detail = "cubic law gap " + std::to_string(gap) + " at l " + std::to_string(l);
                return false;
            }
            if (prev_gap >= 0.0 && !(gap <= 0.6 * prev_gap)) {
                detail = "cubic gap did not halve at l " + std::to_string(l);
                return false;
            }
            prev_gap = gap;
        }
    }
    detail = "round trips and cubic-law convergence hold for l in {1, 10, 100} km";
    return true;
}

// --- 7. channel anchors ---------------------------------------------------------

bool crit_channel(std::string& detail) {
    const double f1000 =
        bisect([](double f) { return absorption_db_per_km(f) - 30.0; }, 10.0, 150.0);
    if (!(f1000 >= 80.0 && f1000 <= 120.0)) {
        detail = "a=1000 at " + std::to_string(f1000) + " kHz";
        return false;
    }
    const double ratio = absorption_db_per_km(100.0) / absorption_db_per_km(0.01);
    if (!(ratio >= 1e3)) {
        detail = "absorption ratio " + std::to_string(ratio);
        return false;
    }
    const ChannelParams params{};
    double prev = 1e12;
    for (int i = 0; i < 20; ++i) {
        const double l = 0.1 * std::pow(1000.0, i / 19.0);
        const double fc = optimal_center_frequency(l, params).f_khz;
        if (!(fc <= prev * (1.0 + 1e-9))) {
            detail = "f_c increased at l " + std::to_string(l);
            return false;
        }
        prev = fc;
    }
    detail = "a=1000 at " + std::to_string(f1000) + " kHz, ratio " + std::to_string(ratio) +
             ", f_c non-increasing over 20 distances";
    return true;
}

// --- 8. simulator vs bound ------------------------------------------------------

bool crit_simulator(std::string& detail) {
    TransportSweepConfig cfg;
    cfg.runs = 100;
    cfg.seed = 777;
    cfg.n_min = 4;
    cfg.n_max = 64;
    cfg.slots = 32;
    const std::vector<SimRecord> records =
        run_transport_sweep(cfg, ExecutionPolicy::Parallel);
    double worst_frac = 0.0;
    for (const SimRecord& r : records) {
        if (!(r.transport_achieved <= r.transport_bound)) {
            detail = "bound exceeded at seed " + std::to_string(r.seed);
            return false;
        }
        if (!(r.margin_min >= 0.0)) {
            detail = "negative margin at seed " + std::to_string(r.seed);
            return false;
        }
        worst_frac = std::max(worst_frac, r.transport_achieved / r.transport_bound);
    }
    detail = "100 runs below the bound; max achieved/bound " + std::to_string(worst_frac);
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Gupta-Kumar reduction at a_f = 1 (100 random tuples, 1e-12)", 1.0,
         crit_gupta_kumar},
        {2, "Lambert W0 inverse identity on [0, 1e9] (1e-12)", 1.0, crit_lambert},
        {3, "Lambert-chain tightness vs bisection (1e-9)", 5.0, crit_chain},
        {4, "bound-curve family: monotonicity, ordering, plateau, asymptote", 10.0,
         crit_figure},
        {5, "sum-bound oracle: 1e5 random feasible sets, zero violations", 120.0,
         crit_sum_bound},
        {6, "waterfilling round trip (1e-6) and cubic narrowband law (5%)", 30.0,
         crit_waterfill},
        {7, "channel anchors: a=1000 near 100 kHz, dB ratio, f_c monotone", 5.0,
         crit_channel},
        {8, "simulator transport under the narrowband bound (100 seeded runs)", 120.0,
         crit_simulator},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.budget_seconds) {
            ok = false;
            detail += " [over budget " + std::to_string(c.budget_seconds) + " s]";
        }
        std::printf("%s  %d. %s (%.2fs) -- %s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    seconds, detail.c_str());
        if (!ok)
            ++failures;
    }
    if (failures == 0)
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    else
        std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
