#include "uan/waterfill.hpp"
#include "uan/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace uan {

namespace {

constexpr int kScanPoints = 1024;
constexpr int kMaxDoublings = 64;  // water-level bracket cap at an_min * 2^64

// Fixed scan of ln(A*N) over the frequency domain for one link. The sample
// set includes f_c so that bands narrower than the grid pitch are still
// found.
class LevelScanner {
  public:
    LevelScanner(double l_km, const ChannelParams& params)
        : l_km_(l_km), params_(params), fc_(optimal_center_frequency(l_km, params)) {
        const double lo = params.f_domain.lo;
        const double hi = params.f_domain.hi;
        const double step = std::log(hi / lo) / (kScanPoints - 1);
        fs_.reserve(kScanPoints + 1);
        for (int i = 0; i < kScanPoints; ++i)
            fs_.push_back(lo * std::exp(step * i));
        fs_.push_back(fc_.f_khz);
        std::sort(fs_.begin(), fs_.end());
        vs_.reserve(fs_.size());
        for (double f : fs_)
            vs_.push_back(an_product_log(l_km, f, params));
    }

    const CenterFrequency& center() const { return fc_; }

    double an_log(double f) const { return an_product_log(l_km_, f, params_); }

    // Sub-level set {f : ln(A*N) < log_k} as sorted disjoint bands; edges
    // refined by bisection to 1e-9 relative in f.
    std::pair<std::vector<Band>, bool> bands_at(double log_k) const {
        std::vector<Band> bands;
        bool clipped = false;
        const std::size_t m = fs_.size();
        std::size_t i = 0;
        while (i < m) {
            if (vs_[i] >= log_k) {
                ++i;
                continue;
            }
            double left;
            if (i == 0) {
                left = fs_.front();
                clipped = true;
            } else {
                left = refine_edge(fs_[i - 1], fs_[i], log_k);
            }
            std::size_t j = i;
            while (j + 1 < m && vs_[j + 1] < log_k)
                ++j;
            double right;
            if (j == m - 1) {
                right = fs_.back();
                clipped = true;
            } else {
                right = refine_edge(fs_[j + 1], fs_[j], log_k);
            }
            bands.push_back(Band{left, right});
            i = j + 1;
        }
        return {std::move(bands), clipped};
    }

    double capacity(double log_k, const std::vector<Band>& bands) const {
        constexpr double inv_ln2 = 1.4426950408889634;
        double total = 0.0;
        for (const Band& band : bands)
            total += integrate(
                [&](double f) { return (log_k - an_log(f)) * inv_ln2; }, band.f_min,
                band.f_max, 1e-9);
        return total;
    }

    double power(double log_k, const std::vector<Band>& bands) const {
        const double k = std::exp(log_k);
        double total = 0.0;
        for (const Band& band : bands)
            total += integrate(
                [&](double f) { return -k * std::expm1(an_log(f) - log_k); }, band.f_min,
                band.f_max, 1e-9);
        return total;
    }

    static double total_width(const std::vector<Band>& bands) {
        double w = 0.0;
        for (const Band& band : bands)
            w += band.width();
        return w;
    }

  private:
    // outside is on the >= side, inside strictly below
    double refine_edge(double f_outside, double f_inside, double log_k) const {
        return bisect([&](double f) { return an_log(f) - log_k; },
                      std::min(f_outside, f_inside), std::max(f_outside, f_inside), 1e-9);
    }

    double l_km_;
    ChannelParams params_;
    CenterFrequency fc_;
    std::vector<double> fs_;
    std::vector<double> vs_;
};

WaterfillSolution zero_solution(const LevelScanner& scan) {
    WaterfillSolution s;
    s.k_level = scan.center().an_min;
    s.clipped = scan.center().at_boundary;
    return s;
}

WaterfillSolution finalize(const LevelScanner& scan, double l_km, double log_k,
                           const ChannelParams& params, bool clipped_solution) {
    WaterfillSolution s;
    auto [bands, clipped] = scan.bands_at(log_k);
    s.k_level = std::exp(log_k);
    s.bands = std::move(bands);
    s.capacity = scan.capacity(log_k, s.bands);
    s.power = scan.power(log_k, s.bands);
    s.clipped = clipped || clipped_solution;
    s.narrowband = s.bands.empty();
    if (s.bands.size() == 1 && s.power > 0.0) {
        try {
            const double cubic =
                an_second_derivative(l_km, params) * std::pow(s.bands[0].width(), 3) / 12.0;
            s.narrowband = std::abs(cubic - s.power) <= 0.2 * s.power;
        } catch (const numerical_error&) {
            s.narrowband = false;
        }
    }
    return s;
}

// Bisection on the water level for any metric monotone in K. Returns the
// log level; sets *saturated when even an_min * 2^64 falls short.
template <typename Metric>
double solve_level(const LevelScanner& scan, double target, Metric&& metric, bool* saturated) {
    constexpr double ln2 = std::numbers::ln2;
    const double base = scan.center().an_min_log;
    *saturated = false;

    double lo = base;
    double hi = base;
    double hi_val = 0.0;
    for (int j = 1; j <= kMaxDoublings; ++j) {
        hi = base + ln2 * j;
        hi_val = metric(hi);
        if (hi_val >= target)
            break;
        lo = hi;
    }
    if (hi_val < target) {
        *saturated = true;
        return base + ln2 * kMaxDoublings;
    }

    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double v = metric(mid);
        if (std::abs(v - target) <= 1e-9 * target)
            return mid;
        if (v < target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)))
            return 0.5 * (lo + hi);
    }
    return 0.5 * (lo + hi);
}

void check_link(double l_km, const ChannelParams& params) {
    params.validate();
    if (!(l_km > 0.0))
        throw std::domain_error("distance must be positive");
}

} // namespace

CapacityAtLevel capacity_given_k(double l_km, double k_level, const ChannelParams& params) {
    check_link(l_km, params);
    if (!(k_level > 0.0))
        throw std::domain_error("water level must be positive");
    LevelScanner scan(l_km, params);
    const double log_k = std::log(k_level);
    auto [bands, clipped] = scan.bands_at(log_k);
    CapacityAtLevel out;
    out.capacity = scan.capacity(log_k, bands);
    out.bands = std::move(bands);
    out.clipped = clipped;
    return out;
}

WaterfillSolution solve_for_capacity(double l_km, double target_capacity,
                                     const ChannelParams& params) {
    check_link(l_km, params);
    if (!(target_capacity >= 0.0))
        throw std::domain_error("target capacity must be >= 0");
    LevelScanner scan(l_km, params);
    if (target_capacity == 0.0)
        return zero_solution(scan);
    bool saturated = false;
    const double log_k = solve_level(
        scan, target_capacity,
        [&](double lk) { return scan.capacity(lk, scan.bands_at(lk).first); }, &saturated);
    return finalize(scan, l_km, log_k, params, saturated);
}

WaterfillSolution solve_for_power(double l_km, double power_budget,
                                  const ChannelParams& params) {
    check_link(l_km, params);
    if (!(power_budget >= 0.0))
        throw std::domain_error("power budget must be >= 0");
    LevelScanner scan(l_km, params);
    if (power_budget == 0.0)
        return zero_solution(scan);
    bool saturated = false;
    const double log_k = solve_level(
        scan, power_budget,
        [&](double lk) { return scan.power(lk, scan.bands_at(lk).first); }, &saturated);
    return finalize(scan, l_km, log_k, params, saturated);
}

WaterfillSolution solve_for_bandwidth(double l_km, double delta_f, const ChannelParams& params) {
    check_link(l_km, params);
    if (!(delta_f > 0.0))
        throw std::domain_error("bandwidth must be positive");
    LevelScanner scan(l_km, params);
    bool saturated = false;
    const double log_k = solve_level(
        scan, delta_f,
        [&](double lk) { return LevelScanner::total_width(scan.bands_at(lk).first); },
        &saturated);
    return finalize(scan, l_km, log_k, params, saturated);
}

NarrowbandPower narrowband_power(double l_km, double delta_f, const ChannelParams& params) {
    check_link(l_km, params);
    if (!(delta_f > 0.0))
        throw std::domain_error("bandwidth must be positive");

    const CenterFrequency fc = optimal_center_frequency(l_km, params);
    const double upsilon = an_second_derivative(l_km, params);

    NarrowbandPower out;
    out.power = upsilon / 12.0 * delta_f * delta_f * delta_f;

    // quadratic-model quality at the nominal band edges f_c +/- delta_f/2
    const double half = 0.5 * delta_f;
    double err = 0.0;
    for (double edge : {fc.f_khz - half, fc.f_khz + half}) {
        if (!(edge > 0.0)) {
            err = std::numeric_limits<double>::infinity();
            break;
        }
        const double truth = an_product(l_km, edge, params);
        const double model = fc.an_min + 0.5 * upsilon * half * half;
        err = std::max(err, std::abs(model - truth) / truth);
    }
    out.model_error = err;
    out.regime_ok = err <= 0.2;
    return out;
}

} // namespace uan
