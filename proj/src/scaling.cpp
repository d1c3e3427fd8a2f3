#include "uan/scaling.hpp"
#include "uan/channel.hpp"
#include "uan/numerics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace uan {

namespace {

constexpr double kTwoOverSqrtPi = 2.0 * std::numbers::inv_sqrtpi;

// Phi = 2^(1/a) / sqrt(pi) * ((b+1)/b)^(1/a) * (a_f^(2/sqrt(pi)))^(1/a)
double phi_constant(double alpha, double beta, double a_f) {
    return std::pow(2.0, 1.0 / alpha) / std::sqrt(std::numbers::pi) *
           std::pow((beta + 1.0) / beta, 1.0 / alpha) *
           std::pow(std::pow(a_f, kTwoOverSqrtPi), 1.0 / alpha);
}

// Common outer form: C * W * n^((a-1)/a) * exp(-W0(C * 2 ln(a_min)/a * n^(-1/a)))
BoundResult eval_bound(double n, double alpha, double w_rate, double constant, double a_min) {
    BoundResult r;
    r.phi_or_theta = constant;
    r.lambert_arg = constant * (2.0 * std::log(a_min) / alpha) * std::pow(n, -1.0 / alpha);
    r.transport_bound = constant * w_rate * std::pow(n, (alpha - 1.0) / alpha) *
                        std::exp(-lambert_w0(r.lambert_arg));
    r.per_pair_bound = r.transport_bound / n;
    return r;
}

void check_common(double n, double alpha, double beta) {
    if (!(n >= 1.0))
        throw std::domain_error("scenario: node count must be >= 1");
    if (!(alpha >= 1.0))
        throw std::domain_error("scenario: spreading factor must be >= 1");
    if (!(beta > 0.0))
        throw std::domain_error("scenario: SINR threshold must be positive");
}

} // namespace

double lambert_w0(double x) {
    if (!(x >= 0.0))
        throw std::domain_error("lambert_w0: argument must be >= 0");
    if (x == 0.0)
        return 0.0;
    if (std::isinf(x))
        return x;

    double w;
    if (x <= std::numbers::e) {
        w = std::log1p(x);  // close enough on [0, e]; w* lies in [0, 1]
    } else {
        const double lx = std::log(x);
        w = lx - std::log(lx);
    }

    for (int i = 0; i < 64; ++i) {
        const double ew = std::exp(w);
        const double resid = w * ew - x;
        if (resid == 0.0)
            return w;
        // Halley step
        const double denom = ew * (w + 1.0) - (w + 2.0) * resid / (2.0 * w + 2.0);
        const double step = resid / denom;
        w -= step;
        if (std::abs(step) <= 2.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(w)))
            return w;
    }
    throw numerical_error("lambert_w0: iteration did not converge");
}

BoundResult bound_fixed_narrowband(const NarrowbandScenario& sc) {
    check_common(sc.n, sc.alpha, sc.beta);
    if (!(sc.w_rate > 0.0))
        throw std::domain_error("scenario: rate must be positive");
    if (!(sc.a_f >= 1.0))
        throw std::domain_error("scenario: absorption must be >= 1");
    return eval_bound(sc.n, sc.alpha, sc.w_rate, phi_constant(sc.alpha, sc.beta, sc.a_f), sc.a_f);
}

BoundResult bound_multiband(const MultiBandScenario& sc) {
    check_common(sc.n, sc.alpha, sc.beta);
    if (!(sc.delta_w > 0.0))
        throw std::domain_error("scenario: per-band rate must be positive");
    if (sc.band_absorptions.empty())
        throw std::domain_error("scenario: band list must be non-empty");

    double mean_pow = 0.0;
    double a_min = std::numeric_limits<double>::infinity();
    for (double a : sc.band_absorptions) {
        if (!(a >= 1.0))
            throw std::domain_error("scenario: absorption must be >= 1");
        mean_pow += std::pow(a, kTwoOverSqrtPi);
        a_min = std::min(a_min, a);
    }
    mean_pow /= static_cast<double>(sc.band_absorptions.size());

    const double phi = std::pow(2.0, 1.0 / sc.alpha) / std::sqrt(std::numbers::pi) *
                       std::pow((sc.beta + 1.0) / sc.beta, 1.0 / sc.alpha) *
                       std::pow(mean_pow, 1.0 / sc.alpha);
    const double w_total = static_cast<double>(sc.band_absorptions.size()) * sc.delta_w;
    return eval_bound(sc.n, sc.alpha, w_total, phi, a_min);
}

std::vector<BoundResult> bound_direct_per_band(const DirectScenario& sc) {
    if (sc.per_band.empty())
        throw std::domain_error("scenario: band list must be non-empty");
    std::vector<BoundResult> out;
    out.reserve(sc.per_band.size());
    for (const BandPopulation& band : sc.per_band) {
        if (!(band.n >= 0.0))
            throw std::domain_error("scenario: per-band population must be >= 0");
        if (band.n == 0.0) {
            out.push_back(BoundResult{0.0, 0.0, phi_constant(sc.alpha, sc.beta, band.a_f),
                                      std::numeric_limits<double>::infinity()});
            continue;
        }
        out.push_back(bound_fixed_narrowband(
            NarrowbandScenario{band.n, sc.alpha, sc.beta, sc.delta_w, band.a_f}));
    }
    return out;
}

BoundResult bound_wideband(const WidebandScenario& sc) {
    check_common(sc.n, sc.alpha, 1.0);
    if (!(sc.band.f_min > 0.0 && sc.band.f_min < sc.band.f_max))
        throw std::domain_error("scenario: invalid band");
    if (!sc.beta_of_f)
        throw std::domain_error("scenario: beta(f) must be provided");

    auto a_of = sc.absorption ? sc.absorption
                              : std::function<double(double)>(
                                    [](double f) { return absorption_linear(f); });

    // sample-validate the profile before integrating
    for (int i = 0; i <= 32; ++i) {
        const double f = sc.band.f_min + (sc.band.f_max - sc.band.f_min) * i / 32.0;
        if (!(sc.beta_of_f(f) > 0.0))
            throw std::domain_error("scenario: beta(f) must be positive over the band");
        if (!(a_of(f) >= 1.0))
            throw std::domain_error("scenario: absorption must be >= 1 over the band");
    }

    const double w_rate = integrate(
        [&](double f) { return std::log2(1.0 + sc.beta_of_f(f)); }, sc.band.f_min,
        sc.band.f_max, 1e-10);
    const double weighted = integrate(
        [&](double f) {
            const double b = sc.beta_of_f(f);
            return (b + 1.0) / b * std::pow(a_of(f), kTwoOverSqrtPi) * std::log2(1.0 + b);
        },
        sc.band.f_min, sc.band.f_max, 1e-10);

    const double theta = std::pow(2.0, 1.0 / sc.alpha) / std::sqrt(std::numbers::pi) *
                         std::pow(weighted / w_rate, 1.0 / sc.alpha);

    // model-agnostic argmin of a(f); the lower band edge for Thorp
    const double f_interior =
        golden_min(a_of, sc.band.f_min, sc.band.f_max, 1e-9);
    double a_min = std::min({a_of(sc.band.f_min), a_of(sc.band.f_max), a_of(f_interior)});

    return eval_bound(sc.n, sc.alpha, w_rate, theta, a_min);
}

std::vector<BoundCurveRow> bound_curve(double alpha, double beta, double w_rate,
                                       std::span<const double> a_f_family,
                                       std::span<const double> n_values) {
    std::vector<BoundCurveRow> rows;
    rows.reserve(a_f_family.size() * n_values.size());
    for (double a_f : a_f_family) {
        for (double n : n_values) {
            if (!(n >= 1.0) || n != std::floor(n))
                throw std::domain_error("bound_curve: n values must be positive integers");
            const BoundResult r =
                bound_fixed_narrowband(NarrowbandScenario{n, alpha, beta, w_rate, a_f});
            rows.push_back(BoundCurveRow{a_f, n, r.per_pair_bound, r.transport_bound});
        }
    }
    return rows;
}

} // namespace uan
