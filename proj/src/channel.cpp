#include "uan/channel.hpp"
#include "uan/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace uan {

namespace {

constexpr double kLn10Over10 = 0.23025850929940457; // ln(10)/10

double from_db(double db) { return std::pow(10.0, db * 0.1); }

void require_positive_frequency(double f_khz) {
    if (!(f_khz > 0.0))
        throw std::domain_error("frequency must be positive");
}

} // namespace

void ChannelParams::validate() const {
    if (!(alpha >= 1.0))
        throw std::domain_error("spreading factor must be >= 1");
    if (!(shipping >= 0.0 && shipping <= 1.0))
        throw std::domain_error("shipping activity must lie in [0, 1]");
    if (!(wind >= 0.0))
        throw std::domain_error("wind speed must be >= 0");
    if (!(l_ref_km > 0.0))
        throw std::domain_error("reference distance must be positive");
    if (!(f_domain.lo > 0.0 && f_domain.lo < f_domain.hi))
        throw std::domain_error("frequency domain must satisfy 0 < lo < hi");
}

double absorption_db_per_km(double f_khz) {
    require_positive_frequency(f_khz);
    const double f2 = f_khz * f_khz;
    return 0.11 * f2 / (1.0 + f2) + 44.0 * f2 / (4100.0 + f2) + 2.75e-4 * f2 + 0.003;
}

double absorption_linear(double f_khz) {
    return from_db(absorption_db_per_km(f_khz));
}

double attenuation_log(double l_km, double f_khz, const ChannelParams& params) {
    if (!(l_km > 0.0))
        throw std::domain_error("distance must be positive");
    return params.alpha * std::log(l_km / params.l_ref_km) +
           l_km * kLn10Over10 * absorption_db_per_km(f_khz);
}

double attenuation(double l_km, double f_khz, const ChannelParams& params) {
    if (!(l_km > 0.0))
        throw std::domain_error("distance must be positive");
    return std::pow(l_km / params.l_ref_km, params.alpha) *
           std::pow(absorption_linear(f_khz), l_km);
}

double noise_psd(double f_khz, const ChannelParams& params) {
    require_positive_frequency(f_khz);
    const double lf = std::log10(f_khz);
    const double turb_db = 17.0 - 30.0 * lf;
    const double ship_db = 40.0 + 20.0 * (params.shipping - 0.5) + 26.0 * lf -
                           60.0 * std::log10(f_khz + 0.03);
    const double wind_db = 50.0 + 7.5 * std::sqrt(params.wind) + 20.0 * lf -
                           40.0 * std::log10(f_khz + 0.4);
    const double thermal_db = -15.0 + 20.0 * lf;
    return from_db(turb_db) + from_db(ship_db) + from_db(wind_db) + from_db(thermal_db);
}

double noise_psd_db(double f_khz, const ChannelParams& params) {
    return 10.0 * std::log10(noise_psd(f_khz, params));
}

double an_product(double l_km, double f_khz, const ChannelParams& params) {
    return attenuation(l_km, f_khz, params) * noise_psd(f_khz, params);
}

double an_product_log(double l_km, double f_khz, const ChannelParams& params) {
    return attenuation_log(l_km, f_khz, params) + std::log(noise_psd(f_khz, params));
}

CenterFrequency optimal_center_frequency(double l_km, const ChannelParams& params) {
    params.validate();
    if (!(l_km > 0.0))
        throw std::domain_error("distance must be positive");

    const double lo = params.f_domain.lo;
    const double hi = params.f_domain.hi;
    constexpr int kCoarsePoints = 256;

    // coarse log-spaced scan guards against picking a non-global dip
    const double ratio = std::log(hi / lo) / (kCoarsePoints - 1);
    int best = 0;
    double best_val = an_product_log(l_km, lo, params);
    for (int i = 1; i < kCoarsePoints; ++i) {
        const double f = lo * std::exp(ratio * i);
        const double v = an_product_log(l_km, f, params);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }

    const double f_left = lo * std::exp(ratio * std::max(best - 1, 0));
    const double f_right = std::min(lo * std::exp(ratio * std::min(best + 1, kCoarsePoints - 1)), hi);
    const double f_c = golden_min(
        [&](double f) { return an_product_log(l_km, f, params); }, f_left, f_right, 1e-7);

    CenterFrequency out;
    out.f_khz = f_c;
    out.an_min_log = an_product_log(l_km, f_c, params);
    out.an_min = std::exp(out.an_min_log);
    out.at_boundary = (f_c <= lo * (1.0 + 1e-5)) || (f_c >= hi * (1.0 - 1e-5));
    return out;
}

double an_second_derivative(double l_km, const ChannelParams& params) {
    const CenterFrequency fc = optimal_center_frequency(l_km, params);
    const double f = fc.f_khz;

    auto an = [&](double x) { return an_product(l_km, x, params); };

    double h = 0.05 * f;
    if (f - h <= 0.0)
        h = 0.5 * f;
    const double center = an(f);
    double prev = (an(f + h) - 2.0 * center + an(f - h)) / (h * h);
    const double h_floor = f * 1e-7;
    for (int i = 0; i < 40; ++i) {
        h *= 0.5;
        if (h < h_floor)
            throw numerical_error("an_second_derivative: step halving did not converge");
        const double cur = (an(f + h) - 2.0 * center + an(f - h)) / (h * h);
        if (std::abs(cur - prev) <= 1e-4 * std::abs(cur)) {
            if (!(cur > 0.0))
                throw numerical_error(
                    "an_second_derivative: non-positive curvature at the located minimum");
            return cur;
        }
        prev = cur;
    }
    throw numerical_error("an_second_derivative: step halving did not converge");
}

} // namespace uan
