#ifndef UAN_CHANNEL_HPP
#define UAN_CHANNEL_HPP

namespace uan {

/// Frequency interval in kHz.
struct FrequencyInterval {
    double lo = 0.1;
    double hi = 200.0;
};

/// Physical environment of an underwater acoustic link.
///
/// Units used throughout: distances in km, frequencies in kHz, absorption
/// per km, noise psd in linear uPa^2/Hz. Only ratios of powers matter, so
/// the absolute psd scale is arbitrary.
struct ChannelParams {
    double alpha = 1.5;     ///< spreading factor (1 cylindrical, 2 spherical)
    double shipping = 0.5;  ///< shipping activity s in [0, 1]
    double wind = 0.0;      ///< wind speed w in m/s
    double l_ref_km = 0.001; ///< reference distance (1 m)
    FrequencyInterval f_domain{};

    /// Throws std::domain_error on a hard invariant violation.
    void validate() const;

    /// Spreading factors outside [1, 2] are accepted but unusual.
    bool alpha_in_typical_range() const { return alpha >= 1.0 && alpha <= 2.0; }
};

/// Thorp's absorption at f kHz, in dB/km. Strictly increasing in f.
double absorption_db_per_km(double f_khz);

/// Linear absorption coefficient a(f) = 10^(dB/10); a(f) >= 1 for f > 0.
double absorption_linear(double f_khz);

/// Path loss A(l, f) = (l / l_ref)^alpha * a(f)^l.
double attenuation(double l_km, double f_khz, const ChannelParams& params);

/// ln A(l, f); usable where the linear value would overflow.
double attenuation_log(double l_km, double f_khz, const ChannelParams& params);

/// Ambient noise psd from turbulence, shipping, wind and thermal
/// components, in dB re uPa^2/Hz.
double noise_psd_db(double f_khz, const ChannelParams& params);

/// Ambient noise psd, linear.
double noise_psd(double f_khz, const ChannelParams& params);

/// A(l, f) * N(f), exactly the product of attenuation() and noise_psd().
double an_product(double l_km, double f_khz, const ChannelParams& params);

/// ln(A * N); the form all internal searches and integrals work in, since
/// the linear product exceeds double range at large l * f.
double an_product_log(double l_km, double f_khz, const ChannelParams& params);

struct CenterFrequency {
    double f_khz;       ///< argmin over the frequency domain of A(l,f)N(f)
    double an_min;      ///< A*N at the minimizer
    double an_min_log;  ///< ln of the above
    bool at_boundary;   ///< minimizer pinned to a domain edge (band clipping risk)
};

/// Optimal center frequency f_c(l): minimizer of A(l,f)N(f) over the
/// configured frequency domain. Coarse log-spaced scan seeded golden
/// section, refined to 1e-6 relative in f. Decreases with distance.
CenterFrequency optimal_center_frequency(double l_km, const ChannelParams& params);

/// Curvature of A(l,f)N(f) at f_c(l): central second difference with step
/// halving until two successive estimates agree to 4 significant digits.
/// Throws numerical_error if the estimate is not positive (minimum
/// misidentified or pinned to a boundary).
double an_second_derivative(double l_km, const ChannelParams& params);

} // namespace uan

#endif
