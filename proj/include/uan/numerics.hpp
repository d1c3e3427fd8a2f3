#ifndef UAN_NUMERICS_HPP
#define UAN_NUMERICS_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace uan {

/// Thrown when an iterative method fails to converge.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bisection on [lo, hi] for a sign change of f. Requires f(lo) and f(hi)
/// of opposite sign (zero counts as either). Converges to rel_tol in x.
template <typename F>
double bisect(F&& f, double lo, double hi, double rel_tol = 1e-12, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw numerical_error("bisect: endpoints do not bracket a root");
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= rel_tol * std::max(std::abs(lo), std::abs(hi)))
            return mid;
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Golden-section minimizer on [lo, hi]; assumes a single interior minimum.
template <typename F>
double golden_min(F&& f, double lo, double hi, double rel_tol = 1e-6, int max_iter = 400) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < max_iter; ++i) {
        if (b - a <= rel_tol * std::max(std::abs(a), std::abs(b)))
            break;
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

namespace detail {

template <typename F>
double simpson_step(F& f, double a, double m, double b, double fa, double fm, double fb,
                    double whole, double abs_tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0)
        throw numerical_error("integrate: adaptive Simpson recursion limit reached");
    if (std::abs(delta) <= 15.0 * abs_tol)
        return left + right + delta / 15.0;
    return simpson_step(f, a, lm, m, fa, flm, fm, left, 0.5 * abs_tol, depth - 1) +
           simpson_step(f, m, rm, b, fm, frm, fb, right, 0.5 * abs_tol, depth - 1);
}

} // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to a relative tolerance.
template <typename F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-9) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    // scale the absolute budget off a first coarse estimate
    double abs_tol = rel_tol * std::abs(whole);
    if (abs_tol == 0.0)
        abs_tol = rel_tol * (b - a) * (std::abs(fa) + std::abs(fm) + std::abs(fb) + 1e-300);
    return detail::simpson_step(f, a, m, b, fa, fm, fb, whole, abs_tol, 48);
}

} // namespace uan

#endif
