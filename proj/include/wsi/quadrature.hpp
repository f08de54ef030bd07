#pragma once

// Numerical integration: adaptive Gauss-Kronrod on finite intervals, damped
// oscillatory integrals over [0, inf), Cauchy principal values and Richardson
// extrapolation to eps = 0.

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace wsi::quad {

using cplx = std::complex<double>;
using Integrand = std::function<cplx(double)>;

struct QuadratureResult {
    cplx value{};
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

/// Strictly decreasing list of eps > 0, each at most half the previous one.
struct EpsSchedule {
    std::vector<double> values;

    /// Throws DomainError when the list violates the invariants.
    void validate() const;

    static EpsSchedule default_schedule();
};

/// Adaptive 21-point Gauss-Kronrod with global bisection of the interval
/// carrying the largest error. `tol` is absolute. When `max_intervals` is
/// exhausted the best estimate is returned with converged = false.
/// Integrable endpoint singularities are handled by repeated bisection, since
/// the rule never samples the endpoints. `initial_panels` > 1 starts from a
/// uniform partition instead of the whole interval.
QuadratureResult integrate_finite(const Integrand& f, double a, double b, double tol, int max_intervals = 4000,
                                  int initial_panels = 1);

/// Integral of f over [0, inf) for f ~ exp(-damping * k) times an oscillation
/// with quasi-period 2 * zero_spacing. The range is cut into panels of width
/// zero_spacing, up to k_max = max(50, 40 / damping); the partial sums are
/// accelerated with Wynn's epsilon algorithm and summation stops early once
/// the accelerated value is stable. error_estimate includes the truncation
/// estimate. Throws NonConvergence if the panels fail to decay by k_max.
QuadratureResult integrate_semiinfinite_damped(const Integrand& f, double damping, double zero_spacing, double tol);

/// Pv int_lo^hi phi(s) / (s - pole) ds for phi smooth on [lo, hi].
/// On [pole - h, pole + h], h = min(pole - lo, hi - pole, 0.5), the odd part is
/// cancelled exactly: int_0^h (phi(pole + t) - phi(pole - t)) / t dt. A pole
/// outside [lo, hi] gives an ordinary integral. Throws PoleOnBoundaryError when
/// the pole coincides with lo or hi up to 1e-12 relative.
QuadratureResult integrate_pv(const Integrand& phi, double lo, double hi, double pole, double tol);

struct Extrapolation {
    cplx value{};
    double error_estimate = 0.0;
};

/// Polynomial extrapolation (Neville) of (eps, value) samples to eps = 0.
/// The error estimate is the magnitude of the last correction.
/// Throws InsufficientData for fewer than 3 samples and DomainError if eps is
/// not strictly decreasing and positive.
Extrapolation richardson(const std::vector<std::pair<double, cplx>>& seq);

}  // namespace wsi::quad
