#pragma once

// Reference values computed by methods unrelated to the library's own
// algorithms: integral representations for the Bessel family and direct
// integration of the hypergeometric differential equation.

#include <cmath>
#include <complex>
#include <vector>

#include "wsi/quadrature.hpp"
#include "wsi/specfun.hpp"

namespace oracles {

using cplx = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

inline double integrate_real(const std::function<double(double)>& f, double a, double b, double tol = 1e-15) {
    return wsi::quad::integrate_finite([&](double t) { return cplx{f(t), 0.0}; }, a, b, tol, 20000).value.real();
}

// Upper limit T with x sinh T - |nu| T >= 50, so the tail is below e^-50.
inline double sinh_cutoff(double x, double nu) {
    double t = 1.0;
    while (x * std::sinh(t) - std::abs(nu) * t < 50.0) {
        t += 0.25;
    }
    return t;
}

/// J_nu(x), x > 0, by the Schlaefli integral.
inline double bessel_j(double nu, double x, double tol = 1e-15) {
    const double first =
        integrate_real([&](double th) { return std::cos(x * std::sin(th) - nu * th); }, 0.0, kPi, tol);
    double second = 0.0;
    if (std::sin(nu * kPi) != 0.0 && nu != std::round(nu)) {
        const double t_max = sinh_cutoff(x, nu);
        second = integrate_real([&](double t) { return std::exp(-x * std::sinh(t) - nu * t); }, 0.0, t_max, tol);
    }
    return first / kPi - std::sin(nu * kPi) / kPi * second;
}

/// Y_nu(x), x > 0, by the Schlaefli integral.
inline double bessel_y(double nu, double x, double tol = 1e-15) {
    const double first =
        integrate_real([&](double th) { return std::sin(x * std::sin(th) - nu * th); }, 0.0, kPi, tol);
    const double t_max = sinh_cutoff(x, nu);
    const double c = std::cos(nu * kPi);
    const double second = integrate_real(
        [&](double t) { return (std::exp(nu * t) + std::exp(-nu * t) * c) * std::exp(-x * std::sinh(t)); }, 0.0,
        t_max, tol);
    return (first - second) / kPi;
}

inline double k_cutoff(double mu, cplx w) {
    double t_max = 1.0;
    while (w.real() * std::cosh(t_max) - std::abs(mu) * t_max < 50.0) {
        t_max += 0.25;
    }
    return t_max;
}

/// K_mu(w) = int_0^inf exp(-w cosh t) cosh(mu t) dt, Re w > 0.
inline cplx bessel_k(double mu, cplx w) {
    return wsi::quad::integrate_finite([&](double t) { return std::exp(-w * std::cosh(t)) * std::cosh(mu * t); },
                                       0.0, k_cutoff(mu, w), 1e-15, 20000)
        .value;
}

/// L1 norm of the integrand of bessel_k. Rounding in the oracle is about
/// 1e-16 times this, which dominates when the integrand oscillates.
inline double bessel_k_l1(double mu, cplx w) {
    return integrate_real([&](double t) { return std::exp(-w.real() * std::cosh(t)) * std::cosh(mu * t); }, 0.0,
                          k_cutoff(mu, w));
}

/// RK4 integration of the hypergeometric equation from z = 0.2 along the
/// polygon `path` (whose last vertex is the target). The step, scaled by
/// `refine`, shrinks near the singular points 0 and 1.
inline cplx hyp2f1_rk4(double a, double b, double c, const std::vector<cplx>& path, double refine) {
    auto series = [](double a_, double b_, double c_, cplx z) {
        cplx term = 1.0;
        cplx sum = 1.0;
        for (int n = 0; n < 400; ++n) {
            term *= (a_ + n) * (b_ + n) / ((c_ + n) * (n + 1.0)) * z;
            sum += term;
        }
        return sum;
    };
    cplx z = 0.2;
    cplx f = series(a, b, c, z);
    cplx fp = a * b / c * series(a + 1, b + 1, c + 1, z);
    auto rhs = [&](cplx zz, cplx y, cplx yp) {
        return (a * b * y - (c - (a + b + 1.0) * zz) * yp) / (zz * (1.0 - zz));
    };
    for (const cplx target : path) {
        while (std::abs(target - z) > 0.0) {
            const double dist = std::min(std::abs(z), std::abs(1.0 - z));
            const double h_max = refine * std::min(2e-3, 5e-3 * dist);
            const cplx dir = target - z;
            const cplx h = std::abs(dir) <= h_max ? dir : dir / std::abs(dir) * h_max;
            const cplx k1 = fp;
            const cplx l1 = rhs(z, f, fp);
            const cplx k2 = fp + 0.5 * h * l1;
            const cplx l2 = rhs(z + 0.5 * h, f + 0.5 * h * k1, k2);
            const cplx k3 = fp + 0.5 * h * l2;
            const cplx l3 = rhs(z + 0.5 * h, f + 0.5 * h * k2, k3);
            const cplx k4 = fp + h * l3;
            const cplx l4 = rhs(z + h, f + h * k3, k4);
            f += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            fp += h / 6.0 * (l1 + 2.0 * l2 + 2.0 * l3 + l4);
            z = std::abs(dir) <= h_max ? target : z + h;
        }
    }
    return f;
}

/// 2F1(a, b; c; z) from two RK4 runs, the second with half the step,
/// combined to cancel the leading h^4 error term.
inline cplx hyp2f1_ode(double a, double b, double c, const std::vector<cplx>& path) {
    const cplx coarse = hyp2f1_rk4(a, b, c, path, 1.0);
    const cplx fine = hyp2f1_rk4(a, b, c, path, 0.5);
    return (16.0 * fine - coarse) / 15.0;
}

/// Path from 0.2 to z that stays away from 0 and 1 and never crosses the cut:
/// through 0.5 + 0.5 i for Im z > 0, through 0.5 - 0.5 i otherwise. Points
/// x >= 1 on the real axis are approached from below.
inline std::vector<cplx> path_to(cplx z) {
    const double side = z.imag() > 0.0 ? 1.0 : -1.0;
    std::vector<cplx> p{cplx{0.5, 0.5 * side}};
    if (z.real() > 1.0) {
        p.push_back(cplx{z.real(), 0.5 * side});
    } else if (z.real() < 0.0) {
        p.push_back(cplx{0.0, 0.5 * side});
        p.push_back(cplx{z.real(), 0.5 * side});
    }
    p.push_back(z);
    return p;
}

}  // namespace oracles
