#pragma once

// Boundary distributions on (0, inf) of the form
//
//   T = C_delta * delta(s - 1) + C_pv * Pv( 1 / (1/s - s) ) * F(s),
//
// with F(1) = 1 and F(s) = 1 + (s - 1) h(s), h locally integrable. Pairing
// with a test function g uses, for any real alpha,
//
//   <Pv(1/(1/s - s)) F, g> = Pv int s^alpha g / (1/s - s) ds
//                          + int s^alpha (s^-alpha F - 1) g / (1/s - s) ds,
//
// where the second integrand is locally integrable because F - 1 vanishes at
// s = 1 up to the remainder h.

#include <complex>
#include <functional>
#include <vector>

#include "wsi/quadrature.hpp"

namespace wsi::dist {

using cplx = std::complex<double>;
using Density = std::function<cplx(double)>;

/// amplitude * exp(-1 / (1 - t^2)), t = (s - center) / halfwidth, zero for
/// |t| >= 1.
struct TestFunction {
    double center = 1.0;
    double halfwidth = 0.5;
    double amplitude = 1.0;

    /// Throws SupportError unless 0 < halfwidth < center (support inside
    /// (0, inf)) and all fields are finite.
    void validate() const;

    double lo() const { return center - halfwidth; }
    double hi() const { return center + halfwidth; }

    double operator()(double s) const;

    /// d g / d s.
    double derivative(double s) const;
};

enum class Measure { Lebesgue, Haar };

struct DistributionExpansion {
    cplx delta_coeff{};
    cplx pv_coeff{};
    Density density;    // F
    Density remainder;  // h, with F(s) = 1 + (s - 1) h(s)
    double alpha = 0.0;

    /// Same distribution with a different decomposition parameter.
    DistributionExpansion with_alpha(double a) const;
};

/// Pv int_supp(g) phi(s) g(s) / (s - pole) ds.
quad::QuadratureResult integrate_pv(const Density& phi, const TestFunction& g, double pole, double tol);

/// <dist, g> under the chosen measure (Haar pairs against g(s)/s).
/// Throws SupportError for an invalid g, ToleranceError when an inner
/// quadrature misses `tol`.
cplx pair(const DistributionExpansion& dist, const TestFunction& g, Measure measure = Measure::Lebesgue,
          double tol = 1e-11);

/// Largest pairwise difference of `pair` over the given alphas.
/// Throws DomainError for fewer than two alphas.
double pair_alpha_invariance_check(const DistributionExpansion& dist, const TestFunction& g,
                                   const std::vector<double>& alphas, Measure measure = Measure::Lebesgue,
                                   double tol = 1e-11);

/// int g(s) / ((1 + eps^2)/s - s - 2 i eps) ds = int s g(s) / (1 - (s + i eps)^2) ds.
cplx sokhotski_pair(const TestFunction& g, double eps, double tol = 1e-11);

/// The eps -> 0 limit of sokhotski_pair: Pv<1/(1/s - s), g> + (i pi / 2) g(1).
DistributionExpansion sokhotski_limit();

/// int_lo^hi |h(s)| ds, used to confirm local integrability of the remainder.
double remainder_l1(const DistributionExpansion& dist, double lo, double hi, double tol = 1e-9);

}  // namespace wsi::dist
