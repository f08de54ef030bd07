#pragma once

// Closed forms for the exponent-one integrals
//
//   I_{mu,nu}(z) = int_0^inf k H1_mu(z k) J_nu(k) dk,   z = s + i eps,
//
// and their eps -> 0 limits as distributions on (0, inf). Throughout,
// A = (nu + mu)/2, B = (nu - mu)/2 and P = Gamma(A+1) Gamma(B+1) / Gamma(nu+1).

#include <complex>

#include "wsi/distributions.hpp"

namespace wsi::ws {

using cplx = std::complex<double>;

struct OrderPair {
    double mu = 0.0;
    double nu = 0.0;

    /// nu + 2 > |mu|; throws OrderError naming the inequality otherwise.
    void validate_hankel() const;
    /// nu + 2 > |mu| and mu + 2 > |nu|.
    void validate_bessel() const;
};

struct RegularizedPoint {
    double s = 1.0;
    double eps = 0.1;

    /// Throws DomainError unless s > 0 and eps > 0.
    void validate() const;
};

/// int_0^inf k K_mu(z k) J_nu(k) dk = P z^(-2-nu) 2F1(A+1, B+1; nu+1; -z^-2)
/// for Re z > 0, principal branches.
cplx k_transform(const OrderPair& orders, cplx z);

/// I_{mu,nu}(s + i eps) in the factorized form
///   (2/(i pi)) e^{i pi (nu-mu)/2} (1/s) z^-nu / ((1 - z^2)/s) P 2F1(A, B; nu+1; z^-2).
/// Debug builds also evaluate regularized_I_via_k and assert agreement.
cplx regularized_I(const OrderPair& orders, const RegularizedPoint& pt);

/// The same quantity as (2/(i pi)) e^{-i pi mu/2} k_transform(eps - i s).
cplx regularized_I_via_k(const OrderPair& orders, const RegularizedPoint& pt);

/// Density of the Hankel-Bessel limit,
///   F(s) = s^(-nu-1) P 2F1(A, B; nu+1; s^-2),
/// using the boundary value from below of 2F1 for s < 1. F(1) = 1.
cplx prop1_density(const OrderPair& orders, double s);

/// h(s) = (F(s) - 1) / (s - 1). Near s = 1 the unit-normalised expansion of
/// 2F1 is used so no cancellation occurs; h has a logarithmic singularity at
/// s = 1 and h(1) is set to the s <= 1 branch value at 1 - 1e-6.
cplx prop1_remainder(const OrderPair& orders, double s);

/// Two-branch Bessel-Bessel density m0:
///   s <= 1: s^(mu-1) P' 2F1((mu+nu)/2, (mu-nu)/2; mu+1; s^2),
///   s > 1:  s^(-nu-1) P 2F1(A, B; nu+1; s^-2),
/// P' = Gamma((mu+nu)/2 + 1) Gamma((mu-nu)/2 + 1) / Gamma(mu+1). Real valued.
double prop2_density(const OrderPair& orders, double s);

/// (m0(s) - 1) / (s - 1), same conventions as prop1_remainder.
double prop2_remainder(const OrderPair& orders, double s);

/// eps -> 0 limit of I_{mu,nu}(s + i eps):
///   e^{i pi (nu-mu)/2} delta(s-1) + (2/(i pi)) e^{i pi (nu-mu)/2} Pv(1/(1/s - s)) F(s).
dist::DistributionExpansion prop1_distribution(const OrderPair& orders, double alpha = 0.0);

/// eps -> 0 limit of int k J_mu(s k) J_nu(k) dk:
///   cos(pi (nu-mu)/2) delta(s-1) + (2/pi) sin(pi (nu-mu)/2) Pv(1/(1/s - s)) m0(s).
dist::DistributionExpansion prop2_distribution(const OrderPair& orders, double alpha = 0.0);

/// |D_{mu,nu}(s) - s^-2 D_{nu,mu}(1/s)| for the regular Bessel-Bessel density
/// D = pv_coeff m0(s) / (1/s - s). Throws DomainError at s = 1 or s <= 0.
double reflection_check(const OrderPair& orders, double s);

}  // namespace wsi::ws
