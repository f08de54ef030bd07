#pragma once

// Special functions used by the Weber-Schafheitlin closed forms: Gamma and
// digamma on the real line, Bessel J of real order, the modified Bessel
// function K and the Hankel function H1 for complex argument, and the Gauss
// hypergeometric function 2F1 with an explicit convention for its values on
// the cut [1, inf).
//
// Branches: every complex power and logarithm is principal (arg in (-pi, pi])
// except inside hyp2f1_boundary, where the limit from below the cut is taken
// (arg(1 - z) = +pi, arg(-z) = +pi for z = x > 1).

#include <complex>

namespace wsi::specfun {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double euler_gamma = 0.57721566490153286061;

// ---------------------------------------------------------------------------
// Real-line helpers

/// sin(pi x) and cos(pi x) with exact zeros at integers / half-integers.
double sin_pi(double x);
double cos_pi(double x);

/// True when x is 0, -1, -2, ...
bool is_nonpositive_integer(double x);

/// Gamma function. Lanczos approximation, reflection for x < 0.5.
/// Throws PoleError at non-positive integers.
double gamma(double x);

/// 1 / Gamma(x); zero at the poles of Gamma.
double rgamma(double x);

/// Digamma psi(x) = Gamma'(x)/Gamma(x). Throws PoleError at poles.
double digamma(double x);

// ---------------------------------------------------------------------------
// Bessel functions

/// Bessel function of the first kind J_nu(x), x > 0, |nu| <= 50.
///
/// Regions (nu >= 0; negative orders go through J_{-a} = cos(a pi) J_a -
/// sin(a pi) Y_a):
///  - x^2 <= 4 (nu + 1): ascending series, terms decrease monotonically;
///  - x >= max(25, nu^2): Hankel asymptotic expansion;
///  - otherwise: Steed's continued fractions with Temme's series for small x.
double bessel_j(double nu, double x);

/// Modified Bessel function of the second kind K_mu(w) for complex w,
/// |mu| <= 10. Principal branch, defined for w != 0 off the negative real
/// axis. Re(w) >= 0 uses Temme's series (|w| < 2) or Steed's CF2 (|w| >= 2);
/// the left half-plane is reached through the continuation formula
/// K(z e^{+-i pi}) = e^{-+i pi mu} K(z) -+ i pi I(z).
/// Throws DomainError for w = 0, w on the negative real axis, |mu| > 10.
cplx bessel_k_complex(double mu, cplx w);

/// Hankel function of the first kind via
///   H1_mu(z) = (2 / (i pi)) e^{-i pi mu / 2} K_mu(-i z),
/// for z != 0 with -pi/2 < arg z <= pi. A real negative z (either sign of zero
/// imaginary part) is read as arg z = pi.
cplx hankel1_complex(double mu, cplx z);

// ---------------------------------------------------------------------------
// Gauss hypergeometric function

struct HypParams {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;

    /// Throws ParamError when c is a non-positive integer or any value is not
    /// finite.
    void validate() const;
};

enum class Side { FromBelow, FromAbove };

/// A point x >= 1 on the cut together with the side the limit is taken from.
struct BranchPoint {
    double x = 1.0;
    Side side = Side::FromBelow;
};

/// 2F1(a, b; c; z) for z off the cut [1, inf).
///
/// |z| <= 0.8 uses the Maclaurin series; otherwise the cheapest of the maps
/// z/(z-1), 1-z, 1/z that lands inside radius 0.8, with the logarithmic
/// formulas when c-a-b or b-a is an integer. The few points where none of the
/// maps applies (around exp(+-i pi/3)) are reached by Taylor re-expansion of
/// the hypergeometric ODE about 0.5 +- 0.6i.
/// Throws ParamError for invalid c, CutError for real z >= 1.
cplx hyp2f1(const HypParams& p, cplx z);

/// Boundary value of 2F1 on the cut. FromBelow is lim_{d -> 0+} 2F1(x - i d).
/// At x = 1 returns the Gauss value Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b))
/// when c - a - b > 0 (or the polynomial value when the series terminates).
/// Throws DomainError for x < 1 or for x = 1 with a divergent series.
cplx hyp2f1_boundary(const HypParams& p, BranchPoint bp);

/// Remainder of the unit-normalised 2F1 with c = a + b + 1 around z = 1:
///
///   Gamma(a+1) Gamma(b+1) / Gamma(a+b+1) * 2F1(a, b; a+b+1; z)
///       = 1 + (1 - z) T(z),
///
/// returns T(z). Requires a > -1, b > -1 and |1 - z| < 1. `log_one_minus_z`
/// fixes the branch of ln(1 - z); pass the principal log off the cut and
/// ln|1 - x| + i pi for the from-below boundary value at x > 1.
cplx hyp2f1_unit_remainder(double a, double b, cplx one_minus_z, cplx log_one_minus_z);

namespace detail {

/// J_nu, Y_nu and their derivatives for nu >= 0, x > 0 (Steed / Temme).
struct BesselJY {
    double j;
    double y;
    double jp;
    double yp;
};
BesselJY bessel_jy(double nu, double x);

/// Coefficients used by Temme's series: gam1, gam2, 1/Gamma(1+x), 1/Gamma(1-x)
/// for |x| <= 1/2.
struct TemmeGammas {
    double gam1;
    double gam2;
    double gampl;
    double gammi;
};
TemmeGammas temme_gammas(double x);

/// Maclaurin series of 2F1; converges for |z| < 1, terminates when a or b is
/// a non-positive integer.
cplx hyp2f1_series(double a, double b, double c, cplx z);

}  // namespace detail

}  // namespace wsi::specfun
