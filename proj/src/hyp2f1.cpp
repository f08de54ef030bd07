#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "wsi/errors.hpp"
#include "wsi/specfun.hpp"

namespace wsi::specfun {

namespace {

constexpr double kEps = 1e-17;
constexpr int kMaxTerms = 20000;

// Every transformed variable handed to the Maclaurin series has modulus at
// most this value.
constexpr double kSeriesRadius = 0.8;

// Parameter combinations closer than this to an integer use the logarithmic
// connection formulas.
constexpr double kIntegerTol = 1e-13;

// Expansion point for the Taylor re-expansion used near exp(+-i pi/3), where
// none of the standard maps reaches inside kSeriesRadius. |z0| = 0.781.
constexpr double kTaylorRe = 0.5;
constexpr double kTaylorIm = 0.6;

// Values of 1 - z, ln(1 - z) and ln(-z) on the branch being evaluated.
struct Branch {
    cplx one_minus_z;
    cplx log_one_minus_z;
    cplx log_minus_z;
};

Branch principal_branch(cplx z) {
    return {1.0 - z, std::log(1.0 - z), std::log(-z)};
}

bool nearest_integer(double x, long& n) {
    const double r = std::round(x);
    if (std::abs(x - r) <= kIntegerTol * std::max(1.0, std::abs(x))) {
        n = static_cast<long>(r);
        return true;
    }
    return false;
}

bool terminates(double a, double b) {
    return is_nonpositive_integer(a) || is_nonpositive_integer(b);
}

double factorial(long n) {
    double f = 1.0;
    for (long k = 2; k <= n; ++k) {
        f *= static_cast<double>(k);
    }
    return f;
}

// psi(x) / Gamma(x), continuous through the poles of Gamma.
double psi_rgamma(double x) {
    if (is_nonpositive_integer(x)) {
        const long n = static_cast<long>(-x);
        return (n % 2 == 0 ? -1.0 : 1.0) * factorial(n);
    }
    return digamma(x) * rgamma(x);
}

// c - a - b = m >= 0 (integer), expansion in w = 1 - z.
cplx one_minus_z_integer(double a, double b, double c, long m, const Branch& br) {
    const cplx w = br.one_minus_z;
    const cplx lw = br.log_one_minus_z;

    cplx finite = 0.0;
    if (m > 0) {
        cplx t = factorial(m - 1);
        for (long k = 0; k < m; ++k) {
            finite += t;
            if (k + 1 < m) {
                t *= (a + k) * (b + k) / (static_cast<double>(k + 1) * static_cast<double>(m - k - 1)) *
                     (-w);
            }
        }
        finite *= rgamma(a + m) * rgamma(b + m);
    }

    double p1 = -euler_gamma;              // psi(k + 1)
    double p2 = digamma(static_cast<double>(m + 1));  // psi(k + m + 1)
    double pa = digamma(a + m);            // psi(a + k + m)
    double pb = digamma(b + m);            // psi(b + k + m)
    cplx coef = 1.0 / factorial(m);
    cplx sum = 0.0;
    int small = 0;
    int k = 0;
    for (; k < kMaxTerms; ++k) {
        const cplx term = coef * (lw - p1 - p2 + pa + pb);
        sum += term;
        const double mag = std::abs(coef) * (std::abs(lw) + std::abs(p1) + std::abs(p2) + std::abs(pa) + std::abs(pb));
        small = (mag <= kEps * std::abs(sum)) ? small + 1 : 0;
        if (small >= 2 || coef == 0.0) {
            break;
        }
        const double kk = k;
        coef *= (a + m + kk) * (b + m + kk) / ((kk + 1.0) * (kk + m + 1.0)) * w;
        p1 += 1.0 / (kk + 1.0);
        p2 += 1.0 / (kk + m + 1.0);
        pa += 1.0 / (a + m + kk);
        pb += 1.0 / (b + m + kk);
    }
    if (k >= kMaxTerms) {
        throw NonConvergence("hyp2f1: logarithmic 1-z expansion did not converge");
    }
    cplx wm = 1.0;
    for (long j = 0; j < m; ++j) {
        wm *= -w;
    }
    return gamma(c) * (finite - wm * rgamma(a) * rgamma(b) * sum);
}

cplx one_minus_z_transform(double a, double b, double c, const Branch& br) {
    const double s = c - a - b;
    long m = 0;
    if (nearest_integer(s, m)) {
        if (m < 0) {
            // Euler: F(a,b;c;z) = (1-z)^{c-a-b} F(c-a, c-b; c; z)
            return std::exp(static_cast<double>(m) * br.log_one_minus_z) *
                   one_minus_z_integer(c - a, c - b, c, -m, br);
        }
        return one_minus_z_integer(a, b, c, m, br);
    }
    const cplx w = br.one_minus_z;
    const double gc = gamma(c);
    cplx out = 0.0;
    const double k1 = gc * gamma(s) * rgamma(c - a) * rgamma(c - b);
    if (k1 != 0.0) {
        out += k1 * detail::hyp2f1_series(a, b, 1.0 - s, w);
    }
    const double k2 = gc * gamma(-s) * rgamma(a) * rgamma(b);
    if (k2 != 0.0) {
        out += k2 * std::exp(s * br.log_one_minus_z) * detail::hyp2f1_series(c - a, c - b, 1.0 + s, w);
    }
    return out;
}

// b = a + m, m >= 0 (integer), expansion in 1/z.
cplx inverse_z_integer(double a, long m, double c, cplx z, const Branch& br) {
    const cplx iz = 1.0 / z;
    const cplx l0 = br.log_minus_z;

    cplx finite = 0.0;
    if (m > 0) {
        cplx t = factorial(m - 1);
        for (long k = 0; k < m; ++k) {
            finite += t * rgamma(c - a - k);
            if (k + 1 < m) {
                t *= (a + k) / (static_cast<double>(k + 1) * static_cast<double>(m - k - 1)) * iz;
            }
        }
        finite *= rgamma(a + m);
    }

    // A_k = e_k / Gamma(x_k), B_k = e_k psi(x_k) / Gamma(x_k), x_k = c - a - m - k,
    // e_k = (a+m)_k / (k! (k+m)!) (-1/z)^k z^{-m}.
    double x = c - a - m;
    cplx izm = 1.0;
    for (long j = 0; j < m; ++j) {
        izm *= iz;
    }
    const double e0 = 1.0 / factorial(m);
    cplx big_a = e0 * izm * rgamma(x);
    cplx big_b = e0 * izm * psi_rgamma(x);
    double p1 = -euler_gamma;                          // psi(1 + k)
    double p2 = digamma(static_cast<double>(m + 1));   // psi(1 + m + k)
    double pa = digamma(a + m);                        // psi(a + m + k)
    cplx sum = 0.0;
    int small = 0;
    int k = 0;
    for (; k < kMaxTerms; ++k) {
        const cplx term = big_a * (l0 + p2 + p1 - pa) - big_b;
        sum += term;
        const double mag = std::abs(big_a) * (std::abs(l0) + std::abs(p1) + std::abs(p2) + std::abs(pa)) +
                           std::abs(big_b);
        small = (mag <= kEps * std::abs(sum)) ? small + 1 : 0;
        if (small >= 2 || (big_a == 0.0 && big_b == 0.0)) {
            break;
        }
        const double kk = k;
        const cplx r = (a + m + kk) / ((kk + 1.0) * (kk + m + 1.0)) * (-iz);
        const double xm1 = x - 1.0;
        const cplx next_b = r * (xm1 * big_b - big_a);
        big_a = r * xm1 * big_a;
        big_b = next_b;
        x = xm1;
        p1 += 1.0 / (kk + 1.0);
        p2 += 1.0 / (kk + m + 1.0);
        pa += 1.0 / (a + m + kk);
    }
    if (k >= kMaxTerms) {
        throw NonConvergence("hyp2f1: logarithmic 1/z expansion did not converge");
    }
    return gamma(c) * std::exp(-a * l0) * (finite + rgamma(a) * sum);
}

cplx inverse_z_transform(double a, double b, double c, cplx z, const Branch& br) {
    long m = 0;
    if (nearest_integer(b - a, m)) {
        if (m < 0) {
            std::swap(a, b);
            m = -m;
        }
        return inverse_z_integer(a, m, c, z, br);
    }
    const cplx iz = 1.0 / z;
    const double gc = gamma(c);
    cplx out = 0.0;
    const double k1 = gc * gamma(b - a) * rgamma(b) * rgamma(c - a);
    if (k1 != 0.0) {
        out += k1 * std::exp(-a * br.log_minus_z) * detail::hyp2f1_series(a, 1.0 - c + a, 1.0 - b + a, iz);
    }
    const double k2 = gc * gamma(a - b) * rgamma(a) * rgamma(c - b);
    if (k2 != 0.0) {
        out += k2 * std::exp(-b * br.log_minus_z) * detail::hyp2f1_series(b, 1.0 - c + b, 1.0 - a + b, iz);
    }
    return out;
}

cplx taylor_continuation(double a, double b, double c, cplx z) {
    const cplx z0{kTaylorRe, z.imag() >= 0.0 ? kTaylorIm : -kTaylorIm};
    const cplx f0 = detail::hyp2f1_series(a, b, c, z0);
    const cplx f1 = a * b / c * detail::hyp2f1_series(a + 1.0, b + 1.0, c + 1.0, z0);
    const cplx t = z - z0;
    const cplx p0 = z0 * (1.0 - z0);
    const cplx p1 = 1.0 - 2.0 * z0;
    const cplx q0 = c - (a + b + 1.0) * z0;
    const double q1 = -(a + b + 1.0);
    // e_n = d_n t^n for the Taylor coefficients d_n of F about z0.
    cplx e0 = f0;
    cplx e1 = f1 * t;
    cplx sum = e0 + e1;
    int small = 0;
    int n = 0;
    for (; n < kMaxTerms; ++n) {
        const double dn = n;
        const cplx e2 = -((p1 * (dn * (dn + 1.0)) + q0 * (dn + 1.0)) * e1 * t +
                          (-dn * (dn - 1.0) + q1 * dn - a * b) * e0 * t * t) /
                        (p0 * ((dn + 1.0) * (dn + 2.0)));
        sum += e2;
        small = (std::abs(e2) <= kEps * std::abs(sum)) ? small + 1 : 0;
        if (small >= 3) {
            break;
        }
        e0 = e1;
        e1 = e2;
    }
    if (n >= kMaxTerms) {
        throw NonConvergence("hyp2f1: Taylor re-expansion did not converge");
    }
    return sum;
}

cplx evaluate_off_cut(double a, double b, double c, cplx z) {
    if (z == cplx(0.0, 0.0)) {
        return 1.0;
    }
    if (terminates(a, b)) {
        return detail::hyp2f1_series(a, b, c, z);
    }
    if (terminates(c - a, c - b)) {
        return std::exp((c - a - b) * std::log(1.0 - z)) * detail::hyp2f1_series(c - a, c - b, c, z);
    }
    const double r_direct = std::abs(z);
    const double r_pfaff = std::abs(z / (z - 1.0));
    const double r_one_minus = std::abs(1.0 - z);
    const double r_inverse = 1.0 / r_direct;
    const double best = std::min({r_direct, r_pfaff, r_one_minus, r_inverse});

    if (best > kSeriesRadius) {
        return taylor_continuation(a, b, c, z);
    }
    if (best == r_direct) {
        return detail::hyp2f1_series(a, b, c, z);
    }
    if (best == r_pfaff) {
        return std::exp(-a * std::log(1.0 - z)) * detail::hyp2f1_series(a, c - b, c, z / (z - 1.0));
    }
    const Branch br = principal_branch(z);
    if (best == r_one_minus) {
        return one_minus_z_transform(a, b, c, br);
    }
    return inverse_z_transform(a, b, c, z, br);
}

cplx boundary_from_below(double a, double b, double c, double x) {
    if (terminates(a, b)) {
        return detail::hyp2f1_series(a, b, c, cplx{x, 0.0});
    }
    const double s = c - a - b;
    if (x == 1.0) {
        if (terminates(c - a, c - b) && s == 0.0) {
            return detail::hyp2f1_series(c - a, c - b, c, cplx{1.0, 0.0});
        }
        if (!(s > 0.0)) {
            throw DomainError("hyp2f1_boundary: series diverges at z = 1 (c - a - b <= 0)");
        }
        return gamma(c) * gamma(s) * rgamma(c - a) * rgamma(c - b);
    }
    // z = x - i0: 1 - z = (1 - x) + i0 and -z = -x + i0.
    const Branch br{cplx{1.0 - x, 0.0}, cplx{std::log(x - 1.0), pi}, cplx{std::log(x), pi}};
    if (terminates(c - a, c - b)) {
        return std::exp(s * br.log_one_minus_z) * detail::hyp2f1_series(c - a, c - b, c, cplx{x, 0.0});
    }
    if (x - 1.0 <= 1.0 / x) {
        return one_minus_z_transform(a, b, c, br);
    }
    return inverse_z_transform(a, b, c, cplx{x, 0.0}, br);
}

}  // namespace

void HypParams::validate() const {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
        throw ParamError("hyp2f1: parameters must be finite");
    }
    if (is_nonpositive_integer(c)) {
        throw ParamError("hyp2f1: c must not be a non-positive integer (c = " + std::to_string(c) + ")");
    }
}

namespace detail {

cplx hyp2f1_series(double a, double b, double c, cplx z) {
    cplx term = 1.0;
    cplx sum = 1.0;
    int small = 0;
    for (int n = 0; n < kMaxTerms; ++n) {
        const double dn = n;
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        sum += term;
        if (term == 0.0) {
            return sum;
        }
        small = (std::abs(term) <= kEps * std::abs(sum)) ? small + 1 : 0;
        if (small >= 2) {
            return sum;
        }
    }
    throw NonConvergence("hyp2f1: Maclaurin series did not converge");
}

}  // namespace detail

cplx hyp2f1(const HypParams& p, cplx z) {
    p.validate();
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("hyp2f1: non-finite argument");
    }
    if (z.imag() == 0.0 && z.real() >= 1.0) {
        throw CutError("hyp2f1: z lies on the cut [1, inf); use hyp2f1_boundary");
    }
    return evaluate_off_cut(p.a, p.b, p.c, z);
}

cplx hyp2f1_boundary(const HypParams& p, BranchPoint bp) {
    p.validate();
    if (!(bp.x >= 1.0) || !std::isfinite(bp.x)) {
        throw DomainError("hyp2f1_boundary: requires x >= 1");
    }
    const cplx below = boundary_from_below(p.a, p.b, p.c, bp.x);
    return bp.side == Side::FromBelow ? below : std::conj(below);
}

cplx hyp2f1_unit_remainder(double a, double b, cplx one_minus_z, cplx log_one_minus_z) {
    if (!(a > -1.0) || !(b > -1.0)) {
        throw DomainError("hyp2f1_unit_remainder: requires a > -1 and b > -1");
    }
    if (!(std::abs(one_minus_z) < 1.0)) {
        throw DomainError("hyp2f1_unit_remainder: requires |1 - z| < 1");
    }
    if (a == 0.0 || b == 0.0) {
        return 0.0;
    }
    // a b sum_k (a+1)_k (b+1)_k / (k! (k+1)!) w^k
    //     [ln w - psi(k+1) - psi(k+2) + psi(a+k+1) + psi(b+k+1)]
    double p1 = -euler_gamma;
    double p2 = 1.0 - euler_gamma;
    double pa = digamma(a + 1.0);
    double pb = digamma(b + 1.0);
    cplx coef = 1.0;
    cplx sum = 0.0;
    int small = 0;
    int k = 0;
    for (; k < kMaxTerms; ++k) {
        const cplx term = coef * (log_one_minus_z - p1 - p2 + pa + pb);
        sum += term;
        const double mag =
            std::abs(coef) * (std::abs(log_one_minus_z) + std::abs(p1) + std::abs(p2) + std::abs(pa) + std::abs(pb));
        small = (mag <= kEps * std::abs(sum)) ? small + 1 : 0;
        if (small >= 2 || coef == 0.0) {
            break;
        }
        const double kk = k;
        coef *= (a + 1.0 + kk) * (b + 1.0 + kk) / ((kk + 1.0) * (kk + 2.0)) * one_minus_z;
        p1 += 1.0 / (kk + 1.0);
        p2 += 1.0 / (kk + 2.0);
        pa += 1.0 / (a + 1.0 + kk);
        pb += 1.0 / (b + 1.0 + kk);
    }
    if (k >= kMaxTerms) {
        throw NonConvergence("hyp2f1_unit_remainder: series did not converge");
    }
    return a * b * sum;
}

}  // namespace wsi::specfun
