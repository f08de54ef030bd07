#include <cmath>
#include <limits>
#include <string>

#include "wsi/errors.hpp"
#include "wsi/specfun.hpp"

namespace wsi::specfun {

namespace {

constexpr double kEps = 1e-16;
constexpr double kFpMin = 1e-300;
constexpr int kMaxIter = 100000;

// Temme's series is used below this |x|, Steed's CF2 above (both for J/Y and
// for K). Both are accurate to a few ulps on either side.
constexpr double kTemmeMax = 2.0;

// J_nu by Hankel's expansion when x >= max(kJAsymptoticMin, nu^2). The
// smallest term of the expansion is then below 1e-17 for every nu <= 50.
constexpr double kJAsymptoticMin = 25.0;

constexpr double kMaxRealOrder = 50.0;
constexpr double kMaxComplexOrder = 10.0;

double j_series(double nu, double x) {
    // (x/2)^nu / Gamma(nu+1) * sum_k (-x^2/4)^k / (k! (nu+1)_k)
    const double y = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 500; ++k) {
        term *= -y / (k * (nu + k));
        sum += term;
        if (std::abs(term) <= kEps * std::abs(sum)) {
            break;
        }
    }
    const double lead = (nu == 0.0) ? 1.0 : std::exp(nu * std::log(0.5 * x)) * rgamma(nu + 1.0);
    return lead * sum;
}

double j_asymptotic(double nu, double x) {
    const double mu4 = 4.0 * nu * nu;
    const double inv8x = 1.0 / (8.0 * x);
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = term * (mu4 - odd * odd) * inv8x / k;
        if (std::abs(next) > last) {
            break;  // asymptotic series starts to diverge
        }
        term = next;
        last = std::abs(term);
        switch (k % 4) {
            case 1: q += term; break;
            case 2: p -= term; break;
            case 3: q -= term; break;
            default: p += term; break;
        }
        if (last < 1e-17 * std::abs(p)) {
            break;
        }
    }
    // chi = x - (nu/2 + 1/4) pi; expand cos(x - phi) to keep the reduction of x exact.
    const double phi = 0.5 * nu + 0.25;
    const double cx = std::cos(x);
    const double sx = std::sin(x);
    const double cphi = cos_pi(phi);
    const double sphi = sin_pi(phi);
    const double cchi = cx * cphi + sx * sphi;
    const double schi = sx * cphi - cx * sphi;
    return std::sqrt(2.0 / (pi * x)) * (p * cchi - q * schi);
}

double j_nonnegative(double nu, double x) {
    if (x * x <= 4.0 * (nu + 1.0)) {
        return j_series(nu, x);
    }
    if (x >= std::max(kJAsymptoticMin, nu * nu)) {
        return j_asymptotic(nu, x);
    }
    return detail::bessel_jy(nu, x).j;
}

// K_nu and K_{nu+1} at x (Re x >= 0), optionally with I_nu. Complex
// transcription of Temme's method (|x| < 2) and Steed's CF2 (|x| >= 2).
struct IK {
    cplx i;
    cplx k;
};

IK bessel_ik_right(double nu, cplx x, bool need_i) {
    const int nl = static_cast<int>(nu + 0.5);
    const double xmu = nu - nl;
    const double xmu2 = xmu * xmu;
    const cplx xi = 1.0 / x;
    const cplx xi2 = 2.0 * xi;

    cplx f_ratio{};
    cplx ril{kFpMin, 0.0};
    cplx ril1 = ril;
    if (need_i) {
        // CF1: I'_nu / I_nu
        cplx h = nu * xi;
        if (std::abs(h) < kFpMin) {
            h = kFpMin;
        }
        cplx b = xi2 * nu;
        cplx d = 0.0;
        cplx c = h;
        int it = 1;
        for (; it <= kMaxIter; ++it) {
            b += xi2;
            d = b + d;
            if (std::abs(d) < kFpMin) {
                d = kFpMin;
            }
            d = 1.0 / d;
            c = b + 1.0 / c;
            if (std::abs(c) < kFpMin) {
                c = kFpMin;
            }
            const cplx del = c * d;
            h *= del;
            if (std::abs(del - 1.0) < kEps) {
                break;
            }
        }
        if (it > kMaxIter) {
            throw NonConvergence("bessel_k_complex: CF1 did not converge");
        }
        cplx ripl = h * ril;
        cplx fact = nu * xi;
        for (int l = nl; l >= 1; --l) {
            const cplx ritemp = fact * ril + ripl;
            fact -= xi;
            ripl = fact * ritemp + ril;
            ril = ritemp;
        }
        f_ratio = ripl / ril;
    }

    cplx rkmu;
    cplx rk1;
    if (std::abs(x) < kTemmeMax) {
        const cplx x2 = 0.5 * x;
        const double pimu = pi * xmu;
        const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
        cplx d = -std::log(x2);
        cplx e = xmu * d;
        const cplx fact2 = std::abs(e) < kEps ? cplx(1.0) : std::sinh(e) / e;
        const auto g = detail::temme_gammas(xmu);
        cplx ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
        cplx sum = ff;
        e = std::exp(e);
        cplx p = 0.5 * e / g.gampl;
        cplx q = 0.5 / (e * g.gammi);
        cplx c = 1.0;
        d = x2 * x2;
        cplx sum1 = p;
        int i = 1;
        for (; i <= kMaxIter; ++i) {
            const double di = i;
            ff = (di * ff + p + q) / (di * di - xmu2);
            c *= d / di;
            p /= (di - xmu);
            q /= (di + xmu);
            const cplx del = c * ff;
            sum += del;
            sum1 += c * (p - di * ff);
            if (std::abs(del) < std::abs(sum) * kEps) {
                break;
            }
        }
        if (i > kMaxIter) {
            throw NonConvergence("bessel_k_complex: Temme series did not converge");
        }
        rkmu = sum;
        rk1 = sum1 * xi2;
    } else {
        cplx b = 2.0 * (1.0 + x);
        cplx d = 1.0 / b;
        cplx h = d;
        cplx delh = d;
        cplx q1 = 0.0;
        cplx q2 = 1.0;
        const double a1 = 0.25 - xmu2;
        cplx q = a1;
        double c = a1;
        double a = -a1;
        cplx s = 1.0 + q * delh;
        int i = 2;
        for (; i <= kMaxIter; ++i) {
            a -= 2.0 * (i - 1);
            c = -a * c / i;
            const cplx qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh = (b * d - 1.0) * delh;
            h += delh;
            const cplx dels = q * delh;
            s += dels;
            if (std::abs(dels) < kEps * std::abs(s)) {
                break;
            }
        }
        if (i > kMaxIter) {
            throw NonConvergence("bessel_k_complex: CF2 did not converge");
        }
        h = a1 * h;
        rkmu = std::sqrt(pi / (2.0 * x)) * std::exp(-x) / s;
        rk1 = rkmu * (xmu + x + 0.5 - h) * xi;
    }

    IK out{};
    if (need_i) {
        const cplx rkmup = xmu * xi * rkmu - rk1;
        const cplx rimu = xi / (f_ratio * rkmu - rkmup);
        out.i = rimu * ril1 / ril;
    }
    for (int i = 1; i <= nl; ++i) {
        const cplx rktemp = (xmu + i) * xi2 * rk1 + rkmu;
        rkmu = rk1;
        rk1 = rktemp;
    }
    out.k = rkmu;
    return out;
}

}  // namespace

namespace detail {

BesselJY bessel_jy(double nu, double x) {
    if (!(x > 0.0) || nu < 0.0) {
        throw DomainError("bessel_jy: requires x > 0 and nu >= 0");
    }
    const int nl = x < kTemmeMax ? static_cast<int>(nu + 0.5)
                                 : std::max(0, static_cast<int>(nu - x + 1.5));
    const double xmu = nu - nl;
    const double xmu2 = xmu * xmu;
    const double xi = 1.0 / x;
    const double xi2 = 2.0 * xi;
    const double w = xi2 / pi;

    // CF1: J'_nu / J_nu
    int isign = 1;
    double h = nu * xi;
    if (h < kFpMin) {
        h = kFpMin;
    }
    double b = xi2 * nu;
    double d = 0.0;
    double c = h;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
        b += xi2;
        d = b - d;
        if (std::abs(d) < kFpMin) {
            d = kFpMin;
        }
        c = b - 1.0 / c;
        if (std::abs(c) < kFpMin) {
            c = kFpMin;
        }
        d = 1.0 / d;
        const double del = c * d;
        h *= del;
        if (d < 0.0) {
            isign = -isign;
        }
        if (std::abs(del - 1.0) < kEps) {
            break;
        }
    }
    if (i > kMaxIter) {
        throw NonConvergence("bessel_jy: CF1 did not converge");
    }

    double rjl = isign * kFpMin;
    double rjpl = h * rjl;
    const double rjl1 = rjl;
    const double rjp1 = rjpl;
    double fact = nu * xi;
    for (int l = nl; l >= 1; --l) {
        const double rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if (rjl == 0.0) {
        rjl = kEps;
    }
    const double f = rjpl / rjl;

    double rjmu;
    double rymu;
    double ry1;
    if (x < kTemmeMax) {
        const double x2 = 0.5 * x;
        const double pimu = pi * xmu;
        const double fct = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
        double dd = -std::log(x2);
        double e = xmu * dd;
        const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
        const auto g = temme_gammas(xmu);
        double ff = 2.0 / pi * fct * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * dd);
        e = std::exp(e);
        double p = e / (g.gampl * pi);
        double q = 1.0 / (e * pi * g.gammi);
        const double pimu2 = 0.5 * pimu;
        const double fact3 = std::abs(pimu2) < kEps ? 1.0 : std::sin(pimu2) / pimu2;
        const double r = pi * pimu2 * fact3 * fact3;
        double cc = 1.0;
        dd = -x2 * x2;
        double sum = ff + r * q;
        double sum1 = p;
        int k = 1;
        for (; k <= kMaxIter; ++k) {
            const double dk = k;
            ff = (dk * ff + p + q) / (dk * dk - xmu2);
            cc *= dd / dk;
            p /= (dk - xmu);
            q /= (dk + xmu);
            const double del = cc * (ff + r * q);
            sum += del;
            sum1 += cc * p - dk * del;
            if (std::abs(del) < (1.0 + std::abs(sum)) * kEps) {
                break;
            }
        }
        if (k > kMaxIter) {
            throw NonConvergence("bessel_jy: Temme series did not converge");
        }
        rymu = -sum;
        ry1 = -sum1 * xi2;
        const double rymup = xmu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        // CF2: p + iq = (J' + iY') / (J + iY)
        double a = 0.25 - xmu2;
        cplx pq{-0.5 * xi, 1.0};
        cplx bb{2.0 * x, 2.0};
        cplx cc = bb + cplx{0.0, a * xi} / pq;
        cplx dd = 1.0 / bb;
        cplx dl = cc * dd;
        pq *= dl;
        int k = 2;
        for (; k <= kMaxIter; ++k) {
            a += 2.0 * (k - 1);
            bb += cplx{0.0, 2.0};
            dd = a * dd + bb;
            if (std::abs(dd) < kFpMin) {
                dd = kFpMin;
            }
            cc = bb + a / cc;
            if (std::abs(cc) < kFpMin) {
                cc = kFpMin;
            }
            dd = 1.0 / dd;
            dl = cc * dd;
            pq *= dl;
            if (std::abs(dl - 1.0) < kEps) {
                break;
            }
        }
        if (k > kMaxIter) {
            throw NonConvergence("bessel_jy: CF2 did not converge");
        }
        const double p = pq.real();
        const double q = pq.imag();
        const double gam = (p - f) / q;
        rjmu = std::sqrt(w / ((p - f) * gam + q));
        rjmu = std::copysign(rjmu, rjl);
        rymu = rjmu * gam;
        const double rymup = rymu * (p + q / gam);
        ry1 = xmu * xi * rymu - rymup;
    }

    const double scale = rjmu / rjl;
    BesselJY out{};
    out.j = rjl1 * scale;
    out.jp = rjp1 * scale;
    for (int k = 1; k <= nl; ++k) {
        const double rytemp = (xmu + k) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    out.y = rymu;
    out.yp = nu * xi * rymu - ry1;
    return out;
}

}  // namespace detail

double bessel_j(double nu, double x) {
    if (!(x > 0.0)) {
        throw DomainError("bessel_j: requires x > 0, got " + std::to_string(x));
    }
    if (!(std::abs(nu) <= kMaxRealOrder)) {
        throw DomainError("bessel_j: |nu| must not exceed 50");
    }
    if (nu >= 0.0) {
        return j_nonnegative(nu, x);
    }
    const double a = -nu;
    if (a == std::floor(a)) {
        const double v = j_nonnegative(a, x);
        return std::fmod(a, 2.0) == 0.0 ? v : -v;
    }
    if (x * x <= 4.0 * (nu + 1.0) && nu + 1.0 > 0.0) {
        return j_series(nu, x);
    }
    if (x >= std::max(kJAsymptoticMin, a * a)) {
        // Hankel's expansion depends on nu only through nu^2 and the phase.
        return j_asymptotic(nu, x);
    }
    const auto jy = detail::bessel_jy(a, x);
    return cos_pi(a) * jy.j - sin_pi(a) * jy.y;
}

cplx bessel_k_complex(double mu, cplx w) {
    if (!(std::abs(mu) <= kMaxComplexOrder)) {
        throw DomainError("bessel_k_complex: |mu| must not exceed 10");
    }
    if (w == cplx(0.0, 0.0) || (w.imag() == 0.0 && w.real() < 0.0)) {
        throw DomainError("bessel_k_complex: w must be nonzero and off the negative real axis");
    }
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        throw DomainError("bessel_k_complex: non-finite argument");
    }
    const double nu = std::abs(mu);
    if (w.real() >= 0.0) {
        return bessel_ik_right(nu, w, false).k;
    }
    // w = z e^{i sigma pi} with Re z > 0.
    const cplx z = -w;
    const double sigma = w.imag() > 0.0 ? 1.0 : -1.0;
    const IK ik = bessel_ik_right(nu, z, true);
    const cplx rot{cos_pi(nu), -sigma * sin_pi(nu)};
    return rot * ik.k - cplx{0.0, sigma * pi} * ik.i;
}

cplx hankel1_complex(double mu, cplx z) {
    if (z == cplx(0.0, 0.0)) {
        throw DomainError("hankel1_complex: z must be nonzero");
    }
    const bool negative_real = z.imag() == 0.0 && z.real() < 0.0;
    if (!negative_real && !(std::arg(z) > -0.5 * pi)) {
        throw DomainError("hankel1_complex: requires -pi/2 < arg z <= pi");
    }
    // -i z, with the negative real axis mapped onto the positive imaginary axis.
    const cplx w = negative_real ? cplx{0.0, -z.real()} : cplx{z.imag(), -z.real()};
    const cplx pref = cplx{0.0, -2.0 / pi} * cplx{cos_pi(0.5 * mu), -sin_pi(0.5 * mu)};
    return pref * bessel_k_complex(mu, w);
}

}  // namespace wsi::specfun
