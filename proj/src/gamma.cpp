#include "wsi/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "wsi/errors.hpp"

namespace wsi::specfun {

namespace {

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Taylor coefficients of 1/Gamma(z) about 0: 1/Gamma(z) = sum_k c[k] z^k.
constexpr std::array<double, 31> kRgammaTaylor = {
    0.0,
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
    -1.1812745704870201446e-9,
    1.0434267116911005105e-10,
    7.782263439905071254e-12,
    -3.6968056186422057082e-12,
    5.100370287454475979e-13,
    -2.0583260535665067832e-14,
    -5.3481225394230179824e-15,
    1.2267786282382607902e-15,
    -1.1812593016974587695e-16,
    1.1866922547516003326e-18,
    1.4123806553180317816e-18,
    -2.2987456844353702066e-19,
    1.7144063219273374334e-20};

double gamma_lanczos(double x) {
    // Gamma(x) for x >= 0.5.
    const double xm = x - 1.0;
    double acc = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) {
        acc += kLanczos[k] / (xm + static_cast<double>(k));
    }
    const double t = xm + kLanczosG + 0.5;
    // Split the power so that t^(xm+0.5) does not overflow before e^-t damps it.
    const double half = std::pow(t, 0.5 * (xm + 0.5));
    return std::sqrt(2.0 * pi) * half * (half * std::exp(-t)) * acc;
}

}  // namespace

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

double sin_pi(double x) {
    if (!std::isfinite(x)) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    double r = std::fmod(x, 2.0);  // (-2, 2)
    if (r < 0.0) {
        r += 2.0;
    }
    // r in [0, 2)
    if (r == 0.0 || r == 1.0) {
        return 0.0;
    }
    if (r == 0.5) {
        return 1.0;
    }
    if (r == 1.5) {
        return -1.0;
    }
    if (r <= 0.25) {
        return std::sin(pi * r);
    }
    if (r <= 0.75) {
        return std::cos(pi * (r - 0.5));
    }
    if (r <= 1.25) {
        return -std::sin(pi * (r - 1.0));
    }
    if (r <= 1.75) {
        return -std::cos(pi * (r - 1.5));
    }
    return std::sin(pi * (r - 2.0));
}

double cos_pi(double x) {
    return sin_pi(x + 0.5);
}

double gamma(double x) {
    if (std::isnan(x)) {
        return x;
    }
    if (is_nonpositive_integer(x)) {
        throw PoleError("gamma: pole at x = " + std::to_string(x));
    }
    if (x == std::floor(x) && x <= 23.0) {
        double f = 1.0;
        for (int k = 2; k < static_cast<int>(x); ++k) {
            f *= k;
        }
        return f;
    }
    if (x < 0.5) {
        return pi / (sin_pi(x) * gamma_lanczos(1.0 - x));
    }
    return gamma_lanczos(x);
}

double rgamma(double x) {
    if (is_nonpositive_integer(x)) {
        return 0.0;
    }
    return 1.0 / gamma(x);
}

double digamma(double x) {
    if (is_nonpositive_integer(x)) {
        throw PoleError("digamma: pole at x = " + std::to_string(x));
    }
    if (x < 0.0) {
        // psi(x) = psi(1 - x) - pi cot(pi x)
        return digamma(1.0 - x) - pi * cos_pi(x) / sin_pi(x);
    }
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // Asymptotic series with Bernoulli numbers B_2 .. B_14.
    const double tail =
        inv2 * (1.0 / 12.0 -
                inv2 * (1.0 / 120.0 -
                        inv2 * (1.0 / 252.0 -
                                inv2 * (1.0 / 240.0 -
                                        inv2 * (1.0 / 132.0 -
                                                inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
    return acc + std::log(x) - 0.5 * inv - tail;
}

namespace detail {

TemmeGammas temme_gammas(double x) {
    // 1/Gamma(1 + x) = sum_{k>=1} c_k x^{k-1}
    double even = 0.0;  // sum over even k of c_k x^{k-2}
    double odd = 0.0;   // sum over odd k of c_k x^{k-1}
    const double x2 = x * x;
    double pw = 1.0;
    for (std::size_t k = 1; k < kRgammaTaylor.size(); k += 2) {
        odd += kRgammaTaylor[k] * pw;
        if (k + 1 < kRgammaTaylor.size()) {
            even += kRgammaTaylor[k + 1] * pw;
        }
        pw *= x2;
    }
    TemmeGammas g{};
    g.gam1 = -even;
    g.gam2 = odd;
    g.gampl = odd + x * even;
    g.gammi = odd - x * even;
    return g;
}

}  // namespace detail

}  // namespace wsi::specfun
