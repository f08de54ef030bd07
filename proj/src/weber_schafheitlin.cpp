#include "wsi/weber_schafheitlin.hpp"

#include <cassert>
#include <cmath>
#include <sstream>
#include <string>

#include "wsi/errors.hpp"
#include "wsi/specfun.hpp"

namespace wsi::ws {

namespace {

using specfun::cos_pi;
using specfun::pi;
using specfun::sin_pi;

// Point inside the window where h is read off when asked for h(1).
constexpr double kUnitFill = 1.0 - 1e-6;

// The unit-normalised expansion is used for |1 - z| up to this value.
constexpr double kUnitWindow = 0.5;

const cplx kTwoOverIPi{0.0, -2.0 / pi};

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

// Argument of 2F1: either a point off the cut or a from-below boundary value.
struct HypArg {
    cplx z;
    bool boundary;
};

cplx eval_hyp(double a, double b, double c, const HypArg& arg) {
    const specfun::HypParams p{a, b, c};
    if (arg.boundary) {
        return specfun::hyp2f1_boundary(p, {arg.z.real(), specfun::Side::FromBelow});
    }
    return specfun::hyp2f1(p, arg.z);
}

// 2F1(a, b; c; z) / Gamma(c), continued through c = 0, -1, -2, ...
cplx regularized_hyp(double a, double b, double c, const HypArg& arg) {
    if (!specfun::is_nonpositive_integer(c)) {
        return specfun::rgamma(c) * eval_hyp(a, b, c, arg);
    }
    const int n = static_cast<int>(-c);
    double coef = 1.0;
    cplx zp = 1.0;
    for (int k = 0; k <= n; ++k) {
        coef *= (a + k) * (b + k) / (k + 1.0);
        zp *= arg.z;
    }
    return coef * zp * eval_hyp(a + n + 1, b + n + 1, n + 2.0, arg);
}

double gamma_pair(double a, double b) {
    return specfun::gamma(a + 1.0) * specfun::gamma(b + 1.0);
}

void require_positive(double s, const char* who) {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw DomainError(std::string(who) + ": requires s > 0");
    }
}

// (s^p - 1) / (s - 1), equal to p at s = 1.
double power_quotient(double s, double p) {
    if (s == 1.0) {
        return p;
    }
    return std::expm1(p * std::log(s)) / (s - 1.0);
}

// Prop-1 density without validation; also the s > 1 branch of m0.
cplx hankel_density(const OrderPair& o, double s) {
    const double a = 0.5 * (o.nu + o.mu);
    const double b = 0.5 * (o.nu - o.mu);
    const double x = 1.0 / (s * s);
    const HypArg arg{cplx{x, 0.0}, s <= 1.0};
    return std::pow(s, -o.nu - 1.0) * gamma_pair(a, b) * regularized_hyp(a, b, o.nu + 1.0, arg);
}

cplx hankel_remainder(const OrderPair& o, double s) {
    if (s == 1.0) {
        s = kUnitFill;
    }
    // w = 1 - s^-2
    const double w = (s - 1.0) * (s + 1.0) / (s * s);
    if (std::abs(w) > kUnitWindow) {
        return (hankel_density(o, s) - 1.0) / (s - 1.0);
    }
    const double a = 0.5 * (o.nu + o.mu);
    const double b = 0.5 * (o.nu - o.mu);
    // Below the cut for s < 1: arg(1 - z) = +pi.
    const cplx log_w = w < 0.0 ? cplx{std::log(-w), pi} : cplx{std::log(w), 0.0};
    const cplx t = specfun::hyp2f1_unit_remainder(a, b, cplx{w, 0.0}, log_w);
    return power_quotient(s, -o.nu - 1.0) + std::pow(s, -o.nu - 3.0) * (s + 1.0) * t;
}

double bessel_density(const OrderPair& o, double s) {
    if (s > 1.0) {
        return hankel_density(o, s).real();
    }
    const double a = 0.5 * (o.mu + o.nu);
    const double b = 0.5 * (o.mu - o.nu);
    const HypArg arg{cplx{s * s, 0.0}, s == 1.0};
    return (std::pow(s, o.mu - 1.0) * gamma_pair(a, b) * regularized_hyp(a, b, o.mu + 1.0, arg)).real();
}

double bessel_remainder(const OrderPair& o, double s) {
    if (s > 1.0) {
        return hankel_remainder(o, s).real();
    }
    if (s == 1.0) {
        s = kUnitFill;
    }
    // w = 1 - s^2
    const double w = (1.0 - s) * (1.0 + s);
    if (w > kUnitWindow) {
        return (bessel_density(o, s) - 1.0) / (s - 1.0);
    }
    const double a = 0.5 * (o.mu + o.nu);
    const double b = 0.5 * (o.mu - o.nu);
    const cplx t = specfun::hyp2f1_unit_remainder(a, b, cplx{w, 0.0}, cplx{std::log(w), 0.0});
    return power_quotient(s, o.mu - 1.0) - std::pow(s, o.mu - 1.0) * (1.0 + s) * t.real();
}

cplx hankel_delta(const OrderPair& o) {
    const double d = 0.5 * (o.nu - o.mu);
    return {cos_pi(d), sin_pi(d)};
}

double bessel_pv(const OrderPair& o) {
    return 2.0 / pi * sin_pi(0.5 * (o.nu - o.mu));
}

}  // namespace

void OrderPair::validate_hankel() const {
    if (!std::isfinite(mu) || !std::isfinite(nu)) {
        throw OrderError("orders must be finite");
    }
    if (!(nu + 2.0 > std::abs(mu))) {
        throw OrderError("order constraint nu + 2 > |mu| violated (mu = " + fmt(mu) + ", nu = " + fmt(nu) + ")");
    }
}

void OrderPair::validate_bessel() const {
    validate_hankel();
    if (!(mu + 2.0 > std::abs(nu))) {
        throw OrderError("order constraint mu + 2 > |nu| violated (mu = " + fmt(mu) + ", nu = " + fmt(nu) + ")");
    }
}

void RegularizedPoint::validate() const {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw DomainError("regularized point requires s > 0");
    }
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw DomainError("regularized point requires eps > 0");
    }
}

cplx k_transform(const OrderPair& orders, cplx z) {
    orders.validate_hankel();
    if (!(z.real() > 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("k_transform: requires Re z > 0");
    }
    const double a = 0.5 * (orders.nu + orders.mu);
    const double b = 0.5 * (orders.nu - orders.mu);
    const cplx arg = -1.0 / (z * z);
    return gamma_pair(a, b) * std::exp((-2.0 - orders.nu) * std::log(z)) *
           regularized_hyp(a + 1.0, b + 1.0, orders.nu + 1.0, {arg, false});
}

cplx regularized_I_via_k(const OrderPair& orders, const RegularizedPoint& pt) {
    orders.validate_hankel();
    pt.validate();
    const cplx rot{cos_pi(0.5 * orders.mu), -sin_pi(0.5 * orders.mu)};
    return kTwoOverIPi * rot * k_transform(orders, cplx{pt.eps, -pt.s});
}

cplx regularized_I(const OrderPair& orders, const RegularizedPoint& pt) {
    orders.validate_hankel();
    pt.validate();
    const double a = 0.5 * (orders.nu + orders.mu);
    const double b = 0.5 * (orders.nu - orders.mu);
    const cplx z{pt.s, pt.eps};
    const cplx zpow = std::exp(-orders.nu * std::log(z));
    const cplx denom = (1.0 - z * z) / pt.s;
    const cplx hyp = regularized_hyp(a, b, orders.nu + 1.0, {1.0 / (z * z), false});
    const cplx value = kTwoOverIPi * hankel_delta(orders) * (1.0 / pt.s) * zpow / denom * gamma_pair(a, b) * hyp;
#ifndef NDEBUG
    const cplx other = regularized_I_via_k(orders, pt);
    assert(std::abs(value - other) <= 1e-8 * std::max(1.0, std::abs(value)));
#endif
    return value;
}

cplx prop1_density(const OrderPair& orders, double s) {
    orders.validate_hankel();
    require_positive(s, "prop1_density");
    return hankel_density(orders, s);
}

cplx prop1_remainder(const OrderPair& orders, double s) {
    orders.validate_hankel();
    require_positive(s, "prop1_remainder");
    return hankel_remainder(orders, s);
}

double prop2_density(const OrderPair& orders, double s) {
    orders.validate_bessel();
    require_positive(s, "prop2_density");
    return bessel_density(orders, s);
}

double prop2_remainder(const OrderPair& orders, double s) {
    orders.validate_bessel();
    require_positive(s, "prop2_remainder");
    return bessel_remainder(orders, s);
}

dist::DistributionExpansion prop1_distribution(const OrderPair& orders, double alpha) {
    orders.validate_hankel();
    dist::DistributionExpansion d;
    d.delta_coeff = hankel_delta(orders);
    d.pv_coeff = kTwoOverIPi * d.delta_coeff;
    d.density = [orders](double s) { return hankel_density(orders, s); };
    d.remainder = [orders](double s) { return hankel_remainder(orders, s); };
    d.alpha = alpha;
    return d;
}

dist::DistributionExpansion prop2_distribution(const OrderPair& orders, double alpha) {
    orders.validate_bessel();
    dist::DistributionExpansion d;
    d.delta_coeff = cos_pi(0.5 * (orders.nu - orders.mu));
    d.pv_coeff = bessel_pv(orders);
    d.density = [orders](double s) { return cplx{bessel_density(orders, s), 0.0}; };
    d.remainder = [orders](double s) { return cplx{bessel_remainder(orders, s), 0.0}; };
    d.alpha = alpha;
    return d;
}

double reflection_check(const OrderPair& orders, double s) {
    orders.validate_bessel();
    require_positive(s, "reflection_check");
    if (s == 1.0) {
        throw DomainError("reflection_check: s = 1 carries the singular part");
    }
    const OrderPair swapped{orders.nu, orders.mu};
    const double direct = bessel_pv(orders) * bessel_density(orders, s) / (1.0 / s - s);
    const double t = 1.0 / s;
    const double mirrored = bessel_pv(swapped) * bessel_density(swapped, t) / (1.0 / t - t) / (s * s);
    return std::abs(direct - mirrored);
}

}  // namespace wsi::ws
