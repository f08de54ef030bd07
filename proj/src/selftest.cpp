#include "wsi/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

#include "wsi/errors.hpp"
#include "wsi/oracle.hpp"
#include "wsi/specfun.hpp"

namespace wsi::selftest {

namespace {

using cplx = std::complex<double>;

struct Check {
    const char* module;
    const char* name;
    double threshold;
    std::function<double()> measure;
};

double rel(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

const std::vector<ws::OrderPair>& bessel_orders() {
    static const std::vector<ws::OrderPair> v = {{0, 0}, {0, 1}, {1, 2}, {0.5, 1.5}, {1, 1}, {2, 1}};
    return v;
}

std::vector<Check> build() {
    std::vector<Check> c;
    c.push_back({"specfun", "gamma_recurrence", 1e-13, [] {
                     double worst = 0.0;
                     for (double x = -9.75; x < 20.0; x += 0.37) {
                         const double lhs = specfun::gamma(x + 1.0);
                         worst = std::max(worst, std::abs(lhs - x * specfun::gamma(x)) / std::abs(lhs));
                     }
                     return worst;
                 }});
    c.push_back({"specfun", "bessel_half_integer", 1e-11, [] {
                     double worst = 0.0;
                     for (double x = 0.1; x < 40.0; x *= 1.3) {
                         const double want = std::sqrt(2.0 / (specfun::pi * x)) * std::sin(x);
                         worst = std::max(worst, std::abs(specfun::bessel_j(0.5, x) - want));
                     }
                     return worst;
                 }});
    c.push_back({"specfun", "k_half_integer", 1e-10, [] {
                     double worst = 0.0;
                     for (const cplx w : {cplx{0.3, 0.2}, cplx{2.5, -1.0}, cplx{7.0, 4.0}, cplx{0.05, -0.01}}) {
                         const cplx want = std::sqrt(specfun::pi / (2.0 * w)) * std::exp(-w);
                         worst = std::max(worst, std::abs(specfun::bessel_k_complex(0.5, w) - want) / std::abs(want));
                     }
                     return worst;
                 }});
    c.push_back({"specfun", "hyp2f1_euler_shift", 1e-10, [] {
                     double worst = 0.0;
                     for (const auto& o : bessel_orders()) {
                         const double a = 0.5 * (o.nu + o.mu);
                         const double b = 0.5 * (o.nu - o.mu);
                         for (double z = -4.9; z <= 0.95; z += 0.35) {
                             const cplx lhs = specfun::hyp2f1({a + 1, b + 1, o.nu + 1}, z) * (1.0 - z);
                             worst = std::max(worst, rel(lhs, specfun::hyp2f1({a, b, o.nu + 1}, z)));
                         }
                     }
                     return worst;
                 }});
    c.push_back({"specfun", "hyp2f1_conjugation", 1e-13, [] {
                     double worst = 0.0;
                     for (const cplx z : {cplx{0.4, 0.7}, cplx{1.5, 0.3}, cplx{-3.0, 2.0}, cplx{0.5, 0.9}}) {
                         const specfun::HypParams p{0.3, 1.7, 2.2};
                         worst = std::max(worst, rel(specfun::hyp2f1(p, std::conj(z)), std::conj(specfun::hyp2f1(p, z))));
                     }
                     return worst;
                 }});
    c.push_back({"quadrature", "finite_sqrt_singularity", 1e-8, [] {
                     const auto r = quad::integrate_finite([](double s) { return cplx{1.0 / std::sqrt(s), 0.0}; },
                                                           0.0, 1.0, 1e-10);
                     return std::abs(r.value - 2.0);
                 }});
    c.push_back({"quadrature", "damped_sine", 1e-10, [] {
                     double worst = 0.0;
                     for (double e : {0.05, 0.2, 1.0}) {
                         const auto r = quad::integrate_semiinfinite_damped(
                             [e](double k) { return cplx{std::exp(-e * k) * std::sin(k), 0.0}; }, e, specfun::pi,
                             1e-11);
                         worst = std::max(worst, std::abs(r.value - 1.0 / (1.0 + e * e)));
                     }
                     return worst;
                 }});
    c.push_back({"quadrature", "richardson_quadratic", 1e-12, [] {
                     auto f = [](double e) { return cplx{0.7 - 1.3 * e + 2.1 * e * e, 0.0}; };
                     const auto x = quad::richardson({{0.4, f(0.4)}, {0.2, f(0.2)}, {0.1, f(0.1)}});
                     return std::abs(x.value - 0.7);
                 }});
    c.push_back({"distributions", "alpha_invariance", 1e-8, [] {
                     double worst = 0.0;
                     for (const auto& o : bessel_orders()) {
                         worst = std::max(worst, dist::pair_alpha_invariance_check(ws::prop1_distribution(o),
                                                                                   {1.0, 0.5, 1.0}, {0, 1, 2}));
                     }
                     return worst;
                 }});
    c.push_back({"distributions", "sokhotski_limit", 1e-5, [] {
                     const dist::TestFunction g{1.0, 0.5, 1.0};
                     std::vector<std::pair<double, cplx>> trace;
                     for (double e : {0.04, 0.02, 0.01, 0.005, 0.0025}) {
                         trace.emplace_back(e, dist::sokhotski_pair(g, e));
                     }
                     return std::abs(quad::richardson(trace).value - dist::pair(dist::sokhotski_limit(), g));
                 }});
    c.push_back({"weber_schafheitlin", "route_equality", 1e-10, [] {
                     double worst = 0.0;
                     for (const auto& o : bessel_orders()) {
                         for (double s : {0.3, 0.7, 1.0, 1.5, 3.0}) {
                             for (double e : {0.05, 0.2, 1.0}) {
                                 worst = std::max(worst, rel(ws::regularized_I(o, {s, e}), ws::regularized_I_via_k(o, {s, e})));
                             }
                         }
                     }
                     return worst;
                 }});
    c.push_back({"weber_schafheitlin", "gauss_normalization", 1e-8, [] {
                     double worst = 0.0;
                     for (const auto& o : bessel_orders()) {
                         worst = std::max(worst, std::abs(ws::prop1_density(o, 1.0) - 1.0));
                         worst = std::max(worst, std::abs(ws::prop2_density(o, 1.0) - 1.0));
                     }
                     return worst;
                 }});
    c.push_back({"weber_schafheitlin", "real_part_consistency", 1e-8, [] {
                     double worst = 0.0;
                     const dist::TestFunction g{1.0, 0.5, 1.0};
                     for (const auto& o : bessel_orders()) {
                         const cplx p1 = dist::pair(ws::prop1_distribution(o), g);
                         const cplx p2 = dist::pair(ws::prop2_distribution(o), g);
                         worst = std::max(worst, std::abs(p1.real() - p2.real()));
                     }
                     return worst;
                 }});
    c.push_back({"weber_schafheitlin", "reflection", 1e-12, [] {
                     double worst = 0.0;
                     for (const auto& o : bessel_orders()) {
                         for (double s : {0.25, 0.5, 2.0, 4.0}) {
                             worst = std::max(worst, ws::reflection_check(o, s));
                         }
                     }
                     return worst;
                 }});
    c.push_back({"oracle", "direct_vs_closed_form", 1e-6, [] {
                     double worst = 0.0;
                     for (const auto& o : {ws::OrderPair{0, 0}, ws::OrderPair{0.5, 1.5}}) {
                         for (double s : {0.7, 1.5}) {
                             const ws::RegularizedPoint pt{s, 0.1};
                             worst = std::max(worst, rel(oracle::I_direct(o, pt), ws::regularized_I(o, pt)));
                         }
                     }
                     return worst;
                 }});
    c.push_back({"oracle", "closure_pairing", 1e-4, [] {
                     return oracle::jj_pairing_oracle({1, 1}, {1.0, 0.5, 1.0}).rel_deviation;
                 }});
    return c;
}

}  // namespace

const std::vector<std::string>& modules() {
    static const std::vector<std::string> names = {"specfun", "quadrature", "distributions", "weber_schafheitlin",
                                                   "oracle"};
    return names;
}

std::vector<CheckResult> run(const std::string& only, std::optional<double> tol_override) {
    if (!only.empty() && std::find(modules().begin(), modules().end(), only) == modules().end()) {
        throw DomainError("selftest: unknown module '" + only + "'");
    }
    std::vector<CheckResult> out;
    for (const Check& c : build()) {
        if (!only.empty() && only != c.module) {
            continue;
        }
        CheckResult r;
        r.module = c.module;
        r.name = c.name;
        r.threshold = tol_override.value_or(c.threshold);
        try {
            r.deviation = c.measure();
            r.passed = r.deviation <= r.threshold;
        } catch (const std::exception& e) {
            r.error = e.what();
            r.passed = false;
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace wsi::selftest
