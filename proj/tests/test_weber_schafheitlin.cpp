#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "wsi/errors.hpp"
#include "wsi/quadrature.hpp"
#include "wsi/specfun.hpp"
#include "wsi/weber_schafheitlin.hpp"

using namespace wsi::ws;
using wsi::specfun::pi;

namespace {

const std::vector<OrderPair>& hankel_orders() {
    static const std::vector<OrderPair> v = {{0, 0},     {0, 1},   {1, 2},     {0.5, 1.5}, {1, 1},    {2, 1},
                                             {-1.5, 0.3}, {2.7, 1}, {0.4, -1.0}, {0, -0.6},  {3.2, 4.1}};
    return v;
}

const std::vector<OrderPair>& bessel_orders() {
    static const std::vector<OrderPair> v = {{0, 0}, {0, 1}, {1, 2}, {0.5, 1.5}, {1, 1}, {2, 1}, {0.3, -0.8}};
    return v;
}

double rel(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("OrderPair: strict inequalities") {
    CHECK_NOTHROW((OrderPair{0, 1}).validate_hankel());
    CHECK_NOTHROW((OrderPair{2.9, 1}).validate_hankel());
    CHECK_THROWS_AS((OrderPair{3, 1}).validate_hankel(), wsi::OrderError);
    CHECK_THROWS_AS((OrderPair{-3, 1}).validate_hankel(), wsi::OrderError);
    CHECK_THROWS_AS((OrderPair{NAN, 1}).validate_hankel(), wsi::OrderError);
    CHECK_NOTHROW((OrderPair{0, 1.9}).validate_bessel());
    CHECK_THROWS_AS((OrderPair{0, 2}).validate_bessel(), wsi::OrderError);
    try {
        (OrderPair{0, 2}).validate_bessel();
    } catch (const wsi::OrderError& e) {
        CHECK(std::string(e.what()).find("mu + 2 > |nu|") != std::string::npos);
    }
    try {
        (OrderPair{4, 1}).validate_hankel();
    } catch (const wsi::OrderError& e) {
        CHECK(std::string(e.what()).find("nu + 2 > |mu|") != std::string::npos);
    }
    CHECK_THROWS_AS(prop1_distribution({3, 1}), wsi::OrderError);
    CHECK_THROWS_AS(prop2_distribution({0, 2}), wsi::OrderError);
    CHECK_THROWS_AS(regularized_I({3, 1}, {1.0, 0.1}), wsi::OrderError);
}

TEST_CASE("RegularizedPoint: validation") {
    CHECK_NOTHROW((RegularizedPoint{0.5, 0.1}).validate());
    CHECK_THROWS_AS((RegularizedPoint{0.0, 0.1}).validate(), wsi::DomainError);
    CHECK_THROWS_AS((RegularizedPoint{1.0, 0.0}).validate(), wsi::DomainError);
    CHECK_THROWS_AS(regularized_I({0, 1}, {1.0, -0.1}), wsi::DomainError);
}

TEST_CASE("k_transform: equal orders reduce to an elementary function") {
    for (double nu : {0.0, 0.5, 1.0, 2.5, -0.7}) {
        for (const cplx z : {cplx{0.3, 0.0}, cplx{1.0, 2.0}, cplx{2.0, -0.5}, cplx{0.05, 1.0}}) {
            const cplx want = std::pow(z, -2.0 - nu) / (1.0 + 1.0 / (z * z));
            CHECK(rel(k_transform({nu, nu}, z), want) <= 1e-13);
        }
    }
}

TEST_CASE("k_transform: real argument gives real value") {
    for (const auto& o : hankel_orders()) {
        for (double x : {0.2, 1.0, 3.5}) {
            CHECK(k_transform(o, x).imag() == 0.0);
        }
    }
}

TEST_CASE("k_transform: direct quadrature of k K0(2k) J0(k)") {
    auto f = [](double k) {
        return k > 0.0 ? k * wsi::specfun::bessel_k_complex(0.0, 2.0 * k) * wsi::specfun::bessel_j(0.0, k)
                       : cplx{0.0, 0.0};
    };
    const auto r = wsi::quad::integrate_semiinfinite_damped(f, 2.0, pi, 1e-12);
    CHECK(std::abs(r.value - k_transform({0, 0}, 2.0)) <= 1e-8);
    CHECK(std::abs(k_transform({0, 0}, 2.0) - 0.2) <= 1e-15);
}

TEST_CASE("k_transform: domain") {
    CHECK_THROWS_AS(k_transform({0, 1}, cplx{0.0, 1.0}), wsi::DomainError);
    CHECK_THROWS_AS(k_transform({0, 1}, cplx{-1.0, 0.2}), wsi::DomainError);
    CHECK_THROWS_AS(k_transform({3, 1}, 1.0), wsi::OrderError);
}

TEST_CASE("regularized_I: the two routes agree") {
    CHECK(rel(regularized_I({0, 1}, {0.7, 0.2}), regularized_I_via_k({0, 1}, {0.7, 0.2})) <= 1e-10);
    double worst = 0.0;
    for (const auto& o : hankel_orders()) {
        for (double s : {0.3, 0.7, 1.0, 1.5, 3.0}) {
            for (double e : {0.05, 0.2, 1.0}) {
                worst = std::max(worst, rel(regularized_I(o, {s, e}), regularized_I_via_k(o, {s, e})));
            }
        }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("regularized_I: approaches the boundary density away from s = 1") {
    // I(s + i e) -> pv_coeff F(s) / (1/s - s) as e -> 0 for s != 1.
    for (const auto& o : {OrderPair{0, 1}, OrderPair{0.5, 1.5}}) {
        const auto d = prop1_distribution(o);
        for (double s : {0.4, 2.0}) {
            const cplx limit = d.pv_coeff * d.density(s) / (1.0 / s - s);
            CHECK(rel(regularized_I(o, {s, 1e-7}), limit) <= 1e-5);
        }
    }
}

TEST_CASE("prop1_density: equal orders and Gauss normalization") {
    for (double nu : {0.0, 1.0, 2.5, -0.5}) {
        for (double s : {0.2, 0.8, 1.0, 1.3, 4.0}) {
            CHECK(rel(prop1_density({nu, nu}, s), std::pow(s, -nu - 1.0)) <= 1e-13);
        }
    }
    for (const auto& o : hankel_orders()) {
        CHECK(std::abs(prop1_density(o, 1.0) - 1.0) <= 1e-12);
    }
    // c = nu + 1 = 0 is handled by the regularized hypergeometric function.
    for (double mu : {-0.9, 0.0, 0.5}) {
        CHECK(std::abs(prop1_density({mu, -1.0}, 1.0) - 1.0) <= 1e-12);
        CHECK(std::isfinite(std::abs(prop1_density({mu, -1.0}, 0.6))));
    }
}

TEST_CASE("prop1_remainder: consistent with the density") {
    for (const auto& o : hankel_orders()) {
        for (double s : {0.3, 0.6, 0.95, 0.9999, 1.0001, 1.07, 2.0, 5.0}) {
            const cplx direct = (prop1_density(o, s) - 1.0) / (s - 1.0);
            // The difference quotient loses about 1e-15 / |s - 1| to cancellation.
            const double slack = 1e-12 * std::max(1.0, std::abs(direct)) + 1e-14 / std::abs(s - 1.0);
            CHECK(std::abs(prop1_remainder(o, s) - direct) <= slack);
        }
        CHECK(std::isfinite(std::abs(prop1_remainder(o, 1.0))));
        CHECK(std::abs(prop1_remainder(o, 1.0) - prop1_remainder(o, 1.0 - 1e-6)) == 0.0);
    }
}

TEST_CASE("prop1_distribution: coefficients") {
    const auto d = prop1_distribution({0.0, 1.0}, 1.5);
    const cplx delta = std::exp(cplx{0.0, pi / 2.0});
    CHECK(std::abs(d.delta_coeff - delta) <= 1e-15);
    CHECK(std::abs(d.pv_coeff - 2.0 / cplx{0.0, pi} * delta) <= 1e-15);
    CHECK(d.alpha == 1.5);
    CHECK(std::abs(d.density(1.0) - 1.0) <= 1e-12);
}

TEST_CASE("prop2_distribution: coefficients") {
    for (double mu : {0.0, 0.5, 1.3}) {
        const auto same = prop2_distribution({mu, mu});
        CHECK(same.delta_coeff == cplx(1.0, 0.0));
        CHECK(same.pv_coeff == cplx(0.0, 0.0));
        CHECK(std::abs(wsi::dist::pair(same, {1.0, 0.5, 1.0}) - std::exp(-1.0)) <= 1e-15);

        const auto shifted = prop2_distribution({mu, mu + 1.0});
        CHECK(std::abs(shifted.delta_coeff) <= 1e-15);
        CHECK(std::abs(shifted.pv_coeff - 2.0 / pi) <= 1e-15);
    }
}

TEST_CASE("prop2_density: real valued, equal to one at s = 1, continuous in the limit") {
    for (const auto& o : bessel_orders()) {
        CHECK(std::abs(prop2_density(o, 1.0) - 1.0) <= 1e-8);
        double previous = INFINITY;
        for (double d : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
            const double gap = std::abs(prop2_density(o, 1.0 - d) - prop2_density(o, 1.0 + d));
            CHECK(gap <= previous);
            previous = gap;
        }
        CHECK(previous <= 1e-4);
        // Pointwise, the Bessel-Bessel density is the real part of the
        // Hankel-Bessel one once the complex coefficient is included.
        const auto d1 = prop1_distribution(o);
        const auto d2 = prop2_distribution(o);
        for (double s : {0.3, 0.9, 1.1, 3.0}) {
            const double want = (d1.pv_coeff * prop1_density(o, s)).real();
            CHECK(std::abs(d2.pv_coeff.real() * prop2_density(o, s) - want) <= 1e-13 * std::max(1.0, std::abs(want)));
        }
    }
    // Equal orders: m0 = 1 below s = 1 and s^(-nu-1) above.
    CHECK(prop2_density({1, 1}, 0.4) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(prop2_density({1, 1}, 2.0) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("prop2_remainder: consistent with the density") {
    for (const auto& o : bessel_orders()) {
        for (double s : {0.3, 0.8, 1.5, 3.0}) {
            const double direct = (prop2_density(o, s) - 1.0) / (s - 1.0);
            CHECK(prop2_remainder(o, s) == doctest::Approx(direct).epsilon(1e-11));
        }
    }
}

TEST_CASE("Prop 2 pairing is the real part of the Prop 1 pairing") {
    for (const auto& o : bessel_orders()) {
        for (const wsi::dist::TestFunction& g : {wsi::dist::TestFunction{1.0, 0.5, 1.0},
                                                wsi::dist::TestFunction{0.7, 0.4, 1.0}}) {
            const cplx p1 = wsi::dist::pair(prop1_distribution(o), g);
            const cplx p2 = wsi::dist::pair(prop2_distribution(o), g);
            CHECK(std::abs(p2.imag()) == 0.0);
            CHECK(std::abs(p1.real() - p2.real()) <= 1e-8);
        }
    }
}

TEST_CASE("reflection_check") {
    CHECK(reflection_check({0, 1}, 0.5) <= 1e-12);
    CHECK(reflection_check({0.5, 1.5}, 2.0) <= 1e-12);
    for (const auto& o : bessel_orders()) {
        for (double s : {0.25, 0.5, 2.0, 4.0}) {
            CHECK(reflection_check(o, s) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(reflection_check({0, 1}, 1.0), wsi::DomainError);
    CHECK_THROWS_AS(reflection_check({0, 1}, -2.0), wsi::DomainError);
    CHECK_THROWS_AS(reflection_check({0, 2}, 0.5), wsi::OrderError);
}
