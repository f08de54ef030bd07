#include "wsi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wsi/errors.hpp"
#include "wsi/specfun.hpp"

namespace wsi::oracle {

namespace {

constexpr int kOuterPanels = 64;
constexpr int kOuterBudget = 2000;

double inner_tolerance(double tol) {
    return std::clamp(tol * 1e-3, 1e-12, 1e-8);
}

// Extrapolated eps -> 0 limit of int I(s + i eps) g(s) ds.
void run_schedule(const ws::OrderPair& orders, const dist::TestFunction& g, const quad::EpsSchedule& schedule,
                  double tol, OracleReport& report) {
    schedule.validate();
    g.validate();
    const double qtol = inner_tolerance(tol);
    report.eps_trace.clear();
    for (double eps : schedule.values) {
        const quad::Integrand f = [&](double s) {
            const double gs = g(s);
            if (gs == 0.0) {
                return cplx{0.0, 0.0};
            }
            return I_direct(orders, {s, eps}, 0.1 * qtol) * gs;
        };
        const quad::QuadratureResult r = quad::integrate_finite(f, g.lo(), g.hi(), qtol, kOuterBudget, kOuterPanels);
        if (!r.converged) {
            throw NonConvergence("pairing_oracle: s-integration at eps = " + std::to_string(eps) +
                                 " did not converge");
        }
        report.eps_trace.emplace_back(eps, r.value);
    }
    if (report.eps_trace.size() >= 3) {
        const quad::Extrapolation x = quad::richardson(report.eps_trace);
        report.oracle_value = x.value;
        report.extrapolation_error = x.error_estimate;
    } else {
        // Too few samples to extrapolate: the smallest eps stands in.
        report.oracle_value = report.eps_trace.back().second;
        report.extrapolation_error = std::abs(report.eps_trace.back().second - report.eps_trace.front().second);
    }
    report.trace_monotone = true;
    for (std::size_t i = 1; i < report.eps_trace.size(); ++i) {
        if (std::abs(report.eps_trace[i].second - report.oracle_value) >=
            std::abs(report.eps_trace[i - 1].second - report.oracle_value)) {
            report.trace_monotone = false;
        }
    }
}

void finish(OracleReport& report) {
    report.abs_deviation = std::abs(report.closed_form - report.oracle_value);
    report.rel_deviation = report.abs_deviation / std::max(1.0, std::abs(report.closed_form));
}

}  // namespace

cplx I_direct(const ws::OrderPair& orders, const ws::RegularizedPoint& pt, double tol) {
    orders.validate_hankel();
    pt.validate();
    const cplx z{pt.s, pt.eps};
    const quad::Integrand f = [&](double k) {
        return k * specfun::hankel1_complex(orders.mu, z * k) * specfun::bessel_j(orders.nu, k);
    };
    const quad::QuadratureResult r =
        quad::integrate_semiinfinite_damped(f, pt.eps, specfun::pi / std::max(pt.s, 1.0), tol);
    if (!r.converged) {
        throw NonConvergence("I_direct: quadrature error " + std::to_string(r.error_estimate) +
                             " exceeds tolerance " + std::to_string(tol));
    }
    return r.value;
}

OracleReport pairing_oracle(const ws::OrderPair& orders, const dist::TestFunction& g,
                            const quad::EpsSchedule& schedule, double tol) {
    orders.validate_hankel();
    OracleReport report;
    run_schedule(orders, g, schedule, tol, report);
    report.closed_form = dist::pair(ws::prop1_distribution(orders), g, dist::Measure::Lebesgue,
                                    std::min(1e-11, inner_tolerance(tol)));
    finish(report);
    return report;
}

OracleReport jj_pairing_oracle(const ws::OrderPair& orders, const dist::TestFunction& g,
                               const quad::EpsSchedule& schedule, double tol) {
    orders.validate_bessel();
    OracleReport report;
    run_schedule(orders, g, schedule, tol, report);
    report.oracle_value = report.oracle_value.real();
    report.closed_form = dist::pair(ws::prop2_distribution(orders), g, dist::Measure::Lebesgue,
                                    std::min(1e-11, inner_tolerance(tol)));
    finish(report);
    return report;
}

double q_eps_sup_deviation(const ws::OrderPair& orders, double eps, const std::vector<double>& s_grid, double tol) {
    orders.validate_hankel();
    const dist::DistributionExpansion limit = ws::prop1_distribution(orders);
    double worst = 0.0;
    for (double s : s_grid) {
        const cplx z{s, eps};
        const cplx q_eps = I_direct(orders, {s, eps}, tol) * (1.0 - z * z) / s;
        const cplx q_0 = limit.pv_coeff * limit.density(s);
        worst = std::max(worst, std::abs(q_eps - q_0));
    }
    return worst;
}

io::Json to_json(const OracleReport& report) {
    io::Json j;
    j["closed_form"] = io::complex_json(report.closed_form);
    j["oracle_value"] = io::complex_json(report.oracle_value);
    j["abs_deviation"] = report.abs_deviation;
    j["rel_deviation"] = report.rel_deviation;
    io::Json trace = io::Json::array();
    for (const auto& [eps, value] : report.eps_trace) {
        io::Json row;
        row["eps"] = eps;
        row["value"] = io::complex_json(value);
        trace.push_back(row);
    }
    j["eps_trace"] = trace;
    j["extrapolation_error"] = report.extrapolation_error;
    j["trace_monotone"] = report.trace_monotone;
    return j;
}

}  // namespace wsi::oracle
