#pragma once

// Independent numerical checks of the closed forms. The integrands here are
// built only from specfun and quadrature; the closed forms are consulted for
// the final comparison alone.

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "wsi/distributions.hpp"
#include "wsi/json_io.hpp"
#include "wsi/quadrature.hpp"
#include "wsi/weber_schafheitlin.hpp"

namespace wsi::oracle {

using cplx = std::complex<double>;

struct OracleReport {
    cplx closed_form{};
    cplx oracle_value{};
    double abs_deviation = 0.0;
    double rel_deviation = 0.0;  // abs_deviation / max(1, |closed_form|)
    std::vector<std::pair<double, cplx>> eps_trace;
    double extrapolation_error = 0.0;
    // |trace value - extrapolated value| decreases along the schedule.
    bool trace_monotone = false;
};

/// int_0^inf k H1_mu((s + i eps) k) J_nu(k) dk by damped panel quadrature
/// (damping eps, panel width pi / max(s, 1)). `tol` is absolute.
/// Throws OrderError, DomainError, NonConvergence.
cplx I_direct(const ws::OrderPair& orders, const ws::RegularizedPoint& pt, double tol = 1e-10);

/// For each eps in the schedule, int I_direct(s + i eps) g(s) ds over supp g
/// (64 Gauss-Kronrod panels, refined adaptively), extrapolated to eps = 0 and
/// compared with the pairing of the Hankel-Bessel limit distribution.
/// `tol` is the accuracy target for the comparison; inner quadratures run
/// three orders of magnitude tighter (clamped to [1e-12, 1e-8]).
OracleReport pairing_oracle(const ws::OrderPair& orders, const dist::TestFunction& g,
                            const quad::EpsSchedule& schedule = quad::EpsSchedule::default_schedule(),
                            double tol = 1e-4);

/// Real part of the pairing_oracle limit against the Bessel-Bessel limit
/// distribution. Requires both order constraints.
OracleReport jj_pairing_oracle(const ws::OrderPair& orders, const dist::TestFunction& g,
                               const quad::EpsSchedule& schedule = quad::EpsSchedule::default_schedule(),
                               double tol = 1e-4);

/// max over the grid of |q_eps(s) - q_0(s)| with
/// q_eps(s) = I_direct(s + i eps) (1 - (s + i eps)^2) / s and q_0 its limit.
double q_eps_sup_deviation(const ws::OrderPair& orders, double eps, const std::vector<double>& s_grid,
                           double tol = 1e-10);

io::Json to_json(const OracleReport& report);

}  // namespace wsi::oracle
