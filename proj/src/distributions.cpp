#include "wsi/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wsi/errors.hpp"
#include "wsi/specfun.hpp"

namespace wsi::dist {

namespace {

using quad::QuadratureResult;

void require(const QuadratureResult& r, const char* what) {
    if (!r.converged) {
        throw ToleranceError(std::string("pair: ") + what + " did not converge (error estimate " +
                             std::to_string(r.error_estimate) + ")");
    }
}

// (s^-alpha - 1) / (1 - s), equal to alpha at s = 1.
double power_quotient(double s, double alpha) {
    if (s == 1.0) {
        return alpha;
    }
    return std::expm1(-alpha * std::log(s)) / (1.0 - s);
}

// Integral over [lo, hi] split at s = 1, where the remainder may carry a
// logarithmic singularity.
QuadratureResult integrate_split(const quad::Integrand& f, double lo, double hi, double tol) {
    if (lo < 1.0 && 1.0 < hi) {
        QuadratureResult left = quad::integrate_finite(f, lo, 1.0, 0.5 * tol);
        const QuadratureResult right = quad::integrate_finite(f, 1.0, hi, 0.5 * tol);
        left.value += right.value;
        left.error_estimate += right.error_estimate;
        left.evaluations += right.evaluations;
        left.converged = left.converged && right.converged;
        return left;
    }
    return quad::integrate_finite(f, lo, hi, tol);
}

}  // namespace

void TestFunction::validate() const {
    if (!std::isfinite(center) || !std::isfinite(halfwidth) || !std::isfinite(amplitude)) {
        throw SupportError("test function parameters must be finite");
    }
    if (!(halfwidth > 0.0)) {
        throw SupportError("test function halfwidth must be positive");
    }
    if (!(center > halfwidth)) {
        throw SupportError("test function support [" + std::to_string(lo()) + ", " + std::to_string(hi()) +
                           "] is not inside (0, inf)");
    }
}

double TestFunction::operator()(double s) const {
    const double t = (s - center) / halfwidth;
    if (!(std::abs(t) < 1.0)) {
        return 0.0;
    }
    return amplitude * std::exp(-1.0 / (1.0 - t * t));
}

double TestFunction::derivative(double s) const {
    const double t = (s - center) / halfwidth;
    if (!(std::abs(t) < 1.0)) {
        return 0.0;
    }
    const double q = 1.0 - t * t;
    return (*this)(s) * (-2.0 * t / (q * q)) / halfwidth;
}

DistributionExpansion DistributionExpansion::with_alpha(double a) const {
    DistributionExpansion d = *this;
    d.alpha = a;
    return d;
}

QuadratureResult integrate_pv(const Density& phi, const TestFunction& g, double pole, double tol) {
    g.validate();
    return quad::integrate_pv([&](double s) { return phi(s) * g(s); }, g.lo(), g.hi(), pole, tol);
}

cplx pair(const DistributionExpansion& dist, const TestFunction& g, Measure measure, double tol) {
    g.validate();
    auto gt = [&](double s) { return measure == Measure::Haar ? g(s) / s : g(s); };

    cplx out = 0.0;
    if (dist.delta_coeff != 0.0) {
        out += dist.delta_coeff * gt(1.0);
    }
    if (dist.pv_coeff == 0.0) {
        return out;
    }
    if (!dist.remainder) {
        throw DomainError("pair: distribution has a principal-value part but no remainder");
    }
    const double alpha = dist.alpha;

    // s^alpha / (1/s - s) = r(s) / (s - 1) with r = -s^(alpha+1) / (1 + s).
    const quad::Integrand pv_factor = [&](double s) {
        return cplx{-std::pow(s, alpha + 1.0) / (1.0 + s) * gt(s), 0.0};
    };
    // s^alpha (s^-alpha F - 1) / (1/s - s)
    //   = s^(alpha+1) / (1 + s) * [ (s^-alpha - 1)/(1 - s) - s^-alpha h(s) ].
    const quad::Integrand regular = [&](double s) {
        const double gs = gt(s);
        if (gs == 0.0) {
            return cplx{0.0, 0.0};
        }
        const double w = std::pow(s, alpha + 1.0) / (1.0 + s);
        return w * (power_quotient(s, alpha) - std::pow(s, -alpha) * dist.remainder(s)) * gs;
    };

    QuadratureResult pv;
    if (g.lo() < 1.0 && 1.0 < g.hi()) {
        pv = quad::integrate_pv(pv_factor, g.lo(), g.hi(), 1.0, 0.5 * tol);
    } else {
        pv = quad::integrate_finite([&](double s) { return pv_factor(s) / (s - 1.0); }, g.lo(), g.hi(), 0.5 * tol);
    }
    require(pv, "principal-value integral");
    const QuadratureResult reg = integrate_split(regular, g.lo(), g.hi(), 0.5 * tol);
    require(reg, "remainder integral");
    return out + dist.pv_coeff * (pv.value + reg.value);
}

double pair_alpha_invariance_check(const DistributionExpansion& dist, const TestFunction& g,
                                   const std::vector<double>& alphas, Measure measure, double tol) {
    if (alphas.size() < 2) {
        throw DomainError("pair_alpha_invariance_check: needs at least two alpha values");
    }
    std::vector<cplx> values;
    values.reserve(alphas.size());
    for (double a : alphas) {
        values.push_back(pair(dist.with_alpha(a), g, measure, tol));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            worst = std::max(worst, std::abs(values[i] - values[j]));
        }
    }
    return worst;
}

cplx sokhotski_pair(const TestFunction& g, double eps, double tol) {
    g.validate();
    if (!(eps > 0.0)) {
        throw DomainError("sokhotski_pair: eps must be positive");
    }
    const quad::Integrand f = [&](double s) {
        const cplx z{s, eps};
        return s * g(s) / (1.0 - z * z);
    };
    // Seed the partition so the peak of width ~eps at s = 1 is resolved.
    const int panels = static_cast<int>(std::clamp(std::ceil(4.0 * (g.hi() - g.lo()) / eps), 1.0, 2000.0));
    const QuadratureResult r = quad::integrate_finite(f, g.lo(), g.hi(), tol, 20000, panels);
    if (!r.converged) {
        throw ToleranceError("sokhotski_pair: quadrature did not converge");
    }
    return r.value;
}

DistributionExpansion sokhotski_limit() {
    DistributionExpansion d;
    d.delta_coeff = cplx{0.0, 0.5 * specfun::pi};
    d.pv_coeff = 1.0;
    d.density = [](double) { return cplx{1.0, 0.0}; };
    d.remainder = [](double) { return cplx{0.0, 0.0}; };
    return d;
}

double remainder_l1(const DistributionExpansion& dist, double lo, double hi, double tol) {
    if (!dist.remainder) {
        return 0.0;
    }
    const QuadratureResult r =
        integrate_split([&](double s) { return cplx{std::abs(dist.remainder(s)), 0.0}; }, lo, hi, tol);
    if (!r.converged) {
        throw ToleranceError("remainder_l1: quadrature did not converge");
    }
    return r.value.real();
}

}  // namespace wsi::dist
