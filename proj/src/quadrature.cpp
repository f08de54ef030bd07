#include "wsi/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <utility>

#include "wsi/errors.hpp"

namespace wsi::quad {

namespace {

constexpr double kDblEps = std::numeric_limits<double>::epsilon();

// Kronrod 21-point abscissae on [-1, 1] (positive half, descending); odd
// indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077589524491814, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651146};

struct Segment {
    double a;
    double b;
    cplx value;
    double error;
    bool splittable;
};

struct ByError {
    bool operator()(const Segment& x, const Segment& y) const {
        if (x.error != y.error) {
            return x.error < y.error;
        }
        return x.a > y.a;
    }
};

Segment gauss_kronrod(const Integrand& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const cplx fc = f(centre);
    cplx kron = fc * kWgk[10];
    cplx gauss = 0.0;
    double abs_sum = std::abs(fc) * kWgk[10];
    std::array<cplx, 21> vals{};
    vals[20] = fc;
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        const cplx f1 = f(centre - dx);
        const cplx f2 = f(centre + dx);
        vals[2 * j] = f1;
        vals[2 * j + 1] = f2;
        kron += kWgk[j] * (f1 + f2);
        abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * (f1 + f2);
        }
    }
    const cplx mean = 0.5 * kron;
    double asc = kWgk[10] * std::abs(fc - mean);
    for (int j = 0; j < 10; ++j) {
        asc += kWgk[j] * (std::abs(vals[2 * j] - mean) + std::abs(vals[2 * j + 1] - mean));
    }
    const double habs = std::abs(half);
    const cplx value = kron * half;
    double err = std::abs((kron - gauss) * half);
    const double resasc = asc * habs;
    const double resabs = abs_sum * habs;
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kDblEps)) {
        err = std::max(err, 50.0 * kDblEps * resabs);
    }
    const double scale = std::max(std::abs(a), std::abs(b));
    const bool splittable = (b - a) > 1e3 * kDblEps * scale && (b - a) > 1e3 * std::numeric_limits<double>::min();
    return {a, b, value, err, splittable};
}

// Wynn's epsilon algorithm, one new partial sum at a time. Returns the
// highest even-column entry reachable from the stored diagonal.
class WynnEpsilon {
public:
    cplx push(cplx s) {
        std::vector<cplx> next;
        next.reserve(row_.size() + 1);
        next.push_back(s);
        for (std::size_t k = 0; k < row_.size(); ++k) {
            const cplx diff = next[k] - row_[k];
            const cplx prev = k == 0 ? cplx{0.0, 0.0} : row_[k - 1];
            if (std::abs(diff) <= 1e-300) {
                break;
            }
            next.push_back(prev + 1.0 / diff);
        }
        row_ = std::move(next);
        if (row_.size() > kMaxDepth) {
            row_.resize(kMaxDepth);
        }
        const std::size_t last_even = (row_.size() - 1) & ~static_cast<std::size_t>(1);
        return row_[last_even];
    }

private:
    static constexpr std::size_t kMaxDepth = 41;

    // row_[k] = eps_k^{(n-k)}: the latest anti-diagonal of the table.
    std::vector<cplx> row_;
};

}  // namespace

void EpsSchedule::validate() const {
    if (values.empty()) {
        throw DomainError("eps schedule must not be empty");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
            throw DomainError("eps schedule entries must be positive and finite");
        }
        if (i > 0 && !(values[i] <= 0.5 * values[i - 1])) {
            throw DomainError("eps schedule must decrease by at least a factor 2 per step");
        }
    }
}

EpsSchedule EpsSchedule::default_schedule() {
    return EpsSchedule{{0.2, 0.1, 0.05, 0.025}};
}

QuadratureResult integrate_finite(const Integrand& f, double a, double b, double tol, int max_intervals,
                                  int initial_panels) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("integrate_finite: requires finite a < b");
    }
    if (!(tol > 0.0)) {
        throw DomainError("integrate_finite: tol must be positive");
    }
    if (initial_panels < 1) {
        throw DomainError("integrate_finite: initial_panels must be at least 1");
    }
    std::priority_queue<Segment, std::vector<Segment>, ByError> heap;
    std::vector<Segment> frozen;
    QuadratureResult res;
    double total_err = 0.0;
    const double width = (b - a) / initial_panels;
    for (int i = 0; i < initial_panels; ++i) {
        const double lo = a + i * width;
        const double hi = (i + 1 == initial_panels) ? b : a + (i + 1) * width;
        const Segment seg = gauss_kronrod(f, lo, hi);
        res.evaluations += 21;
        total_err += seg.error;
        heap.push(seg);
    }
    int count = initial_panels;
    max_intervals = std::max(max_intervals, initial_panels);
    while (total_err > tol && count < max_intervals && !heap.empty()) {
        Segment worst = heap.top();
        heap.pop();
        if (!worst.splittable) {
            frozen.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        const Segment left = gauss_kronrod(f, worst.a, mid);
        const Segment right = gauss_kronrod(f, mid, worst.b);
        res.evaluations += 42;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++count;
    }
    std::vector<Segment> all = std::move(frozen);
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
    cplx value = 0.0;
    double err = 0.0;
    for (const Segment& s : all) {
        value += s.value;
        err += s.error;
    }
    res.value = value;
    res.error_estimate = err;
    res.converged = err <= tol;
    return res;
}

QuadratureResult integrate_semiinfinite_damped(const Integrand& f, double damping, double zero_spacing,
                                               double tol) {
    if (!(damping > 0.0) || !std::isfinite(damping)) {
        throw DomainError("integrate_semiinfinite_damped: damping must be positive");
    }
    if (!(zero_spacing > 0.0) || !std::isfinite(zero_spacing)) {
        throw DomainError("integrate_semiinfinite_damped: zero_spacing must be positive");
    }
    if (!(tol > 0.0)) {
        throw DomainError("integrate_semiinfinite_damped: tol must be positive");
    }
    const double k_max = std::max(50.0, 40.0 / damping);
    const long n_panels = static_cast<long>(std::ceil(k_max / zero_spacing));
    // Per-panel budget: a share of tol that cannot add up past tol / 2.
    const double panel_tol = 0.5 * tol / std::sqrt(static_cast<double>(n_panels));

    constexpr int kWindow = 8;
    constexpr int kMinPanels = 12;
    constexpr int kStableChecks = 3;

    QuadratureResult res;
    res.converged = true;
    WynnEpsilon wynn;
    cplx partial = 0.0;
    double panel_err = 0.0;
    std::vector<double> magnitudes;
    std::vector<cplx> accelerated;
    int stable = 0;
    cplx best = 0.0;
    double trunc_err = 0.0;
    bool stopped_early = false;
    double first_window_max = 0.0;

    for (long k = 0; k < n_panels; ++k) {
        const double lo = k * zero_spacing;
        const double hi = (k + 1) * zero_spacing;
        const QuadratureResult p = integrate_finite(f, lo, hi, panel_tol);
        res.evaluations += p.evaluations;
        panel_err += p.error_estimate;
        if (!p.converged) {
            res.converged = false;
        }
        partial += p.value;
        magnitudes.push_back(std::abs(p.value));
        if (k < kWindow) {
            first_window_max = std::max(first_window_max, std::abs(p.value));
        }
        accelerated.push_back(wynn.push(partial));

        if (k + 1 >= kMinPanels) {
            const std::size_t n = accelerated.size();
            const double d1 = std::abs(accelerated[n - 1] - accelerated[n - 2]);
            const double d2 = std::abs(accelerated[n - 2] - accelerated[n - 3]);
            const bool settled = d1 + d2 <= 0.25 * tol;
            // Geometric tail bound of the plain partial sums.
            const double window_max =
                *std::max_element(magnitudes.end() - kWindow, magnitudes.end());
            const double tail = window_max / (-std::expm1(-damping * zero_spacing));
            if (tail <= 0.25 * tol) {
                best = partial;
                trunc_err = tail;
                stopped_early = true;
                break;
            }
            stable = settled ? stable + 1 : 0;
            if (stable >= kStableChecks) {
                best = accelerated[n - 1];
                trunc_err = d1 + d2;
                stopped_early = true;
                break;
            }
        }
    }
    if (!stopped_early) {
        // Reached k_max: check that the panels decayed.
        const double window_max = *std::max_element(magnitudes.end() - std::min<long>(kWindow, magnitudes.size()),
                                                    magnitudes.end());
        const double tail = window_max / (-std::expm1(-damping * zero_spacing));
        if (window_max > 1e-6 * std::max(first_window_max, std::numeric_limits<double>::min()) && tail > tol) {
            throw NonConvergence("integrate_semiinfinite_damped: panel contributions do not decay (tail " +
                                 std::to_string(tail) + ")");
        }
        best = partial;
        trunc_err = tail;
    }
    res.value = best;
    res.error_estimate = panel_err + trunc_err;
    if (res.error_estimate > tol) {
        res.converged = false;
    }
    return res;
}

QuadratureResult integrate_pv(const Integrand& phi, double lo, double hi, double pole, double tol) {
    if (!(lo < hi)) {
        throw DomainError("integrate_pv: requires lo < hi");
    }
    const double guard = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
    if (std::abs(pole - lo) <= guard || std::abs(pole - hi) <= guard) {
        throw PoleOnBoundaryError("integrate_pv: pole at a support endpoint");
    }
    const Integrand with_pole = [&](double s) { return phi(s) / (s - pole); };
    if (pole < lo || pole > hi) {
        return integrate_finite(with_pole, lo, hi, tol);
    }
    const double h = std::min({pole - lo, hi - pole, 0.5});
    const Integrand odd = [&](double t) { return (phi(pole + t) - phi(pole - t)) / t; };
    QuadratureResult res = integrate_finite(odd, 0.0, h, tol / 3.0);
    auto add = [&](const QuadratureResult& part) {
        res.value += part.value;
        res.error_estimate += part.error_estimate;
        res.evaluations += part.evaluations;
        res.converged = res.converged && part.converged;
    };
    if (pole - h > lo) {
        add(integrate_finite(with_pole, lo, pole - h, tol / 3.0));
    }
    if (pole + h < hi) {
        add(integrate_finite(with_pole, pole + h, hi, tol / 3.0));
    }
    res.converged = res.converged && res.error_estimate <= tol;
    return res;
}

Extrapolation richardson(const std::vector<std::pair<double, cplx>>& seq) {
    if (seq.size() < 3) {
        throw InsufficientData("richardson: needs at least 3 samples, got " + std::to_string(seq.size()));
    }
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!(seq[i].first > 0.0) || (i > 0 && !(seq[i].first < seq[i - 1].first))) {
            throw DomainError("richardson: eps must be positive and strictly decreasing");
        }
    }
    const std::size_t n = seq.size();
    // Neville tableau at x = 0; p[i] holds the interpolant through samples
    // i - j .. i after stage j.
    std::vector<cplx> p(n);
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = seq[i].second;
    }
    cplx before_last = p[n - 1];
    for (std::size_t j = 1; j < n; ++j) {
        before_last = p[n - 1];
        for (std::size_t i = n - 1; i >= j; --i) {
            const double xi = seq[i].first;
            const double xij = seq[i - j].first;
            p[i] = (xij * p[i] - xi * p[i - 1]) / (xij - xi);
            if (i == j) {
                break;
            }
        }
    }
    return {p[n - 1], std::abs(p[n - 1] - before_last)};
}

}  // namespace wsi::quad
