#include "sho/quad.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

#include "sho/errors.hpp"
#include "sho/specfun.hpp"
#include "sho/tridiag.hpp"

namespace sho {

namespace {

// tanh-sinh panel: coarse step 1/4, fine step 1/8, |t| <= kTMax. At kTMax the
// node sits about 1e-130 (relative) away from the endpoint.
constexpr double kCoarseStep = 0.25;
constexpr int kFineDivisions = 2;
const double kTMax = std::asinh(150.0 * 2.0 / std::numbers::pi);
constexpr int kInitialPanels = 4;
constexpr std::size_t kMaxPanels = 200000;

struct Panel {
    double a, b;
    double value;     // fine estimate
    double error;     // |fine - coarse|
    double abs_value; // sum of |w f|, for the round-off floor
    int depth;

    bool operator<(const Panel& o) const { return error < o.error; }
};

// One node pair contribution at abscissa t (t > 0 covers +t and -t).
struct NodeSums {
    double sum = 0.0;
    double abs_sum = 0.0;
};

void add_node(const Integrand& f, double a, double b, double t, NodeSums& acc) {
    const double half = 0.5 * (b - a);
    const double u = 0.5 * std::numbers::pi * std::sinh(t);
    const double e = std::exp(-2.0 * std::abs(u));
    const double dist = half * 2.0 * e / (1.0 + e);               // distance to the nearer endpoint
    const double weight = half * 0.5 * std::numbers::pi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
    auto eval = [&](double x) {
        if (!(x > a && x < b)) return; // rounded onto an endpoint
        const double v = weight * f(x);
        acc.sum += v;
        acc.abs_sum += std::abs(v);
    };
    if (t == 0.0) {
        eval(a + half);
        return;
    }
    // t > 0: right node near b, mirrored node near a.
    eval(u > 0 ? b - dist : a + dist);
    eval(u > 0 ? a + dist : b - dist);
}

Panel evaluate_panel(const Integrand& f, double a, double b, int depth) {
    NodeSums coarse;
    const int coarse_count = static_cast<int>(kTMax / kCoarseStep);
    for (int k = 0; k <= coarse_count; ++k) add_node(f, a, b, k * kCoarseStep, coarse);

    const double fine_step = kCoarseStep / kFineDivisions;
    NodeSums extra;
    for (int k = 0; k < coarse_count * kFineDivisions; ++k)
        if (k % kFineDivisions != 0) add_node(f, a, b, k * fine_step, extra);

    const double coarse_value = coarse.sum * kCoarseStep;
    const double fine_value = (coarse.sum + extra.sum) * fine_step;
    const double abs_value = (coarse.abs_sum + extra.abs_sum) * fine_step;
    if (!std::isfinite(fine_value)) throw DepthExceeded("integrate_adaptive: integrand is not finite on the panel");
    return {a, b, fine_value, std::abs(fine_value - coarse_value), abs_value, depth};
}

} // namespace

void QuadControl::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw ParameterError("QuadControl: tolerances must be > 0");
    if (max_depth < 1) throw ParameterError("QuadControl: max_depth must be >= 1");
}

double integrate_adaptive(const Integrand& f, double a, double b, const QuadControl& ctl) {
    ctl.validate();
    if (std::isinf(b) && b > 0) b = kHalfLineCutoff;
    if (std::isinf(a) && a < 0) a = -kHalfLineCutoff;
    if (a == b) return 0.0;
    if (a > b) return -integrate_adaptive(f, b, a, ctl);

    std::priority_queue<Panel> queue;
    double total = 0.0, error = 0.0, abs_total = 0.0;
    const double width = (b - a) / kInitialPanels;
    for (int i = 0; i < kInitialPanels; ++i) {
        const double lo = a + width * i;
        const double hi = i + 1 == kInitialPanels ? b : a + width * (i + 1);
        Panel p = evaluate_panel(f, lo, hi, 0);
        total += p.value;
        error += p.error;
        abs_total += p.abs_value;
        queue.push(p);
    }

    std::size_t panels = queue.size();
    for (;;) {
        const double target = std::max({ctl.abs_tol, ctl.rel_tol * std::abs(total), 100.0 * DBL_EPSILON * abs_total});
        if (error <= target) return total;
        Panel worst = queue.top();
        queue.pop();
        if (worst.depth >= ctl.max_depth || panels >= kMaxPanels)
            throw DepthExceeded("integrate_adaptive: refinement limit reached on [" + std::to_string(worst.a) + ", "
                                + std::to_string(worst.b) + "] with error estimate " + std::to_string(error));
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = evaluate_panel(f, worst.a, mid, worst.depth + 1);
        Panel right = evaluate_panel(f, mid, worst.b, worst.depth + 1);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        abs_total += left.abs_value + right.abs_value - worst.abs_value;
        error = std::max(error, 0.0);
        queue.push(left);
        queue.push(right);
        ++panels;
    }
}

double cauchy_pv(const Integrand& f, double a, double b, double c, const QuadControl& ctl) {
    ctl.validate();
    if (!(a < c && c < b)) throw ParameterError("cauchy_pv: requires a < c < b");
    const double reach = std::min(c - a, b - c);

    QuadControl piece = ctl;
    piece.abs_tol = 0.1 * ctl.abs_tol;
    double outer = 0.0;
    if (c - reach > a) outer += integrate_adaptive(f, a, c - reach, piece);
    if (c + reach < b) outer += integrate_adaptive(f, c + reach, b, piece);

    // Symmetrized integrand: the odd part of the singularity cancels pointwise.
    const Integrand folded = [&](double t) { return f(c + t) + f(c - t); };

    constexpr int kMaxHalvings = 60;
    std::vector<double> sums{outer};
    std::vector<double> accelerated{outer};
    double previous_increment = 0.0;
    int growing = 0;
    double eps = reach;
    for (int k = 1; k <= kMaxHalvings; ++k) {
        const double next_eps = 0.5 * eps;
        const double increment = integrate_adaptive(folded, next_eps, eps, piece);
        eps = next_eps;
        sums.push_back(sums.back() + increment);

        const std::size_t m = sums.size();
        double acc = sums[m - 1];
        if (m >= 3) {
            const double d1 = sums[m - 1] - sums[m - 2];
            const double d0 = sums[m - 2] - sums[m - 3];
            if (d1 - d0 != 0.0) acc = sums[m - 1] - d1 * d1 / (d1 - d0);
        }
        accelerated.push_back(acc);

        if (k > 1 && std::abs(increment) > ctl.abs_tol && std::abs(increment) >= std::abs(previous_increment))
            ++growing;
        else
            growing = 0;
        if (growing >= 3)
            throw PVDivergent("cauchy_pv: symmetric partial sums grow as eps -> 0 (non-integrable even singularity)");
        previous_increment = increment;

        auto settled = [&](const std::vector<double>& s) {
            if (s.size() < 3) return false;
            const std::size_t n = s.size();
            return std::abs(s[n - 1] - s[n - 2]) < ctl.abs_tol && std::abs(s[n - 2] - s[n - 3]) < ctl.abs_tol
                   && std::abs(s[n - 1] - s[n - 3]) < ctl.abs_tol;
        };
        if (settled(sums)) return sums.back();
        if (k >= 3 && settled(accelerated)) return accelerated.back();
    }
    throw PVDivergent("cauchy_pv: symmetric partial sums did not converge");
}

Integrability integrability_class(double p) {
    return p > -1.0 ? Integrability::Integrable : Integrability::NonIntegrable;
}

GaussRule gauss_laguerre(int n, double a) {
    if (n < 1) throw ParameterError("gauss_laguerre: n must be >= 1");
    if (!(a > -1.0)) throw ParameterError("gauss_laguerre: a must be > -1");
    std::vector<double> diag(static_cast<std::size_t>(n)), off(static_cast<std::size_t>(n - 1));
    for (int j = 0; j < n; ++j) diag[j] = 2.0 * j + a + 1.0;
    for (int j = 0; j + 1 < n; ++j) off[j] = std::sqrt((j + 1.0) * (j + 1.0 + a));
    GaussRule rule;
    rule.nodes = tridiag_lowest_eigenvalues(diag, off, n, 1e-15).values;

    const double log_scale = specfun::log_gamma_fn(n + a + 1.0) - specfun::log_gamma_fn(n + 1.0);
    rule.weights.resize(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double& x = rule.nodes[i];
        for (int it = 0; it < 3; ++it) {
            const double slope = specfun::laguerre_derivative(n, a, x);
            if (slope == 0.0) break;
            x -= specfun::laguerre(n, a, x) / slope;
        }
        const double next = specfun::laguerre(n + 1, a, x);
        rule.weights[i] = std::exp(log_scale) * x / ((n + 1.0) * (n + 1.0) * next * next);
    }
    return rule;
}

double overlap(const EigenState& s1, const EigenState& s2, const QuadControl& ctl) {
    if (s1.alpha() != s2.alpha() || s1.domain() != s2.domain())
        throw DomainMismatch("overlap: states must share alpha and domain");
    const Integrand product = [&](double x) { return s1.psi(x) * s2.psi(x); };
    if (s1.domain() == Domain::HalfLine) return integrate_adaptive(product, 0.0, kHalfLineCutoff, ctl);
    // The product is odd when the parities differ.
    if (s1.parity() != s2.parity()) return 0.0;
    return 2.0 * integrate_adaptive(product, 0.0, kHalfLineCutoff, ctl);
}

double overlap_gauss(const EigenState& s1, const EigenState& s2) {
    if (s1.alpha() != s2.alpha() || s1.domain() != s2.domain())
        throw DomainMismatch("overlap_gauss: states must share alpha and domain");
    if (s1.beta() != s2.beta()) throw ParameterError("overlap_gauss: states must share beta");
    if (s1.domain() == Domain::FullLine && s1.parity() != s2.parity()) return 0.0;
    const double a = s1.beta() + 0.5;
    // y^a e^(-y) L_n1 L_n2 has polynomial degree n1 + n2.
    const GaussRule rule = gauss_laguerre((s1.n() + s2.n()) / 2 + 1, a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * specfun::laguerre(s1.n(), a, rule.nodes[i]) * specfun::laguerre(s2.n(), a, rule.nodes[i]);
    const double folds = s1.domain() == Domain::FullLine ? 2.0 : 1.0;
    return folds * 0.5 * s1.norm_const() * s2.norm_const() * sum;
}

double connection_residual(const EigenState& state, double eps, const QuadControl& ctl) {
    require_subcritical(state.alpha());
    if (state.domain() != Domain::FullLine) throw DomainMismatch("connection_residual: needs a whole-line state");
    if (!(eps > 0.0)) throw ParameterError("connection_residual: eps must be > 0");

    const double jump = state.dpsi(eps) - state.dpsi(-eps);
    if (state.alpha() == 0.0) return jump;

    const Integrand kernel = [&](double x) { return state.psi(x) / (x * x); };
    double integral;
    if (state.parity() == Parity::Odd) {
        integral = cauchy_pv(kernel, -eps, eps, 0.0, ctl);
    } else {
        if (integrability_class(state.beta() - 1.0) == Integrability::NonIntegrable)
            throw NonIntegrableError("connection_residual: psi/x^2 is not integrable at the origin for this even state");
        QuadControl tight = ctl;
        tight.rel_tol = std::min(ctl.rel_tol, 1e-13);
        tight.abs_tol = std::min(ctl.abs_tol, 1e-300);
        integral = 2.0 * integrate_adaptive(kernel, 0.0, eps, tight);
    }
    return jump - state.alpha() * integral;
}

} // namespace sho
