#include "sho/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "sho/errors.hpp"
#include "sho/tridiag.hpp"

namespace sho {

std::string_view to_string(OracleMethod m) {
    return m == OracleMethod::FiniteDifference ? "finite-difference" : "shooting";
}

void GridSpec::validate() const {
    if (!(x_min > 0.0 && x_min < x_max)) throw ParameterError("GridSpec: need 0 < x_min < x_max");
    if (n_points < 100) throw ParameterError("GridSpec: n_points must be >= 100");
}

std::vector<double> oracle_grid(const GridSpec& grid) {
    grid.validate();
    const double t0 = std::log(grid.x_min) + grid.x_min;
    const double t1 = std::log(grid.x_max) + grid.x_max;
    const int n = grid.n_points;
    std::vector<double> xs(static_cast<std::size_t>(n));
    double s = std::log(grid.x_min); // Newton in s = ln x on s + e^s = t
    for (int i = 0; i < n; ++i) {
        const double t = t0 + (t1 - t0) * i / (n - 1);
        for (int it = 0; it < 60; ++it) {
            const double step = (s + std::exp(s) - t) / (1.0 + std::exp(s));
            s -= step;
            if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(s))) break;
        }
        xs[i] = std::exp(s);
    }
    xs.front() = grid.x_min;
    xs.back() = grid.x_max;
    return xs;
}

OracleResult fd_eigen(double alpha, const GridSpec& grid, int k) {
    require_subcritical(alpha);
    if (k < 1) throw ParameterError("fd_eigen: k must be >= 1");
    const std::vector<double> x = oracle_grid(grid);
    const std::size_t interior = x.size() - 2;

    // -psi'' on a non-uniform grid is K psi = mu W psi with K symmetric
    // tridiagonal and W = diag(cell widths); W^(-1/2) K W^(-1/2) keeps the
    // symmetry.
    std::vector<double> diag(interior), off(interior - 1), width(interior);
    for (std::size_t i = 0; i < interior; ++i) {
        const double hl = x[i + 1] - x[i];
        const double hr = x[i + 2] - x[i + 1];
        const double xi = x[i + 1];
        width[i] = 0.5 * (hl + hr);
        diag[i] = (1.0 / hl + 1.0 / hr) / width[i] + xi * xi + alpha / (xi * xi);
    }
    for (std::size_t i = 0; i + 1 < interior; ++i) {
        const double hr = x[i + 2] - x[i + 1];
        off[i] = -1.0 / (hr * std::sqrt(width[i] * width[i + 1]));
    }

    const TridiagEigenvalues eig = tridiag_lowest_eigenvalues(diag, off, k, 1e-12);
    OracleResult out;
    out.method = OracleMethod::FiniteDifference;
    out.grid = grid;
    out.eigenvalues.reserve(eig.values.size());
    for (double mu : eig.values) out.eigenvalues.push_back(0.5 * mu);
    out.residual_estimate = 0.25 * eig.max_width;
    return out;
}

OracleResult fd_eigen_extrapolated(double alpha, const GridSpec& grid, int k, const std::vector<double>& cutoffs) {
    require_subcritical(alpha);
    if (cutoffs.size() < 2) throw ParameterError("fd_eigen_extrapolated: need at least two cutoffs");
    const double beta = select_beta(alpha, alpha == 0.0 ? std::optional{BetaBranch::Zero} : std::nullopt);
    const double exponent = 2.0 * beta + 1.0;

    const std::size_t m = cutoffs.size();
    std::vector<double> r(m);
    std::vector<std::vector<double>> levels(m);
    for (std::size_t i = 0; i < m; ++i) {
        GridSpec g = grid;
        g.x_min = cutoffs[i];
        levels[i] = fd_eigen(alpha, g, k).eigenvalues;
        r[i] = std::pow(cutoffs[i], exponent);
    }

    // Neville's scheme evaluated at r = 0 over points [first, m).
    auto neville = [&](std::size_t first, int level) {
        std::vector<double> p;
        std::vector<double> rr;
        for (std::size_t i = first; i < m; ++i) {
            p.push_back(levels[i][static_cast<std::size_t>(level)]);
            rr.push_back(r[i]);
        }
        const std::size_t n = p.size();
        for (std::size_t d = 1; d < n; ++d)
            for (std::size_t i = 0; i + d < n; ++i)
                p[i] = (rr[i + d] * p[i] - rr[i] * p[i + 1]) / (rr[i + d] - rr[i]);
        return p[0];
    };

    OracleResult out;
    out.method = OracleMethod::FiniteDifference;
    out.grid = grid;
    out.grid.x_min = cutoffs.back();
    for (int level = 0; level < k; ++level) {
        const double full = neville(0, level);
        const double reduced = neville(1, level);
        out.eigenvalues.push_back(full);
        out.residual_estimate = std::max(out.residual_estimate, std::abs(full - reduced));
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    return out;
}

std::pair<double, double> frobenius_start(double alpha, double eps_energy, double x0, int n_terms,
                                          std::optional<double> beta) {
    require_subcritical(alpha);
    if (n_terms < 1) throw ParameterError("frobenius_start: n_terms must be >= 1");
    if (!(x0 > 0.0)) throw ParameterError("frobenius_start: x0 must be > 0");
    const double b = beta ? *beta : select_beta(alpha, std::nullopt);
    const double s = b + 1.0;

    double c_prev2 = 0.0, c_prev = 0.0, c = 1.0;
    double psi = 0.0, dpsi = 0.0;
    const double x2 = x0 * x0;
    double power = std::pow(x0, s); // x0^(s+2j)
    for (int j = 0; j < n_terms; ++j) {
        if (j > 0) {
            const double e = s + 2.0 * j;
            c = (c_prev2 - 2.0 * eps_energy * c_prev) / (e * (e - 1.0) - alpha);
            power *= x2;
        }
        const double e = s + 2.0 * j;
        psi += c * power;
        dpsi += c * e * power / x0;
        c_prev2 = c_prev;
        c_prev = c;
    }
    return {psi, dpsi};
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

using State = std::array<double, 2>; // psi, psi'

struct Rhs {
    double alpha, two_eps;
    State operator()(double x, const State& y) const {
        return {y[1], (x * x + alpha / (x * x) - two_eps) * y[0]};
    }
};

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
    State out = y;
    for (const auto& [coef, k] : terms) {
        out[0] += h * coef * (*k)[0];
        out[1] += h * coef * (*k)[1];
    }
    return out;
}

} // namespace

ShootingTrace shoot_trace(double alpha, double eps_energy, const ShootingOptions& opts, bool keep_path) {
    require_subcritical(alpha);
    const auto [psi0, dpsi0] = frobenius_start(alpha, eps_energy, opts.x0, opts.series_terms, opts.beta);
    const Rhs rhs{alpha, 2.0 * eps_energy};
    const double rtol = opts.ode_rel_tol;
    constexpr double kMaxStep = 0.05;
    constexpr double kRescale = 1e200;

    ShootingTrace trace;
    State y{psi0, dpsi0};
    double x = opts.x0;
    double h = 0.01 * opts.x0;
    State k1 = rhs(x, y);
    State peak{std::abs(y[0]), std::abs(y[1])};
    if (keep_path) {
        trace.xs.push_back(x);
        trace.psi.push_back(y[0]);
    }
    int steps = 0;
    while (x < opts.x_max) {
        if (++steps > 2'000'000) throw ConvergenceError("shoot_trace: step limit reached");
        h = std::min({h, kMaxStep, opts.x_max - x});
        const State k2 = rhs(x + c2 * h, axpy(y, h, {{a21, &k1}}));
        const State k3 = rhs(x + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
        const State k4 = rhs(x + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        const State k5 = rhs(x + c5 * h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        const State k6 = rhs(x + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        const State yn = axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        const State k7 = rhs(x + h, yn);

        double err = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double scale = rtol * std::max(std::abs(y[i]), std::abs(yn[i])) + rtol * 1e-3 * peak[i];
            err = std::max(err, std::abs(e) / scale);
        }
        if (!std::isfinite(err)) {
            h *= 0.1;
            continue;
        }
        if (err <= 1.0) {
            if ((yn[0] > 0.0 && y[0] < 0.0) || (yn[0] < 0.0 && y[0] > 0.0)) ++trace.nodes;
            x += h;
            y = yn;
            k1 = k7;
            if (std::abs(y[0]) > kRescale) {
                y[0] /= kRescale;
                y[1] /= kRescale;
                k1[0] /= kRescale;
                k1[1] /= kRescale;
                peak[0] /= kRescale;
                peak[1] /= kRescale;
            }
            peak[0] = std::max(peak[0], std::abs(y[0]));
            peak[1] = std::max(peak[1], std::abs(y[1]));
            if (keep_path) {
                trace.xs.push_back(x);
                trace.psi.push_back(y[0]);
            }
        }
        const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h *= factor;
    }
    trace.psi_end = y[0];
    return trace;
}

OracleResult shoot_eigen(double alpha, int n_target, const ShootingOptions& opts) {
    require_subcritical(alpha);
    if (n_target < 0) throw ParameterError("shoot_eigen: n_target must be >= 0");
    if (alpha == 0.0 && !opts.beta) throw ParameterError("shoot_eigen: alpha = 0 requires an explicit beta");

    // More than n_target nodes means the trial energy is above level n_target.
    auto above = [&](double e) { return shoot_trace(alpha, e, opts).nodes > n_target; };

    constexpr double kScanStep = 0.5;
    const double scan_limit = 2.0 * n_target + 20.0;
    double lo = 0.0, hi = -1.0;
    for (double e = kScanStep; e <= scan_limit + 1e-12; e += kScanStep) {
        if (above(e)) {
            hi = e;
            break;
        }
        lo = e;
    }
    if (hi < 0.0) throw BracketError("shoot_eigen: no level with " + std::to_string(n_target) + " nodes below eps = "
                                     + std::to_string(scan_limit));

    while (hi - lo > opts.energy_tol) {
        const double mid = 0.5 * (lo + hi);
        if (above(mid))
            hi = mid;
        else
            lo = mid;
    }
    OracleResult out;
    out.method = OracleMethod::Shooting;
    out.grid = GridSpec{opts.x0, opts.x_max, 100};
    out.eigenvalues = {0.5 * (lo + hi)};
    out.residual_estimate = 0.5 * (hi - lo);
    return out;
}

OracleResult shoot_spectrum(double alpha, int count, const ShootingOptions& opts) {
    OracleResult out;
    out.method = OracleMethod::Shooting;
    out.grid = GridSpec{opts.x0, opts.x_max, 100};
    for (int n = 0; n < count; ++n) {
        const OracleResult one = shoot_eigen(alpha, n, opts);
        out.eigenvalues.push_back(one.eigenvalues.front());
        out.residual_estimate = std::max(out.residual_estimate, one.residual_estimate);
    }
    return out;
}

CompareReport compare(const SpectrumTable& analytic, const OracleResult& oracle, double tol) {
    CompareReport rep;
    rep.tol = tol;
    rep.analytic = distinct_levels(analytic);
    rep.numeric = oracle.eigenvalues;
    if (rep.numeric.empty() || rep.numeric.size() > rep.analytic.size())
        throw ShapeMismatch("compare: oracle has " + std::to_string(rep.numeric.size()) + " levels, table has "
                            + std::to_string(rep.analytic.size()));
    for (std::size_t i = 0; i < rep.numeric.size(); ++i) {
        const double e = std::abs(rep.numeric[i] - rep.analytic[i]) / std::abs(rep.analytic[i]);
        rep.rel_errors.push_back(e);
        rep.max_error = std::max(rep.max_error, e);
    }
    rep.passed = rep.max_error <= tol;
    if (analytic.domain == Domain::FullLine && analytic.alpha == 0.0)
        rep.note = "the oracle imposes psi = 0 at the inner cutoff and only sees the odd (beta = 0) branch; "
                   "the even levels of the regular oscillator have no counterpart";
    return rep;
}

} // namespace sho
