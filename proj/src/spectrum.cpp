#include "sho/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "sho/errors.hpp"
#include "sho/kernels.hpp"
#include "sho/quad.hpp"
#include "sho/specfun.hpp"

namespace sho {

std::string_view to_string(Domain d) { return d == Domain::HalfLine ? "half" : "full"; }

std::string_view to_string(Parity p) {
    switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::None: break;
    }
    return "none";
}

Domain parse_domain(std::string_view s) {
    if (s == "half") return Domain::HalfLine;
    if (s == "full") return Domain::FullLine;
    throw ParameterError("unknown domain '" + std::string(s) + "' (expected half|full)");
}

Parity parse_parity(std::string_view s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    if (s == "none") return Parity::None;
    throw ParameterError("unknown parity '" + std::string(s) + "' (expected even|odd)");
}

double energy(int n, double beta) { return 2.0 * n + beta + 1.5; }

double normalization_constant(int n, double beta, Domain domain) {
    if (n < 0) throw ParameterError("normalization_constant: n must be >= 0");
    if (!(beta + 1.5 > 0.0)) throw ParameterError("normalization_constant: beta must be > -3/2");
    // int_0^inf x^(2beta+2) e^(-x^2) [L_n^(beta+1/2)(x^2)]^2 dx = Gamma(n+beta+3/2) / (2 n!)
    const double log_norm_sq = std::log(2.0) + specfun::log_gamma_fn(n + 1.0)
                               - specfun::log_gamma_fn(n + beta + 1.5);
    const double half = std::exp(0.5 * log_norm_sq);
    return domain == Domain::HalfLine ? half : half / std::numbers::sqrt2;
}

EigenState::EigenState(double alpha, int n, double beta, Parity parity, Domain domain)
    : alpha_(alpha), n_(n), beta_(beta), parity_(parity), domain_(domain),
      energy_(energy(n, beta)), norm_(normalization_constant(n, beta, domain)) {
    require_subcritical(alpha);
    if (n < 0) throw ParameterError("EigenState: n must be >= 0");
    if ((domain == Domain::HalfLine) != (parity == Parity::None))
        throw ParameterError("EigenState: half-line states have no parity, whole-line states need one");
    (void)classify_boundary(alpha, beta); // throws InadmissibleError
}

double EigenState::radial(double r) const {
    const double lag = specfun::laguerre(n_, beta_ + 0.5, r * r);
    return norm_ * std::pow(r, beta_ + 1.0) * std::exp(-0.5 * r * r) * lag;
}

double EigenState::radial_slope(double r) const {
    const double s = beta_ + 1.0;
    const double y = r * r;
    const double lag = specfun::laguerre(n_, beta_ + 0.5, y);
    if (r == 0.0) {
        if (s == 0.0 || s > 1.0) return 0.0;
        if (s == 1.0) return norm_ * lag;
        return std::copysign(std::numeric_limits<double>::infinity(), norm_ * lag);
    }
    const double dlag = specfun::laguerre_derivative(n_, beta_ + 0.5, y);
    // d/dr [r^s e^(-r^2/2) L(r^2)] = e^(-r^2/2) [s r^(s-1) L + r^(s+1) (2 L' - L)]
    double bracket = std::pow(r, s + 1.0) * (2.0 * dlag - lag);
    if (s != 0.0) bracket += s * std::pow(r, s - 1.0) * lag;
    return norm_ * std::exp(-0.5 * y) * bracket;
}

double EigenState::psi(double x) const {
    if (x >= 0.0) return radial(x);
    if (domain_ == Domain::HalfLine) throw ParameterError("psi: half-line state evaluated at x < 0");
    const double p = parity_ == Parity::Odd ? -1.0 : 1.0;
    return p * radial(-x);
}

double EigenState::dpsi(double x) const {
    if (x >= 0.0) return radial_slope(x);
    if (domain_ == Domain::HalfLine) throw ParameterError("dpsi: half-line state evaluated at x < 0");
    const double p = parity_ == Parity::Odd ? -1.0 : 1.0;
    return -p * radial_slope(-x);
}

void EigenState::sample(std::span<const double> xs, std::span<double> out) const {
    if (xs.size() != out.size()) throw ParameterError("sample: output length differs from input");
    std::vector<double> y(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 0.0 && domain_ == Domain::HalfLine)
            throw ParameterError("sample: half-line state evaluated at x < 0");
        y[i] = xs[i] * xs[i];
    }
    kernels::laguerre(n_, beta_ + 0.5, y, out);
    const double p = parity_ == Parity::Odd ? -1.0 : 1.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = std::abs(xs[i]);
        double v = norm_ * std::pow(r, beta_ + 1.0) * std::exp(-0.5 * y[i]) * out[i];
        if (xs[i] < 0.0) v *= p;
        out[i] = v;
    }
}

EigenState halfline_state(double alpha, int n, std::optional<BetaBranch> branch) {
    const double beta = select_beta(alpha, branch);
    return EigenState(alpha, n, beta, Parity::None, Domain::HalfLine);
}

EigenState fullline_state(double alpha, int n, Parity parity) {
    require_subcritical(alpha);
    if (parity == Parity::None) throw ParameterError("fullline_state: parity must be even or odd");
    double beta;
    if (alpha == 0.0)
        beta = parity == Parity::Even ? -1.0 : 0.0;
    else
        beta = select_beta(alpha, std::nullopt);
    return EigenState(alpha, n, beta, parity, Domain::FullLine);
}

std::vector<EigenState> fullline_states(double alpha, int n) {
    return {fullline_state(alpha, n, Parity::Even), fullline_state(alpha, n, Parity::Odd)};
}

SpectrumTable spectrum_table(double alpha, int n_max, Domain domain, std::optional<BetaBranch> branch) {
    require_subcritical(alpha);
    if (n_max < 0) throw ParameterError("spectrum_table: n_max must be >= 0");
    SpectrumTable table;
    table.alpha = alpha;
    table.domain = domain;
    for (int n = 0; n <= n_max; ++n) {
        if (domain == Domain::HalfLine) {
            table.states.push_back(halfline_state(alpha, n, branch));
        } else {
            for (auto& s : fullline_states(alpha, n)) table.states.push_back(std::move(s));
        }
    }
    std::stable_sort(table.states.begin(), table.states.end(), [](const EigenState& a, const EigenState& b) {
        if (a.energy_eps() != b.energy_eps()) return a.energy_eps() < b.energy_eps();
        return static_cast<int>(a.parity()) < static_cast<int>(b.parity());
    });
    table.degeneracy.reserve(table.states.size());
    for (const auto& s : table.states) {
        const auto mult = std::count_if(table.states.begin(), table.states.end(),
                                        [&](const EigenState& o) { return o.energy_eps() == s.energy_eps(); });
        table.degeneracy.push_back(static_cast<int>(mult));
    }
    table.spacing = (domain == Domain::FullLine && alpha == 0.0) ? 1.0 : 2.0;
    return table;
}

std::vector<double> distinct_levels(const SpectrumTable& table) {
    std::vector<double> levels;
    for (const auto& s : table.states)
        if (levels.empty() || levels.back() != s.energy_eps()) levels.push_back(s.energy_eps());
    return levels;
}

DensityCurrent density_current(const EigenState& state, double x) {
    const double psi = state.psi(x);
    const double slope = state.dpsi(x);
    // J = Im(psi* psi'); a real eigenfunction carries no current, including at
    // points where psi' diverges.
    const double current = std::isfinite(slope) ? std::imag(std::conj(std::complex<double>(psi)) * slope) : 0.0;
    return {psi * psi, current};
}

PerturbationResult perturbation_first_order(int n, Parity parity) {
    const EigenState state = fullline_state(0.0, n, parity);
    // |psi|^2 / x^2 ~ x^(2 beta) near the origin.
    if (integrability_class(2.0 * state.beta()) == Integrability::NonIntegrable) return {true, 0.0};
    // <psi| 1/(2x^2) |psi> over the whole line = 2 int_0^inf (psi/x)^2 / 2 dx.
    auto integrand = [&](double x) {
        const double q = state.psi(x) / x;
        return q * q;
    };
    QuadControl ctl;
    ctl.abs_tol = 1e-13;
    ctl.rel_tol = 1e-12;
    return {false, integrate_adaptive(integrand, 0.0, kHalfLineCutoff, ctl)};
}

} // namespace sho
