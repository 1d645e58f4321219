#include "sho/model.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "sho/errors.hpp"

namespace sho {

namespace {
constexpr double kIndicialTol = 1e-12;

std::string supercritical_message(double alpha) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, alpha); // shortest round-trip form
    return "supercritical potential: alpha <= -1/4 (alpha = " + std::string(buf, res.ptr)
           + "); no admissible bound states (fall to the center)";
}
} // namespace

SupercriticalError::SupercriticalError(double alpha)
    : Error(supercritical_message(alpha)), alpha_(alpha) {}

void OscillatorSpec::validate() const {
    if (!(mass > 0.0)) throw ParameterError("OscillatorSpec: mass must be > 0");
    if (!(omega > 0.0)) throw ParameterError("OscillatorSpec: omega must be > 0");
    if (!(hbar > 0.0)) throw ParameterError("OscillatorSpec: hbar must be > 0");
    if (!std::isfinite(alpha)) throw ParameterError("OscillatorSpec: alpha must be finite");
}

double OscillatorSpec::x_from_xi(double xi) const { return xi / std::sqrt(lambda()); }

IndicialRoots indicial_roots(double alpha) {
    IndicialRoots r;
    const double disc = 0.25 + alpha;
    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        r.beta_plus = -0.5 + s;
        r.beta_minus = -0.5 - s;
    } else {
        r.complex = true;
        r.beta_plus = r.beta_minus = -0.5;
        r.imag_part = std::sqrt(-disc);
    }
    return r;
}

BetaSolution admissible_betas(double alpha) {
    const IndicialRoots roots = indicial_roots(alpha);
    BetaSolution sol;
    sol.beta_plus = roots.beta_plus;
    sol.beta_minus = roots.beta_minus;
    if (is_supercritical(alpha)) {
        sol.supercritical = true;
        return sol;
    }
    if (alpha == 0.0) {
        sol.admissible = {-1.0, 0.0};
    } else {
        sol.admissible = {roots.beta_plus};
    }
    return sol;
}

void require_subcritical(double alpha) {
    if (is_supercritical(alpha)) throw SupercriticalError(alpha);
}

double beta_of(BetaBranch branch) { return branch == BetaBranch::MinusOne ? -1.0 : 0.0; }

double select_beta(double alpha, std::optional<BetaBranch> branch) {
    require_subcritical(alpha);
    if (alpha == 0.0) {
        if (!branch) throw ParameterError("alpha = 0 requires an explicit beta branch (-1 or 0)");
        return beta_of(*branch);
    }
    return admissible_betas(alpha).admissible.front();
}

BoundaryClass classify_boundary(double alpha, double beta) {
    require_subcritical(alpha);
    const BetaSolution sol = admissible_betas(alpha);
    bool found = false;
    for (double b : sol.admissible) found = found || std::abs(b - beta) <= kIndicialTol;
    if (!found) throw InadmissibleError("classify_boundary: beta is not an admissible exponent for alpha");

    if (alpha == 0.0) {
        if (beta < -0.5) return {OriginValue::FiniteNonzero, OriginSlope::Zero};
        return {OriginValue::Zero, OriginSlope::FiniteNonzero};
    }
    if (alpha > 0.0) return {OriginValue::Zero, OriginSlope::Zero};
    return {OriginValue::Zero, OriginSlope::Infinite};
}

double potential_value(const OscillatorSpec& spec, double x) {
    if (x == 0.0) {
        if (spec.alpha != 0.0) throw SingularPointError("potential_value: V is singular at x = 0");
        return 0.0;
    }
    return 0.5 * spec.mass * spec.omega * spec.omega * x * x
           + spec.hbar * spec.hbar * spec.alpha / (2.0 * spec.mass * x * x);
}

double map_radial(double alpha, int l) {
    if (l < 0) throw ParameterError("map_radial: l must be >= 0");
    return alpha + static_cast<double>(l) * (l + 1);
}

} // namespace sho
