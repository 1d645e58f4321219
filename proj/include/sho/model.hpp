#pragma once
// Physical parameterization and the near-origin (indicial) analysis of
//   V(x) = m w^2 x^2 / 2 + hbar^2 alpha / (2 m x^2).
//
// Everything downstream works in natural units hbar = m = w = 1, where
// lambda = 1, xi = x, and energies are eps = E / (hbar w). The time-independent
// equation then reads  psi'' + (2 eps - x^2 - alpha / x^2) psi = 0.

#include <optional>
#include <vector>

namespace sho {

/// Physical parameters. Only used to scale at I/O boundaries.
struct OscillatorSpec {
    double mass = 1.0;
    double omega = 1.0;
    double hbar = 1.0;
    double alpha = 0.0;

    void validate() const;

    /// lambda = m w / hbar.
    double lambda() const { return mass * omega / hbar; }
    /// k^2 = 2 m E / hbar^2.
    double k_squared(double energy) const { return 2.0 * mass * energy / (hbar * hbar); }
    /// E = eps * hbar * w.
    double energy_from_eps(double eps) const { return eps * hbar * omega; }
    /// x = xi / sqrt(lambda).
    double x_from_xi(double xi) const;
};

/// Roots of beta (beta + 1) = alpha.
struct IndicialRoots {
    double beta_plus = 0.0;
    double beta_minus = 0.0;
    /// True when alpha < -1/4; the roots are then -1/2 +- i*imag_part.
    bool complex = false;
    double imag_part = 0.0;
};

IndicialRoots indicial_roots(double alpha);

/// Admissible near-origin exponents (psi ~ x^(beta+1)).
struct BetaSolution {
    double beta_plus = 0.0;
    double beta_minus = 0.0;
    std::vector<double> admissible;
    bool supercritical = false;
};

/// Hermiticity criterion: keep beta = -1 (only at alpha = 0) or beta > -1/2.
/// alpha <= -1/4 is supercritical and has no admissible exponent.
BetaSolution admissible_betas(double alpha);

/// True when alpha <= -1/4.
inline bool is_supercritical(double alpha) { return !(alpha > -0.25); }

/// Throws SupercriticalError when alpha <= -1/4.
void require_subcritical(double alpha);

/// Branch choice at alpha = 0, where both beta = -1 and beta = 0 are admissible.
enum class BetaBranch { MinusOne, Zero };

double beta_of(BetaBranch branch);

/// The admissible exponent for alpha != 0, or the selected branch at alpha = 0.
/// Throws SupercriticalError, or ParameterError if alpha = 0 without a branch.
double select_beta(double alpha, std::optional<BetaBranch> branch);

enum class OriginValue { Zero, FiniteNonzero };
enum class OriginSlope { Zero, FiniteNonzero, Infinite };

struct BoundaryClass {
    OriginValue psi_at_origin;
    OriginSlope dpsi_at_origin;

    friend bool operator==(const BoundaryClass&, const BoundaryClass&) = default;
};

/// Behaviour of psi and dpsi/dx as x -> 0+. Throws SupercriticalError for
/// alpha <= -1/4 and InadmissibleError when beta is not admissible.
BoundaryClass classify_boundary(double alpha, double beta);

/// V(x) in the units of spec. Throws SingularPointError at x = 0 with alpha != 0.
double potential_value(const OscillatorSpec& spec, double x);

/// Effective alpha of the l-th partial wave of the three-dimensional problem.
double map_radial(double alpha, int l);

} // namespace sho
