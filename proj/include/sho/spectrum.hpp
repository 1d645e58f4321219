#pragma once
// Closed-form bound states of the singular oscillator in natural units.
//
// Half line:  psi_n(x) = A_n x^(beta+1) e^(-x^2/2) L_n^(beta+1/2)(x^2),
//             eps_n = 2n + beta + 3/2,  A_n = sqrt(2 n! / Gamma(n + beta + 3/2)).
// Whole line: psi(-x) = p psi(x) with parity p = +-1 and A_n / sqrt(2).
// For alpha != 0 both parities share every level; at alpha = 0 the even states
// come from beta = -1 and the odd ones from beta = 0.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sho/model.hpp"

namespace sho {

enum class Domain { HalfLine, FullLine };
enum class Parity { Even, Odd, None };

std::string_view to_string(Domain d);
std::string_view to_string(Parity p);
Domain parse_domain(std::string_view s);
Parity parse_parity(std::string_view s);

/// One normalized bound state. Immutable once built.
class EigenState {
public:
    EigenState(double alpha, int n, double beta, Parity parity, Domain domain);

    double alpha() const { return alpha_; }
    int n() const { return n_; }
    double beta() const { return beta_; }
    Parity parity() const { return parity_; }
    Domain domain() const { return domain_; }
    double energy_eps() const { return energy_; }
    double norm_const() const { return norm_; }

    /// psi(x). On the half line x must be >= 0.
    double psi(double x) const;
    /// dpsi/dx from the analytic derivative. At x = 0 returns the x -> 0+ limit
    /// (possibly infinite).
    double dpsi(double x) const;

    /// psi at many points; the Laguerre factor goes through the SIMD kernels.
    void sample(std::span<const double> xs, std::span<double> out) const;

private:
    double radial(double r) const;       // psi on r >= 0
    double radial_slope(double r) const; // d/dr of the above

    double alpha_;
    int n_;
    double beta_;
    Parity parity_;
    Domain domain_;
    double energy_;
    double norm_;
};

/// eps = 2n + beta + 3/2.
double energy(int n, double beta);

/// Closed-form normalization constant; the whole-line constant is the
/// half-line one divided by sqrt(2).
double normalization_constant(int n, double beta, Domain domain = Domain::HalfLine);

/// Half-line state. alpha = 0 needs an explicit branch.
EigenState halfline_state(double alpha, int n, std::optional<BetaBranch> branch = std::nullopt);

/// Whole-line states with half-line index n: {Even, Odd} for alpha != 0; at
/// alpha = 0 the Even state (beta = -1, eps = 2n + 1/2) and the Odd state
/// (beta = 0, eps = 2n + 3/2).
std::vector<EigenState> fullline_states(double alpha, int n);

/// Whole-line state of a given parity.
EigenState fullline_state(double alpha, int n, Parity parity);

struct SpectrumTable {
    double alpha = 0.0;
    Domain domain = Domain::HalfLine;
    std::vector<EigenState> states;  // sorted by energy, Even before Odd
    std::vector<int> degeneracy;     // multiplicity of the level of states[i]
    double spacing = 2.0;            // distance between consecutive distinct levels
};

/// All states with half-line index n <= n_max, sorted by energy.
/// Half line at alpha = 0 needs an explicit branch.
SpectrumTable spectrum_table(double alpha, int n_max, Domain domain,
                             std::optional<BetaBranch> branch = std::nullopt);

/// Distinct energy levels of a table, ascending.
std::vector<double> distinct_levels(const SpectrumTable& table);

struct DensityCurrent {
    double rho;
    double current;
};

/// rho = |psi|^2 and J = Im(psi* psi') (hbar = m = 1). Eigenfunctions are real,
/// so J is identically zero.
DensityCurrent density_current(const EigenState& state, double x);

struct PerturbationResult {
    bool divergent = false;
    double slope_per_alpha = 0.0; // <psi| 1/(2x^2) |psi>, valid if !divergent
};

/// First-order shift per unit alpha of the alpha = 0 whole-line state
/// (Hermite function of index 2n for Even, 2n+1 for Odd). Even states have
/// psi(0) != 0 and the matrix element diverges.
PerturbationResult perturbation_first_order(int n, Parity parity);

} // namespace sho
