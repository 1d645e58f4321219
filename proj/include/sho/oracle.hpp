#pragma once
// Numerical eigenvalue oracles that do not use the closed-form solution.
//
// Both solvers work with  -psi'' + (x^2 + alpha/x^2) psi = mu psi  on
// (x_min, x_max) and report eps = mu / 2, the energy in units of hbar*w.
// Only the indicial exponent beta is borrowed from the model (local analysis).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sho/model.hpp"
#include "sho/spectrum.hpp"

namespace sho {

struct GridSpec {
    double x_min = 1e-3; // inner cutoff, Dirichlet
    double x_max = 12.0; // outer cutoff, Dirichlet
    int n_points = 4000;

    void validate() const;
};

enum class OracleMethod { FiniteDifference, Shooting };

std::string_view to_string(OracleMethod m);

struct OracleResult {
    std::vector<double> eigenvalues; // eps, ascending
    OracleMethod method = OracleMethod::FiniteDifference;
    GridSpec grid;
    double residual_estimate = 0.0;
};

/// Log-linear grid: t = ln x + x uniform in t, so the spacing is geometric near
/// the origin and roughly constant further out.
std::vector<double> oracle_grid(const GridSpec& grid);

/// Lowest k eigenvalues of the three-point finite-difference Hamiltonian on
/// oracle_grid(grid), symmetrized and solved by Sturm bisection.
OracleResult fd_eigen(double alpha, const GridSpec& grid, int k);

/// Cutoff sequence used by fd_eigen_extrapolated by default.
inline const std::vector<double> kDefaultCutoffs = {1e-4, 1e-6, 1e-8};

/// fd_eigen repeated over a sequence of inner cutoffs and extrapolated to zero
/// cutoff by polynomial (Neville) extrapolation in r = x_min^(2 beta + 1).
/// residual_estimate is the change made by the last extrapolation order.
OracleResult fd_eigen_extrapolated(double alpha, const GridSpec& grid, int k,
                                   const std::vector<double>& cutoffs = kDefaultCutoffs);

/// psi and psi' at x0 from the Frobenius series sum_j c_j x^(beta+1+2j), c_0 = 1,
///   c_j [(beta+1+2j)(beta+2j) - alpha] = c_{j-2} - 2 eps c_{j-1}.
/// beta defaults to the admissible exponent (alpha = 0 needs it explicitly).
std::pair<double, double> frobenius_start(double alpha, double eps_energy, double x0, int n_terms,
                                          std::optional<double> beta = std::nullopt);

struct ShootingOptions {
    double x0 = 1e-3;
    double x_max = 12.0;
    int series_terms = 8;
    double energy_tol = 1e-10;
    double ode_rel_tol = 1e-11;
    std::optional<double> beta; // required at alpha = 0
};

/// Outward integration result at a trial energy.
struct ShootingTrace {
    int nodes = 0;           // sign changes on (x0, x_max]
    double psi_end = 0.0;    // psi(x_max), rescaled
    std::vector<double> xs;  // accepted step ends (optional)
    std::vector<double> psi;
};

/// Integrate outward from the Frobenius start with adaptive Dormand-Prince 5(4).
ShootingTrace shoot_trace(double alpha, double eps_energy, const ShootingOptions& opts, bool keep_path = false);

/// Level with exactly n_target interior nodes, by bisection on the node count.
/// Levels are bracketed by scanning eps in steps of 0.5 from 0 to 2 n_target + 20.
OracleResult shoot_eigen(double alpha, int n_target, const ShootingOptions& opts = {});

/// Shooting for levels 0..count-1.
OracleResult shoot_spectrum(double alpha, int count, const ShootingOptions& opts = {});

struct CompareReport {
    std::vector<double> analytic;
    std::vector<double> numeric;
    std::vector<double> rel_errors;
    double max_error = 0.0;
    double tol = 0.0;
    bool passed = false;
    std::string note;
};

/// Level-by-level comparison of the distinct analytic levels with an oracle.
/// Throws ShapeMismatch when the oracle returns more levels than the table has.
CompareReport compare(const SpectrumTable& analytic, const OracleResult& oracle, double tol);

} // namespace sho
