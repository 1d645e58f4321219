#pragma once
// Lowest eigenvalues of a real symmetric tridiagonal matrix by Sturm-sequence
// multisection. Each pass evaluates four shifts through the kernels layer.

#include <span>
#include <vector>

namespace sho {

struct TridiagEigenvalues {
    std::vector<double> values; // ascending
    double max_width = 0.0;     // widest final bracket
};

/// The k smallest eigenvalues, each bracketed to width <= abs_tol + 4 eps |lambda|.
/// offdiag has length diag.size() - 1. Throws ConvergenceError if a bracket
/// stops shrinking.
TridiagEigenvalues tridiag_lowest_eigenvalues(std::span<const double> diag, std::span<const double> offdiag,
                                              int k, double abs_tol = 1e-13);

/// Number of eigenvalues strictly below shift.
int tridiag_count_below(std::span<const double> diag, std::span<const double> offdiag, double shift);

} // namespace sho
