#include "sho/tridiag.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>
#include <utility>

#include "sho/errors.hpp"
#include "sho/kernels.hpp"

namespace sho {

namespace {

struct Prepared {
    std::vector<double> offdiag_sq;
    double pivmin = DBL_MIN;
    double lower = 0.0; // Gershgorin bounds
    double upper = 0.0;
};

Prepared prepare(std::span<const double> diag, std::span<const double> offdiag) {
    if (diag.empty()) throw ParameterError("tridiag: empty matrix");
    if (offdiag.size() + 1 != diag.size()) throw ParameterError("tridiag: offdiag must have length n - 1");
    Prepared p;
    p.offdiag_sq.resize(offdiag.size());
    double max_sq = 1.0;
    for (std::size_t i = 0; i < offdiag.size(); ++i) {
        p.offdiag_sq[i] = offdiag[i] * offdiag[i];
        max_sq = std::max(max_sq, p.offdiag_sq[i]);
    }
    p.pivmin = DBL_MIN * max_sq;
    p.lower = std::numeric_limits<double>::infinity();
    p.upper = -p.lower;
    const std::size_t n = diag.size();
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(offdiag[i - 1]);
        if (i + 1 < n) radius += std::abs(offdiag[i]);
        p.lower = std::min(p.lower, diag[i] - radius);
        p.upper = std::max(p.upper, diag[i] + radius);
    }
    const double pad = 2.0 * DBL_EPSILON * std::max(std::abs(p.lower), std::abs(p.upper)) + p.pivmin;
    p.lower -= pad;
    p.upper += pad;
    return p;
}

} // namespace

int tridiag_count_below(std::span<const double> diag, std::span<const double> offdiag, double shift) {
    const Prepared p = prepare(diag, offdiag);
    kernels::ShiftBlock shifts;
    shifts.fill(shift);
    return kernels::sturm_count(diag, p.offdiag_sq, shifts, p.pivmin)[0];
}

TridiagEigenvalues tridiag_lowest_eigenvalues(std::span<const double> diag, std::span<const double> offdiag,
                                              int k, double abs_tol) {
    const int n = static_cast<int>(diag.size());
    if (k < 0 || k > n) throw ParameterError("tridiag: k out of range");
    const Prepared p = prepare(diag, offdiag);

    // Every evaluated shift with its count; brackets for later eigenvalues are
    // taken from the same table.
    std::map<double, int> probes{{p.lower, 0}, {p.upper, n}};

    TridiagEigenvalues out;
    out.values.reserve(static_cast<std::size_t>(k));
    for (int index = 0; index < k; ++index) {
        auto bracket = [&] {
            double lo = p.lower, hi = p.upper;
            for (const auto& [shift, count] : probes) {
                if (count <= index) lo = std::max(lo, shift);
                else { hi = std::min(hi, shift); break; }
            }
            return std::pair{lo, hi};
        };
        auto [lo, hi] = bracket();
        for (int pass = 0;; ++pass) {
            const double tol = abs_tol + 4.0 * DBL_EPSILON * std::max(std::abs(lo), std::abs(hi));
            if (hi - lo <= tol) break;
            if (pass > 200) throw ConvergenceError("tridiag: bisection bracket failed to collapse");
            kernels::ShiftBlock shifts;
            const double step = (hi - lo) / (kernels::kShiftLanes + 1);
            for (std::size_t j = 0; j < kernels::kShiftLanes; ++j) shifts[j] = lo + step * static_cast<double>(j + 1);
            const kernels::CountBlock counts = kernels::sturm_count(diag, p.offdiag_sq, shifts, p.pivmin);
            for (std::size_t j = 0; j < kernels::kShiftLanes; ++j) probes[shifts[j]] = counts[j];
            const double old_width = hi - lo;
            std::tie(lo, hi) = bracket();
            if (!(hi - lo < old_width)) throw ConvergenceError("tridiag: bisection bracket failed to shrink");
        }
        out.values.push_back(0.5 * (lo + hi));
        out.max_width = std::max(out.max_width, hi - lo);
    }
    return out;
}

} // namespace sho
