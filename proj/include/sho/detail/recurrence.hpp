#pragma once
// Shared three-term recurrences. The SIMD kernels replicate these operations in
// the same order so scalar and vector results agree bit for bit.

namespace sho::detail {

inline double laguerre_recurrence(int n, double a, double y) {
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = (1.0 + a) - y;
    for (int j = 1; j < n; ++j) {
        const double c1 = 2.0 * j + 1.0 + a;
        const double c2 = j + a;
        const double next = ((c1 - y) * cur - c2 * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

inline double hermite_recurrence(int n, double xi) {
    if (n == 0) return 1.0;
    const double two_xi = 2.0 * xi;
    double prev = 1.0;
    double cur = two_xi;
    for (int j = 1; j < n; ++j) {
        const double next = two_xi * cur - (2.0 * j) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Negative pivots of the LDL^T factorization of T - shift*I.
/// Zero pivots are replaced by -pivmin.
inline int sturm_count(const double* diag, const double* offdiag_sq, int n,
                       double shift, double pivmin) {
    int count = 0;
    double q = diag[0] - shift;
    if (q == 0.0) q = -pivmin;
    if (q < 0.0) ++count;
    for (int i = 1; i < n; ++i) {
        q = (diag[i] - shift) - offdiag_sq[i - 1] / q;
        if (q == 0.0) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

} // namespace sho::detail
