#include "sho/detail/recurrence.hpp"
#include "sho/kernels.hpp"

namespace sho::kernels::scalar {

void laguerre(int n, double a, const double* y, double* out, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) out[i] = detail::laguerre_recurrence(n, a, y[i]);
}

void hermite(int n, const double* xi, double* out, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) out[i] = detail::hermite_recurrence(n, xi[i]);
}

void sturm_count(const double* diag, const double* offdiag_sq, int n, const double* shifts,
                 double pivmin, int* counts) {
    for (std::size_t lane = 0; lane < kShiftLanes; ++lane)
        counts[lane] = detail::sturm_count(diag, offdiag_sq, n, shifts[lane], pivmin);
}

} // namespace sho::kernels::scalar
