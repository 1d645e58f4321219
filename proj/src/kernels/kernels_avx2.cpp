// AVX2 variants. Compiled with per-function target attributes so the rest of the
// library stays baseline x86-64; only called after a runtime CPU check.

#include "sho/detail/recurrence.hpp"
#include "sho/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define SHO_HAVE_X86 1
#include <immintrin.h>
#else
#define SHO_HAVE_X86 0
#endif

namespace sho::kernels::avx2 {

#if SHO_HAVE_X86

#define SHO_AVX2 __attribute__((target("avx2")))

bool compiled() { return true; }

SHO_AVX2 void laguerre(int n, double a, const double* y, double* out, std::size_t count) {
    std::size_t i = 0;
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d first = _mm256_set1_pd(1.0 + a);
    for (; i + 4 <= count; i += 4) {
        const __m256d yv = _mm256_loadu_pd(y + i);
        if (n == 0) {
            _mm256_storeu_pd(out + i, one);
            continue;
        }
        __m256d prev = one;
        __m256d cur = _mm256_sub_pd(first, yv);
        for (int j = 1; j < n; ++j) {
            const __m256d c1 = _mm256_set1_pd(2.0 * j + 1.0 + a);
            const __m256d c2 = _mm256_set1_pd(j + a);
            const __m256d lhs = _mm256_mul_pd(_mm256_sub_pd(c1, yv), cur);
            const __m256d rhs = _mm256_mul_pd(c2, prev);
            const __m256d next = _mm256_div_pd(_mm256_sub_pd(lhs, rhs), _mm256_set1_pd(j + 1.0));
            prev = cur;
            cur = next;
        }
        _mm256_storeu_pd(out + i, cur);
    }
    for (; i < count; ++i) out[i] = detail::laguerre_recurrence(n, a, y[i]);
}

SHO_AVX2 void hermite(int n, const double* xi, double* out, std::size_t count) {
    std::size_t i = 0;
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    for (; i + 4 <= count; i += 4) {
        if (n == 0) {
            _mm256_storeu_pd(out + i, one);
            continue;
        }
        const __m256d two_xi = _mm256_mul_pd(two, _mm256_loadu_pd(xi + i));
        __m256d prev = one;
        __m256d cur = two_xi;
        for (int j = 1; j < n; ++j) {
            const __m256d next = _mm256_sub_pd(_mm256_mul_pd(two_xi, cur),
                                               _mm256_mul_pd(_mm256_set1_pd(2.0 * j), prev));
            prev = cur;
            cur = next;
        }
        _mm256_storeu_pd(out + i, cur);
    }
    for (; i < count; ++i) out[i] = detail::hermite_recurrence(n, xi[i]);
}

// Zero pivots become -pivmin; negative pivots are counted.
SHO_AVX2 static inline __m256d sturm_pivot(__m256d q, __m256d neg_pivmin, __m256i& count) {
    const __m256d zero = _mm256_setzero_pd();
    q = _mm256_blendv_pd(q, neg_pivmin, _mm256_cmp_pd(q, zero, _CMP_EQ_OQ));
    // Comparison masks are all ones (-1 as an integer) in negative lanes.
    count = _mm256_sub_epi64(count, _mm256_castpd_si256(_mm256_cmp_pd(q, zero, _CMP_LT_OQ)));
    return q;
}

SHO_AVX2 void sturm_count(const double* diag, const double* offdiag_sq, int n, const double* shifts,
                          double pivmin, int* counts) {
    const __m256d neg_pivmin = _mm256_set1_pd(-pivmin);
    const __m256d shift = _mm256_loadu_pd(shifts);
    __m256i count = _mm256_setzero_si256();

    __m256d q = sturm_pivot(_mm256_sub_pd(_mm256_set1_pd(diag[0]), shift), neg_pivmin, count);
    for (int i = 1; i < n; ++i) {
        const __m256d d = _mm256_sub_pd(_mm256_set1_pd(diag[i]), shift);
        q = sturm_pivot(_mm256_sub_pd(d, _mm256_div_pd(_mm256_set1_pd(offdiag_sq[i - 1]), q)), neg_pivmin, count);
    }
    alignas(32) long long lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), count);
    for (int k = 0; k < 4; ++k) counts[k] = static_cast<int>(lanes[k]);
}

#undef SHO_AVX2

#else

bool compiled() { return false; }

void laguerre(int n, double a, const double* y, double* out, std::size_t count) {
    scalar::laguerre(n, a, y, out, count);
}
void hermite(int n, const double* xi, double* out, std::size_t count) { scalar::hermite(n, xi, out, count); }
void sturm_count(const double* diag, const double* offdiag_sq, int n, const double* shifts,
                 double pivmin, int* counts) {
    scalar::sturm_count(diag, offdiag_sq, n, shifts, pivmin, counts);
}

#endif

} // namespace sho::kernels::avx2
