#pragma once
// Batched inner loops with a scalar reference and an AVX2 variant.
//
// The public entry points dispatch at runtime on the detected instruction set.
// Both variants perform the same IEEE operations in the same order (no FMA
// contraction), so their results are bitwise identical; the equivalence tests
// rely on that. Setting SHO_SIMD=scalar in the environment pins the scalar path.

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

namespace sho::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// True when the CPU (and the build) can run the given variant.
bool isa_available(Isa isa);

/// Variant picked by the dispatcher.
Isa active_isa();

/// Number of shifts processed by one multi-shift Sturm pass.
inline constexpr std::size_t kShiftLanes = 4;

using ShiftBlock = std::array<double, kShiftLanes>;
using CountBlock = std::array<int, kShiftLanes>;

// Dispatched entry points. Output spans must have the input's length.
void laguerre(int n, double a, std::span<const double> y, std::span<double> out);
void hermite(int n, std::span<const double> xi, std::span<double> out);

/// Eigenvalue counts of the symmetric tridiagonal matrix (diag, offdiag) below
/// each shift. offdiag_sq holds the squared off-diagonal, length diag.size()-1.
CountBlock sturm_count(std::span<const double> diag, std::span<const double> offdiag_sq,
                       const ShiftBlock& shifts, double pivmin);

// Explicit variants, for equivalence tests and benchmarks.
namespace scalar {
void laguerre(int n, double a, const double* y, double* out, std::size_t count);
void hermite(int n, const double* xi, double* out, std::size_t count);
void sturm_count(const double* diag, const double* offdiag_sq, int n, const double* shifts,
                 double pivmin, int* counts);
} // namespace scalar

namespace avx2 {
/// False when the build lacks x86 intrinsics; the functions then must not be called.
bool compiled();
void laguerre(int n, double a, const double* y, double* out, std::size_t count);
void hermite(int n, const double* xi, double* out, std::size_t count);
void sturm_count(const double* diag, const double* offdiag_sq, int n, const double* shifts,
                 double pivmin, int* counts);
} // namespace avx2

} // namespace sho::kernels
