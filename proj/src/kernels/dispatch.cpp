#include <cstdlib>
#include <string>

#include "sho/errors.hpp"
#include "sho/kernels.hpp"

namespace sho::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Isa detect() {
    if (const char* env = std::getenv("SHO_SIMD"); env != nullptr && std::string(env) == "scalar")
        return Isa::Scalar;
    return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

void check_sizes(std::size_t in, std::size_t out) {
    if (in != out) throw ParameterError("kernels: output span length differs from input");
}

} // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
    if (isa == Isa::Scalar) return true;
    return avx2::compiled() && cpu_has_avx2();
}

Isa active_isa() {
    static const Isa isa = detect();
    return isa;
}

void laguerre(int n, double a, std::span<const double> y, std::span<double> out) {
    check_sizes(y.size(), out.size());
    if (active_isa() == Isa::Avx2)
        avx2::laguerre(n, a, y.data(), out.data(), y.size());
    else
        scalar::laguerre(n, a, y.data(), out.data(), y.size());
}

void hermite(int n, std::span<const double> xi, std::span<double> out) {
    check_sizes(xi.size(), out.size());
    if (active_isa() == Isa::Avx2)
        avx2::hermite(n, xi.data(), out.data(), xi.size());
    else
        scalar::hermite(n, xi.data(), out.data(), xi.size());
}

CountBlock sturm_count(std::span<const double> diag, std::span<const double> offdiag_sq,
                       const ShiftBlock& shifts, double pivmin) {
    if (diag.empty() || offdiag_sq.size() + 1 != diag.size())
        throw ParameterError("kernels::sturm_count: offdiag_sq must have length diag.size() - 1");
    CountBlock counts{};
    const int n = static_cast<int>(diag.size());
    if (active_isa() == Isa::Avx2)
        avx2::sturm_count(diag.data(), offdiag_sq.data(), n, shifts.data(), pivmin, counts.data());
    else
        scalar::sturm_count(diag.data(), offdiag_sq.data(), n, shifts.data(), pivmin, counts.data());
    return counts;
}

} // namespace sho::kernels
