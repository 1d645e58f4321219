#include "sho/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "sho/detail/recurrence.hpp"
#include "sho/errors.hpp"

namespace sho::specfun {

namespace {

constexpr double kPoleTol = 1e-12;

// Lanczos coefficients, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double z) {
    return z <= kPoleTol && std::abs(z - std::round(z)) <= kPoleTol;
}

// sin(pi z) with the argument reduced first, so it stays accurate for large |z|.
double sin_pi(double z) {
    const double r = std::remainder(z, 2.0); // r in [-1, 1]
    return std::sin(std::numbers::pi * r);
}

double lanczos_sum(double zm1) {
    double x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (zm1 + static_cast<double>(i));
    return x;
}

} // namespace

void SeriesControl::validate() const {
    if (!(rel_tol > 0.0)) throw ParameterError("SeriesControl: rel_tol must be > 0");
    if (max_terms < 1) throw ParameterError("SeriesControl: max_terms must be >= 1");
}

double gamma_fn(double z) {
    if (is_nonpositive_integer(z)) throw PoleError("gamma_fn: pole at z = " + std::to_string(z));
    if (z < 0.5) return std::numbers::pi / (sin_pi(z) * gamma_fn(1.0 - z));
    const double zm1 = z - 1.0;
    const double t = zm1 + kLanczosG + 0.5;
    // t^(z-1/2) split in two halves to postpone overflow.
    const double half_pow = std::pow(t, 0.5 * (zm1 + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * half_pow * std::exp(-t) * half_pow * lanczos_sum(zm1);
}

double log_gamma_fn(double z) {
    if (!(z > 0.0)) throw ParameterError("log_gamma_fn: z must be > 0");
    if (z < 0.5) return std::log(std::numbers::pi / std::abs(sin_pi(z))) - log_gamma_fn(1.0 - z);
    const double zm1 = z - 1.0;
    const double t = zm1 + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (zm1 + 0.5) * std::log(t) - t + std::log(lanczos_sum(zm1));
}

double kummer_m(double a, double b, double y, const SeriesControl& ctl) {
    ctl.validate();
    if (is_nonpositive_integer(b)) throw ParameterError("kummer_m: b is a pole of Gamma(b)");
    if (y < 0.0) throw ParameterError("kummer_m: y must be >= 0");

    double term = 1.0;
    double sum = 1.0;
    for (int j = 0; j < ctl.max_terms; ++j) {
        term *= (a + j) * y / ((b + j) * (j + 1.0));
        sum += term;
        if (term == 0.0) return sum;
        // Past j ~ y the term ratio is below one and keeps shrinking.
        if (j + 1 > y && std::abs(term) <= ctl.rel_tol * std::abs(sum)) return sum;
    }
    throw NonConvergence("kummer_m: series did not converge within " + std::to_string(ctl.max_terms) + " terms");
}

double kummer_m_asymptotic(double a, double b, double y) {
    if (y < kAsymptoticRegion) throw ParameterError("kummer_m_asymptotic: requires y >= 30");
    if (is_nonpositive_integer(a)) throw ParameterError("kummer_m_asymptotic: Gamma(a) is at a pole");
    if (is_nonpositive_integer(b)) throw ParameterError("kummer_m_asymptotic: Gamma(b) is at a pole");
    if (a == b) return std::exp(y); // M(a, a, y) = e^y
    return gamma_fn(b) / gamma_fn(a) * std::exp(y) * std::pow(y, a - b);
}

double laguerre(int n, double a, double y) {
    if (n < 0) throw ParameterError("laguerre: n must be >= 0");
    if (!(a > -1.0)) throw ParameterError("laguerre: a must be > -1");
    return detail::laguerre_recurrence(n, a, y);
}

double laguerre_derivative(int n, double a, double y) {
    if (n < 0) throw ParameterError("laguerre_derivative: n must be >= 0");
    if (n == 0) return 0.0;
    return -laguerre(n - 1, a + 1.0, y);
}

double hermite(int n, double xi) {
    if (n < 0) throw ParameterError("hermite: n must be >= 0");
    return detail::hermite_recurrence(n, xi);
}

} // namespace sho::specfun
