#pragma once
// Real-argument special functions used by the closed-form solution.

namespace sho::specfun {

/// Stopping rule for the Kummer series.
struct SeriesControl {
    double rel_tol = 1e-15;
    int max_terms = 500;

    void validate() const;
};

/// Gamma function. Lanczos approximation for z >= 1/2, reflection below.
/// Throws PoleError at non-positive integers.
double gamma_fn(double z);

/// log|Gamma(z)| for z > 0.
double log_gamma_fn(double z);

/// Kummer's confluent hypergeometric function M(a, b, y) summed term by term.
/// Terminates exactly at j = n when a = -n.
double kummer_m(double a, double b, double y, const SeriesControl& ctl = {});

/// Dominant growing term Gamma(b)/Gamma(a) e^y y^(a-b) of M(a, b, y) for large
/// positive y. The decaying y^(-a) companion is not included.
double kummer_m_asymptotic(double a, double b, double y);

/// Lower bound on y for which kummer_m_asymptotic is meant to be used.
inline constexpr double kAsymptoticRegion = 30.0;

/// Generalized Laguerre polynomial L_n^(a)(y) by the three-term recurrence.
double laguerre(int n, double a, double y);

/// d/dy L_n^(a)(y) = -L_{n-1}^(a+1)(y).
double laguerre_derivative(int n, double a, double y);

/// Physicists' Hermite polynomial H_n(xi).
double hermite(int n, double xi);

} // namespace sho::specfun
