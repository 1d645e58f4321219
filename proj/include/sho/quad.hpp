#pragma once
// Numerical integration: adaptive double-exponential quadrature, Gauss-Laguerre
// rules in y = x^2, Cauchy principal values, and state-level diagnostics.

#include <functional>
#include <vector>

#include "sho/spectrum.hpp"

namespace sho {

struct QuadControl {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 40;

    void validate() const;
};

/// Upper limit used in place of +infinity (natural units). The Gaussian tail of
/// any bound state beyond it is below e^(-144).
inline constexpr double kHalfLineCutoff = 12.0;

using Integrand = std::function<double(double)>;

/// Globally adaptive quadrature. Each panel is a tanh-sinh rule whose nodes
/// avoid the endpoints, so integrable endpoint singularities are fine.
/// b = +infinity is replaced by kHalfLineCutoff. Throws DepthExceeded when a
/// panel would have to be split more than max_depth times.
double integrate_adaptive(const Integrand& f, double a, double b, const QuadControl& ctl = {});

/// PV int_a^b f with a singular point a < c < b. The symmetric partial sums
/// S(e_k) over e_k = 2^-k e_0 are Aitken-accelerated; convergence is declared
/// when three successive accelerated sums agree within abs_tol. Throws
/// PVDivergent when the sequence does not settle.
double cauchy_pv(const Integrand& f, double a, double b, double c, const QuadControl& ctl = {});

enum class Integrability { Integrable, NonIntegrable };

/// Local integrability of |x|^p at the origin: integrable iff p > -1.
Integrability integrability_class(double p);

/// Gauss quadrature for int_0^inf y^a e^(-y) g(y) dy.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point generalized Gauss-Laguerre rule (a > -1); exact for polynomials of
/// degree <= 2n-1. Nodes come from the Jacobi matrix via Sturm bisection.
GaussRule gauss_laguerre(int n, double a);

/// int psi_1 psi_2 over the states' domain (adaptive, in x).
/// Throws DomainMismatch if alpha or domain differ.
double overlap(const EigenState& s1, const EigenState& s2, const QuadControl& ctl = {});

/// Same integral for two half-line states of equal beta, computed exactly with a
/// Gauss-Laguerre rule in y = x^2. Independent of the adaptive route.
double overlap_gauss(const EigenState& s1, const EigenState& s2);

/// Jump condition residual at the origin for a whole-line state,
///   r(eps) = [psi'(eps) - psi'(-eps)] - alpha * int_{-eps}^{eps} psi / x^2 dx,
/// with the integral taken as a principal value for odd states. At alpha = 0
/// the integral term is omitted. Throws NonIntegrableError for even states with
/// alpha < 0, where psi / x^2 ~ x^(beta-1) is not integrable.
double connection_residual(const EigenState& state, double eps, const QuadControl& ctl = {});

} // namespace sho
