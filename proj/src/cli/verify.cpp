#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>

#include "sho/cli.hpp"
#include "sho/errors.hpp"
#include "sho/model.hpp"
#include "sho/oracle.hpp"
#include "sho/quad.hpp"
#include "sho/spectrum.hpp"
#include "sho/table_io.hpp"

namespace sho::cli {

namespace {

std::string alpha_label(double alpha) { return "alpha=" + format_shortest(alpha); }

CheckResult check(std::string suite, std::string name, double value, double tol, std::string detail = {}) {
    return {std::move(suite), std::move(name), std::abs(value) <= tol, value, tol, std::move(detail)};
}

// Every entry point must refuse alpha <= -1/4 with SupercriticalError.
bool rejects_supercritical(double alpha) {
    const std::vector<std::function<void()>> entry_points = {
        [&] { require_subcritical(alpha); },
        [&] { (void)select_beta(alpha, std::nullopt); },
        [&] { (void)classify_boundary(alpha, -0.5); },
        [&] { (void)halfline_state(alpha, 0); },
        [&] { (void)fullline_state(alpha, 0, Parity::Even); },
        [&] { (void)spectrum_table(alpha, 2, Domain::HalfLine); },
        [&] { (void)spectrum_table(alpha, 2, Domain::FullLine); },
        [&] { (void)EigenState(alpha, 0, -0.5, Parity::None, Domain::HalfLine); },
        [&] { (void)frobenius_start(alpha, 1.0, 1e-3, 4, -0.5); },
        [&] { (void)fd_eigen(alpha, GridSpec{}, 1); },
        [&] { (void)shoot_eigen(alpha, 0); },
    };
    for (const auto& call : entry_points) {
        try {
            call();
            return false;
        } catch (const SupercriticalError&) {
        } catch (const std::exception&) {
            return false;
        }
    }
    return admissible_betas(alpha).supercritical && admissible_betas(alpha).admissible.empty();
}

void hermiticity(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    std::vector<double> alphas;
    if (opts.alpha) {
        alphas = {*opts.alpha};
    } else {
        for (int k = 1; k < 40; ++k) alphas.push_back((k - 10) * 0.025); // (-1/4, 3/4), alpha = 0 included
        alphas.insert(alphas.end(), {1.0, 2.0, 10.0});
    }
    int violations = 0;
    std::ostringstream bad;
    for (double alpha : alphas) {
        if (is_supercritical(alpha)) continue;
        const BetaSolution sol = admissible_betas(alpha);
        bool ok;
        if (alpha == 0.0) {
            ok = sol.admissible.size() == 2;
        } else {
            const bool minus_rejected = std::find(sol.admissible.begin(), sol.admissible.end(), sol.beta_minus)
                                        == sol.admissible.end();
            ok = minus_rejected && sol.admissible.size() == 1
                 && integrability_class(2.0 * sol.beta_minus) == Integrability::NonIntegrable
                 && integrability_class(2.0 * sol.beta_plus) == Integrability::Integrable;
        }
        if (!ok) {
            ++violations;
            bad << ' ' << format_shortest(alpha);
        }
    }
    out.push_back(check("hermiticity", "beta_minus rejected as non-integrable", violations, 0.0,
                        violations ? "violations at alpha =" + bad.str() : std::to_string(alphas.size()) + " alphas"));

    std::vector<double> supercritical{-0.25, -0.2500000001, -0.3, -1.0, -10.0};
    if (opts.alpha && is_supercritical(*opts.alpha)) supercritical = {*opts.alpha};
    int leaks = 0;
    for (double alpha : supercritical) leaks += rejects_supercritical(alpha) ? 0 : 1;
    out.push_back(check("hermiticity", "alpha <= -1/4 rejected at every entry point", leaks, 0.0,
                        std::to_string(supercritical.size()) + " alphas"));
}

void orthonormality(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    const double tol = opts.tol.value_or(1e-8);
    QuadControl ctl;
    ctl.abs_tol = 1e-12;
    ctl.rel_tol = 1e-12;

    std::vector<std::pair<std::string, std::vector<EigenState>>> sets;
    const std::vector<double> alphas = opts.alpha ? std::vector<double>{*opts.alpha} : std::vector<double>{-0.2, 0.5, 2.0};
    for (double alpha : alphas) {
        require_subcritical(alpha);
        const auto branch = alpha == 0.0 ? std::optional{BetaBranch::Zero} : std::nullopt;
        sets.emplace_back("half " + alpha_label(alpha), spectrum_table(alpha, 5, Domain::HalfLine, branch).states);
        auto full = spectrum_table(alpha, 2, Domain::FullLine).states;
        sets.emplace_back("full " + alpha_label(alpha), std::move(full));
    }
    if (!opts.alpha) {
        auto full = spectrum_table(0.0, 2, Domain::FullLine).states;
        sets.emplace_back("full alpha=0", std::move(full));
    }

    for (const auto& [label, states] : sets) {
        double gram_err = 0.0, norm_err = 0.0;
        for (std::size_t i = 0; i < states.size(); ++i) {
            for (std::size_t j = i; j < states.size(); ++j) {
                const double g = overlap(states[i], states[j], ctl);
                gram_err = std::max(gram_err, std::abs(g - (i == j ? 1.0 : 0.0)));
                if (i == j) {
                    // Normalization constant implied by quadrature: A / sqrt(<psi|psi>).
                    const double quad_const = states[i].norm_const() / std::sqrt(g);
                    norm_err = std::max(norm_err, std::abs(quad_const / states[i].norm_const() - 1.0));
                }
            }
        }
        out.push_back(check("orthonormality", "gram " + label, gram_err, tol, "max |G - I|"));
        out.push_back(check("orthonormality", "normalization " + label, norm_err, tol, "max relative error"));
    }
}

void oracle_suite(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    const double shoot_tol = opts.tol.value_or(1e-4);
    const double fd_tol = std::max(opts.tol.value_or(5e-3), 5e-3);
    const std::vector<double> alphas =
        opts.alpha ? std::vector<double>{*opts.alpha} : std::vector<double>{-0.24, -0.1, 0.5, 2.0};
    constexpr int kLevels = 5;
    for (double alpha : alphas) {
        require_subcritical(alpha);
        const auto branch = alpha == 0.0 ? std::optional{BetaBranch::Zero} : std::nullopt;
        const SpectrumTable table = spectrum_table(alpha, kLevels - 1, Domain::HalfLine, branch);

        ShootingOptions so;
        if (alpha == 0.0) so.beta = 0.0;
        const OracleResult shot = shoot_spectrum(alpha, kLevels, so);
        const CompareReport rs = compare(table, shot, shoot_tol);
        out.push_back(check("oracle", "shooting " + alpha_label(alpha), rs.max_error, shoot_tol, "max relative error"));

        const OracleResult fd = alpha < 0.0 ? fd_eigen_extrapolated(alpha, GridSpec{}, kLevels)
                                            : fd_eigen(alpha, GridSpec{}, kLevels);
        const CompareReport rf = compare(table, fd, fd_tol);
        out.push_back(check("oracle", std::string(alpha < 0.0 ? "finite-difference (extrapolated) " : "finite-difference ")
                                          + alpha_label(alpha),
                            rf.max_error, fd_tol, "max relative error"));

        double spacing_err = 0.0;
        for (std::size_t i = 1; i < shot.eigenvalues.size(); ++i)
            spacing_err = std::max(spacing_err, std::abs(shot.eigenvalues[i] - shot.eigenvalues[i - 1] - 2.0));
        out.push_back(check("oracle", "spacing " + alpha_label(alpha), spacing_err, 1e-3, "max |delta eps - 2|"));
    }
}

void degeneracy(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    constexpr int kNMax = 4;
    const std::vector<double> alphas =
        opts.alpha ? std::vector<double>{*opts.alpha} : std::vector<double>{0.0, 0.2, 0.5, 2.0};
    for (double alpha : alphas) {
        require_subcritical(alpha);
        if (alpha == 0.0) {
            const SpectrumTable t = spectrum_table(0.0, kNMax, Domain::FullLine);
            double err = 0.0;
            for (std::size_t i = 0; i < t.states.size(); ++i) {
                err = std::max(err, std::abs(t.states[i].energy_eps() - (static_cast<double>(i) + 0.5)));
                if (t.degeneracy[i] != 1) err = std::max(err, 1.0);
            }
            out.push_back(check("degeneracy", "alpha=0 levels simple and equal to n + 1/2", err, 0.0,
                                std::to_string(t.states.size()) + " levels"));
            continue;
        }
        double diff = 0.0;
        for (int n = 0; n <= kNMax; ++n) {
            const auto pair = fullline_states(alpha, n);
            diff = std::max(diff, std::abs(pair[0].energy_eps() - pair[1].energy_eps()));
        }
        out.push_back(check("degeneracy", "even/odd energy difference " + alpha_label(alpha), diff, 0.0,
                            "n <= " + std::to_string(kNMax)));
    }
}

void perturbation(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    const double tol = opts.tol.value_or(1e-6);
    const PerturbationResult odd = perturbation_first_order(0, Parity::Odd);
    out.push_back(check("perturbation", "odd ground state slope", odd.divergent ? INFINITY : odd.slope_per_alpha - 1.0,
                        tol, "slope=" + format_shortest(odd.slope_per_alpha)));

    // d eps_0 / d alpha at alpha = 0 from the closed-form exponent.
    const double h = 1e-6;
    const double slope = (energy(0, select_beta(h, std::nullopt)) - energy(0, select_beta(-h, std::nullopt))) / (2 * h);
    out.push_back(check("perturbation", "matches d eps/d alpha", odd.slope_per_alpha - slope, 1e-6,
                        "d eps/d alpha=" + format_shortest(slope)));

    int finite = 0;
    for (int n = 0; n <= 3; ++n) finite += perturbation_first_order(n, Parity::Even).divergent ? 0 : 1;
    out.push_back(check("perturbation", "even states divergent", finite, 0.0, finite ? "finite result" : "Divergent"));
}

} // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
    static const std::vector<std::pair<std::string, void (*)(const VerifyOptions&, std::vector<CheckResult>&)>>
        suites = {{"hermiticity", hermiticity},
                  {"orthonormality", orthonormality},
                  {"oracle", oracle_suite},
                  {"degeneracy", degeneracy},
                  {"perturbation", perturbation}};
    std::vector<CheckResult> out;
    bool found = false;
    for (const auto& [name, fn] : suites) {
        if (opts.suite == "all" || opts.suite == name) {
            fn(opts, out);
            found = true;
        }
    }
    if (!found) throw ParameterError("unknown suite '" + opts.suite + "'");
    return out;
}

} // namespace sho::cli
