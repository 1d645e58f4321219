// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sho/cli.hpp"
#include "sho/errors.hpp"
#include "sho/oracle.hpp"
#include "sho/quad.hpp"
#include "sho/specfun.hpp"
#include "sho/spectrum.hpp"

using namespace sho;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double beta_plus(double alpha) { return -0.5 + std::sqrt(0.25 + alpha); }

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

template <class E, class F>
bool throws(F&& f) {
    try {
        f();
    } catch (const E&) {
        return true;
    } catch (...) {
        return false;
    }
    return false;
}

const std::vector<double> kOracleAlphas{-0.24, -0.1, 0.5, 2.0};

Outcome spectrum_vs_oracle() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    double worst_shoot = 0.0, worst_fd = 0.0;
    for (double a : kOracleAlphas) {
        const auto sh = shoot_spectrum(a, 5);
        const auto fd = a < 0.0 ? fd_eigen_extrapolated(a, GridSpec{}, 5) : fd_eigen(a, GridSpec{}, 5);
        for (int n = 0; n <= 4; ++n) {
            const double want = 2 * n + beta_plus(a) + 1.5;
            worst_shoot = std::max(worst_shoot, rel(sh.eigenvalues[n], want));
            worst_fd = std::max(worst_fd, rel(fd.eigenvalues[n], want));
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(worst_shoot <= 1e-4, "shooting " + fmt("%.3g", worst_shoot));
    o.require(worst_fd <= 5e-3, "finite differences " + fmt("%.3g", worst_fd));
    o.require(secs < 10.0, "runtime " + fmt("%.2f s", secs));
    if (o.pass)
        o.detail = "shooting " + fmt("%.2g", worst_shoot) + ", fd " + fmt("%.2g", worst_fd) + ", " + fmt("%.2f s", secs);
    return o;
}

Outcome level_spacing() {
    Outcome o;
    for (double a : {-0.24, -0.1, 0.2, 0.5, 2.0, 7.3})
        for (Domain d : {Domain::HalfLine, Domain::FullLine}) {
            const auto t = spectrum_table(a, 9, d);
            const auto lv = distinct_levels(t);
            o.require(t.spacing == 2.0, "table spacing at alpha " + fmt("%g", a));
            for (std::size_t i = 1; i < lv.size(); ++i)
                o.require(std::abs(lv[i] - lv[i - 1] - 2.0) <= 8 * std::numeric_limits<double>::epsilon() * lv[i],
                          "level gap at alpha " + fmt("%g", a));
        }
    const auto t0 = spectrum_table(0.0, 4, Domain::FullLine);
    const auto lv0 = distinct_levels(t0);
    o.require(t0.spacing == 1.0, "alpha = 0 table spacing");
    for (std::size_t i = 1; i < lv0.size(); ++i) o.require(lv0[i] - lv0[i - 1] == 1.0, "alpha = 0 level gap");
    int even = 0;
    for (const auto& s : t0.states) even += s.parity() == Parity::Even;
    o.require(even == 5, "alpha = 0 even levels present");

    double worst = 0.0;
    for (double a : kOracleAlphas) {
        const auto sh = shoot_spectrum(a, 5);
        for (std::size_t i = 1; i < sh.eigenvalues.size(); ++i)
            worst = std::max(worst, std::abs(sh.eigenvalues[i] - sh.eigenvalues[i - 1] - 2.0));
    }
    o.require(worst <= 1e-3, "oracle spacing " + fmt("%.3g", worst));
    if (o.pass) o.detail = "oracle spacing error " + fmt("%.2g", worst);
    return o;
}

Outcome ground_state_bounds() {
    Outcome o;
    double prev = 0.0;
    double lowest = INFINITY;
    for (int k = 1; k <= 50; ++k) {
        const double a = -0.249 + k * (10.0 + 0.249) / 50.0;
        const double e0 = halfline_state(a, 0).energy_eps();
        o.require(e0 > 1.0, "half-line eps0 at alpha " + fmt("%g", a));
        if (k > 1) o.require(e0 > prev, "monotonicity at alpha " + fmt("%g", a));
        prev = e0;
        for (const auto& s : fullline_states(a, 0)) {
            o.require(s.energy_eps() > 2.0 * 0.5, "full-line eps0 at alpha " + fmt("%g", a));
            lowest = std::min(lowest, s.energy_eps());
        }
    }
    if (o.pass) o.detail = "lowest eps0 " + fmt("%.6f", lowest);
    return o;
}

Outcome degeneracy() {
    Outcome o;
    for (double a : {0.2, 0.5, 2.0})
        for (int n = 0; n <= 9; ++n) {
            const EigenState e = fullline_state(a, n, Parity::Even), d = fullline_state(a, n, Parity::Odd);
            o.require(e.energy_eps() == d.energy_eps(), "split level at alpha " + fmt("%g", a));
        }
    const auto t = spectrum_table(0.0, 4, Domain::FullLine);
    const auto lv = distinct_levels(t);
    o.require(lv.size() == 10 && t.states.size() == 10, "alpha = 0 level count");
    for (std::size_t i = 0; i < lv.size(); ++i) o.require(lv[i] == i + 0.5, "alpha = 0 level " + std::to_string(i));
    for (int g : t.degeneracy) o.require(g == 1, "alpha = 0 multiplicity");
    return o;
}

Outcome orthonormality() {
    Outcome o;
    QuadControl ctl{1e-13, 1e-13, 40};
    double worst_gram = 0.0, worst_norm = 0.0;
    const auto gram = [&](const std::vector<EigenState>& st) {
        for (std::size_t i = 0; i < st.size(); ++i)
            for (std::size_t j = 0; j < st.size(); ++j)
                worst_gram = std::max(worst_gram, std::abs(overlap(st[i], st[j], ctl) - (i == j ? 1.0 : 0.0)));
    };
    for (double a : kOracleAlphas) {
        std::vector<EigenState> half;
        for (int n = 0; n < 6; ++n) half.push_back(halfline_state(a, n));
        gram(half);
        std::vector<EigenState> full;
        for (int n = 0; n < 3; ++n)
            for (const auto& s : fullline_states(a, n)) full.push_back(s);
        gram(full);

        const double beta = beta_plus(a);
        for (int n = 0; n < 6; ++n) {
            // Square of the unnormalized x^(beta+1) e^(-x^2/2) L_n(x^2).
            const auto f = [&](double x) {
                const double v = std::pow(x, beta + 1.0) * std::exp(-0.5 * x * x) * specfun::laguerre(n, beta + 0.5, x * x);
                return v * v;
            };
            const double a_quad = 1.0 / std::sqrt(integrate_adaptive(f, 0.0, INFINITY, ctl));
            worst_norm = std::max(worst_norm, rel(normalization_constant(n, beta), a_quad));
        }
    }
    std::vector<EigenState> zero;
    for (int n = 0; n < 3; ++n)
        for (const auto& s : fullline_states(0.0, n)) zero.push_back(s);
    gram(zero);
    o.require(worst_gram <= 1e-8, "gram " + fmt("%.3g", worst_gram));
    o.require(worst_norm <= 1e-8, "normalization " + fmt("%.3g", worst_norm));
    if (o.pass) o.detail = "gram " + fmt("%.2g", worst_gram) + ", normalization " + fmt("%.2g", worst_norm);
    return o;
}

Outcome special_functions() {
    Outcome o;
    double worst = 0.0;
    for (int n = 0; n <= 6; ++n)
        for (int i = 1; i <= 20; ++i) {
            const double x = 0.2 * i;
            const double scale = std::tgamma(n + 1.0) * std::pow(2.0, 2 * n);
            const double sign = n % 2 ? -1.0 : 1.0;
            worst = std::max(worst, rel(specfun::hermite(2 * n, x), sign * scale * specfun::laguerre(n, -0.5, x * x)));
            worst = std::max(worst,
                             rel(specfun::hermite(2 * n + 1, x), sign * 2.0 * scale * x * specfun::laguerre(n, 0.5, x * x)));
        }
    std::string kummer;
    bool kummer_ok = true;
    for (auto [a, b] : {std::pair{0.35, 1.9}, std::pair{-0.3, 1.2}}) {
        const double r = specfun::kummer_m_asymptotic(a, b, 40.0) / specfun::kummer_m(a, b, 40.0) - 1.0;
        kummer_ok = kummer_ok && std::abs(r) <= 0.02;
        kummer += fmt(" (%g", a) + fmt(", %g) ", b) + fmt("%+.2f%%", 100 * r);
    }
    o.pass = worst <= 1e-10 && kummer_ok;
    o.detail = std::string(worst <= 1e-10 ? "ok" : "FAIL") + " laguerre-hermite worst " + fmt("%.2g", worst) + " (tol 1e-10); "
               + (kummer_ok ? "ok" : "FAIL") + " kummer asymptotic at y = 40" + kummer + " (tol 2%)";
    return o;
}

Outcome hermiticity() {
    Outcome o;
    for (int k = 1; k < 100; ++k) {
        const double a = -0.25 + k * 0.01;
        if (std::abs(a) < 1e-12) continue;
        const BetaSolution s = admissible_betas(a);
        o.require(std::find(s.admissible.begin(), s.admissible.end(), s.beta_minus) == s.admissible.end(),
                  "beta- kept at alpha " + fmt("%g", a));
        o.require(integrability_class(2 * s.beta_minus) == Integrability::NonIntegrable,
                  "beta- integrable at alpha " + fmt("%g", a));
    }
    for (double a : {-0.25, -0.2500000001, -0.3, -1.0}) {
        const std::string at = " at alpha " + fmt("%g", a);
        o.require(admissible_betas(a).supercritical, "flag" + at);
        o.require(throws<SupercriticalError>([&] { require_subcritical(a); }), "require_subcritical" + at);
        o.require(throws<SupercriticalError>([&] { (void)select_beta(a, std::nullopt); }), "select_beta" + at);
        o.require(throws<SupercriticalError>([&] { (void)halfline_state(a, 0); }), "halfline_state" + at);
        o.require(throws<SupercriticalError>([&] { (void)fullline_state(a, 0, Parity::Odd); }), "fullline_state" + at);
        o.require(throws<SupercriticalError>([&] { (void)spectrum_table(a, 2, Domain::FullLine); }), "spectrum_table" + at);
        o.require(throws<SupercriticalError>([&] { (void)classify_boundary(a, 0.0); }), "classify_boundary" + at);
        o.require(throws<SupercriticalError>([&] { (void)fd_eigen(a, GridSpec{}, 1); }), "fd_eigen" + at);
        o.require(throws<SupercriticalError>([&] { (void)shoot_eigen(a, 0); }), "shoot_eigen" + at);
        std::ostringstream out, err;
        const int code = cli::run({"sho", "spectrum", "--alpha", fmt("%.17g", a)}, out, err);
        o.require(code == cli::kExitSupercritical, "cli exit code" + at);
    }
    return o;
}

Outcome perturbation() {
    Outcome o;
    const auto odd = perturbation_first_order(0, Parity::Odd);
    o.require(!odd.divergent && std::abs(odd.slope_per_alpha - 1.0) <= 1e-6, "odd matrix element " + fmt("%.10g", odd.slope_per_alpha));
    const double h = 1e-6;
    const double slope = (energy(0, beta_plus(h)) - energy(0, beta_plus(-h))) / (2 * h);
    o.require(std::abs(slope - odd.slope_per_alpha) <= 1e-6, "d eps / d alpha " + fmt("%.10g", slope));
    for (int n = 0; n <= 3; ++n) o.require(perturbation_first_order(n, Parity::Even).divergent, "even n = " + std::to_string(n));
    if (o.pass) o.detail = "matrix element " + fmt("%.12f", odd.slope_per_alpha) + ", slope " + fmt("%.9f", slope);
    return o;
}

Outcome principal_value() {
    Outcome o;
    const auto inv = [](double x) { return 1.0 / x; };
    const double a = cauchy_pv(inv, -1.0, 1.0, 0.0);
    const double b = cauchy_pv(inv, -2.0, 1.0, 0.0);
    o.require(std::abs(a) <= 1e-10, "symmetric " + fmt("%.3g", a));
    o.require(std::abs(b + std::log(2.0)) <= 1e-8, "asymmetric " + fmt("%.3g", b + std::log(2.0)));
    o.require(throws<PVDivergent>([] { (void)cauchy_pv([](double x) { return 1.0 / (x * x); }, -1.0, 1.0, 0.0); }),
              "even singularity not flagged");
    return o;
}

double as_double(const cli::Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return *d;
    if (const auto* l = std::get_if<long>(&c)) return static_cast<double>(*l);
    return NAN;
}

struct Column {
    const cli::DataTable& t;
    std::size_t col(const std::string& name) const {
        return static_cast<std::size_t>(std::find(t.header.begin(), t.header.end(), name) - t.header.begin());
    }
    double num(std::size_t row, const std::string& name) const { return as_double(t.rows[row].at(col(name))); }
    std::string str(std::size_t row, const std::string& name) const {
        const auto* s = std::get_if<std::string>(&t.rows[row].at(col(name)));
        return s ? *s : std::string{};
    }
};

Outcome figures() {
    Outcome o;
    for (int id : {2, 4}) {
        const auto t = cli::figure_table(id, {});
        const Column c{t};
        const std::string fig = "figure " + std::to_string(id) + " ";
        std::map<std::pair<long, std::string>, std::vector<std::pair<double, double>>> curves;
        int markers = 0;
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            if (c.str(i, "series") == "curve") {
                curves[{static_cast<long>(c.num(i, "n")), c.str(i, "parity")}].emplace_back(c.num(i, "alpha"), c.num(i, "eps"));
            } else {
                ++markers;
                o.require(c.num(i, "alpha") == 0.0, fig + "marker off alpha = 0");
            }
        }
        o.require(markers == 10, fig + "marker count");
        o.require(curves.size() == (id == 2 ? 5u : 10u), fig + "curve count");
        for (const auto& [key, pts] : curves) {
            o.require(pts.size() == 200, fig + "curve length");
            for (std::size_t i = 1; i < pts.size(); ++i)
                o.require(pts[i].second > pts[i - 1].second && pts[i].second - pts[i - 1].second < 0.05,
                          fig + "curve jump near alpha " + fmt("%g", pts[i].first));
        }
        if (id == 4)
            for (std::size_t i = 0; i < t.rows.size(); ++i)
                if (c.str(i, "series") == "marker") {
                    const double e = c.num(i, "eps");
                    const long k = std::lround(e - 0.5);
                    o.require(e == k + 0.5, fig + "marker level");
                    o.require(c.str(i, "parity") == (k % 2 ? "odd" : "even"), fig + "marker parity");
                }
    }
    const auto t3 = cli::figure_table(3, {});
    const Column c3{t3};
    std::map<double, std::pair<double, double>> peak;
    for (std::size_t i = 0; i < t3.rows.size(); ++i) {
        const double a = c3.num(i, "alpha"), xi = c3.num(i, "xi"), rho = c3.num(i, "rho");
        if (xi == 0.0) o.require(c3.num(i, "psi") == 0.0, "figure 3 psi(0) at alpha " + fmt("%g", a));
        if (rho > peak[a].second) peak[a] = {xi, rho};
    }
    o.require(peak.size() == 4, "figure 3 curve count");
    double prev = -1.0;
    std::string peaks;
    for (const auto& [a, p] : peak) {
        o.require(p.first > prev, "figure 3 peak order at alpha " + fmt("%g", a));
        prev = p.first;
        peaks += (peaks.empty() ? "" : " < ") + fmt("%.2f", p.first);
    }
    if (o.pass) o.detail = "figure 3 peaks " + peaks;
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 spectrum vs oracle", spectrum_vs_oracle},
        {"2 level spacing", level_spacing},
        {"3 ground-state bounds", ground_state_bounds},
        {"4 degeneracy", degeneracy},
        {"5 orthonormality", orthonormality},
        {"6 special-function identities", special_functions},
        {"7 hermiticity and admissibility", hermiticity},
        {"8 perturbation breakdown", perturbation},
        {"9 principal value", principal_value},
        {"10 figure regeneration", figures},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome r;
        try {
            r = check();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        failed += !r.pass;
        std::printf("%s %s%s%s\n", r.pass ? "PASS" : "FAIL", name.c_str(), r.detail.empty() ? "" : ": ", r.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
