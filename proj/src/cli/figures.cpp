#include <array>
#include <cmath>
#include <string>

#include "sho/cli.hpp"
#include "sho/errors.hpp"
#include "sho/model.hpp"
#include "sho/spectrum.hpp"

namespace sho::cli {

namespace {

std::vector<double> alpha_grid(const FigureOptions& opts) {
    if (opts.alpha_points < 1) throw ParameterError("figure: alpha_points must be >= 1");
    if (!(opts.alpha_lo < opts.alpha_hi)) throw ParameterError("figure: empty alpha range");
    std::vector<double> grid;
    for (int k = 1; k <= opts.alpha_points; ++k)
        grid.push_back(opts.alpha_lo + (opts.alpha_hi - opts.alpha_lo) * k / opts.alpha_points);
    return grid;
}

DataTable potential_profiles() {
    DataTable t{{"alpha", "x", "V"}, {}};
    for (double alpha : {-0.2, 0.0, 0.2}) {
        const OscillatorSpec spec{1.0, 1.0, 1.0, alpha};
        for (int k = -300; k <= 300; ++k) {
            if (k == 0) continue;
            const double x = k / 100.0;
            t.rows.push_back({alpha, x, potential_value(spec, x)});
        }
    }
    return t;
}

void add_level(DataTable& t, const char* series, const EigenState& s) {
    t.rows.push_back({std::string(series), s.alpha(), static_cast<long>(s.n()), std::string(to_string(s.parity())),
                      s.beta(), s.energy_eps()});
}

DataTable level_curves(const FigureOptions& opts, Domain domain) {
    DataTable t{{"series", "alpha", "n", "parity", "beta", "eps"}, {}};
    for (double alpha : alpha_grid(opts)) {
        require_subcritical(alpha);
        for (int n = 0; n <= opts.n_max; ++n) {
            // The alpha -> 0 limit of the curves is the beta = 0 family.
            const auto branch = alpha == 0.0 ? std::optional{BetaBranch::Zero} : std::nullopt;
            if (domain == Domain::HalfLine)
                add_level(t, "curve", halfline_state(alpha, n, branch));
            else if (alpha == 0.0)
                add_level(t, "curve", fullline_state(alpha, n, Parity::Odd));
            else
                for (const auto& s : fullline_states(alpha, n)) add_level(t, "curve", s);
        }
    }
    for (int n = 0; n <= opts.n_max; ++n) {
        if (domain == Domain::HalfLine) {
            add_level(t, "marker", halfline_state(0.0, n, BetaBranch::MinusOne));
            add_level(t, "marker", halfline_state(0.0, n, BetaBranch::Zero));
        } else {
            for (const auto& s : fullline_states(0.0, n)) add_level(t, "marker", s);
        }
    }
    return t;
}

DataTable ground_states(const FigureOptions& opts) {
    if (opts.xi_points < 2) throw ParameterError("figure: xi_points must be >= 2");
    if (!(opts.xi_min >= 0.0 && opts.xi_min < opts.xi_max)) throw ParameterError("figure: need 0 <= xi_min < xi_max");
    DataTable t{{"alpha", "xi", "psi", "rho"}, {}};
    std::vector<double> xs(static_cast<std::size_t>(opts.xi_points)), psi(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        xs[i] = std::lerp(opts.xi_min, opts.xi_max, static_cast<double>(i) / static_cast<double>(xs.size() - 1));
    for (double alpha : {-0.249, -0.2, 0.2, 3.0}) {
        const EigenState s = halfline_state(alpha, 0);
        s.sample(xs, psi);
        for (std::size_t i = 0; i < xs.size(); ++i) t.rows.push_back({alpha, xs[i], psi[i], psi[i] * psi[i]});
    }
    return t;
}

} // namespace

DataTable figure_table(int id, const FigureOptions& opts) {
    switch (id) {
    case 1: return potential_profiles();
    case 2: return level_curves(opts, Domain::HalfLine);
    case 3: return ground_states(opts);
    case 4: return level_curves(opts, Domain::FullLine);
    default: throw ParameterError("figure id must be 1, 2, 3 or 4");
    }
}

} // namespace sho::cli
