#include "sho/cli.hpp"

#include <cmath>
#include <fstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sho/errors.hpp"
#include "sho/model.hpp"
#include "sho/spectrum.hpp"
#include "sho/table_io.hpp"

namespace sho::cli {

void write_table(std::ostream& out, const DataTable& table, Format format) {
    if (format == Format::Csv) {
        write_csv_line(out, table.header);
        std::vector<std::string> cells;
        for (const auto& row : table.rows) {
            cells.clear();
            for (const Cell& c : row) {
                if (const double* d = std::get_if<double>(&c))
                    cells.push_back(format_double(*d));
                else if (const long* i = std::get_if<long>(&c))
                    cells.push_back(std::to_string(*i));
                else
                    cells.push_back(std::get<std::string>(c));
            }
            write_csv_line(out, cells);
        }
        return;
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json j;
        for (std::size_t k = 0; k < row.size(); ++k)
            std::visit([&](const auto& v) { j[table.header[k]] = v; }, row[k]);
        rows.push_back(std::move(j));
    }
    out << rows.dump(2) << '\n';
}

namespace {

struct Common {
    std::string format = "csv";
    std::string out_path;
    std::optional<double> mass, omega, hbar;

    Format fmt() const { return format == "json" ? Format::Json : Format::Csv; }

    std::optional<OscillatorSpec> units(double alpha) const {
        if (!mass && !omega && !hbar) return std::nullopt;
        OscillatorSpec spec{mass.value_or(1.0), omega.value_or(1.0), hbar.value_or(1.0), alpha};
        spec.validate();
        return spec;
    }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", c.out_path, "Output file (default: standard output)");
}

void add_units(CLI::App* cmd, Common& c) {
    cmd->add_option("--mass", c.mass, "Mass (output scaling only)");
    cmd->add_option("--omega", c.omega, "Angular frequency (output scaling only)");
    cmd->add_option("--hbar", c.hbar, "Reduced Planck constant (output scaling only)");
}

std::optional<BetaBranch> parse_branch(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s == "minus1") return BetaBranch::MinusOne;
    return BetaBranch::Zero;
}

// Writes to --out when given, otherwise to the caller's stream.
template <class Fn>
void emit(const Common& c, std::ostream& out, Fn&& fn) {
    if (c.out_path.empty()) {
        fn(out);
        return;
    }
    std::ofstream file(c.out_path, std::ios::binary);
    if (!file) throw ParameterError("cannot open '" + c.out_path + "' for writing");
    fn(file);
}

void write_spectrum(const SpectrumTable& table, const TableOptions& topts, const Common& c, std::ostream& out) {
    const auto rows = table_rows(table, topts);
    emit(c, out, [&](std::ostream& os) {
        if (c.fmt() == Format::Csv)
            write_csv(os, rows);
        else
            os << to_json(rows, table.spacing);
    });
}

void write_checks(const std::vector<CheckResult>& results, const Common& c, std::ostream& out, bool text) {
    emit(c, out, [&](std::ostream& os) {
        if (text) {
            for (const auto& r : results)
                os << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.check << " value=" << format_shortest(r.value)
                   << " tol=" << format_shortest(r.tol) << (r.detail.empty() ? "" : " (" + r.detail + ")") << '\n';
            return;
        }
        DataTable t{{"suite", "check", "passed", "value", "tol", "detail"}, {}};
        for (const auto& r : results)
            t.rows.push_back({r.suite, r.check, std::string(r.passed ? "true" : "false"), r.value, r.tol, r.detail});
        if (c.fmt() == Format::Csv) {
            write_table(os, t, Format::Csv);
            return;
        }
        nlohmann::ordered_json doc;
        bool all = true;
        doc["checks"] = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            all = all && r.passed;
            doc["checks"].push_back({{"suite", r.suite},
                                     {"check", r.check},
                                     {"passed", r.passed},
                                     {"value", r.value},
                                     {"tol", r.tol},
                                     {"detail", r.detail}});
        }
        doc["passed"] = all;
        os << doc.dump(2) << '\n';
    });
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spectra and eigenfunctions of the singular harmonic oscillator"};
    app.name(args.empty() ? "sho" : args.front());
    app.require_subcommand(1);

    double alpha = 0.0;
    int n_max = 4, n = 0, l = 0;
    std::string domain = "half", parity, branch;
    Common common;

    auto* spectrum = app.add_subcommand("spectrum", "Energy levels as a table");
    spectrum->add_option("--alpha", alpha, "Coupling of the 1/x^2 term")->required();
    spectrum->add_option("--n-max", n_max, "Largest half-line quantum number")->check(CLI::NonNegativeNumber);
    spectrum->add_option("--domain", domain, "half or full")->check(CLI::IsMember({"half", "full"}));
    spectrum->add_option("--beta-branch", branch, "Exponent family at alpha = 0")
        ->check(CLI::IsMember({"minus1", "zero"}));
    add_common(spectrum, common);
    add_units(spectrum, common);

    double xi_min = 0.0, xi_max = 4.0;
    int xi_points = 201;
    bool xi_min_set = false;
    auto* wave = app.add_subcommand("wavefunction", "Sampled normalized eigenfunction");
    wave->add_option("--alpha", alpha, "Coupling of the 1/x^2 term")->required();
    wave->add_option("--n", n, "Half-line quantum number")->check(CLI::NonNegativeNumber);
    wave->add_option("--domain", domain, "half or full")->check(CLI::IsMember({"half", "full"}));
    wave->add_option("--parity", parity, "even or odd (whole line)")->check(CLI::IsMember({"even", "odd"}));
    wave->add_option("--beta-branch", branch, "Exponent family at alpha = 0")->check(CLI::IsMember({"minus1", "zero"}));
    wave->add_option_function<double>("--xi-min", [&](double v) { xi_min = v, xi_min_set = true; }, "First sample point");
    wave->add_option("--xi-max", xi_max, "Last sample point");
    wave->add_option("--xi-points", xi_points, "Number of samples")->check(CLI::Range(2, 10'000'000));
    add_common(wave, common);
    add_units(wave, common);

    int figure_id = 0;
    FigureOptions fig;
    auto* figure = app.add_subcommand("figure", "Data behind the four standard plots");
    figure->add_option("id", figure_id, "Figure number")->required()->check(CLI::Range(1, 4));
    figure->add_option("--alpha-points", fig.alpha_points, "Alpha samples on (-0.249, 0.25]")
        ->check(CLI::PositiveNumber);
    figure->add_option("--n-max", fig.n_max, "Largest quantum number")->check(CLI::NonNegativeNumber);
    figure->add_option("--xi-min", fig.xi_min, "First sample point (figure 3)");
    figure->add_option("--xi-max", fig.xi_max, "Last sample point (figure 3)");
    figure->add_option("--xi-points", fig.xi_points, "Number of samples (figure 3)")->check(CLI::Range(2, 10'000'000));
    add_common(figure, common);

    VerifyOptions vopts;
    bool text_report = true;
    auto* verify = app.add_subcommand("verify", "Run invariant checks");
    verify->add_option("--suite", vopts.suite, "Suite name")
        ->check(CLI::IsMember({"all", "hermiticity", "orthonormality", "oracle", "degeneracy", "perturbation"}));
    verify->add_option("--alpha", vopts.alpha, "Restrict the suites to one alpha");
    verify->add_option("--tol", vopts.tol, "Override the main tolerance")->check(CLI::PositiveNumber);
    verify->add_option_function<std::string>(
               "--format", [&](const std::string& f) { common.format = f, text_report = false; }, "Report format")
        ->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--out", common.out_path, "Report file (default: standard output)");

    auto* radial = app.add_subcommand("radial", "3D radial spectrum via alpha -> alpha + l(l+1)");
    radial->add_option("--alpha", alpha, "Coupling of the 1/r^2 term")->required();
    radial->add_option("--l", l, "Orbital quantum number")->check(CLI::NonNegativeNumber);
    radial->add_option("--n-max", n_max, "Largest radial quantum number")->check(CLI::NonNegativeNumber);
    radial->add_option("--beta-branch", branch, "Exponent family when alpha + l(l+1) = 0")
        ->check(CLI::IsMember({"minus1", "zero"}));
    add_common(radial, common);
    add_units(radial, common);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("sho");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*spectrum) {
            require_subcritical(alpha);
            const Domain d = parse_domain(domain);
            if (!branch.empty() && alpha != 0.0) throw ParameterError("--beta-branch applies only at alpha = 0");
            const SpectrumTable table = spectrum_table(alpha, n_max, d, parse_branch(branch));
            TableOptions topts;
            topts.units = common.units(alpha);
            write_spectrum(table, topts, common, out);
        } else if (*radial) {
            require_subcritical(alpha); // the l = 0 channel of the same potential
            const double alpha_eff = map_radial(alpha, l);
            auto b = parse_branch(branch);
            if (!b && alpha_eff == 0.0) b = BetaBranch::Zero;
            const SpectrumTable table = spectrum_table(alpha_eff, n_max, Domain::HalfLine, b);
            TableOptions topts;
            topts.l = l;
            topts.input_alpha = alpha;
            topts.units = common.units(alpha);
            write_spectrum(table, topts, common, out);
        } else if (*wave) {
            require_subcritical(alpha);
            const Domain d = parse_domain(domain);
            if (!branch.empty() && alpha != 0.0) throw ParameterError("--beta-branch applies only at alpha = 0");
            std::optional<EigenState> state;
            if (d == Domain::HalfLine) {
                if (!parity.empty()) throw ParameterError("--parity applies only to --domain full");
                state.emplace(halfline_state(alpha, n, parse_branch(branch)));
            } else {
                if (parity.empty()) throw ParameterError("--domain full needs --parity even|odd");
                if (!branch.empty()) throw ParameterError("on the whole line the parity selects the branch");
                state.emplace(fullline_state(alpha, n, parse_parity(parity)));
            }
            if (!xi_min_set && d == Domain::FullLine) xi_min = -xi_max;
            if (!(xi_min < xi_max)) throw ParameterError("need xi-min < xi-max");
            std::vector<double> xs(static_cast<std::size_t>(xi_points)), psi(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i)
                xs[i] = std::lerp(xi_min, xi_max, static_cast<double>(i) / static_cast<double>(xs.size() - 1));
            state->sample(xs, psi);

            const auto units = common.units(alpha);
            DataTable t{{"xi", "psi", "rho"}, {}};
            if (units) t.header.insert(t.header.begin() + 1, "x");
            for (std::size_t i = 0; i < xs.size(); ++i) {
                std::vector<Cell> row{xs[i], psi[i], psi[i] * psi[i]};
                if (units) row.insert(row.begin() + 1, units->x_from_xi(xs[i]));
                t.rows.push_back(std::move(row));
            }
            emit(common, out, [&](std::ostream& os) { write_table(os, t, common.fmt()); });
        } else if (*figure) {
            const DataTable t = figure_table(figure_id, fig);
            emit(common, out, [&](std::ostream& os) { write_table(os, t, common.fmt()); });
        } else if (*verify) {
            const auto results = run_verify(vopts);
            write_checks(results, common, out, text_report);
            for (const auto& r : results)
                if (!r.passed) return kExitVerifyFailed;
        }
    } catch (const SupercriticalError& e) {
        err << "error: " << e.what() << '\n';
        return kExitSupercritical;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InadmissibleError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}

} // namespace sho::cli
