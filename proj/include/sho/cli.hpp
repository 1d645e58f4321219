#pragma once
// Command-line front end: spectrum | wavefunction | figure | verify | radial.

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sho::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSupercritical = 2;
inline constexpr int kExitVerifyFailed = 3;
inline constexpr int kExitNumerical = 4;

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class Format { Csv, Json };

using Cell = std::variant<double, long, std::string>;

/// Column-named rows. CSV output prints doubles with 17 significant digits;
/// JSON output keeps numbers as numbers.
struct DataTable {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

void write_table(std::ostream& out, const DataTable& table, Format format);

struct FigureOptions {
    int alpha_points = 200;      // uniform grid on (alpha_lo, alpha_hi]
    double alpha_lo = -0.249;
    double alpha_hi = 0.25;
    int n_max = 4;
    double xi_min = 0.0;
    double xi_max = 4.0;
    int xi_points = 401;
};

/// Data behind figures 1-4:
///   1: alpha, x, V            potential profiles for alpha in {-0.2, 0, 0.2}
///   2: series, alpha, n, parity, beta, eps   half-line levels, curves + alpha = 0 markers
///   3: alpha, xi, psi, rho    ground states for alpha in {-0.249, -0.2, 0.2, 3}
///   4: as 2, whole line
DataTable figure_table(int id, const FigureOptions& opts);

struct VerifyOptions {
    std::string suite = "all"; // all|hermiticity|orthonormality|oracle|degeneracy|perturbation
    std::optional<double> alpha;
    std::optional<double> tol;
};

struct CheckResult {
    std::string suite;
    std::string check;
    bool passed = false;
    double value = 0.0; // the measured quantity (error, difference, ...)
    double tol = 0.0;
    std::string detail;
};

/// Throws ParameterError for an unknown suite name.
std::vector<CheckResult> run_verify(const VerifyOptions& opts);

} // namespace sho::cli
