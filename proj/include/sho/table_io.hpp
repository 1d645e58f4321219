#pragma once
// Serialization of spectrum tables. CSV uses a header row, ',' delimiters,
// '.' decimals and '\n' line endings; doubles are printed with 17 significant
// digits so every value re-parses to the same binary double.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sho/model.hpp"
#include "sho/spectrum.hpp"

namespace sho {

std::string format_double(double v);
/// Shortest representation that round-trips; for labels and messages.
std::string format_shortest(double v);
double parse_double(std::string_view s);

struct TableRow {
    double alpha = 0.0;
    std::string domain;
    int n = 0;
    std::string parity;
    double beta = 0.0;
    double eps = 0.0;
    int degeneracy = 1;
    std::optional<int> l;             // radial tables only
    std::optional<double> alpha_eff;  // radial tables only
    std::optional<double> energy;     // physical energy E when units are given

    bool operator==(const TableRow&) const = default;
};

struct TableOptions {
    std::optional<OscillatorSpec> units; // adds an energy column E = eps * hbar * omega
    std::optional<int> l;                // radial labelling: alpha column holds the input alpha
    std::optional<double> input_alpha;
};

std::vector<TableRow> table_rows(const SpectrumTable& table, const TableOptions& opts = {});

void write_csv(std::ostream& out, const std::vector<TableRow>& rows);
std::string to_json(const std::vector<TableRow>& rows, double spacing);

/// Inverse of write_csv. Throws ParameterError on malformed input.
std::vector<TableRow> read_csv(std::istream& in);

/// Comma-joined line of cells followed by '\n'.
void write_csv_line(std::ostream& out, const std::vector<std::string>& cells);

} // namespace sho
