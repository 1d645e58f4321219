#include "sho/table_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sho/errors.hpp"

namespace sho {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string format_shortest(double v) {
    if (!std::isfinite(v)) return format_double(v);
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
    if (s == "nan") return std::nan("");
    if (s == "inf") return HUGE_VAL;
    if (s == "-inf") return -HUGE_VAL;
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ParameterError("not a number: '" + std::string(s) + "'");
    return v;
}

namespace {

int parse_int(std::string_view s) {
    int v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ParameterError("not an integer: '" + std::string(s) + "'");
    return v;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::vector<std::string> header_for(const std::vector<TableRow>& rows) {
    std::vector<std::string> h{"alpha"};
    const bool radial = !rows.empty() && rows.front().l.has_value();
    if (radial) h.insert(h.end(), {"l", "alpha_eff"});
    h.insert(h.end(), {"domain", "n", "parity", "beta", "eps", "degeneracy"});
    if (!rows.empty() && rows.front().energy) h.emplace_back("energy");
    return h;
}

} // namespace

std::vector<TableRow> table_rows(const SpectrumTable& table, const TableOptions& opts) {
    std::vector<TableRow> rows;
    rows.reserve(table.states.size());
    for (std::size_t i = 0; i < table.states.size(); ++i) {
        const EigenState& s = table.states[i];
        TableRow r;
        r.alpha = opts.l ? opts.input_alpha.value_or(table.alpha) : s.alpha();
        r.domain = std::string(to_string(s.domain()));
        r.n = s.n();
        r.parity = std::string(to_string(s.parity()));
        r.beta = s.beta();
        r.eps = s.energy_eps();
        r.degeneracy = table.degeneracy[i];
        if (opts.l) {
            r.l = opts.l;
            r.alpha_eff = s.alpha();
        }
        if (opts.units) r.energy = opts.units->energy_from_eps(r.eps);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_csv_line(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << cells[i];
    }
    out << '\n';
}

void write_csv(std::ostream& out, const std::vector<TableRow>& rows) {
    write_csv_line(out, header_for(rows));
    for (const auto& r : rows) {
        std::vector<std::string> cells{format_double(r.alpha)};
        if (r.l) {
            cells.push_back(std::to_string(*r.l));
            cells.push_back(format_double(r.alpha_eff.value_or(r.alpha)));
        }
        cells.insert(cells.end(), {r.domain, std::to_string(r.n), r.parity, format_double(r.beta),
                                   format_double(r.eps), std::to_string(r.degeneracy)});
        if (r.energy) cells.push_back(format_double(*r.energy));
        write_csv_line(out, cells);
    }
}

std::string to_json(const std::vector<TableRow>& rows, double spacing) {
    nlohmann::ordered_json doc;
    doc["spacing"] = spacing;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["alpha"] = r.alpha;
        if (r.l) {
            j["l"] = *r.l;
            j["alpha_eff"] = r.alpha_eff.value_or(r.alpha);
        }
        j["domain"] = r.domain;
        j["n"] = r.n;
        j["parity"] = r.parity;
        j["beta"] = r.beta;
        j["eps"] = r.eps;
        j["degeneracy"] = r.degeneracy;
        if (r.energy) j["energy"] = *r.energy;
        doc["rows"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

std::vector<TableRow> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParameterError("read_csv: empty input");
    const std::vector<std::string> header = split(line);
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
    for (const char* required : {"alpha", "domain", "n", "parity", "beta", "eps", "degeneracy"})
        if (!col.count(required)) throw ParameterError(std::string("read_csv: missing column ") + required);

    std::vector<TableRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> cells = split(line);
        if (cells.size() != header.size()) throw ParameterError("read_csv: row has wrong number of cells");
        auto cell = [&](const char* name) -> const std::string& { return cells[col.at(name)]; };
        TableRow r;
        r.alpha = parse_double(cell("alpha"));
        r.domain = cell("domain");
        r.n = parse_int(cell("n"));
        r.parity = cell("parity");
        r.beta = parse_double(cell("beta"));
        r.eps = parse_double(cell("eps"));
        r.degeneracy = parse_int(cell("degeneracy"));
        if (col.count("l")) r.l = parse_int(cell("l"));
        if (col.count("alpha_eff")) r.alpha_eff = parse_double(cell("alpha_eff"));
        if (col.count("energy")) r.energy = parse_double(cell("energy"));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace sho
