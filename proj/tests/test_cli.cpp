#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "sho/cli.hpp"
#include "sho/table_io.hpp"

using namespace sho;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "sho");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct Row : std::map<std::string, std::string> {
    using map::operator[];
    const std::string& operator[](const std::string& key) const { return at(key); }
};

// CSV text as a list of column -> cell maps.
std::vector<Row> parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::getline(is, line);
    std::vector<std::string> header;
    {
        std::istringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) header.push_back(cell);
    }
    std::vector<Row> rows;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string cell;
        Row row;
        for (const auto& h : header) {
            std::getline(ls, cell, ',');
            row[h] = cell;
        }
        rows.push_back(row);
    }
    return rows;
}

double num(const std::string& s) { return parse_double(s); }

} // namespace

TEST_SUITE("cli") {

TEST_CASE("spectrum") {
    auto r = run({"spectrum", "--alpha", "2", "--n-max", "2", "--domain", "half"});
    CHECK(r.code == 0);
    auto rows = parse(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(num(rows[0]["eps"]) == 2.5);
    CHECK(num(rows[1]["eps"]) == 4.5);
    CHECK(num(rows[2]["eps"]) == 6.5);

    r = run({"spectrum", "--alpha", "0", "--domain", "full", "--n-max", "1"});
    CHECK(r.code == 0);
    rows = parse(r.out);
    REQUIRE(rows.size() == 4);
    const char* parity[] = {"even", "odd", "even", "odd"};
    for (int i = 0; i < 4; ++i) {
        CHECK(num(rows[i]["eps"]) == i + 0.5);
        CHECK(rows[i]["parity"] == parity[i]);
    }
    CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("spectrum output re-parses to the in-memory table") {
    const auto r = run({"spectrum", "--alpha", "-0.1234567", "--n-max", "5", "--domain", "full"});
    REQUIRE(r.code == 0);
    std::istringstream is(r.out);
    CHECK(read_csv(is) == table_rows(spectrum_table(-0.1234567, 5, Domain::FullLine)));
}

TEST_CASE("physical units only scale the output") {
    const auto r = run({"spectrum", "--alpha", "1", "--n-max", "1", "--omega", "3", "--hbar", "2"});
    REQUIRE(r.code == 0);
    const auto rows = parse(r.out);
    CHECK(num(rows[0]["energy"]) == doctest::Approx(6.0 * num(rows[0]["eps"])));
    const auto w = run({"wavefunction", "--alpha", "1", "--xi-points", "3", "--mass", "4"});
    const auto wr = parse(w.out);
    CHECK(num(wr[2]["x"]) == doctest::Approx(2.0)); // xi = 4, lambda = 4
}

TEST_CASE("supercritical inputs exit 2 on every subcommand") {
    const std::vector<std::vector<std::string>> cases = {
        {"spectrum", "--alpha", "-0.3"},
        {"spectrum", "--alpha", "-0.25", "--domain", "full"},
        {"wavefunction", "--alpha", "-0.25"},
        {"radial", "--alpha", "-0.26", "--l", "0"},
        {"radial", "--alpha", "-1", "--l", "2"},
        {"verify", "--suite", "oracle", "--alpha", "-0.25"},
        {"verify", "--suite", "orthonormality", "--alpha", "-5"},
    };
    for (const auto& c : cases) {
        const auto r = run(c);
        CHECK(r.code == 2);
        CHECK(r.err.find("alpha <= -1/4") != std::string::npos);
    }
}

TEST_CASE("usage errors exit 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"spectrum"}).code == 1);
    CHECK(run({"spectrum", "--alpha", "abc"}).code == 1);
    CHECK(run({"spectrum", "--alpha", "1", "--domain", "left"}).code == 1);
    CHECK(run({"spectrum", "--alpha", "1", "--format", "xml"}).code == 1);
    CHECK(run({"spectrum", "--alpha", "0"}).code == 1); // half line at alpha = 0 needs a branch
    CHECK(run({"spectrum", "--alpha", "1", "--beta-branch", "zero"}).code == 1);
    CHECK(run({"figure", "5"}).code == 1);
    CHECK(run({"verify", "--suite", "nonsense"}).code == 1);
    CHECK(run({"wavefunction", "--alpha", "1", "--domain", "full"}).code == 1);
    CHECK(run({"radial", "--alpha", "1", "--l", "-1"}).code == 1);
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("spectrum") != std::string::npos);
}

TEST_CASE("json output") {
    const auto r = run({"spectrum", "--alpha", "0.5", "--n-max", "1", "--domain", "full", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["rows"].size() == 4);
    CHECK(doc["rows"][0]["degeneracy"] == 2);
    CHECK(doc["spacing"] == 2.0);
}

TEST_CASE("output file") {
    const auto path = (std::filesystem::temp_directory_path() / "sho_cli_out_test.csv").string();
    const auto r = run({"spectrum", "--alpha", "2", "--n-max", "0", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "alpha,domain,n,parity,beta,eps,degeneracy\n2,half,0,none,1,2.5,1\n");
    std::remove(path.c_str());
}

TEST_CASE("wavefunction") {
    auto rows = parse(run({"wavefunction", "--alpha", "3", "--n", "0", "--xi-points", "401"}).out);
    CHECK(num(rows[0]["psi"]) == 0.0);
    int maxima = 0;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i)
        if (num(rows[i]["psi"]) > num(rows[i - 1]["psi"]) && num(rows[i]["psi"]) > num(rows[i + 1]["psi"])) ++maxima;
    CHECK(maxima == 1);

    rows = parse(run({"wavefunction", "--alpha", "-0.249", "--xi-max", "0.001", "--xi-points", "3"}).out);
    // psi ~ x^0.53: the slope over the first half step dwarfs the slope over the second.
    const double s1 = num(rows[1]["psi"]) - num(rows[0]["psi"]);
    const double s2 = num(rows[2]["psi"]) - num(rows[1]["psi"]);
    CHECK(s1 / 0.0005 > 20.0);
    CHECK(s1 > s2);

    rows = parse(run({"wavefunction", "--alpha", "0", "--beta-branch", "minus1", "--xi-points", "41"}).out);
    const double p0 = num(rows[0]["psi"]);
    CHECK(p0 > 0.0);
    for (const auto& row : rows)
        CHECK(num(row["psi"]) == doctest::Approx(p0 * std::exp(-0.5 * num(row["xi"]) * num(row["xi"]))).epsilon(1e-13));

    rows = parse(run({"wavefunction", "--alpha", "0.5", "--domain", "full", "--parity", "odd", "--xi-points", "5"}).out);
    CHECK(num(rows[0]["xi"]) == -4.0);
    CHECK(num(rows[0]["psi"]) == -num(rows[4]["psi"]));
}

TEST_CASE("figure 1") {
    const auto rows = parse(run({"figure", "1"}).out);
    bool found = false;
    for (const auto& row : rows)
        if (num(row["alpha"]) == 0.0 && num(row["x"]) == 1.0) {
            CHECK(num(row["V"]) == 0.5);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("figure 2") {
    const auto rows = parse(run({"figure", "2"}).out);
    std::map<int, std::vector<std::pair<double, double>>> curves;
    int markers = 0;
    for (const auto& row : rows) {
        if (row.at("series") == "curve")
            curves[std::stoi(row.at("n"))].emplace_back(num(row.at("alpha")), num(row.at("eps")));
        else
            ++markers;
    }
    CHECK(curves.size() == 5);
    for (const auto& [n, pts] : curves) {
        CHECK(pts.size() == 200);
        CHECK(pts.back().first == 0.25);
        for (std::size_t i = 1; i < pts.size(); ++i) {
            CHECK(pts[i].second > pts[i - 1].second);
            CHECK(pts[i].second - pts[i - 1].second < 0.05); // continuous on this grid
        }
        CHECK(pts.front().first > -0.249);
    }
    CHECK(curves[0].back().second == doctest::Approx(1.7071068).epsilon(1e-7));
    CHECK(markers == 10);
}

TEST_CASE("figure 3 and 4") {
    auto rows = parse(run({"figure", "3"}).out);
    std::map<double, std::pair<double, double>> peak; // alpha -> (xi, rho)
    for (const auto& row : rows) {
        const double a = num(row.at("alpha")), xi = num(row.at("xi")), rho = num(row.at("rho"));
        if (xi == 0.0) CHECK(num(row.at("psi")) == 0.0);
        if (rho > peak[a].second) peak[a] = {xi, rho};
    }
    REQUIRE(peak.size() == 4);
    double prev = 0.0;
    for (const auto& [a, p] : peak) {
        CHECK(p.first > prev);
        prev = p.first;
    }

    rows = parse(run({"figure", "4"}).out);
    std::vector<std::pair<double, std::string>> markers;
    for (const auto& row : rows)
        if (row.at("series") == "marker") markers.emplace_back(num(row.at("eps")), row.at("parity"));
    REQUIRE(markers.size() == 10);
    for (std::size_t i = 0; i < markers.size(); ++i) {
        CHECK(markers[i].first == i + 0.5);
        CHECK(markers[i].second == (i % 2 ? "odd" : "even"));
    }
}

TEST_CASE("figure json") {
    const auto r = run({"figure", "2", "--alpha-points", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.size() == 4 * 5 + 10);
    CHECK(doc[0]["series"] == "curve");
}

TEST_CASE("verify") {
    auto r = run({"verify", "--suite", "oracle", "--alpha", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);

    r = run({"verify", "--suite", "degeneracy", "--alpha", "0.5", "--format", "json"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["passed"] == true);
    CHECK(doc["checks"][0]["value"] == 0.0);

    r = run({"verify", "--suite", "perturbation", "--format", "json"});
    CHECK(r.code == 0);
    doc = nlohmann::json::parse(r.out);
    CHECK(std::abs(doc["checks"][0]["value"].get<double>()) <= 1e-6);
    CHECK(doc["checks"][2]["detail"] == "Divergent");

    r = run({"verify", "--suite", "oracle", "--alpha", "0.5", "--tol", "1e-15"});
    CHECK(r.code == 3);
}

TEST_CASE("verify all") {
    const auto r = run({"verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("radial") {
    auto rows = parse(run({"radial", "--alpha", "0", "--l", "1", "--n-max", "0"}).out);
    REQUIRE(rows.size() == 1);
    CHECK(num(rows[0]["alpha_eff"]) == 2.0);
    CHECK(num(rows[0]["eps"]) == 2.5);

    rows = parse(run({"radial", "--alpha", "0.5", "--l", "0", "--n-max", "3"}).out);
    const auto plain = parse(run({"spectrum", "--alpha", "0.5", "--n-max", "3"}).out);
    REQUIRE(rows.size() == plain.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i]["eps"] == plain[i]["eps"]);

    rows = parse(run({"radial", "--alpha", "-0.2", "--l", "1", "--n-max", "0"}).out);
    CHECK(num(rows[0]["alpha"]) == -0.2);
    CHECK(num(rows[0]["l"]) == 1);
    CHECK(num(rows[0]["alpha_eff"]) == doctest::Approx(1.8));
    CHECK(num(rows[0]["eps"]) == doctest::Approx(1.5 - 0.5 + std::sqrt(2.05)));
}

} // TEST_SUITE
