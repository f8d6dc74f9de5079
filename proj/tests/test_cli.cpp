#include "cli.hpp"

#include <sig4/dn2.hpp>

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace sig4;

namespace
{

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string &line, char sep)
{
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, sep);) {
        cells.push_back(cell);
    }
    return cells;
}

using Row = std::map<std::string, std::string>;

std::vector<Row> parse_csv(const std::string &text)
{
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    const auto header = split(line, ',');
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        const auto cells = split(line, ',');
        REQUIRE(cells.size() == header.size());
        Row r;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            r[header[i]] = cells[i];
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

// Single CSV record from a one-shot command.
Row csv_record(std::vector<std::string> args)
{
    args.insert(args.begin(), {"--format", "csv"});
    const auto r = run_cli(args);
    REQUIRE(r.code == cli::exit_ok);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 1);
    return rows.front();
}

double num(const Row &r, const std::string &key)
{
    REQUIRE(r.count(key));
    return std::stod(r.at(key));
}

} // namespace

TEST_CASE("parse_point")
{
    const PeriodPair h{1.5, 2.5};
    auto near = [](CPoint a, CPoint b) { return std::abs(a - b) <= 1e-15; };
    CHECK(near(cli::parse_point("0.3", h), {0.3, 0}));
    CHECK(near(cli::parse_point("-1.2+0.4i", h), {-1.2, 0.4}));
    CHECK(near(cli::parse_point("i0.4", h), {0, 0.4}));
    CHECK(near(cli::parse_point("K", h), {1.5, 0}));
    CHECK(near(cli::parse_point("K+iK'", h), {1.5, 2.5}));
    CHECK(near(cli::parse_point("0.5K-0.25iK'", h), {0.75, -0.625}));
    CHECK(near(cli::parse_point("2*K", h), {3, 0}));
    CHECK(near(cli::parse_point("1e-3-2.5e+1i", h), {1e-3, -25}));
    CHECK(near(cli::parse_point(" 0.1 + i ", h), {0.1, 1}));
    CHECK_THROWS_AS(cli::parse_point("", h), DomainError);
    CHECK_THROWS_AS(cli::parse_point("abc", h), DomainError);
    CHECK_THROWS_AS(cli::parse_point("0.3x", h), DomainError);
    CHECK_THROWS_AS(cli::parse_point("K''", h), DomainError);
}

TEST_CASE("eval")
{
    SUBCASE("origin")
    {
        const auto r = csv_record({"eval", "--kappa", "0.5", "--z", "0"});
        CHECK(num(r, "dn2_re") == 1.0);
        CHECK(num(r, "dn2_im") == 0.0);
        CHECK(num(r, "s2") == 0.0);
    }
    SUBCASE("half-period on the real axis")
    {
        const auto r = csv_record({"eval", "--kappa", "0.6", "--z", "K"});
        CHECK(std::abs(num(r, "dn2_re") - 0.8) <= 1e-11);
        CHECK(std::abs(num(r, "s2") - 1) <= 1e-11);
        CHECK(std::abs(num(r, "phi") - std::numbers::pi / 2) <= 1e-11);
    }
    SUBCASE("all routes agree")
    {
        for (const char *z : {"0.37", "1.9", "0.3+0.4i", "0.5K+0.3iK'"}) {
            const auto r = csv_record({"eval", "--kappa", "0.7", "--z", z, "--route", "all"});
            CHECK(num(r, "max_delta") <= 1e-11);
        }
    }
    SUBCASE("pole")
    {
        const auto r = csv_record({"eval", "--kappa", "0.5", "--z", "iK'"});
        CHECK(r.at("dn2_re") == "pole");
        const auto all = csv_record({"eval", "--kappa", "0.5", "--z", "iK'", "--route", "all"});
        CHECK(all.at("max_delta") == "na");
    }
    SUBCASE("phi route rejects complex points")
    {
        const auto r = run_cli({"eval", "--kappa", "0.5", "--z", "0.3+0.1i", "--route", "phi"});
        CHECK(r.code == cli::exit_usage);
        CHECK(r.err.rfind("error:", 0) == 0);
    }
    SUBCASE("human output")
    {
        const auto r = run_cli({"eval", "--kappa", "0.5", "--z", "0.37"});
        CHECK(r.code == cli::exit_ok);
        CHECK(r.out.find("dn2_re") != std::string::npos);
    }
}

TEST_CASE("periods")
{
    const auto third = csv_record({"periods", "--kappa", "0.333333333333", "--method", "elliptic"});
    CHECK(std::abs(num(third, "ratio") - 2) <= 1e-9);

    const auto root = csv_record({"periods", "--kappa", "0.70710678", "--method", "all"});
    CHECK(std::abs(num(root, "ratio") - std::numbers::sqrt2) <= 1e-7);
    CHECK(num(root, "max_delta_K") <= 1e-8);
    CHECK(num(root, "max_delta_Kprime") <= 1e-8);

    const auto half = csv_record({"periods", "--kappa", "0.5", "--method", "hyper"});
    CHECK(std::abs(num(half, "K") - 1.6566381702365942) <= 1e-12);
    CHECK(half.at("method") == "hyper");
}

TEST_CASE("lattice")
{
    const auto r = csv_record({"lattice", "--kappa", "0.94280904158206337"});
    CHECK(std::abs(num(r, "g3")) <= 1e-15);
    CHECK(std::abs(num(r, "K") - num(r, "Kprime")) <= 1e-12);

    const auto third = csv_record({"lattice", "--kappa", "0.33333333333333331"});
    CHECK(std::abs(num(third, "e3") + 1.0 / 3) <= 1e-14);
    const double k2 = std::pow(3 - 2 * std::numbers::sqrt2, 2);
    CHECK(std::abs(num(third, "k2") - k2) <= 1e-12);
    CHECK(num(third, "delta") > 0);
}

TEST_CASE("identities")
{
    for (const char *step : {"0.05", "0.45"}) {
        const auto r = run_cli({"--format", "csv", "identities", "--step", step});
        CHECK(r.code == cli::exit_ok);
        const auto rows = parse_csv(r.out);
        REQUIRE(!rows.empty());
        for (const auto &row : rows) {
            CHECK(row.at("pass") == "pass");
            CHECK(std::abs(num(row, "residual")) <= num(row, "tol"));
        }
        CHECK(r.err.find("0 failures") != std::string::npos);
    }

    SUBCASE("grid size")
    {
        const auto r = run_cli({"--format", "csv", "identities", "--step", "0.05"});
        // 19 grid points, seven checks each.
        CHECK(parse_csv(r.out).size() == 19 * 7);
    }
    SUBCASE("injected shift fails")
    {
        const auto r = run_cli({"identities", "--step", "0.25", "--inject-shift", "1e-6"});
        CHECK(r.code == cli::exit_tolerance);
        CHECK(r.out.find("FAIL") != std::string::npos);
    }
    SUBCASE("tolerance override")
    {
        CHECK(run_cli({"--tol", "1e-30", "identities", "--step", "0.25"}).code == cli::exit_tolerance);
        CHECK(run_cli({"--tol", "1e-3", "identities", "--step", "0.25", "--inject-shift", "1e-6"}).code ==
              cli::exit_ok);
    }
    SUBCASE("bad step")
    {
        CHECK(run_cli({"identities", "--step", "0.5"}).code == cli::exit_usage);
        CHECK(run_cli({"identities", "--step", "0"}).code == cli::exit_usage);
    }
}

TEST_CASE("sample perimeter")
{
    const auto r = run_cli({"sample", "--kappa", "0.6", "--region", "perimeter", "--n", "200"});
    REQUIRE(r.code == cli::exit_ok);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 200);
    const double Kp = dn2::periods(dn2::Modulus(0.6), dn2::PeriodMethod::elliptic).Kprime;
    double prev = INFINITY;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        // Next to the pole the imaginary part is rounding in K' times |dn2'|.
        const CPoint z(num(rows[i], "z_re"), num(rows[i], "z_im"));
        if (std::abs(z - CPoint(0, Kp)) >= 0.05) {
            CHECK(std::abs(num(rows[i], "dn2_im")) <= 1e-10);
        }
        const double v = num(rows[i], "dn2_re");
        CHECK(v < prev);
        CHECK(rows[i].at("decreasing") == (i == 0 ? "na" : "1"));
        prev = v;
    }
}

TEST_CASE("sample real axis")
{
    const auto r = run_cli({"sample", "--kappa", "0.6", "--region", "real-axis", "--n", "101"});
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 101);
    CHECK(num(rows.front(), "dn2_re") == 1.0);
    CHECK(std::abs(num(rows[50], "dn2_re") - 0.8) <= 1e-11);
    CHECK(std::abs(num(rows.back(), "dn2_re") - 1) <= 1e-11);
    double lo = INFINITY, hi = -INFINITY;
    for (const auto &row : rows) {
        lo = std::min(lo, num(row, "dn2_re"));
        hi = std::max(hi, num(row, "dn2_re"));
    }
    CHECK(lo >= 0.8 - 1e-11);
    CHECK(hi <= 1 + 1e-11);
}

TEST_CASE("sample grid")
{
    SUBCASE("regular grid marks the lattice poles")
    {
        const auto rows = parse_csv(run_cli({"sample", "--kappa", "0.5", "--region", "grid", "--n", "3"}).out);
        REQUIRE(rows.size() == 9);
        // Middle row sits at Im z = K'; its ends are the poles iK' and 2K + iK'.
        CHECK(rows[3].at("dn2_re") == "pole");
        CHECK(rows[5].at("dn2_re") == "pole");
        CHECK(rows[4].at("dn2_re") != "pole");
    }
    SUBCASE("seeded grid is reproducible")
    {
        const auto a = run_cli({"--seed", "7", "sample", "--kappa", "0.5", "--region", "grid", "--n", "20"});
        const auto b = run_cli({"--seed", "7", "sample", "--kappa", "0.5", "--region", "grid", "--n", "20"});
        const auto c = run_cli({"--seed", "8", "sample", "--kappa", "0.5", "--region", "grid", "--n", "20"});
        CHECK(a.out == b.out);
        CHECK(a.out != c.out);
        CHECK(parse_csv(a.out).size() == 20);
    }
}

TEST_CASE("sample CSV round-trips exactly")
{
    const auto path = std::filesystem::temp_directory_path() / "sig4_test_sample.csv";
    const auto r = run_cli({"--seed", "11", "sample", "--kappa", "0.45", "--region", "grid", "--n", "30", "--out",
                            path.string()});
    REQUIRE(r.code == cli::exit_ok);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::filesystem::remove(path);

    const dn2::Modulus mod(0.45);
    const auto rows = parse_csv(text);
    REQUIRE(rows.size() == 30);
    for (const auto &row : rows) {
        const CPoint z(num(row, "z_re"), num(row, "z_im"));
        const auto v = dn2::dn2(z, mod, dn2::Route::sn);
        REQUIRE(v);
        CHECK(num(row, "dn2_re") == v->real() + 0.0);
        CHECK(num(row, "dn2_im") == v->imag() + 0.0);
    }
}

TEST_CASE("JSON lines")
{
    const auto r = run_cli({"--format", "jsonl", "sample", "--kappa", "0.5", "--region", "grid", "--n", "3"});
    std::istringstream in(r.out);
    int lines = 0, poles = 0;
    for (std::string line; std::getline(in, line); ++lines) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j.at("route") == "sn");
        CHECK(j.at("z_re").is_number());
        poles += j.at("dn2_re").is_string() ? 1 : 0;
    }
    CHECK(lines == 9);
    CHECK(poles == 2);

    const auto e = run_cli({"--format", "jsonl", "eval", "--kappa", "0.5", "--z", "0.37"});
    const auto j = nlohmann::json::parse(e.out);
    CHECK(j.at("dn2_re").get<double>() == 0.98365050427242662);
}

TEST_CASE("usage errors")
{
    CHECK(run_cli({}).code == cli::exit_usage);
    CHECK(run_cli({"eval", "--kappa", "1.5"}).code == cli::exit_usage);
    CHECK(run_cli({"eval", "--kappa", "0"}).code == cli::exit_usage);
    CHECK(run_cli({"eval"}).code == cli::exit_usage);
    CHECK(run_cli({"eval", "--kappa", "0.5", "--route", "xx"}).code == cli::exit_usage);
    CHECK(run_cli({"eval", "--kappa", "0.5", "--z", "nonsense"}).code == cli::exit_usage);
    CHECK(run_cli({"--format", "xml", "eval", "--kappa", "0.5"}).code == cli::exit_usage);
    CHECK(run_cli({"sample", "--kappa", "0.5", "--n", "1"}).code == cli::exit_usage);
    const auto r = run_cli({"sample", "--kappa", "0.5", "--out", "/nonexistent-dir/x.csv"});
    CHECK(r.code == cli::exit_usage);
    CHECK(r.err.find("cannot write") != std::string::npos);
    CHECK(run_cli({"--help"}).code == cli::exit_ok);
}
