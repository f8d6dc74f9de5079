#include "cli.hpp"
#include "output.hpp"

#include <sig4/dn2.hpp>
#include <sig4/identities.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>

namespace sig4::cli
{

namespace
{

using dn2::Modulus;
using dn2::PeriodMethod;
using dn2::Route;

struct GlobalOptions {
    Format format = Format::human;
    std::optional<double> tol;
    std::optional<unsigned> seed;
};

// One "+"/"-" separated term of a point expression.
CPoint parse_term(std::string_view t, const PeriodPair &halves, const std::string &whole)
{
    auto fail = [&whole]() -> CPoint { throw DomainError("cannot parse point '" + whole + "'"); };
    double coef = 1;
    bool have_number = false, imaginary = false;
    double unit = 1;
    bool have_unit = false;

    auto take_number = [&]() {
        if (t.empty() || !(std::isdigit(static_cast<unsigned char>(t.front())) || t.front() == '.')) {
            return;
        }
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), coef);
        if (ec != std::errc()) {
            fail();
        }
        t.remove_prefix(static_cast<std::size_t>(ptr - t.data()));
        have_number = true;
    };

    take_number();
    if (!t.empty() && t.front() == '*') {
        t.remove_prefix(1);
    }
    if (!t.empty() && t.front() == 'i') {
        imaginary = true;
        t.remove_prefix(1);
        if (!have_number) {
            take_number();
        }
        if (!t.empty() && t.front() == '*') {
            t.remove_prefix(1);
        }
    }
    if (t == "K'") {
        unit = halves.Kprime;
        have_unit = true;
        t = {};
    } else if (t == "K") {
        unit = halves.K;
        have_unit = true;
        t = {};
    }
    if (!t.empty() || !(have_number || have_unit || imaginary)) {
        fail();
    }
    const double v = coef * unit;
    return imaginary ? CPoint(0, v) : CPoint(v, 0);
}

std::string pass_token(bool pass)
{
    return pass ? "pass" : "fail";
}

void add_value(OutputRecord &rec, const std::string &prefix, const PoleOr<CPoint> &v)
{
    if (v) {
        rec.add(prefix + "_re", v->real() + 0.0).add(prefix + "_im", v->imag() + 0.0);
    } else {
        rec.add(prefix + "_re", std::string("pole")).add(prefix + "_im", std::string("pole"));
    }
}

Route route_from(const std::string &name)
{
    if (name == "sn") {
        return Route::sn;
    }
    if (name == "wp") {
        return Route::wp;
    }
    return Route::phi;
}

PeriodMethod method_from(const std::string &name)
{
    if (name == "integral") {
        return PeriodMethod::integral;
    }
    if (name == "hyper") {
        return PeriodMethod::hyper;
    }
    return PeriodMethod::elliptic;
}

int cmd_eval(const GlobalOptions &g, double kappa, const std::string &zs, const std::string &route,
             std::ostream &out)
{
    const Modulus mod(kappa);
    const CPoint z = parse_point(zs, dn2::periods(mod, PeriodMethod::elliptic));
    const bool real_axis = z.imag() == 0;

    OutputRecord rec;
    rec.add("kappa", kappa).add("z_re", z.real()).add("z_im", z.imag()).add("route", route);
    if (route != "all") {
        add_value(rec, "dn2", dn2::dn2(z, mod, route_from(route)));
    } else {
        std::vector<std::pair<std::string, PoleOr<CPoint>>> vals{{"sn", dn2::dn2(z, mod, Route::sn)},
                                                                 {"wp", dn2::dn2(z, mod, Route::wp)}};
        if (real_axis) {
            vals.emplace_back("phi", dn2::dn2(z, mod, Route::phi));
        }
        add_value(rec, "dn2", vals.front().second);
        for (const auto &[name, v] : vals) {
            add_value(rec, "dn2_" + name, v);
        }
        std::optional<double> max_delta = 0.0;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            for (std::size_t j = i + 1; j < vals.size(); ++j) {
                const std::string key = "delta_" + vals[i].first + "_" + vals[j].first;
                if (vals[i].second && vals[j].second) {
                    const double d = std::abs(*vals[i].second - *vals[j].second);
                    rec.add(key, d);
                    if (max_delta) {
                        max_delta = std::max(*max_delta, d);
                    }
                } else {
                    rec.add(key, std::string("na"));
                    max_delta.reset();
                }
            }
        }
        if (max_delta) {
            rec.add("max_delta", *max_delta);
        } else {
            rec.add("max_delta", std::string("na"));
        }
    }
    if (real_axis) {
        rec.add("s2", dn2::s2(z.real(), mod)).add("phi", dn2::phi(z.real(), mod));
    }
    RecordWriter(out, g.format).write(rec);
    return exit_ok;
}

int cmd_periods(const GlobalOptions &g, double kappa, const std::string &method, std::ostream &out)
{
    const Modulus mod(kappa);
    OutputRecord rec;
    rec.add("kappa", kappa).add("method", method);
    if (method != "all") {
        const auto p = dn2::periods(mod, method_from(method));
        rec.add("K", p.K).add("Kprime", p.Kprime).add("ratio", p.Kprime / p.K);
    } else {
        const auto pi = dn2::periods(mod, PeriodMethod::integral);
        const auto pe = dn2::periods(mod, PeriodMethod::elliptic);
        const auto ph = dn2::periods(mod, PeriodMethod::hyper);
        rec.add("K", pe.K).add("Kprime", pe.Kprime).add("ratio", pe.Kprime / pe.K);
        rec.add("K_integral", pi.K).add("Kprime_integral", pi.Kprime);
        rec.add("K_elliptic", pe.K).add("Kprime_elliptic", pe.Kprime);
        rec.add("K_hyper", ph.K).add("Kprime_hyper", ph.Kprime);
        auto spread = [](double a, double b, double c) { return std::max({a, b, c}) - std::min({a, b, c}); };
        rec.add("max_delta_K", spread(pi.K, pe.K, ph.K));
        rec.add("max_delta_Kprime", spread(pi.Kprime, pe.Kprime, ph.Kprime));
    }
    RecordWriter(out, g.format).write(rec);
    return exit_ok;
}

int cmd_lattice(const GlobalOptions &g, double kappa, std::ostream &out)
{
    const Modulus mod(kappa);
    const auto lat = dn2::invariants_of(mod);
    const auto halves = weierstrass::wp_halfperiods(lat);
    OutputRecord rec;
    rec.add("kappa", kappa).add("lambda", mod.lambda());
    rec.add("g2", lat.g2).add("g3", lat.g3).add("delta", lat.delta);
    rec.add("e1", lat.e1).add("e2", lat.e2).add("e3", lat.e3);
    rec.add("k2", lat.m).add("k", std::sqrt(lat.m));
    rec.add("K", halves.K).add("Kprime", halves.Kprime);
    RecordWriter(out, g.format).write(rec);
    return exit_ok;
}

int cmd_identities(const GlobalOptions &g, double step, double inject_shift, std::ostream &out, std::ostream &err)
{
    if (!(step > 0 && step < 0.5)) {
        throw DomainError("identities: --step must lie in (0, 0.5)");
    }
    RecordWriter writer(out, g.format);
    struct Worst {
        double residual = 0;
        double tol = 0;
    };
    std::map<std::string, Worst> worst;
    std::size_t checks = 0, failures = 0;

    auto emit = [&](identities::ResidualReport r) {
        if (g.tol) {
            r.tol = *g.tol;
            r.pass = std::abs(r.residual) <= r.tol;
        }
        ++checks;
        failures += r.pass ? 0 : 1;
        auto &w = worst[r.name];
        if (std::abs(r.residual) >= std::abs(w.residual)) {
            w.residual = r.residual;
        }
        w.tol = r.tol;
        OutputRecord rec;
        rec.add("identity", r.name).add("parameter", r.parameter).add("lhs", r.lhs).add("rhs", r.rhs);
        rec.add("residual", r.residual).add("tol", r.tol).add("pass", pass_token(r.pass));
        writer.write(rec);
    };

    for (int k = 1; k * step < 1 - 1e-12; ++k) {
        const double v = k * step;
        emit(identities::k_identity(v, inject_shift));
        emit(identities::kprime_identity(v, inject_shift));
        emit(identities::transformation_law(v, inject_shift));
        for (auto &r : identities::period_relations(v, inject_shift)) {
            emit(std::move(r));
        }
    }

    std::ostream &summary = g.format == Format::human ? out : err;
    for (const auto &[name, w] : worst) {
        char line[160];
        std::snprintf(line, sizeof line, "worst %-26s residual % .3e  tol %.0e  %s\n", name.c_str(), w.residual,
                      w.tol, std::abs(w.residual) <= w.tol ? "pass" : "FAIL");
        summary << line;
    }
    summary << "identities: " << checks << " checks, " << failures << " failures\n";
    return failures == 0 ? exit_ok : exit_tolerance;
}

int cmd_sample(const GlobalOptions &g, double kappa, const std::string &region, int n, const std::string &path,
               std::ostream &out)
{
    if (n < 2) {
        throw DomainError("sample: --n must be at least 2");
    }
    const Modulus mod(kappa);
    const auto halves = dn2::periods(mod, PeriodMethod::elliptic);
    const double K = halves.K, Kp = halves.Kprime;

    std::vector<CPoint> points;
    if (region == "real-axis") {
        for (int j = 0; j < n; ++j) {
            points.emplace_back(2 * K * j / (n - 1), 0);
        }
    } else if (region == "perimeter") {
        // Counterclockwise from the pole iK': down to 0, along to K, up to
        // K + iK', back to iK'. Samples sit at cell midpoints so the pole
        // vertex itself is never hit.
        const double L = 2 * (K + Kp);
        for (int j = 0; j < n; ++j) {
            double s = L * (j + 0.5) / n;
            if (s < Kp) {
                points.emplace_back(0, Kp - s);
            } else if ((s -= Kp) < K) {
                points.emplace_back(s, 0);
            } else if ((s -= K) < Kp) {
                points.emplace_back(K, s);
            } else {
                points.emplace_back(K - (s - Kp), Kp);
            }
        }
    } else if (g.seed) {
        std::mt19937 gen(*g.seed);
        std::uniform_real_distribution<double> ux(0, 2 * K), uy(0, 2 * Kp);
        for (int j = 0; j < n; ++j) {
            const double x = ux(gen);
            points.emplace_back(x, uy(gen));
        }
    } else {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                points.emplace_back(2 * K * j / (n - 1), 2 * Kp * i / (n - 1));
            }
        }
    }

    std::ofstream file;
    std::ostream *os = &out;
    if (path != "-") {
        file.open(path);
        if (!file) {
            throw DomainError("sample: cannot write '" + path + "'");
        }
        os = &file;
    }
    RecordWriter writer(*os, g.format == Format::jsonl ? Format::jsonl : Format::csv);
    std::optional<double> prev;
    for (const CPoint &z : points) {
        const auto v = dn2::dn2(z, mod, Route::sn);
        OutputRecord rec;
        rec.add("z_re", z.real()).add("z_im", z.imag());
        add_value(rec, "dn2", v);
        rec.add("route", std::string("sn"));
        if (region == "perimeter") {
            if (v && prev) {
                rec.add("decreasing", static_cast<long long>(v->real() < *prev));
            } else {
                rec.add("decreasing", std::string("na"));
            }
            prev = v ? std::optional<double>(v->real()) : std::nullopt;
        }
        writer.write(rec);
    }
    if (file.is_open()) {
        file.close();
        if (!file) {
            throw DomainError("sample: write to '" + path + "' failed");
        }
    }
    return exit_ok;
}

} // namespace

CPoint parse_point(const std::string &text, const PeriodPair &halves)
{
    std::string s;
    std::copy_if(text.begin(), text.end(), std::back_inserter(s),
                 [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
    if (s.empty()) {
        throw DomainError("empty point");
    }
    CPoint z(0, 0);
    std::size_t pos = 0;
    while (pos < s.size()) {
        double sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        std::size_t end = pos;
        while (end < s.size()) {
            const bool is_sep = s[end] == '+' || s[end] == '-';
            const bool exponent = end > pos && (s[end - 1] == 'e' || s[end - 1] == 'E');
            if (is_sep && !exponent) {
                break;
            }
            ++end;
        }
        z += sign * parse_term(std::string_view(s).substr(pos, end - pos), halves, text);
        pos = end;
    }
    return z;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Signature-four elliptic function dn2: evaluation, periods, lattice data and identity checks"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    std::string format = "human";
    double tol = 0;
    unsigned seed = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "jsonl", "human"}));
    auto *tol_opt = app.add_option("--tol", tol, "Override the tolerance of identity checks");
    auto *seed_opt = app.add_option("--seed", seed, "Seed for pseudo-random interior grids");

    double kappa = 0.5;
    auto *eval = app.add_subcommand("eval", "Evaluate dn2 (and s2, phi on the real axis)");
    std::string z = "0", route = "sn";
    eval->add_option("--kappa", kappa, "Modulus in (0, 1)")->required();
    eval->add_option("--z", z, "Point, e.g. 0.37, 0.3+0.4i, K, K+iK'");
    eval->add_option("--route", route)->check(CLI::IsMember({"sn", "wp", "phi", "all"}));

    auto *per = app.add_subcommand("periods", "Half-periods K, K'");
    std::string method = "elliptic";
    per->add_option("--kappa", kappa, "Modulus in (0, 1)")->required();
    per->add_option("--method", method)->check(CLI::IsMember({"integral", "elliptic", "hyper", "all"}));

    auto *lat = app.add_subcommand("lattice", "Invariants and midpoint values of the coperiodic wp");
    lat->add_option("--kappa", kappa, "Modulus in (0, 1)")->required();

    auto *ids = app.add_subcommand("identities", "Sweep the hypergeometric identities and period relations");
    double step = 0.05, inject = 0;
    ids->add_option("--step", step, "Grid step in (0, 0.5)");
    ids->add_option("--inject-shift", inject, "Perturb the right-hand parameter (testing)")->group("");

    auto *smp = app.add_subcommand("sample", "Write dn2 samples as CSV or JSON lines");
    std::string region = "real-axis", path = "-";
    int n = 200;
    smp->add_option("--kappa", kappa, "Modulus in (0, 1)")->required();
    smp->add_option("--region", region)->check(CLI::IsMember({"real-axis", "perimeter", "grid"}));
    smp->add_option("--n", n, "Number of samples (per side for a regular grid)");
    smp->add_option("--out", path, "Output path, '-' for stdout");

    std::vector<const char *> argv{"sig4"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    g.format = format == "csv" ? Format::csv : format == "jsonl" ? Format::jsonl : Format::human;
    if (*tol_opt) {
        g.tol = tol;
    }
    if (*seed_opt) {
        g.seed = seed;
    }

    try {
        if (*eval) {
            return cmd_eval(g, kappa, z, route, out);
        }
        if (*per) {
            return cmd_periods(g, kappa, method, out);
        }
        if (*lat) {
            return cmd_lattice(g, kappa, out);
        }
        if (*ids) {
            return cmd_identities(g, step, inject, out, err);
        }
        return cmd_sample(g, kappa, region, n, path, out);
    } catch (const NumericFailure &e) {
        err << "error: " << e.what() << " (best estimate " << e.best_estimate() << ")\n";
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_usage;
}

} // namespace sig4::cli
