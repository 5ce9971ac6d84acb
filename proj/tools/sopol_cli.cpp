// Command-line front end: generate family coefficient tables (gen), run one
// verification suite (check), or run the whole configured grid (report-all).

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "sopol/families.hpp"
#include "sopol/report.hpp"
#include "sopol/suites.hpp"

namespace {

using sopol::cplx;
using sopol::CPoly;

struct GenOptions {
    std::string family;
    int r = 2;
    double alpha = -1.0;
    int n = -1;
    int nmax = -1;
    std::vector<double> p_coeffs;
    std::string format = "csv";
    std::string out;
};

CPoly parse_symbol(const std::vector<double>& coeffs) {
    if (coeffs.empty())
        throw CLI::ValidationError("--p", "phi families need the --p coefficient list");
    std::vector<cplx> c(coeffs.begin(), coeffs.end());
    return CPoly{std::move(c)};
}

CPoly generate_member(const GenOptions& opt, int n) {
    if (opt.family == "y") return sopol::y_family({.r = opt.r, .alpha = opt.alpha}, n);
    if (opt.family == "w") return sopol::w_family(opt.alpha, n);
    if (opt.family == "hermite") return sopol::hermite(n);
    if (opt.family == "expsum" || opt.family == "example21") return sopol::expsum_family(n);
    if (opt.family == "phi-monomial")
        return sopol::phi_family(sopol::GenFnSpec::monomials(parse_symbol(opt.p_coeffs), n + 2), n);
    if (opt.family == "phi-hermite")
        return sopol::phi_family(sopol::GenFnSpec::hermite(parse_symbol(opt.p_coeffs), n + 2), n);
    throw CLI::ValidationError("--family", "unknown family: " + opt.family);
}

// Canonicalize negative zeros so emitted tables are sign-stable.
double clean_zero(double v) { return v == 0.0 ? 0.0 : v; }

void write_output(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open output file: " + out);
    f << text;
}

int run_gen(const GenOptions& opt) {
    if ((opt.n < 0) == (opt.nmax < 0))
        throw CLI::ValidationError("--n", "give exactly one of --n or --nmax");
    int lo = (opt.n >= 0) ? opt.n : 0;
    int hi = (opt.n >= 0) ? opt.n : opt.nmax;

    if (opt.format == "csv") {
        std::string text;
        for (int n = lo; n <= hi; ++n) {
            CPoly p = generate_member(opt, n);
            text += fmt::format("{}:", n);
            for (int k = 0; k <= std::max(n, p.degree()); ++k)
                text += fmt::format(" {},{}", clean_zero(p.coeff(k).real()),
                                    clean_zero(p.coeff(k).imag()));
            text += "\n";
        }
        write_output(opt.out, text);
        return 0;
    }
    if (opt.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int n = lo; n <= hi; ++n) {
            CPoly p = generate_member(opt, n);
            nlohmann::json coeffs = nlohmann::json::array();
            for (int k = 0; k <= std::max(n, p.degree()); ++k)
                coeffs.push_back({clean_zero(p.coeff(k).real()), clean_zero(p.coeff(k).imag())});
            rows.push_back({{"n", n}, {"coeffs", coeffs}});
        }
        nlohmann::json doc{{"family", opt.family},
                           {"params",
                            {{"r", opt.r}, {"alpha", opt.alpha}}},
                           {"rows", rows}};
        write_output(opt.out, doc.dump(2) + "\n");
        return 0;
    }
    throw CLI::ValidationError("--format", "unknown format: " + opt.format);
}

// Flat key-value config with one [suite] section per run; a suite may repeat
// with different parameters.
std::vector<std::pair<std::string, sopol::SuiteParams>> parse_config(std::istream& in,
                                                                     const sopol::SuiteParams& base) {
    std::vector<std::pair<std::string, sopol::SuiteParams>> grid;
    std::string line;
    while (std::getline(in, line)) {
        auto l = line.find_first_not_of(" \t");
        if (l == std::string::npos) continue;
        auto r = line.find_last_not_of(" \t\r");
        std::string s = line.substr(l, r - l + 1);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[' && s.back() == ']') {
            grid.emplace_back(s.substr(1, s.size() - 2), base);
            continue;
        }
        auto eq = s.find('=');
        if (eq == std::string::npos || grid.empty())
            throw std::runtime_error("config: malformed line: " + s);
        auto trim = [](std::string v) {
            auto a = v.find_first_not_of(" \t");
            auto b = v.find_last_not_of(" \t");
            return (a == std::string::npos) ? std::string() : v.substr(a, b - a + 1);
        };
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        sopol::SuiteParams& p = grid.back().second;
        if (key == "r")
            p.r = std::stoi(val);
        else if (key == "alpha")
            p.alpha = std::stod(val);
        else if (key == "nmax")
            p.nmax = std::stoi(val);
        else if (key == "seed")
            p.seed = std::stoull(val);
        else if (key == "tol_scale")
            p.tol_scale = std::stod(val);
        else if (key == "family")
            p.family = val;
        else
            throw std::runtime_error("config: unknown key: " + key);
    }
    return grid;
}

std::vector<std::pair<std::string, sopol::SuiteParams>> default_grid(
    const sopol::SuiteParams& base) {
    std::vector<std::pair<std::string, sopol::SuiteParams>> g;
    auto add = [&](const std::string& suite, auto mutate) {
        sopol::SuiteParams p = base;
        mutate(p);
        g.emplace_back(suite, p);
    };
    for (auto [r, a] : {std::pair{1, 1.0}, {2, -1.0}, {3, 0.5}})
        add("orthogonality", [&](auto& p) { p.r = r; p.alpha = a; p.family = "y"; });
    add("orthogonality", [](auto& p) { p.family = "expsum"; });
    add("orthogonality", [](auto& p) { p.family = "phi-monomial"; p.nmax = 15; });
    add("orthogonality", [](auto& p) { p.family = "phi-hermite"; p.nmax = 15; });
    for (auto [r, a] : {std::pair{2, -1.0}, {3, 0.5}}) {
        add("recurrence", [&](auto& p) { p.r = r; p.alpha = a; p.nmax = 20; });
        add("ode", [&](auto& p) { p.r = r; p.alpha = a; p.nmax = 20; });
    }
    for (double a : {-1.0, -0.25}) {
        add("generating", [&](auto& p) { p.alpha = a; });
        add("integral-rep", [&](auto& p) { p.alpha = a; });
    }
    for (auto [r, a] : {std::pair{2, -1.0}, {2, -2.0}, {3, -1.0}, {3, -2.0}})
        add("roots", [&](auto& p) { p.r = r; p.alpha = a; p.nmax = 20; });
    for (int r : {1, 2})
        add("asymptotics", [&](auto& p) { p.r = r; p.alpha = -1.0; });
    add("extension", [](auto& p) { p.nmax = 15; });
    add("pencil", [](auto&) {});
    for (auto [r, a] : {std::pair{2, -1.0}, {1, 1.0}, {3, 0.5}})
        add("gram-schmidt", [&](auto& p) { p.r = r; p.alpha = a; });
    return g;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sobolev orthogonal polynomial families: generation and verification"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* cgen = app.add_subcommand("gen", "emit family coefficient tables");
    cgen->add_option("--family", gen.family,
                     "y | w | hermite | expsum (alias example21) | phi-monomial | phi-hermite")
        ->required();
    cgen->add_option("--r", gen.r, "family order r");
    cgen->add_option("--alpha", gen.alpha, "family parameter alpha");
    cgen->add_option("--n", gen.n, "single degree to emit");
    cgen->add_option("--nmax", gen.nmax, "emit degrees 0..nmax");
    cgen->add_option("--p", gen.p_coeffs, "symbol coefficients c_0,c_1,... for phi families")
        ->delimiter(',');
    cgen->add_option("--format", gen.format, "csv | json");
    cgen->add_option("--out", gen.out, "output path (default stdout)");

    sopol::SuiteParams sp;
    std::string suite_name, check_out;
    bool example21 = false;
    CLI::App* ccheck = app.add_subcommand("check", "run one verification suite");
    ccheck->add_option("suite", suite_name, "one of: orthogonality recurrence ode generating integral-rep roots asymptotics extension pencil gram-schmidt")
        ->required();
    ccheck->add_option("--r", sp.r, "family order r");
    ccheck->add_option("--alpha", sp.alpha, "family parameter alpha");
    ccheck->add_option("--nmax", sp.nmax, "largest degree checked");
    ccheck->add_option("--seed", sp.seed, "seed for randomized sample points");
    ccheck->add_option("--tol-scale", sp.tol_scale, "multiply every tolerance");
    ccheck->add_option("--family", sp.family, "family selector where applicable");
    ccheck->add_flag("--example21", example21, "shorthand for --family expsum");
    ccheck->add_option("--out", check_out, "write the JSON report here (default stdout)");

    std::string config_path, all_out;
    sopol::SuiteParams all_base;
    CLI::App* call = app.add_subcommand("report-all", "run every configured suite");
    call->add_option("config", config_path, "grid config file (default: built-in grid)");
    call->add_option("--out", all_out, "write the aggregate JSON report here");
    call->add_option("--seed", all_base.seed, "seed for randomized sample points");
    call->add_option("--tol-scale", all_base.tol_scale, "multiply every tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cgen) return run_gen(gen);

        if (*ccheck) {
            if (example21) sp.family = "expsum";
            sopol::Report rep = sopol::run_suite(suite_name, sp);
            write_output(check_out, sopol::report_to_json(rep) + "\n");
            return rep.pass ? 0 : 1;
        }

        if (*call) {
            std::vector<std::pair<std::string, sopol::SuiteParams>> grid;
            if (config_path.empty()) {
                grid = default_grid(all_base);
            } else {
                std::ifstream f(config_path);
                if (!f) {
                    std::cerr << "report-all: cannot read config: " << config_path << "\n";
                    return 2;
                }
                grid = parse_config(f, all_base);
            }
            auto t0 = std::chrono::steady_clock::now();
            std::vector<sopol::Report> reports;
            bool pass = true;
            for (const auto& [suite, params] : grid) {
                reports.push_back(sopol::run_suite(suite, params));
                pass = pass && reports.back().pass;
            }
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            write_output(all_out, sopol::reports_to_json(reports, secs) + "\n");
            return pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
