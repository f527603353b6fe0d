// Command-line front end: constructs the bilinear operators, runs the exact
// symbolic verifications, the numeric experiment suites, and the spectrum
// queries. Reports are machine-readable and echo their full configuration so
// any run can be reproduced byte-for-byte.

#include "CLI11.hpp"
#include "rankone/errors.hpp"
#include "rankone/render.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using rankone::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::string format = "json";  // json | csv | latex | text
    std::string path;             // empty = stdout

    void emit(const std::string& body) const {
        if (path.empty()) {
            std::cout << body << "\n";
            return;
        }
        std::ofstream out(path);
        if (!out) throw rankone::RangeError("cannot open output file '" + path + "'");
        out << body << "\n";
    }
};

Json load_config(const std::string& path) {
    if (path.empty()) return Json::object();
    std::ifstream in(path);
    if (!in) throw rankone::RangeError("cannot open config file '" + path + "'");
    Json cfg = Json::parse(in, nullptr, /*allow_exceptions=*/true);
    if (cfg.contains("config")) cfg = cfg["config"];  // accept a full report back
    return cfg;
}

// Pre-scan for --config so its values can seed the option defaults.
std::string find_config_path(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") return argv[i + 1];
    return {};
}

rankone::RecursionDenominator parse_sign(const std::string& s) {
    if (s == "one-minus-rho") return rankone::RecursionDenominator::kOneMinusRho;
    if (s == "rho-minus-one") return rankone::RecursionDenominator::kRhoMinusOne;
    throw rankone::RangeError("unknown recursion sign '" + s + "'");
}

Json report_shell(const std::string& command, Json config) {
    Json j;
    j["schema"] = "v1";
    j["command"] = command;
    j["config"] = std::move(config);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bilinear intertwining differential operators on rank-one principal series"};
    app.require_subcommand(1);
    // global options (--format, --out, ...) may follow the subcommand
    app.fallthrough();

    Json cfg;
    try {
        cfg = load_config(find_config_path(argc, argv));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    auto dint = [&](const char* k, long long v) { return cfg.contains(k) ? cfg[k].get<long long>() : v; };
    auto ddbl = [&](const char* k, double v) { return cfg.contains(k) ? cfg[k].get<double>() : v; };
    auto dstr = [&](const char* k, std::string v) {
        return cfg.contains(k) ? cfg[k].get<std::string>() : v;
    };

    std::string config_path;
    app.add_option("--config", config_path, "JSON file with option defaults (a saved report works)");

    Output out;
    out.format = dstr("format", "json");
    app.add_option("--format", out.format, "json | csv | latex | text")
        ->check(CLI::IsMember({"json", "csv", "latex", "text"}));
    out.path = dstr("out", "");
    app.add_option("--out", out.path, "output file (default stdout)");

    std::string sign_name = dstr("recursion-sign", "one-minus-rho");
    app.add_option("--recursion-sign", sign_name,
                   "denominator convention of the recursion family")
        ->check(CLI::IsMember({"one-minus-rho", "rho-minus-one"}));

    int threads = static_cast<int>(dint("threads", 1));
    app.add_option("--threads", threads, "worker threads for experiment drivers");

    // construct ---------------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "emit the degree-2j operator pair");
    int c_j = static_cast<int>(dint("j", 1));
    construct->add_option("--j", c_j, "operator order parameter")->check(CLI::NonNegativeNumber);
    std::string c_mode = dstr("dim-mode", "symbolic");
    construct->add_option("--dim-mode", c_mode, "symbolic | numeric")
        ->check(CLI::IsMember({"symbolic", "numeric"}));
    int c_n = static_cast<int>(dint("n", 3));
    construct->add_option("--n", c_n, "group parameter n for numeric dimension d = n-1");

    // verify-symbolic ----------------------------------------------------------
    auto* vsym = app.add_subcommand("verify-symbolic", "exact identity checks");
    int v_mmax = static_cast<int>(dint("m-max", 4));
    vsym->add_option("--m-max", v_mmax, "verify orders up to m (ceiling 6)");
    int v_bernstein = static_cast<int>(dint("bernstein-max", 8));
    vsym->add_option("--bernstein-max", v_bernstein, "power-law derivative identity up to j");
    int v_mixed = static_cast<int>(dint("mixed-max", 5));
    vsym->add_option("--mixed-max", v_mixed, "mixed reproduction up to i+j+k");
    int v_poles = static_cast<int>(dint("poles-max", 5));
    vsym->add_option("--poles-max", v_poles, "pole audit up to j");

    // verify-numeric -----------------------------------------------------------
    auto* vnum = app.add_subcommand("verify-numeric", "grid / Monte-Carlo experiment suites");
    std::string suite = dstr("suite", "norms");
    vnum->add_option("--suite", suite, "norms | bound | mc | equivariance")
        ->check(CLI::IsMember({"norms", "bound", "mc", "equivariance"}));
    int n_d = static_cast<int>(dint("d", 1));
    vnum->add_option("--d", n_d, "Euclidean dimension of one factor");
    double n_alpha = ddbl("alpha", 0.2), n_beta = ddbl("beta", 0.2);
    vnum->add_option("--alpha", n_alpha);
    vnum->add_option("--beta", n_beta);
    int n_m = static_cast<int>(dint("m", 0));
    vnum->add_option("--m", n_m, "operator order parameter");
    int n_trials = static_cast<int>(dint("trials", 50));
    vnum->add_option("--trials", n_trials);
    long long n_samples = dint("samples", 1000000);
    vnum->add_option("--samples", n_samples);
    unsigned long long n_seed = static_cast<unsigned long long>(dint("seed", 42));
    vnum->add_option("--seed", n_seed);
    int n_grid = static_cast<int>(dint("N", 256));
    vnum->add_option("--N", n_grid, "points per axis (power of two)");
    double n_box = ddbl("L", 20.0);
    vnum->add_option("--L", n_box, "physical box side");
    double n_tol = ddbl("tol", 1e-6);
    vnum->add_option("--tol", n_tol, "equivariance tolerance");
    double n_drift = ddbl("drift-tol", 0.1);
    vnum->add_option("--drift-tol", n_drift, "allowed max-ratio drift under refinement");

    // spectrum ------------------------------------------------------------------
    auto* spec = app.add_subcommand("spectrum", "predicted discrete components");
    std::string s_field = dstr("field", "R");
    spec->add_option("--field", s_field, "R | C | H");
    int s_n = static_cast<int>(dint("n", 2));
    spec->add_option("--n", s_n);
    double s_alpha = ddbl("alpha", 0.2), s_beta = ddbl("beta", 0.2);
    spec->add_option("--alpha", s_alpha);
    spec->add_option("--beta", s_beta);

    // poles ----------------------------------------------------------------------
    auto* poles = app.add_subcommand("poles", "pole audit of the degree-j operator");
    int p_j = static_cast<int>(dint("j", 0));
    poles->add_option("--j", p_j)->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const auto sign = parse_sign(sign_name);

        if (construct->parsed()) {
            Json config{{"j", c_j},       {"dim-mode", c_mode},        {"n", c_n},
                        {"format", out.format}, {"recursion-sign", sign_name}};
            rankone::BidiffOp bracket = rankone::bracket_operator(c_j, sign);
            rankone::BidiffOp family = rankone::recursion_family(c_j, sign);
            if (c_mode == "numeric") {
                if (c_n < 2) throw rankone::RangeError("numeric mode needs n >= 2");
                bracket = bracket.with_dim(c_n - 1);
                family = family.with_dim(c_n - 1);
            }
            if (out.format == "latex") {
                out.emit("\\begin{aligned}\nE_{" + std::to_string(c_j) + "} &= " +
                         rankone::latex_bidiff(bracket) + "\\\\\nM_{" + std::to_string(c_j) +
                         "} &= " + rankone::latex_bidiff(family) + "\n\\end{aligned}");
            } else if (out.format == "text") {
                out.emit("bracket  E_" + std::to_string(c_j) + " = " + bracket.to_string() +
                         "\nfamily   M_" + std::to_string(c_j) + " = " + family.to_string());
            } else {
                Json j = report_shell("construct", config);
                j["bracket"] = rankone::json_bidiff(bracket);
                j["recursion_family"] = rankone::json_bidiff(family);
                out.emit(j.dump(2));
            }
            return kExitOk;
        }

        if (vsym->parsed()) {
            if (v_mmax > 6) throw rankone::RangeError("--m-max exceeds the ceiling 6");
            Json config{{"m-max", v_mmax},       {"bernstein-max", v_bernstein},
                        {"mixed-max", v_mixed},  {"poles-max", v_poles},
                        {"recursion-sign", sign_name}, {"format", out.format}};
            auto bern = rankone::verify_bernstein_identity(v_bernstein);
            auto repr = rankone::verify_kernel_reproduction(v_mmax, sign);
            auto mixed = rankone::verify_mixed_reproduction(v_mixed, sign);
            auto expansion = rankone::verify_bracket_expansion(v_mmax, sign);
            bool pass = bern.pass && repr.pass && mixed.pass && expansion.pass;
            bool contained = true;
            Json pole_arr = Json::array();
            for (int j = 0; j <= v_poles; ++j) {
                auto pr = rankone::pole_report(j, sign);
                contained = contained && pr.contained_in_family;
                pole_arr.push_back(rankone::json_pole_report(pr));
            }
            pass = pass && contained;
            Json j = report_shell("verify-symbolic", config);
            j["results"] = Json{{"bernstein", rankone::json_verify(bern)},
                                {"kernel_reproduction", rankone::json_verify(repr)},
                                {"mixed_reproduction", rankone::json_verify(mixed)},
                                {"bracket_expansion", rankone::json_verify(expansion)},
                                {"pole_audit", pole_arr}};
            j["pass"] = pass;
            if (out.format == "text") {
                std::string txt;
                auto line = [&](const rankone::VerifyReport& r) {
                    txt += (r.pass ? "[pass] " : "[FAIL] ") + r.name + "\n";
                };
                line(bern);
                line(repr);
                line(mixed);
                line(expansion);
                txt += (contained ? "[pass] pole-family containment" : "[FAIL] pole-family containment");
                out.emit(txt);
            } else {
                out.emit(j.dump(2));
            }
            return pass ? kExitOk : kExitCheckFailed;
        }

        if (vnum->parsed()) {
            Json config{{"suite", suite},   {"d", n_d},           {"alpha", n_alpha},
                        {"beta", n_beta},   {"m", n_m},           {"trials", n_trials},
                        {"samples", n_samples}, {"seed", n_seed}, {"N", n_grid},
                        {"L", n_box},       {"tol", n_tol},       {"drift-tol", n_drift},
                        {"threads", threads}, {"format", out.format}};
            Json j = report_shell("verify-numeric", config);
            bool pass = false;
            std::string csv;
            if (suite == "norms") {
                auto rep = rankone::run_norm_suite(n_grid, n_box);
                pass = rep.pass;
                j["results"] = rankone::json_norm_suite(rep);
            } else if (suite == "bound") {
                auto rep = rankone::run_bound_experiment(n_d, n_alpha, n_beta, n_m, n_trials,
                                                         n_grid, n_box, n_seed, threads);
                pass = rep.all_finite && rep.refinement_drift < n_drift;
                j["results"] = rankone::json_bound(rep);
                csv = rankone::csv_bound(rep);
            } else if (suite == "mc") {
                auto rep = rankone::run_mc_suite(n_d, n_m, n_alpha, n_beta, n_samples, n_seed);
                pass = rep.pass;
                j["results"] = rankone::json_mc_suite(rep);
                csv = rankone::csv_mc_suite(rep);
            } else {
                auto rep = rankone::run_equivariance(n_d, n_m, n_alpha, n_beta, n_grid, n_box,
                                                     n_seed, n_tol);
                pass = rep.pass;
                j["results"] = rankone::json_equivariance(rep);
            }
            j["pass"] = pass;
            if (out.format == "csv" && !csv.empty()) {
                out.emit(csv);
            } else if (out.format == "text") {
                out.emit(std::string(pass ? "[pass] " : "[FAIL] ") + "suite " + suite);
            } else {
                out.emit(j.dump(2));
            }
            return pass ? kExitOk : kExitCheckFailed;
        }

        if (spec->parsed()) {
            Json config{{"field", s_field}, {"n", s_n}, {"alpha", s_alpha}, {"beta", s_beta},
                        {"format", out.format}};
            auto list = rankone::discrete_components(rankone::field_from_string(s_field), s_n,
                                                     s_alpha, s_beta);
            Json j = report_shell("spectrum", config);
            j["results"] = rankone::json_components(list);
            if (out.format == "text") {
                std::string txt = "components:";
                for (const auto& c : list.components)
                    txt += " " + std::to_string(c.param) + " (j=" + std::to_string(c.j) + ", " +
                           c.theorem + ")";
                if (list.components.empty()) txt += " none";
                out.emit(txt);
            } else {
                out.emit(j.dump(2));
            }
            return kExitOk;
        }

        if (poles->parsed()) {
            Json config{{"j", p_j}, {"recursion-sign", sign_name}, {"format", out.format}};
            auto rep = rankone::pole_report(p_j, sign);
            Json j = report_shell("poles", config);
            j["results"] = rankone::json_pole_report(rep);
            j["pass"] = rep.contained_in_family;
            if (out.format == "text") {
                std::string txt = rep.contained_in_family ? "[pass]" : "[FAIL]";
                txt += " computed factors:";
                for (const auto& f : rep.computed) txt += " (" + f.to_string() + ")";
                out.emit(txt);
            } else {
                out.emit(j.dump(2));
            }
            return rep.contained_in_family ? kExitOk : kExitCheckFailed;
        }
    } catch (const rankone::RangeError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const rankone::PoleError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
