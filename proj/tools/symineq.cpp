// symineq: evaluate symmetric-polynomial functionals, run randomized
// inequality verification suites, search for counterexamples outside the
// proven parameter ranges, check the matrix corollaries, and cross-check the
// h_k kernel by Monte Carlo.
//
// Exit codes: 0 success / all-pass, 1 violations found, 2 usage or domain
// error, 3 counterexample search exhausted.

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symineq/funcs.hpp"
#include "symineq/mc.hpp"
#include "symineq/parsum.hpp"
#include "symineq/report_json.hpp"
#include "symineq/spectral.hpp"
#include "symineq/sympoly.hpp"
#include "symineq/verify.hpp"
#include "symineq/version.hpp"

namespace {

using symineq::Vec;

Vec parse_vec(const std::string& s) {
    Vec out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (cur.empty()) throw std::domain_error("empty vector component in '" + s + "'");
            size_t pos = 0;
            out.push_back(std::stod(cur, &pos));
            if (pos != cur.size())
                throw std::domain_error("bad vector component '" + cur + "'");
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (out.empty()) throw std::domain_error("vector must have at least one component");
    return out;
}

std::vector<std::string> split_ids(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    return out;
}

void parse_n_range(const std::string& s, int& lo, int& hi) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        lo = hi = std::stoi(s);
        return;
    }
    lo = std::stoi(s.substr(0, dots));
    hi = std::stoi(s.substr(dots + 2));
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    f << text;
}

void emit_report(const nlohmann::json& doc, const std::string& out_path) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
}

// When a run that was asked to write a report dies mid-way, leave an
// ERROR-outcome manifest behind instead of nothing.
void emit_error_manifest(const std::string& out_path, const std::string& command,
                         const nlohmann::json& config, const std::string& message) {
    if (out_path.empty()) return;
    symineq::RunManifest manifest;
    manifest.command = command;
    manifest.config = config;
    manifest.artifact_version = std::string(symineq::kArtifactVersion);
    manifest.timestamp = symineq::utc_timestamp_now();
    manifest.outcome = "ERROR";
    nlohmann::json doc{{"manifest", symineq::to_json(manifest)}, {"error", message}};
    try {
        write_text(out_path, doc.dump(2) + "\n");
    } catch (const std::exception&) {
        // the original error is the one worth reporting
    }
}

void print_summary_lines(const symineq::SuiteSummary& summary) {
    for (const auto& [id, cs] : summary.checkers) {
        std::printf("%-16s trials=%llu passes=%llu worst_margin=%.17g (trial %llu)\n",
                    id.c_str(), static_cast<unsigned long long>(cs.trials),
                    static_cast<unsigned long long>(cs.passes), cs.worst_margin,
                    static_cast<unsigned long long>(cs.worst_trial_index));
    }
}

int cmd_eval(const std::string& fn, const std::string& xs, const std::string& ys,
             int k, int l, double p) {
    const Vec x = parse_vec(xs);
    std::optional<Vec> y;
    if (!ys.empty()) y = parse_vec(ys);

    auto scalar = [](const Vec& v, const char* name) {
        if (v.size() != 1)
            throw std::domain_error(std::string(name) + " must be a single scalar here");
        return v[0];
    };
    auto need_y = [&]() -> const Vec& {
        if (!y) throw std::domain_error("--y is required for this function");
        return *y;
    };

    double value;
    if (fn == "ek") value = symineq::elem_sym(x, k);
    else if (fn == "hk") value = symineq::complete_hom(x, k);
    else if (fn == "phi") value = symineq::phi(x, k, p);
    else if (fn == "bigphi") value = symineq::big_phi(x, k, l, p);
    else if (fn == "elemroot") value = symineq::elem_root(x, k, p);
    else if (fn == "homroot") value = symineq::hom_root(x, k, p);
    else if (fn == "homratio") value = symineq::hom_ratio(x, k, p);
    else if (fn == "psi") value = symineq::anderson_psi(x, k);
    else if (fn == "parsum")
        value = symineq::par_sum(scalar(x, "--x"), scalar(need_y(), "--y"));
    else if (fn == "ppsum")
        value = symineq::p_par_sum(scalar(x, "--x"), scalar(need_y(), "--y"), p);
    else if (fn == "multippsum") value = symineq::multi_p_par_sum(x, p);
    else throw std::domain_error("unknown --fn '" + fn + "'");

    std::printf("%.17g\n", value);
    return 0;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed,
               const std::string& n_range, const std::string& p_grid,
               const std::string& out_path, const std::string& csv_path) {
    symineq::TrialConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    if (!n_range.empty()) parse_n_range(n_range, cfg.n_lo, cfg.n_hi);
    if (!p_grid.empty())
        for (const auto& tok : split_ids(p_grid)) cfg.p_grid.push_back(std::stod(tok));

    std::vector<std::string> ids;
    if (suite == "all") {
        for (const auto& def : symineq::checker_registry()) ids.push_back(def.id);
    } else {
        ids = split_ids(suite);
        if (ids.empty()) throw std::domain_error("empty --suite");
    }

    symineq::SuiteSummary summary;
    try {
        summary = symineq::run_suite(cfg, ids);
    } catch (const std::exception& e) {
        emit_error_manifest(out_path, "verify", symineq::config_to_json(cfg, ids),
                            e.what());
        throw;
    }

    symineq::RunManifest manifest;
    manifest.command = "verify";
    manifest.config = symineq::config_to_json(cfg, ids);
    manifest.artifact_version = std::string(symineq::kArtifactVersion);
    manifest.timestamp = symineq::utc_timestamp_now();
    manifest.violation_count = summary.total_violations();
    manifest.outcome = summary.all_pass() ? "ALL_PASS" : "VIOLATIONS";

    emit_report(symineq::report_document(manifest, summary), out_path);
    if (!csv_path.empty()) write_text(csv_path, symineq::violations_csv(summary, manifest));
    if (!out_path.empty()) print_summary_lines(summary);
    return summary.all_pass() ? 0 : 1;
}

int cmd_search(const std::string& checker, int n, int k, int l, double p,
               int budget, std::uint64_t seed, const std::string& out_path) {
    symineq::SearchRegion region;
    region.checker_id = checker;
    region.n = n;
    region.k = k;
    region.l = l;
    region.p = p;

    const auto found = symineq::search_counterexample(region, budget, seed);

    symineq::RunManifest manifest;
    manifest.command = "search";
    manifest.config = nlohmann::json{{"checker", checker}, {"n", n},      {"k", k},
                                     {"l", l},            {"p", p},      {"budget", budget},
                                     {"seed", seed}};
    manifest.artifact_version = std::string(symineq::kArtifactVersion);
    manifest.timestamp = symineq::utc_timestamp_now();
    manifest.violation_count = found ? 1 : 0;
    manifest.outcome = found ? "VIOLATIONS" : "ALL_PASS";

    nlohmann::json doc{{"manifest", symineq::to_json(manifest)},
                       {"counterexample", found ? symineq::to_json(*found)
                                                : nlohmann::json(nullptr)}};
    emit_report(doc, out_path);
    if (!found) {
        std::fprintf(stderr, "no violation found within budget %d\n", budget);
        return 3;
    }
    return 0;
}

int cmd_matrix(const std::string& check, const std::string& dims_str, int k,
               const std::string& p_str, int trials, std::uint64_t seed,
               const std::string& out_path, const std::string& csv_path) {
    symineq::MatrixSuiteConfig cfg;
    cfg.check = check;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.k_fixed = k;
    if (!dims_str.empty()) {
        cfg.dims.clear();
        for (const auto& tok : split_ids(dims_str)) cfg.dims.push_back(std::stoi(tok));
    }
    if (!p_str.empty())
        for (const auto& tok : split_ids(p_str)) cfg.p_grid.push_back(std::stod(tok));

    symineq::SuiteSummary summary;
    try {
        summary = symineq::run_matrix_suite(cfg);
    } catch (const std::exception& e) {
        emit_error_manifest(out_path, "matrix", symineq::config_to_json(cfg), e.what());
        throw;
    }

    symineq::RunManifest manifest;
    manifest.command = "matrix";
    manifest.config = symineq::config_to_json(cfg);
    manifest.artifact_version = std::string(symineq::kArtifactVersion);
    manifest.timestamp = symineq::utc_timestamp_now();
    manifest.violation_count = summary.total_violations();
    manifest.outcome = summary.all_pass() ? "ALL_PASS" : "VIOLATIONS";

    emit_report(symineq::report_document(manifest, summary), out_path);
    if (!csv_path.empty()) write_text(csv_path, symineq::violations_csv(summary, manifest));
    if (!out_path.empty()) print_summary_lines(summary);
    return summary.all_pass() ? 0 : 1;
}

int cmd_mc(const std::string& xs, int k, std::uint64_t samples, std::uint64_t seed) {
    if (k > 8)
        throw std::domain_error(
            "mc: k capped at 8 (estimator variance grows too fast beyond that)");
    const Vec x = parse_vec(xs);
    const auto est = symineq::estimate_hk(x, k, samples, seed);
    const double exact = symineq::complete_hom(x, k);
    const double z = est.std_error > 0.0 ? (est.mean - exact) / est.std_error
                                         : (est.mean == exact ? 0.0
                                                              : std::numeric_limits<double>::infinity());
    std::printf("mean      %.17g\n", est.mean);
    std::printf("std_error %.17g\n", est.std_error);
    std::printf("exact_hk  %.17g\n", exact);
    std::printf("z         %.17g\n", z);
    std::printf("samples   %llu\n", static_cast<unsigned long long>(est.samples));
    return std::abs(z) <= 5.0 ? 0 : 1;
}

}  // namespace

int run_main(int argc, char** argv) {
    CLI::App app{"symmetric-polynomial inequality toolkit"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate one functional at full precision");
    std::string e_fn, e_x, e_y;
    int e_k = 1, e_l = 1;
    double e_p = 1.0;
    eval->add_option("--fn", e_fn,
                     "ek|hk|phi|bigphi|elemroot|homroot|homratio|psi|parsum|ppsum|multippsum")
        ->required();
    eval->add_option("--x", e_x, "comma-separated entries")->required();
    eval->add_option("--y", e_y, "second vector/scalar (parsum, ppsum)");
    eval->add_option("--k", e_k, "polynomial order k");
    eval->add_option("--l", e_l, "ratio depth l (bigphi)");
    eval->add_option("--p", e_p, "power parameter p");

    // verify
    auto* verify = app.add_subcommand("verify", "run randomized inequality suites");
    std::string v_suite = "all", v_n, v_grid, v_out, v_csv;
    int v_trials = 1000;
    std::uint64_t v_seed = 42;
    verify->add_option("--suite", v_suite, "all or comma-separated checker ids");
    verify->add_option("--trials", v_trials, "trials per checker per grid point");
    verify->add_option("--seed", v_seed, "master seed");
    verify->add_option("--n", v_n, "dimension range, e.g. 2..8");
    verify->add_option("--p-grid", v_grid, "override p grid (comma-separated)");
    verify->add_option("--out", v_out, "write JSON report here");
    verify->add_option("--csv", v_csv, "write violations CSV here");

    // search
    auto* search = app.add_subcommand("search",
                                      "counterexample search outside proven ranges");
    std::string s_checker, s_out;
    int s_n = 2, s_k = 1, s_l = 1, s_budget = 1000;
    double s_p = 2.0;
    std::uint64_t s_seed = 1;
    search->add_option("--checker", s_checker, "checker id")->required();
    search->add_option("--n", s_n, "dimension");
    search->add_option("--k", s_k, "polynomial order k");
    search->add_option("--l", s_l, "ratio depth l");
    search->add_option("--p", s_p, "power parameter (must be outside the proven range)")
        ->required();
    search->add_option("--budget", s_budget, "evaluation budget");
    search->add_option("--seed", s_seed, "seed");
    search->add_option("--out", s_out, "write JSON record here");

    // matrix
    auto* matrix = app.add_subcommand("matrix", "matrix corollary checks");
    std::string m_check, m_dims, m_p, m_out, m_csv;
    int m_k = 0, m_trials = 1000;
    std::uint64_t m_seed = 42;
    matrix->add_option("--check", m_check, "muir|mariet|ekmtx")->required();
    matrix->add_option("--dim", m_dims, "dimension(s), e.g. 4 or 2,3,4,6");
    matrix->add_option("--k", m_k, "fixed k (default: random valid k per trial)");
    matrix->add_option("--p", m_p, "p value(s); default grid per check");
    matrix->add_option("--trials", m_trials, "trials per (dim, p) combination");
    matrix->add_option("--seed", m_seed, "master seed");
    matrix->add_option("--out", m_out, "write JSON report here");
    matrix->add_option("--csv", m_csv, "write violations CSV here");

    // mc
    auto* mc = app.add_subcommand("mc", "Monte Carlo cross-check of h_k");
    std::string c_x;
    int c_k = 1;
    std::uint64_t c_samples = 1000000, c_seed = 42;
    mc->add_option("--x", c_x, "comma-separated entries")->required();
    mc->add_option("--k", c_k, "order k (0..8)")->required();
    mc->add_option("--samples", c_samples, "sample count");
    mc->add_option("--seed", c_seed, "seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (app.got_subcommand(eval)) return cmd_eval(e_fn, e_x, e_y, e_k, e_l, e_p);
    if (app.got_subcommand(verify))
        return cmd_verify(v_suite, v_trials, v_seed, v_n, v_grid, v_out, v_csv);
    if (app.got_subcommand(search))
        return cmd_search(s_checker, s_n, s_k, s_l, s_p, s_budget, s_seed, s_out);
    if (app.got_subcommand(matrix))
        return cmd_matrix(m_check, m_dims, m_k, m_p, m_trials, m_seed, m_out, m_csv);
    if (app.got_subcommand(mc)) return cmd_mc(c_x, c_k, c_samples, c_seed);
    return 2;
}

int main(int argc, char** argv) {
    try {
        return run_main(argc, argv);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
