#include "symineq/report_json.hpp"

#include <cstdio>
#include <ctime>
#include <sstream>

namespace symineq {

using nlohmann::json;

std::string utc_timestamp_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json to_json(const TrialInputs& in) {
    return json{{"x", in.x},       {"y", in.y},     {"a", in.a},
                {"n", in.n},       {"rows", in.rows}, {"cols", in.cols},
                {"k", in.k},       {"l", in.l},     {"p", in.p},
                {"variant", in.variant}};
}

TrialInputs trial_inputs_from_json(const json& j) {
    TrialInputs in;
    in.x = j.at("x").get<std::vector<double>>();
    in.y = j.at("y").get<std::vector<double>>();
    in.a = j.at("a").get<std::vector<double>>();
    in.n = j.at("n").get<int>();
    in.rows = j.at("rows").get<int>();
    in.cols = j.at("cols").get<int>();
    in.k = j.at("k").get<int>();
    in.l = j.at("l").get<int>();
    in.p = j.at("p").get<double>();
    in.variant = j.at("variant").get<std::string>();
    return in;
}

json to_json(const InequalityReport& rep) {
    return json{{"checker_id", rep.checker_id},
                {"trial_index", rep.trial_index},
                {"inputs", to_json(rep.inputs)},
                {"lhs", rep.lhs},
                {"rhs", rep.rhs},
                {"margin", rep.margin},
                {"pass", rep.pass}};
}

InequalityReport report_from_json(const json& j) {
    InequalityReport rep;
    rep.checker_id = j.at("checker_id").get<std::string>();
    rep.trial_index = j.at("trial_index").get<std::uint64_t>();
    rep.inputs = trial_inputs_from_json(j.at("inputs"));
    rep.lhs = j.at("lhs").get<double>();
    rep.rhs = j.at("rhs").get<double>();
    rep.margin = j.at("margin").get<double>();
    rep.pass = j.at("pass").get<bool>();
    return rep;
}

json to_json(const SuiteSummary& summary) {
    json s = json::object();
    for (const auto& [id, cs] : summary.checkers) {
        s[id] = json{{"trials", cs.trials},
                     {"passes", cs.passes},
                     {"worst_margin", cs.worst_margin},
                     {"worst_trial_index", cs.worst_trial_index}};
    }
    return s;
}

json to_json(const RunManifest& manifest) {
    return json{{"command", manifest.command},
                {"config", manifest.config},
                {"artifact_version", manifest.artifact_version},
                {"timestamp", manifest.timestamp},
                {"outcome", manifest.outcome},
                {"violation_count", manifest.violation_count}};
}

namespace {

const char* policy_name(KPolicy p) {
    switch (p) {
        case KPolicy::AllValid: return "all_valid";
        case KPolicy::Fixed: return "fixed";
        case KPolicy::Random: return "random";
    }
    return "random";
}

}  // namespace

json config_to_json(const TrialConfig& cfg, const std::vector<std::string>& suite) {
    json c{{"suite", suite},
           {"trials", cfg.trials},
           {"seed", cfg.seed},
           {"n_range", {cfg.n_lo, cfg.n_hi}},
           {"k_policy", policy_name(cfg.k_policy)},
           {"l_policy", policy_name(cfg.l_policy)},
           {"distribution",
            {{"kind", cfg.dist == EntryDistribution::LogUniform ? "log_uniform" : "uniform"},
             {"lo", cfg.entry_lo},
             {"hi", cfg.entry_hi}}},
           {"tolerance", cfg.tolerance}};
    if (cfg.k_policy == KPolicy::Fixed) c["k"] = cfg.k_fixed;
    if (cfg.l_policy == KPolicy::Fixed) c["l"] = cfg.l_fixed;
    if (cfg.p_grid.empty())
        c["p_grid"] = nullptr;
    else
        c["p_grid"] = cfg.p_grid;
    return c;
}

json config_to_json(const MatrixSuiteConfig& cfg) {
    json c{{"check", cfg.check},
           {"dims", cfg.dims},
           {"trials", cfg.trials},
           {"seed", cfg.seed},
           {"tolerance", cfg.tolerance},
           {"spectrum", {cfg.spectrum_lo, cfg.spectrum_hi}}};
    if (cfg.k_fixed > 0)
        c["k"] = cfg.k_fixed;
    else
        c["k"] = nullptr;
    if (!cfg.p_grid.empty())
        c["p_grid"] = cfg.p_grid;
    else if (cfg.check == "muir" || cfg.check == "mariet" || cfg.check == "ekmtx")
        c["p_grid"] = matrix_default_p_grid(cfg.check);
    else
        c["p_grid"] = nullptr;
    return c;
}

json report_document(const RunManifest& manifest, const SuiteSummary& summary) {
    json violations = json::array();
    for (const auto& v : summary.violations) violations.push_back(to_json(v));
    return json{{"manifest", to_json(manifest)},
                {"summary", to_json(summary)},
                {"violations", violations}};
}

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string join17(const std::vector<double>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ';';
        out += fmt17(v[i]);
    }
    return out;
}

}  // namespace

std::string violations_csv(const SuiteSummary& summary, const RunManifest& manifest) {
    std::ostringstream os;
    os << "# manifest " << to_json(manifest).dump() << '\n';
    os << "checker_id,trial_index,n,rows,cols,k,l,p,variant,lhs,rhs,margin,x,y,a\n";
    for (const auto& v : summary.violations) {
        const auto& in = v.inputs;
        os << v.checker_id << ',' << v.trial_index << ',' << in.n << ',' << in.rows
           << ',' << in.cols << ',' << in.k << ',' << in.l << ',' << fmt17(in.p) << ','
           << in.variant << ',' << fmt17(v.lhs) << ',' << fmt17(v.rhs) << ','
           << fmt17(v.margin) << ',' << join17(in.x) << ',' << join17(in.y) << ','
           << join17(in.a) << '\n';
    }
    return os.str();
}

}  // namespace symineq
