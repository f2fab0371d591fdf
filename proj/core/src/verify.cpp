#include "symineq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "symineq/threads.hpp"

namespace symineq {

void TrialConfig::validate() const {
    if (trials < 1) throw std::domain_error("TrialConfig: trials must be >= 1");
    if (n_lo < 1 || n_hi > 64 || n_lo > n_hi)
        throw std::domain_error("TrialConfig: n range must lie within [1, 64]");
    if (!(entry_lo > 0.0) || !(entry_hi >= entry_lo))
        throw std::domain_error("TrialConfig: entry range must satisfy 0 < lo <= hi");
    if (!(tolerance > 0.0)) throw std::domain_error("TrialConfig: tolerance must be positive");
}

namespace {

struct KRange {
    int lo, hi;

    bool contains(int k) const { return k >= lo && k <= hi; }
    bool empty() const { return lo > hi; }
};

KRange trial_k_range(const CheckerDef& def, int n, double p) {
    KRange r{};
    def.k_trial(n, p, r.lo, r.hi);
    return r;
}

// Runs one trial: derives the stream, samples inputs, assigns k (and l) per
// policy, evaluates. Under AllValid the report is the (k, l) evaluation with
// the smallest normalized margin, so the trial passes iff every one passed.
InequalityReport run_trial(const CheckerDef& def, const TrialConfig& cfg,
                           const std::vector<double>& grid, std::uint64_t t) {
    RngStream stream = trial_stream(cfg.seed, def.id, t);
    const double p = grid[t / static_cast<std::uint64_t>(cfg.trials)];
    TrialInputs in = def.sample(stream, cfg, p);
    const KRange kr = trial_k_range(def, in.n, p);

    std::vector<int> ks;
    if (kr.lo > kr.hi) {
        ks.push_back(0);
    } else {
        switch (cfg.k_policy) {
            case KPolicy::Fixed:
                if (cfg.k_fixed < kr.lo || cfg.k_fixed > kr.hi)
                    throw std::domain_error("run_suite: fixed k outside the valid range for " +
                                            def.id);
                ks.push_back(cfg.k_fixed);
                break;
            case KPolicy::Random:
                ks.push_back(stream.uniform_int(kr.lo, kr.hi));
                break;
            case KPolicy::AllValid:
                for (int k = kr.lo; k <= kr.hi; ++k) ks.push_back(k);
                break;
        }
    }

    InequalityReport best;
    double best_norm = std::numeric_limits<double>::infinity();
    bool all_pass = true;
    bool first = true;
    for (int k : ks) {
        std::vector<int> ls;
        if (!def.uses_l) {
            ls.push_back(1);
        } else {
            switch (cfg.l_policy) {
                case KPolicy::Fixed:
                    if (cfg.l_fixed < 1 || cfg.l_fixed > std::max(k, 1))
                        throw std::domain_error("run_suite: fixed l outside [1, k] for " +
                                                def.id);
                    ls.push_back(cfg.l_fixed);
                    break;
                case KPolicy::Random:
                    ls.push_back(stream.uniform_int(1, std::max(k, 1)));
                    break;
                case KPolicy::AllValid:
                    for (int l = 1; l <= std::max(k, 1); ++l) ls.push_back(l);
                    break;
            }
        }
        for (int l : ls) {
            TrialInputs cur = in;
            cur.k = k;
            cur.l = l;
            InequalityReport rep = def.evaluate(cur, cfg.tolerance);
            rep.trial_index = t;
            const double norm = rep.margin / margin_scale(rep.lhs, rep.rhs);
            all_pass = all_pass && rep.pass;
            if (first || norm < best_norm) {
                best = std::move(rep);
                best_norm = norm;
                first = false;
            }
        }
    }
    best.pass = all_pass;
    return best;
}

}  // namespace

SuiteSummary run_suite(const TrialConfig& config,
                       std::span<const std::string> checker_ids) {
    config.validate();
    SuiteSummary summary;
    for (const auto& id : checker_ids) {
        const CheckerDef* def = find_checker(id);
        if (!def) throw std::domain_error("run_suite: unknown checker id '" + id + "'");
        const std::vector<double> grid =
            config.p_grid.empty() ? def->default_p_grid : config.p_grid;
        if (grid.empty()) throw std::domain_error("run_suite: empty p grid");
        for (double p : grid)
            if (!def->p_proven(p))
                throw std::domain_error("run_suite: p = " + std::to_string(p) +
                                        " is outside the proven range of checker '" + id +
                                        "' (use search for out-of-range regions)");
        // Fixed k/l must be valid for every trial; the range is tightest at
        // the smallest sampled n (ranges only widen with n).
        if (config.k_policy == KPolicy::Fixed) {
            for (double p : grid) {
                const KRange kr = trial_k_range(*def, config.n_lo, p);
                if (!kr.empty() && !kr.contains(config.k_fixed))
                    throw std::domain_error(
                        "run_suite: fixed k outside the valid range for " + id);
            }
        }
        if (config.l_policy == KPolicy::Fixed && def->uses_l) {
            if (config.k_policy != KPolicy::Fixed)
                throw std::domain_error(
                    "run_suite: fixed l requires a fixed k (l must satisfy l <= k)");
            if (config.l_fixed < 1 || config.l_fixed > config.k_fixed)
                throw std::domain_error("run_suite: fixed l outside [1, k] for " + id);
        }

        const std::uint64_t total =
            static_cast<std::uint64_t>(config.trials) * grid.size();
        std::vector<double> margin(total), norm(total);
        std::vector<char> pass(total);
        parallel_for(total, [&](std::uint64_t t) {
            InequalityReport rep = run_trial(*def, config, grid, t);
            margin[t] = rep.margin;
            norm[t] = rep.margin / margin_scale(rep.lhs, rep.rhs);
            pass[t] = rep.pass ? 1 : 0;
        });

        CheckerSummary cs;
        cs.trials = total;
        for (std::uint64_t t = 0; t < total; ++t) {
            if (pass[t]) ++cs.passes;
            if (t == 0 || norm[t] < norm[cs.worst_trial_index]) {
                cs.worst_trial_index = t;
                cs.worst_margin = margin[t];
            }
        }
        for (std::uint64_t t = 0; t < total; ++t)
            if (!pass[t]) summary.violations.push_back(run_trial(*def, config, grid, t));
        summary.checkers.emplace(id, cs);
    }
    return summary;
}

InequalityReport replay(const std::string& checker_id, const TrialInputs& inputs,
                        double tol) {
    const CheckerDef* def = find_checker(checker_id);
    if (!def) throw std::domain_error("replay: unknown checker id '" + checker_id + "'");
    return def->evaluate(inputs, tol);
}

std::optional<InequalityReport> search_counterexample(const SearchRegion& region,
                                                      int budget,
                                                      std::uint64_t seed,
                                                      double tol) {
    const CheckerDef* def = find_checker(region.checker_id);
    if (!def)
        throw std::domain_error("search: unknown checker id '" + region.checker_id + "'");
    if (!def->p_evaluable(region.p))
        throw std::domain_error("search: p = " + std::to_string(region.p) +
                                " is not evaluable for checker '" + region.checker_id + "'");
    if (region.n < 1 || region.n > 64)
        throw std::domain_error("search: n must lie within [1, 64]");

    KRange domain{};
    def->k_domain(region.n, domain.lo, domain.hi);
    const bool has_k = !domain.empty();
    if (has_k && !domain.contains(region.k))
        throw std::domain_error("search: k outside the valid range for checker '" +
                                region.checker_id + "'");

    KRange proven{};
    def->k_proven(region.n, region.p, proven.lo, proven.hi);
    const bool in_proven_region =
        def->p_proven(region.p) && (!has_k || proven.contains(region.k));
    if (in_proven_region)
        throw std::domain_error(
            "search: (p = " + std::to_string(region.p) + ", k = " + std::to_string(region.k) +
            ") lies inside the proven range of '" + region.checker_id +
            "'; a counterexample search there would be mislabeled");

    TrialConfig cfg;
    cfg.n_lo = cfg.n_hi = region.n;

    RngStream stream(mix64(mix64(seed) ^ fnv1a64(region.checker_id)));
    TrialInputs best;
    double best_norm = std::numeric_limits<double>::infinity();
    bool have_best = false;

    for (int i = 0; i < budget; ++i) {
        TrialInputs cand;
        if (!have_best || i % 2 == 0) {
            cand = def->sample(stream, cfg, region.p);
        } else {
            // multiplicative jitter shrinking as the budget is spent
            cand = best;
            const double sigma = std::max(0.01, 0.5 / (1.0 + i / 64.0));
            for (double& v : cand.x) v *= std::exp(stream.uniform(-sigma, sigma));
            for (double& v : cand.y) v *= std::exp(stream.uniform(-sigma, sigma));
        }
        cand.k = has_k ? region.k : 0;
        cand.l = def->uses_l ? region.l : 1;
        InequalityReport rep = def->evaluate(cand, tol);
        rep.trial_index = static_cast<std::uint64_t>(i);
        const double norm = rep.margin / margin_scale(rep.lhs, rep.rhs);
        if (std::isfinite(norm) && norm < best_norm) {
            best_norm = norm;
            best = rep.inputs;
            have_best = true;
        }
        if (norm < -10.0 * tol) return rep;
    }
    return std::nullopt;
}

}  // namespace symineq
