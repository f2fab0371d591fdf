#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "symineq/funcs.hpp"
#include "symineq/report_json.hpp"
#include "symineq/rng.hpp"
#include "symineq/verify.hpp"

using namespace symineq;
using doctest::Approx;

namespace {

// setenv/getenv pair used to pin the thread count inside one test
struct ThreadsEnv {
    explicit ThreadsEnv(const char* v) { setenv("SYMINEQ_THREADS", v, 1); }
    ~ThreadsEnv() { unsetenv("SYMINEQ_THREADS"); }
};

std::vector<std::string> all_ids() {
    std::vector<std::string> ids;
    for (const auto& def : checker_registry()) ids.push_back(def.id);
    return ids;
}

}  // namespace

TEST_CASE("trial stream derivation is order independent") {
    auto a = trial_stream(42, "ek-root", 7);
    auto b = trial_stream(42, "ek-root", 7);
    CHECK(a.next_u64() == b.next_u64());
    auto c = trial_stream(42, "ek-root", 8);
    auto d = trial_stream(42, "hk-root", 7);
    auto base = trial_stream(42, "ek-root", 7);
    CHECK(c.next_u64() != base.next_u64());
    CHECK(d.next_u64() != trial_stream(42, "ek-root", 7).next_u64());
}

TEST_CASE("check_superadditive report shape") {
    auto f = [](std::span<const double> v) {
        double s = 0;
        for (double e : v) s += e;
        return s;
    };
    const Vec x{1, 2}, y{3, 4};
    auto rep = check_superadditive(f, x, y, 1e-9);
    CHECK(rep.lhs == 10.0);
    CHECK(rep.rhs == 10.0);
    CHECK(rep.margin == 0.0);
    CHECK(rep.pass);
    CHECK_THROWS_AS(check_superadditive(f, Vec{1}, Vec{1, 2}, 1e-9), std::domain_error);
}

TEST_CASE("superadditivity fails for the l2 norm (p = 2 outside range)") {
    // [e_1(x^2)]^{1/2} with nearly-orthogonal inputs reverses Minkowski
    const Vec x{1.0, 0.01}, y{0.01, 1.0};
    auto f = [](std::span<const double> v) { return detail::elem_root_core(v, 1, 2.0); };
    auto rep = check_superadditive(f, x, y, 1e-9);
    CHECK(rep.lhs == Approx(1.01 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(rep.rhs == Approx(2.0 * std::sqrt(1.0001)).epsilon(1e-12));
    CHECK(rep.margin < -0.5);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("homogeneity makes x = y an equality for the additive checkers") {
    RngStream s(67);
    for (const char* id : {"ml-orig", "ml-new", "ek-root", "big-phi", "multi-ppsum",
                           "hk-mcleod", "hk-root", "hk-ratio"}) {
        const CheckerDef* def = find_checker(id);
        REQUIRE(def != nullptr);
        TrialInputs in;
        in.n = 4;
        in.p = def->default_p_grid.back();
        in.k = 3;
        in.l = 2;
        in.x.clear();
        for (int i = 0; i < in.n; ++i) in.x.push_back(s.log_uniform(1e-2, 1e2));
        in.y = in.x;
        auto rep = def->evaluate(in, 1e-9);
        CHECK(std::abs(rep.margin) <= 1e-12 * margin_scale(rep.lhs, rep.rhs));
    }
}

TEST_CASE("check_subadditive hand values for hom_root") {
    auto f2 = [](std::span<const double> v) { return detail::hom_root_core(v, 2, 1.0); };
    auto rep = check_subadditive(f2, Vec{1, 0}, Vec{0, 1}, 1e-9);
    CHECK(rep.lhs == Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(rep.rhs == Approx(2.0).epsilon(1e-14));
    CHECK(rep.margin == Approx(2.0 - std::sqrt(3.0)).epsilon(1e-12));
    CHECK(rep.pass);
}

TEST_CASE("check_recip_concave hand values") {
    // x = y collapses the harmonic mean
    auto eq = check_recip_concave(Vec{1, 2}, Vec{1, 2}, 2, -0.5, 1e-9);
    CHECK(std::abs(eq.margin) <= 1e-12 * margin_scale(eq.lhs, eq.rhs));
    auto rep = check_recip_concave(Vec{1, 2}, Vec{2, 1}, 2, -0.5, 1e-9);
    CHECK(rep.lhs == Approx(2.0 / 3.0).epsilon(1e-13));
    CHECK(rep.rhs == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));
    CHECK(rep.pass);
    // scalar case k = n = 1 is the power-mean fact
    auto sc = check_recip_concave(Vec{0.3}, Vec{7.0}, 1, -0.5, 1e-9);
    CHECK(sc.pass);
    CHECK_THROWS_AS(check_recip_concave(Vec{0, 1}, Vec{1, 1}, 1, -0.5, 1e-9),
                    std::domain_error);
}

TEST_CASE("check_dresher_scalar hand values") {
    auto rep = check_dresher_scalar(1, 1, 1, 1, 2, 1.0, 1e-9);
    CHECK(rep.lhs == Approx(2.0).epsilon(1e-14));
    CHECK(rep.rhs == Approx(2.0).epsilon(1e-14));
    CHECK(rep.pass);
    // degenerate pair (b = d = 0): lhs collapses to the first rhs term
    auto deg = check_dresher_scalar(1.7, 0, 0.4, 0, 3, 1.5, 1e-9);
    CHECK(deg.lhs == Approx(deg.rhs).epsilon(1e-13));
    CHECK(deg.pass);
    CHECK_THROWS_AS(check_dresher_scalar(0, 0, 0, 0, 2, 1.0, 1e-9), std::domain_error);
    CHECK_THROWS_AS(check_dresher_scalar(1, 1, 1, 1, 1, 1.0, 1e-9), std::domain_error);
    // power-sum-denominator companion form
    auto e8 = check_dresher_scalar(1, 1, 1, 1, 2, 1.0, 1e-9,
                                   DresherForm::PowerSumDenominator);
    CHECK(e8.lhs == Approx(2.0).epsilon(1e-14));
    CHECK(e8.inputs.variant == "power-sum-den");
}

TEST_CASE("check_mixed_minkowski hand values") {
    // 1x1: exact equality
    auto one = check_mixed_minkowski(Vec{2.5}, Vec{0.0}, 1, 1, 3, 2.0, 1e-9);
    CHECK(one.margin == Approx(0.0).epsilon(1e-13));
    // 2x2 all ones, p = 1, k = 1: both sides 8
    auto rep = check_mixed_minkowski(Vec{1, 1, 1, 1}, Vec{1, 1, 1, 1}, 2, 2, 1, 1.0, 1e-9);
    CHECK(rep.lhs == Approx(8.0).epsilon(1e-14));
    CHECK(rep.rhs == Approx(8.0).epsilon(1e-14));
    CHECK(rep.pass);
    CHECK_THROWS_AS(check_mixed_minkowski(Vec{1, 1}, Vec{1}, 2, 1, 1, 1.0, 1e-9),
                    std::domain_error);

    RngStream s(71);
    for (int t = 0; t < 200; ++t) {
        Vec x(9), y(9);
        for (double& v : x) v = s.log_uniform(1e-2, 1e2);
        for (double& v : y) v = s.log_uniform(1e-2, 1e2);
        auto r = check_mixed_minkowski(x, y, 3, 3, 2, 2.0, 1e-9);
        CHECK(r.pass);
    }
}

TEST_CASE("run_suite rejects bad configs") {
    TrialConfig cfg;
    cfg.trials = 0;
    const std::vector<std::string> ids{"ek-root"};
    CHECK_THROWS_AS(run_suite(cfg, ids), std::domain_error);
    cfg.trials = 1;
    const std::vector<std::string> bad{"nonsense"};
    CHECK_THROWS_AS(run_suite(cfg, bad), std::domain_error);
    cfg.p_grid = {2.0};  // outside the proven range: suites refuse, search owns it
    CHECK_THROWS_AS(run_suite(cfg, ids), std::domain_error);
}

TEST_CASE("run_suite is deterministic and thread-count independent") {
    TrialConfig cfg;
    cfg.trials = 200;
    cfg.seed = 99;
    const auto ids = all_ids();

    SuiteSummary a, b;
    {
        ThreadsEnv env("1");
        a = run_suite(cfg, ids);
    }
    {
        ThreadsEnv env("5");
        b = run_suite(cfg, ids);
    }
    REQUIRE(a.checkers.size() == b.checkers.size());
    for (const auto& [id, cs] : a.checkers) {
        const auto& other = b.checkers.at(id);
        CHECK(cs.trials == other.trials);
        CHECK(cs.passes == other.passes);
        CHECK(cs.worst_margin == other.worst_margin);  // bitwise
        CHECK(cs.worst_trial_index == other.worst_trial_index);
    }
    CHECK(a.violations.size() == b.violations.size());
}

TEST_CASE("k and l policies") {
    TrialConfig cfg;
    cfg.trials = 50;
    cfg.seed = 4;
    const std::vector<std::string> ids{"big-phi"};

    cfg.k_policy = KPolicy::AllValid;
    cfg.l_policy = KPolicy::AllValid;
    auto exhaustive = run_suite(cfg, ids);
    CHECK(exhaustive.all_pass());

    cfg.k_policy = KPolicy::Fixed;
    cfg.k_fixed = 2;
    cfg.l_policy = KPolicy::Fixed;
    cfg.l_fixed = 1;
    auto fixed = run_suite(cfg, ids);
    CHECK(fixed.all_pass());

    cfg.k_fixed = 12;  // above every sampled n
    CHECK_THROWS_AS(run_suite(cfg, ids), std::domain_error);
}

TEST_CASE("default suites pass with zero violations") {
    TrialConfig cfg;
    cfg.trials = 500;
    cfg.seed = 12345;
    const auto summary = run_suite(cfg, all_ids());
    for (const auto& [id, cs] : summary.checkers) {
        INFO(id);
        CHECK(cs.passes == cs.trials);
    }
    CHECK(summary.all_pass());
}

TEST_CASE("margins are invariant under swapping x and y") {
    TrialConfig cfg;
    for (const auto& def : checker_registry()) {
        RngStream s = trial_stream(5, def.id, 0);
        TrialInputs in = def.sample(s, cfg, def.default_p_grid.front());
        int lo, hi;
        def.k_trial(in.n, in.p, lo, hi);
        in.k = lo <= hi ? hi : 0;
        if (def.uses_l) in.l = 1;
        auto rep = def.evaluate(in, 1e-9);
        TrialInputs swapped = rep.inputs;
        std::swap(swapped.x, swapped.y);
        auto rep2 = def.evaluate(swapped, 1e-9);
        CHECK(rep2.margin ==
              Approx(rep.margin).epsilon(1e-13).scale(margin_scale(rep.lhs, rep.rhs)));
    }
}

TEST_CASE("scaling both inputs flips no verdict") {
    TrialConfig cfg;
    cfg.trials = 50;
    for (const auto& def : checker_registry()) {
        for (double t : {1e-3, 1e3}) {
            for (int trial = 0; trial < 20; ++trial) {
                RngStream s = trial_stream(31, def.id, trial);
                TrialInputs in = def.sample(s, cfg, def.default_p_grid.front());
                int lo, hi;
                def.k_trial(in.n, in.p, lo, hi);
                in.k = lo <= hi ? s.uniform_int(lo, hi) : 0;
                if (def.uses_l) in.l = 1;
                auto base = def.evaluate(in, 1e-9);
                TrialInputs scaled = in;
                for (double& v : scaled.x) v *= t;
                for (double& v : scaled.y) v *= t;
                auto rep = def.evaluate(scaled, 1e-9);
                CHECK(rep.pass == base.pass);
            }
        }
    }
}

TEST_CASE("reports replay bit-exactly through JSON") {
    TrialConfig cfg;
    cfg.trials = 5;
    for (const auto& def : checker_registry()) {
        for (int trial = 0; trial < 5; ++trial) {
            RngStream s = trial_stream(77, def.id, trial);
            TrialInputs in = def.sample(s, cfg, def.default_p_grid.front());
            int lo, hi;
            def.k_trial(in.n, in.p, lo, hi);
            in.k = lo <= hi ? s.uniform_int(lo, hi) : 0;
            if (def.uses_l) in.l = 1;
            auto rep = def.evaluate(in, 1e-9);
            rep.checker_id = def.id;

            const auto doc = to_json(rep);
            const auto parsed = report_from_json(nlohmann::json::parse(doc.dump()));
            auto again = replay(parsed.checker_id, parsed.inputs, 1e-9);
            CHECK(again.margin == rep.margin);  // bitwise
            CHECK(again.lhs == rep.lhs);
            CHECK(again.rhs == rep.rhs);
        }
    }
}

TEST_CASE("search finds the Minkowski reversal for ek-root at k=1, p=2") {
    SearchRegion region;
    region.checker_id = "ek-root";
    region.n = 2;
    region.k = 1;
    region.p = 2.0;
    const auto found = search_counterexample(region, 1000, 1);
    REQUIRE(found.has_value());
    CHECK(found->margin < -1e-2);
    CHECK_FALSE(found->pass);
    // the record replays to the same margin
    auto again = replay("ek-root", found->inputs, 1e-9);
    CHECK(again.margin == found->margin);
}

TEST_CASE("search guards") {
    SearchRegion region;
    region.checker_id = "ek-root";
    region.n = 2;
    region.k = 1;
    region.p = 0.5;  // inside the proven range
    CHECK_THROWS_AS(search_counterexample(region, 10, 1), std::domain_error);
    region.p = 2.0;
    CHECK_FALSE(search_counterexample(region, 0, 1).has_value());
    region.checker_id = "nope";
    CHECK_THROWS_AS(search_counterexample(region, 10, 1), std::domain_error);
    SearchRegion dres;
    dres.checker_id = "dresher";
    dres.k = 2;
    dres.p = 1.5;  // p >= 1 is proven for the Dresher forms
    CHECK_THROWS_AS(search_counterexample(dres, 10, 1), std::domain_error);
}

TEST_CASE("search exposes the false region of the reciprocal-concavity claim") {
    // e_k(x^p) with k >= 2 and p < -1/k: the harmonic-mean bound genuinely
    // fails (the k-th subset monomials are no longer reciprocally concave),
    // so the hypothesis cap k <= 1/|p| is not vacuous.
    SearchRegion region;
    region.checker_id = "recip-ek";
    region.n = 3;
    region.k = 3;
    region.p = -0.9;
    const auto found = search_counterexample(region, 500, 11);
    REQUIRE(found.has_value());
    CHECK(found->margin < -1e-3);

    // in-range (k = 1) searches at the same p are refused
    region.k = 1;
    CHECK_THROWS_AS(search_counterexample(region, 10, 1), std::domain_error);
}

TEST_CASE("the reciprocal-concavity hypothesis boundary p = -1/k is sharp") {
    // at the boundary the bound holds...
    TrialConfig cfg;
    cfg.trials = 2000;
    cfg.seed = 55;
    cfg.k_policy = KPolicy::Fixed;
    cfg.k_fixed = 2;
    cfg.p_grid = {-0.5};
    const std::vector<std::string> ids{"recip-ek"};
    CHECK(run_suite(cfg, ids).all_pass());

    // ...and just beyond it the inequality genuinely fails
    SearchRegion region;
    region.checker_id = "recip-ek";
    region.n = 4;
    region.k = 2;
    region.p = -0.55;
    CHECK(search_counterexample(region, 2000, 9).has_value());
}

TEST_CASE("out-of-range search on hk-root below p = 1 finds violations") {
    SearchRegion region;
    region.checker_id = "hk-root";
    region.n = 2;
    region.k = 1;
    region.p = 0.5;
    const auto found = search_counterexample(region, 500, 5);
    REQUIRE(found.has_value());
    CHECK(found->margin < 0.0);
}
