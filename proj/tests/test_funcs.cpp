#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "symineq/funcs.hpp"
#include "symineq/rng.hpp"
#include "symineq/sympoly.hpp"

using namespace symineq;
using doctest::Approx;

TEST_CASE("phi values") {
    // phi_{1,n} is the p-norm
    const Vec x{1, 2, 3};
    CHECK(phi(x, 1, 0.5) ==
          Approx(std::pow(1 + std::sqrt(2.0) + std::sqrt(3.0), 2.0)).epsilon(1e-13));
    CHECK(phi(x, 2, 1.0) == Approx(11.0 / 6.0).epsilon(1e-13));
    // constant vector: c ((n-k+1)/k)^{1/p}
    CHECK(phi(Vec{1, 1, 1}, 2, 1.0) == Approx(1.0).epsilon(1e-13));
    CHECK(phi(Vec{2, 2, 2, 2}, 3, 0.5) ==
          Approx(2.0 * std::pow(2.0 / 3.0, 2.0)).epsilon(1e-13));
    CHECK_THROWS_AS(phi(x, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS(phi(x, 4, 1.0), std::domain_error);
    CHECK_THROWS_AS(phi(x, 2, 0.0), std::domain_error);
    CHECK_THROWS_AS(phi(x, 2, -0.5), std::domain_error);
    CHECK_THROWS_AS(phi(Vec{0, 1}, 1, 0.5), std::domain_error);
}

TEST_CASE("phi stays accurate at extreme magnitudes") {
    // 300-bit reference: phi_{2,3}((1e150, 2e150, 3e150), p = 0.5) / 1e150
    const Vec big{1e150, 2e150, 3e150};
    CHECK(phi(big, 2, 0.5) / 1e150 == Approx(1.821391333409914449).epsilon(1e-13));
}

TEST_CASE("phi at p = 1 equals the Marcus-Lopes ratio") {
    RngStream s(47);
    for (int t = 0; t < 100; ++t) {
        const int n = s.uniform_int(1, 8);
        Vec x(n);
        for (double& v : x) v = s.log_uniform(1e-2, 1e2);
        const int k = s.uniform_int(1, n);
        const double ratio = elem_sym(x, k) / elem_sym(x, k - 1);
        CHECK(phi(x, k, 1.0) == Approx(ratio).epsilon(1e-13));
    }
}

TEST_CASE("elem_root values") {
    CHECK(elem_root(Vec{1, 1, 1}, 2, 1.0) == Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(elem_root(Vec{1, 2, 3}, 3, 1.0) == Approx(std::cbrt(6.0)).epsilon(1e-14));
    CHECK(elem_root(Vec{4, 4}, 2, 0.5) == Approx(4.0).epsilon(1e-13));
    // zeros admitted for p > 0; e_k of too many zeros collapses to 0
    CHECK(elem_root(Vec{0, 0, 5}, 2, 0.5) == 0.0);
    CHECK_THROWS_AS(elem_root(Vec{1, 2}, 1, 0.0), std::domain_error);
}

TEST_CASE("big_phi values and l = 1 reduction") {
    const Vec x{1, 2, 3};
    CHECK(big_phi(x, 3, 3, 1.0) == Approx(std::cbrt(6.0)).epsilon(1e-14));
    CHECK(big_phi(x, 2, 2, 1.0) == Approx(std::sqrt(11.0)).epsilon(1e-14));
    RngStream s(53);
    for (int t = 0; t < 50; ++t) {
        const int n = s.uniform_int(1, 8);
        Vec v(n);
        for (double& e : v) e = s.log_uniform(1e-2, 1e2);
        const int k = s.uniform_int(1, n);
        const double p = s.uniform(0.05, 1.0);
        CHECK(big_phi(v, k, 1, p) == Approx(phi(v, k, p)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(big_phi(x, 2, 3, 1.0), std::domain_error);
    CHECK_THROWS_AS(big_phi(x, 2, 0, 1.0), std::domain_error);
}

TEST_CASE("telescoping identities") {
    RngStream s(59);
    for (int t = 0; t < 100; ++t) {
        const int n = s.uniform_int(1, 8);
        Vec x(n);
        for (double& v : x) v = s.log_uniform(1e-2, 1e2);
        const double p = s.uniform(0.05, 1.0);
        const int k = s.uniform_int(1, n);

        // elem_root^k = prod_{j<=k} phi_j
        double prod = 1.0;
        for (int j = 1; j <= k; ++j) prod *= phi(x, j, p);
        CHECK(std::pow(elem_root(x, k, p), k) == Approx(prod).epsilon(1e-10));

        // big_phi^l = prod of the l deepest phi factors
        const int l = s.uniform_int(1, k);
        double prod_l = 1.0;
        for (int j = 1; j <= l; ++j) prod_l *= phi(x, k - j + 1, p);
        CHECK(std::pow(big_phi(x, k, l, p), l) == Approx(prod_l).epsilon(1e-10));
    }
}

TEST_CASE("hom_root values") {
    CHECK(hom_root(Vec{1, 1}, 2, 1.0) == Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(hom_root(Vec{1, 2}, 2, 1.0) == Approx(std::sqrt(7.0)).epsilon(1e-14));
    CHECK(hom_root(Vec{2}, 5, 2.0) == Approx(2.0).epsilon(1e-13));
    CHECK(hom_root(Vec{0, 0}, 3, 1.0) == 0.0);
    CHECK_THROWS_AS(hom_root(Vec{1, 2}, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS(hom_root(Vec{1, 2}, 2, 0.5), std::domain_error);
}

TEST_CASE("hom_ratio values") {
    CHECK(hom_ratio(Vec{1, 1}, 2, 1.0) == Approx(1.5).epsilon(1e-14));
    CHECK(hom_ratio(Vec{5}, 3, 2.0) == Approx(5.0).epsilon(1e-13));
    CHECK(hom_ratio(Vec{1, 2}, 2, 1.0) == Approx(7.0 / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(hom_ratio(Vec{1, 2}, 1, 1.0), std::domain_error);
    CHECK_THROWS_AS(hom_ratio(Vec{1, 2}, 2, 0.9), std::domain_error);
    CHECK_THROWS_AS(hom_ratio(Vec{0, 2}, 2, 1.0), std::domain_error);
}

TEST_CASE("recip_elem values") {
    CHECK(recip_elem(Vec{1, 1}, 1, -0.5) == Approx(0.5).epsilon(1e-14));
    CHECK(recip_elem(Vec{4, 4}, 1, -0.5) == Approx(1.0).epsilon(1e-14));
    // open interval: both endpoints rejected
    CHECK_THROWS_AS(recip_elem(Vec{1, 2, 3}, 2, -1.0), std::domain_error);
    CHECK_THROWS_AS(recip_elem(Vec{1, 2, 3}, 2, 0.0), std::domain_error);
    CHECK_THROWS_AS(recip_elem(Vec{1, 2, 3}, 2, 0.5), std::domain_error);
    CHECK_THROWS_AS(recip_elem(Vec{0, 2}, 1, -0.5), std::domain_error);
}

TEST_CASE("homogeneity of the functionals") {
    RngStream s(61);
    for (int t = 0; t < 60; ++t) {
        const int n = s.uniform_int(2, 8);
        Vec x(n), tx(n);
        const double scale = s.log_uniform(1e-2, 1e2);
        for (int i = 0; i < n; ++i) {
            x[i] = s.log_uniform(1e-2, 1e2);
            tx[i] = scale * x[i];
        }
        const int k = s.uniform_int(1, n);
        const int l = s.uniform_int(1, k);
        const double pe = s.uniform(0.05, 1.0);
        const double ph = s.uniform(1.0, 3.0);
        const double pr = s.uniform(-0.95, -0.05);

        CHECK(phi(tx, k, pe) == Approx(scale * phi(x, k, pe)).epsilon(1e-12));
        CHECK(elem_root(tx, k, pe) == Approx(scale * elem_root(x, k, pe)).epsilon(1e-12));
        CHECK(big_phi(tx, k, l, pe) ==
              Approx(scale * big_phi(x, k, l, pe)).epsilon(1e-12));
        CHECK(hom_root(tx, k, ph) == Approx(scale * hom_root(x, k, ph)).epsilon(1e-12));
        if (k >= 2)
            CHECK(hom_ratio(tx, k, ph) ==
                  Approx(scale * hom_ratio(x, k, ph)).epsilon(1e-12));
        // recip_elem is homogeneous of degree -pk
        CHECK(recip_elem(tx, k, pr) ==
              Approx(std::pow(scale, -pr * k) * recip_elem(x, k, pr)).epsilon(1e-12));
    }
}

TEST_CASE("RatioSpec validates the per-kind p ranges") {
    RatioSpec spec;
    spec.kind = RatioKind::ElemRatio;
    spec.k = 2;
    spec.p = 1.0;
    CHECK_NOTHROW(spec.validate(3));
    CHECK(spec.evaluate(Vec{1, 2, 3}) == Approx(11.0 / 6.0).epsilon(1e-13));
    spec.p = 1.5;
    CHECK_THROWS_AS(spec.validate(3), std::domain_error);

    spec.kind = RatioKind::HomRoot;
    spec.p = 1.0;
    CHECK_NOTHROW(spec.validate(3));
    spec.p = 0.99;
    CHECK_THROWS_AS(spec.validate(3), std::domain_error);

    spec.kind = RatioKind::RecipElem;
    spec.p = -0.5;
    CHECK_NOTHROW(spec.validate(3));
    spec.p = -1.0;
    CHECK_THROWS_AS(spec.validate(3), std::domain_error);

    spec.kind = RatioKind::HomRatio;
    spec.p = 2.0;
    spec.k = 1;
    CHECK_THROWS_AS(spec.validate(3), std::domain_error);
}
