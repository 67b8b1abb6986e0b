// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#include <doctest.h>

#include <random>

#include "orlicz/errors.hpp"
#include "orlicz/stepfn.hpp"
#include "orlicz/verify.hpp"

using namespace orlicz;

namespace {

// f = sum a_i chi_(t_{i-1}, t_i], written with the zero gaps explicit
StepFunction step(std::vector<double> t, std::vector<double> a) { return StepFunction(std::move(t), std::move(a)); }

StepFunction random_step(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n(1, 8);
    std::uniform_real_distribution<double> len(0.05, 2.0), val(0.0, 5.0);
    std::vector<double> t, a;
    double x = 0;
    for (int i = n(rng); i > 0; --i) {
        x += len(rng);
        t.push_back(x);
        a.push_back(val(rng));
    }
    return step(t, a);
}

}  // namespace

TEST_CASE("distribution function") {
    const auto f = step({1, 2, 4}, {0, 3, 1});
    const auto d = distribution(f);
    CHECK(d(0.0) == 3.0);
    CHECK(d(0.999) == 3.0);
    CHECK(d(1.0) == 1.0);
    CHECK(d(2.5) == 1.0);
    CHECK(d(3.0) == 0.0);
    CHECK(distribution(StepFunction{})(0.0) == 0.0);
    const auto chi7 = distribution(StepFunction::indicator(7));
    CHECK(chi7(0.5) == 7.0);
    CHECK(chi7(1.0) == 0.0);
}

TEST_CASE("rearrangement") {
    CHECK(rearrangement(step({1, 2, 4}, {0, 3, 1})) == step({1, 3}, {3, 1}));
    const auto dec = step({1, 3}, {3, 1});
    CHECK(rearrangement(dec) == dec);
    CHECK(rearrangement(step({1, 2, 3}, {1, 2, 3})) == step({1, 2, 3}, {3, 2, 1}));
    CHECK(rearrangement(StepFunction{}).is_zero());
}

TEST_CASE("maximal function") {
    const auto chi = StepFunction::indicator(1);
    CHECK(maximal(chi, 4.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(maximal(chi, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(maximal(step({1, 3}, {3, 1}), 2.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(maximal(chi, 0.0), domain_error);
}

TEST_CASE("endpoint decomposition") {
    const auto f = step({1, 3}, {3, 1});
    auto [f0, f1] = decompose(f, 2.0);
    CHECK(rearrangement(f0) == step({1}, {2}));
    CHECK(rearrangement(f1) == step({3}, {1}));

    auto [g0, g1] = decompose(f, 10.0);
    CHECK(g0 == f);
    CHECK(g1.is_zero());

    const auto c = StepFunction::indicator(5, 2.0);
    auto [c0, c1] = decompose(c, 1.0);
    CHECK(c0.is_zero());
    CHECK(c1 == c);
}

TEST_CASE("random properties: equimeasurability, Hardy-Littlewood, subadditivity") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> tt(0.01, 6.0);
    for (int i = 0; i < 200; ++i) {
        const auto f = random_step(rng), g = random_step(rng);
        CHECK(distribution(rearrangement(f)) == distribution(f));
        CHECK(inner_product(f, g) <= inner_product(rearrangement(f), rearrangement(g)) * (1 + 1e-12) + 1e-300);
        const double t1 = tt(rng), t2 = tt(rng);
        CHECK(rearranged_value(f + g, t1 + t2) <= (rearranged_value(f, t1) + rearranged_value(g, t2)) * (1 + 1e-12));
        for (double t : {0.1, 1.0, 3.0})
            CHECK(maximal(f + g, t) <= (maximal(f, t) + maximal(g, t)) * (1 + 1e-12));
    }
}

TEST_CASE("decomposition identities on random functions") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const auto f = random_step(rng);
        const auto fs = rearrangement(f);
        const double t = 0.3 + 0.2 * i;
        const double level = rearranged_value(f, t);
        auto [f0, f1] = decompose(f, t);
        CHECK(rearrangement(f1) == fs.clipped(level));
        CHECK(rearrangement(f0) == fs - fs.clipped(level));
    }
}

TEST_CASE("CSV ingestion") {
    CHECK_THROWS_AS(StepFunction::from_csv("/nonexistent/file.csv"), precondition_error);
}
