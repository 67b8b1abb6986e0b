// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cmath>
#include <random>

#include "orlicz/calderon.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/verify.hpp"

using namespace orlicz;

namespace {
const StepFunction chi = StepFunction::indicator(1.0);

std::vector<OperatorTag> all_tags() {
    return {OperatorTag::hpr(2, 1),      OperatorTag::hpr(4, 3),  OperatorTag::hqr_dual(2, 1),
            OperatorTag::hqr_dual(3, 4), OperatorTag::averaging(), OperatorTag::sqr(2, 1),
            OperatorTag::sqr(3, 2),      OperatorTag::joint(Indices(2, 1), Indices(4, 1))};
}
}  // namespace

TEST_CASE("closed-form operator values on chi_(0,1)") {
    const auto H = OperatorTag::hpr(2, 1);
    CHECK(apply(H, chi, 4.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(apply(H, chi, 0.25) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(apply(OperatorTag::hqr_dual(2, 1), chi, 0.25) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(apply(OperatorTag::averaging(), chi, 4.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(apply(OperatorTag::hqr_dual(3, 2), chi, 1.5) == 0.0);
    CHECK(apply(H, StepFunction{}, 1.0) == 0.0);
}

TEST_CASE("operator preconditions") {
    const StepFunction up({1, 2}, {1, 2});
    CHECK_THROWS_AS(apply(OperatorTag::hpr(2, 1), up, 1.0), precondition_error);
    CHECK_THROWS_AS(apply(OperatorTag::hpr(2, 1), chi, 0.0), domain_error);
    CHECK_THROWS_AS(OperatorTag::sqr(1.0, 1.0), precondition_error);
    CHECK_THROWS_AS(OperatorTag::parse("Hpr:2"), precondition_error);
    CHECK(OperatorTag::parse("Joint:2,1,4,1").name() == OperatorTag::joint(Indices(2, 1), Indices(4, 1)).name());
}

TEST_CASE("prepared evaluation matches the direct closed forms") {
    TestFamily fam = TestFamily::standard(3);
    for (const auto& op : all_tags())
        for (const auto& m : fam.members) {
            const PreparedOperator prep(op, m.f);
            for (double w = -20; w < 20; w += 0.73) {
                const double a = log_apply(op, m.f, w), b = prep.log_value(w);
                if (std::isinf(a)) {
                    CHECK(a == b);
                } else {
                    CHECK(b == doctest::Approx(a).epsilon(1e-12));
                }
            }
        }
}

TEST_CASE("distribution of operator values") {
    CHECK(distribution_of(OperatorTag::hpr(2, 1), chi, 1.0).value == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(distribution_of(OperatorTag::hpr(2, 1), chi, 2.0).value == 0.0);
    CHECK(distribution_of(OperatorTag::hpr(2, 1), chi, 5.0).value == 0.0);
    CHECK(distribution_of(OperatorTag::averaging(), chi, 0.5).value == doctest::Approx(2.0).epsilon(1e-12));
    const auto deep = distribution_of(OperatorTag::hpr(4, 1), chi, 1e-3);
    CHECK_FALSE(deep.infinite);
    CHECK(deep.value == doctest::Approx(std::pow(4.0, 4) * 1e12).epsilon(1e-9));
}

TEST_CASE("sandwich for H^{p,r}") {
    const auto s = sandwich_check_Hpr(Indices(2, 1), chi, 1.0);
    CHECK(s.lower == 0.0);
    CHECK(s.mid == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(s.upper == doctest::Approx(98.0).epsilon(1e-12));

    const auto z = sandwich_check_Hpr(Indices(2, 1), StepFunction{}, 1.0);
    CHECK(z.lower == 0.0);
    CHECK(z.mid == 0.0);
    CHECK(z.upper == 0.0);

    const auto s42 = sandwich_check_Hpr(Indices(4, 2), StepFunction({1, 2}, {2, 1}), 1.0);
    CHECK(s42.lower == doctest::Approx(36.0).epsilon(1e-10));
    CHECK(s42.mid == doctest::Approx(77.9411254969543).epsilon(1e-9));
    CHECK(s42.upper == doctest::Approx(39507.327250465).epsilon(1e-10));
    CHECK(s42.lower_ok());
    CHECK(s42.upper_ok());
}

TEST_CASE("sandwich for S_{q,r}") {
    const auto s = sandwich_check_Sqr(Indices(2, 1), chi, 3.0);
    CHECK(s.lower == doctest::Approx(0.0222222222222222).epsilon(1e-12));
    CHECK(s.mid == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(s.upper == doctest::Approx(14.2222222222222).epsilon(1e-12));

    const StepFunction g({0.2, 0.7, 1.9, 4.0}, {3, 2, 1.5, 0.5});
    const double ts[] = {0.01, 0.3, 1.0, 2.5, 30.0};
    const double lower[] = {27.6458333333333, 0.760416666666667, 0.138802083333333, 0.01775, 1.05806327160494e-05};
    const double mid[] = {445.0, 14.8333333333333, 4.45, 1.79932166843601, 0.000695712836123795};
    const double upper[] = {42132.717068397, 1382.98330367524, 399.369040388851, 146.439658400923, 2.0466426697547};
    for (int i = 0; i < 5; ++i) {
        const auto q = sandwich_check_Sqr(Indices(3, 3), g, ts[i]);
        CHECK(q.lower == doctest::Approx(lower[i]).epsilon(1e-10));
        CHECK(q.mid == doctest::Approx(mid[i]).epsilon(1e-9));
        CHECK(q.upper == doctest::Approx(upper[i]).epsilon(1e-10));
    }
    const auto z = sandwich_check_Sqr(Indices(2, 1), StepFunction{}, 1.0);
    CHECK(z.lower + z.mid + z.upper == 0.0);
}

TEST_CASE("reduction for r >= q") {
    auto [l, r] = reduction_r_ge_q(Indices(2, 4), chi, 0.25);
    CHECK(l == doctest::Approx(1.65487545982344).epsilon(1e-12));
    CHECK(r == doctest::Approx(1.81463308104241).epsilon(1e-12));
    CHECK(l <= r);

    const StepFunction g({0.3, 1.1, 2.0}, {4, 2, 1});
    for (double t : {0.05, 0.5, 1.5}) {
        auto [a, b] = reduction_r_ge_q(Indices(2, 2), g, t);
        CHECK(a == doctest::Approx(b).epsilon(1e-14));
    }
    auto [z0, z1] = reduction_r_ge_q(Indices(2, 3), StepFunction{}, 1.0);
    CHECK(z0 == 0.0);
    CHECK(z1 == 0.0);
    CHECK_THROWS_AS(reduction_r_ge_q(Indices(3, 2), chi, 1.0), precondition_error);
}

TEST_CASE("dilation commuting") {
    std::mt19937_64 rng(5);
    const TestFamily fam = TestFamily::random(10, 99);
    for (const auto& op : all_tags())
        for (const auto& m : fam.members)
            for (double a : {1.0 / 7, 3.0, 64.0})
                for (double t : {0.01, 0.4, 2.0, 30.0}) {
                    // g(a s) evaluated at t equals g evaluated at a t
                    const double lhs = apply(op, m.f.dilate(a), t);
                    const double rhs = apply(op, m.f, a * t);
                    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
                }
}

TEST_CASE("pointwise lower bound and weak-type constant of H^{p,r}") {
    const TestFamily fam = TestFamily::standard(17);
    for (double p : {2.0, 4.0})
        for (double r : {1.0, 2.0, 3.0}) {
            const double gamma = std::pow(p / r, 1.0 / r);
            for (const auto& m : fam.members) {
                const auto g = rearrangement(m.f);
                const double bound = gamma * lorentz_norm(g, p, r);
                for (double t : log_grid(1e-3, 1e3, 25)) {
                    const double h = apply(OperatorTag::hpr(p, r), g, t);
                    CHECK(h * (1 + 1e-12) >= gamma * rearranged_value(g, t));
                    CHECK(std::pow(t, 1.0 / p) * h <= bound * (1 + 1e-12));
                }
            }
        }
}

TEST_CASE("monotonicity in r of the normalised operator") {
    const TestFamily fam = TestFamily::random(20, 23);
    for (const auto& m : fam.members) {
        const auto g = rearrangement(m.f);
        for (double t : log_grid(1e-2, 1e2, 9)) {
            // (r/p)^{1/r} H^{p,r} g is nonincreasing in r
            const double h1 = std::pow(1.0 / 3.0, 1.0) * apply(OperatorTag::hpr(3, 1), g, t);
            const double h2 = std::pow(2.0 / 3.0, 0.5) * apply(OperatorTag::hpr(3, 2), g, t);
            CHECK(h2 <= h1 * (1 + 1e-12));
        }
    }
}
