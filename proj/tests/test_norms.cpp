// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cmath>

#include "orlicz/norms.hpp"
#include "orlicz/verify.hpp"

using namespace orlicz;

TEST_CASE("Lorentz norms, both forms") {
    const auto chi8 = StepFunction::indicator(8.0);
    CHECK(lorentz_norm(chi8, 3, 2) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(lorentz_norm(chi8, 3, 2, LorentzForm::Distributional) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(lorentz_norm(StepFunction({1, 3}, {3, 1}), 1, 1) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(lorentz_norm(StepFunction::indicator(1.0), 2, INFINITY) == doctest::Approx(1.0).epsilon(1e-14));

    const TestFamily fam = TestFamily::random(40, 8);
    for (const auto& m : fam.members)
        for (double p : {1.5, 2.0, 4.0})
            for (double r : {1.0, 2.0, 3.5}) {
                const double a = lorentz_norm(m.f, p, r), b = lorentz_norm(m.f, p, r, LorentzForm::Distributional);
                CHECK(a == doctest::Approx(b).epsilon(1e-10));
                CHECK(lorentz_norm(m.f, p, r + 1.0) <= a * (1 + 1e-12));
            }
}

TEST_CASE("modular of a step function") {
    CHECK(modular(StepFunction::indicator(1.0), YoungFunction::power(2), 3.0).value ==
          doctest::Approx(9.0).epsilon(1e-14));
    CHECK(modular(StepFunction{}, YoungFunction::power(2)).value == 0.0);
    CHECK(modular(StepFunction({1, 4}, {2, 1}), YoungFunction::power(3)).value == doctest::Approx(11.0).epsilon(1e-14));
}

TEST_CASE("modular of an operator image with its tail") {
    const auto H = OperatorTag::hpr(2, 1);
    const auto chi = StepFunction::indicator(1.0);
    const auto m3 = modular_of_operator(H, chi, YoungFunction::power(3));
    CHECK_FALSE(m3.infinite);
    CHECK(m3.value == doctest::Approx(24.0).epsilon(1e-9));
    CHECK(modular_of_operator(H, chi, YoungFunction::power(2)).infinite);
    CHECK(modular_of_operator(H, StepFunction{}, YoungFunction::power(3)).value == 0.0);
}

TEST_CASE("gauge norm") {
    CHECK(gauge_norm(StepFunction::indicator(16.0), YoungFunction::power(2)) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(gauge_norm(StepFunction{}, YoungFunction::power(2)) == 0.0);
    CHECK(gauge_norm(StepFunction::indicator(1.0, 2.0), YoungFunction::exp_minus_one()) ==
          doctest::Approx(2.0 / std::log(2.0)).epsilon(1e-9));

    const TestFamily fam = TestFamily::random(15, 4);
    const auto Y = builtin::powerlog_domain();
    for (const auto& m : fam.members) {
        const double n = gauge_norm(m.f, Y);
        CHECK(gauge_norm(m.f.scaled(3.5), Y) == doctest::Approx(3.5 * n).epsilon(1e-8));
        CHECK(gauge_norm(rearrangement(m.f), Y) == doctest::Approx(n).epsilon(1e-12));
        // the returned lambda sits just above the unit level of the modular
        const double mv = modular(m.f, Y, 1.0 / n).value;
        CHECK(mv <= 1.0 + 1e-12);
        CHECK(mv >= 1.0 - 1e-6);
    }
    for (std::size_t i = 0; i + 1 < fam.members.size(); ++i) {
        const auto& f = fam.members[i].f;
        const auto& g = fam.members[i + 1].f;
        CHECK(gauge_norm(f + g, Y) <= (gauge_norm(f, Y) + gauge_norm(g, Y)) * (1 + 1e-8));
    }
}
