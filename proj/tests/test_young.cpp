// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cmath>
#include <random>

#include "orlicz/errors.hpp"
#include "orlicz/verify.hpp"
#include "orlicz/young.hpp"

using namespace orlicz;

namespace {
const double e = std::exp(1.0);

std::vector<YoungFunction> family() {
    return {YoungFunction::power(2), YoungFunction::power(3), YoungFunction::power(1.5, 4.0),
            builtin::powerlog_range(), builtin::powerlog_domain(), builtin::exp_type()};
}
}  // namespace

TEST_CASE("density of powers and power-log pieces") {
    CHECK(YoungFunction::power(2).density(3.0) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(YoungFunction::power(5).density(1e-12) == doctest::Approx(5e-48).epsilon(1e-12));

    // t^3 up to e, then t^4 (log t)^2; the density is left-continuous at e
    const auto Y = YoungFunction::from_pieces({Piece{0.0, 1.0, 3.0, 0.0}, Piece{e, 1.0, 4.0, 2.0}});
    CHECK(Y.density(e * (1 + 1e-13)) == doctest::Approx(120.513221539126).epsilon(1e-9));
    CHECK(Y.density(e) == doctest::Approx(3 * e * e).epsilon(1e-12));
    CHECK_THROWS_AS(Y.density(0.0), domain_error);
    CHECK_THROWS_AS(Y.density(-1.0), domain_error);
}

TEST_CASE("Phi values") {
    CHECK(YoungFunction::power(3).Phi(2.0) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(YoungFunction::power(3).Phi(0.0) == 0.0);
    CHECK(builtin::powerlog_domain().Phi(e) == doctest::Approx(std::exp(5.0)).epsilon(1e-12));
    CHECK(YoungFunction::exp_minus_one().Phi(1.0) == doctest::Approx(e - 1.0).epsilon(1e-14));
}

TEST_CASE("a density that drops is rejected") {
    // t^4 (log t)^2 from 0 falls back to t^4 below 1 and its density jumps down to 0 at 1
    CHECK_THROWS_AS(YoungFunction::from_pieces({Piece{0.0, 1.0, 4.0, 2.0}}), invariant_violation);
}

TEST_CASE("JSON specs rescale later pieces for continuity") {
    std::vector<std::string> log;
    const auto Y = YoungFunction::from_json(
        nlohmann::json::parse(R"({"pieces":[{"upto":2.718281828459045,"c":1,"p":5,"alpha":0},
                                             {"from":2.718281828459045,"c":1,"p":4,"alpha":2}]})"),
        &log);
    CHECK_FALSE(log.empty());
    CHECK(Y.density(e * (1 + 1e-12)) == doctest::Approx(Y.density(e)).epsilon(1e-9));
    CHECK(Y.Phi(e) == doctest::Approx(std::exp(5.0)).epsilon(1e-12));
    CHECK_THROWS_AS(YoungFunction::from_json(nlohmann::json::parse(R"({"nothing":1})")), precondition_error);
}

TEST_CASE("complementary functions") {
    const auto sq = complementary(YoungFunction::power(2));
    for (double t : {0.1, 1.0, 3.0, 50.0}) CHECK(sq.psi.Phi(t) == doctest::Approx(t * t / 4).epsilon(1e-10));

    const auto cube = complementary(YoungFunction::power(3));
    CHECK(cube.psi.Phi(1.0) == doctest::Approx(0.384900179459750).epsilon(1e-10));

    // s t <= Phi(s) + Psi(t) at s = 2, t = 3: 6 <= 6.25
    CHECK(2.0 * 3.0 <= YoungFunction::power(2).Phi(2.0) + sq.psi.Phi(3.0));
    CHECK(sq.phi.Phi(2.0) + sq.psi.Phi(3.0) == doctest::Approx(6.25).epsilon(1e-12));
}

TEST_CASE("tabulated complement of a power-log function satisfies Young's inequality") {
    const auto pair = complementary(builtin::powerlog_domain(), 64);
    const auto grid = log_grid(1e-3, 1e3, 16);
    for (double s : grid)
        for (double t : grid) CHECK(s * t <= (pair.phi.Phi(s) + pair.psi.Phi(t)) * (1 + 1e-9));
}

TEST_CASE("growth bounds Phi(t) <= t phi(t) <= Phi(2t) on a 64-point grid") {
    const auto grid = log_grid(1e-6, 1e6, 64);
    for (const auto& Y : family())
        for (double t : grid) CHECK(growth_bounds_hold(Y, t));
}

TEST_CASE("midpoint convexity on adjacent grid triples") {
    const auto grid = log_grid(1e-6, 1e6, 64);
    for (const auto& Y : family())
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            const double a = grid[i], b = grid[i + 1];
            CHECK(Y.Phi(0.5 * (a + b)) <= 0.5 * (Y.Phi(a) + Y.Phi(b)) * (1 + 1e-12));
        }
}

TEST_CASE("density vanishes at zero for the power-log families") {
    for (const auto& Y : family()) CHECK(Y.density_vanishes_at_zero());
    CHECK_FALSE(YoungFunction::exp_minus_one().density_vanishes_at_zero());
}

TEST_CASE("inverse of Phi") {
    const auto Y = builtin::powerlog_range();
    for (double t : {1e-4, 0.5, 3.0, 1e4}) CHECK(Y.Phi_inverse(Y.Phi(t)) == doctest::Approx(t).epsilon(1e-10));
}
