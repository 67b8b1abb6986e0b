// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cmath>

#include "orlicz/norms.hpp"
#include "orlicz/report.hpp"
#include "orlicz/verify.hpp"

using namespace orlicz;

TEST_CASE("test families are deterministic and well formed") {
    const auto a = TestFamily::standard(42), b = TestFamily::standard(42), c = TestFamily::standard(43);
    REQUIRE(a.size() == b.size());
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.members[i].f == b.members[i].f);
        differs = differs || !(a.members[i].f == c.members[i].f);
        CHECK(a.members[i].f.is_nonincreasing());
    }
    CHECK(differs);
    const auto crit = TestFamily::critical(YoungFunction::power(3));
    CHECK(crit.size() == 12);
    for (const auto& m : crit.members) {
        CHECK(m.series >= 0);
        CHECK(m.f.support() == doctest::Approx(1.0));
    }
}

TEST_CASE("modular inequality for H^{2,1}") {
    const auto H = OperatorTag::hpr(2, 1);
    const auto fine = verify_modular(H, YoungFunction::power(3), YoungFunction::power(3), TestFamily::standard());
    CHECK_FALSE(fine.divergent);
    CHECK(fine.max_K > 0.0);
    CHECK(fine.max_K < 1e3);

    const auto bad = verify_modular(H, YoungFunction::power(2), YoungFunction::power(2), TestFamily::canonical({1.0}));
    CHECK(bad.divergent);
    CHECK(bad.reason == "infinite-lhs");
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness == StepFunction::indicator(1.0));

    TestFamily zero;
    zero.members.push_back({StepFunction{}, "zero"});
    const auto vac = verify_modular(H, YoungFunction::power(2), YoungFunction::power(2), zero);
    CHECK_FALSE(vac.divergent);
    CHECK(vac.entries.at(0).K == ModularOptions{}.K_min);
}

TEST_CASE("modular constant controls the gauge-norm constant") {
    const struct {
        OperatorTag op;
        YoungFunction a, b;
    } cases[] = {{OperatorTag::hpr(2, 1), YoungFunction::power(3), YoungFunction::power(3)},
                 {OperatorTag::joint(Indices(2, 1), Indices(4, 1)), YoungFunction::power(3), YoungFunction::power(3)},
                 {OperatorTag::sqr(4, 2), builtin::powerlog_range(), builtin::powerlog_domain()}};
    const TestFamily fam = TestFamily::standard();
    for (const auto& c : cases) {
        const auto rep = verify_modular(c.op, c.a, c.b, fam);
        if (rep.divergent) continue;
        for (const auto& m : fam.members) {
            const auto f = rearrangement(m.f);
            const double lhs = gauge_norm_of_operator(c.op, f, c.a);
            const double rhs = gauge_norm(f, c.b);
            CHECK(lhs <= 2.0 * rep.max_K * rhs * (1 + 1e-8));
        }
    }
}

TEST_CASE("necessity: a finite constant for S_{q,r} forces the upper Zygmund-Stromberg condition") {
    const struct {
        double s, q, r;
    } cases[] = {{1.5, 2, 1}, {3, 4, 2}, {3, 2, 1}, {4, 4, 1}, {4.5, 4, 3}};
    for (const auto& c : cases) {
        const auto Y = YoungFunction::power(c.s);
        TestFamily fam = TestFamily::standard();
        fam.append(TestFamily::critical(Y));
        const auto rep = verify_modular(OperatorTag::sqr(c.q, c.r), Y, Y, fam);
        const bool zs = check_zs_upper(Y, Y, c.q).holds();
        CAPTURE(c.s);
        CAPTURE(c.q);
        if (!rep.divergent) CHECK(zs);
        CHECK(zs == !rep.divergent);
    }
}

TEST_CASE("weak-type constants") {
    CHECK(verify_weak_type(OperatorTag::hpr(2, 1), Indices(2, 1), TestFamily::canonical()) <= 2.0 * (1 + 1e-12));
    const auto c = sqr_constants(Indices(2, 1));
    CHECK(verify_weak_type(OperatorTag::averaging(), Indices(1, 1), TestFamily::canonical({1.0})) <= c.M1);
    TestFamily zero;
    zero.members.push_back({StepFunction{}, "zero"});
    CHECK(verify_weak_type(OperatorTag::hpr(2, 1), Indices(2, 1), zero) == 0.0);
}

TEST_CASE("dominance by the Calderon operators") {
    const TestFamily fam = TestFamily::standard();
    CHECK(verify_dominance(ExampleOperator::Calderon, OperatorTag::hpr(2, 1), fam) ==
          doctest::Approx(1.0).epsilon(1e-12));
    for (double p : {2.0, 4.0})
        for (double r : {1.0, 2.0})
            CHECK(verify_dominance(ExampleOperator::Rearrangement, OperatorTag::hpr(p, r), fam) <=
                  std::pow(r / p, 1.0 / r) * (1 + 1e-12));
    const double lt = verify_dominance(ExampleOperator::LogTail, OperatorTag::sqr(2, 1), TestFamily::canonical({1.0}));
    CHECK(lt == doctest::Approx(0.461409395280283).epsilon(1e-10));
}

TEST_CASE("sandwich suite for S_{q,r} has no violations") {
    TestFamily fam = TestFamily::canonical({1.0});
    fam.append(TestFamily::random(20, 20260101));
    std::vector<Indices> idx;
    for (double q : {2.0, 3.0})
        for (double r : {1.0, 2.0, 3.0}) idx.emplace_back(q, r);
    const auto s = sandwich_suite(OpKind::Sqr, idx, fam, log_grid(1e-3, 1e3, 25));
    CHECK(s.cases == 2 * 3 * 21 * 25);
    CHECK(s.violations() == 0);
}

TEST_CASE("worked example reproduction") {
    const auto rep = reproduce_section6();
    CHECK(rep.head_ok);
    CHECK(rep.head_exponent == doctest::Approx(1.0).epsilon(0.05));
    CHECK(rep.tail_ok);
    CHECK(std::fabs(rep.tail_exponent - 1.0 / 3.0) <= 0.05);
    CHECK(rep.plateau_ok);
    CHECK(std::fabs(rep.plateau_ratio - 1.0) <= 0.15);
    CHECK(rep.verdicts_ok);
    CHECK(rep.all_ok());

    WorkedExampleOptions both_r1;
    both_r1.r2 = 1.0;
    CHECK_FALSE(reproduce_section6(both_r1).all_ok());

    WorkedExampleOptions quick;
    quick.quick = true;
    const auto q = reproduce_section6(quick);
    CHECK(q.all_ok());
    CHECK(q.tolerance_exponent > rep.tolerance_exponent);
}

TEST_CASE("cross-check on a bounded and an unbounded pair") {
    const std::vector<PanelEntry> panel = {
        {"Lp", YoungFunction::power(3), YoungFunction::power(3), Indices(2, 2), Indices(4, 4)},
        {"square at rho forms", YoungFunction::power(2), YoungFunction::power(2), Indices(2, 1), Indices(4, 1)},
    };
    const auto rows = cross_check(panel);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].condition.holds());
    CHECK_FALSE(rows[0].modular.divergent);
    CHECK_FALSE(rows[1].condition.holds());
    CHECK(rows[1].condition.branch == "fails at endpoint 0");
    CHECK(rows[1].modular.divergent);
    for (const auto& r : rows) CHECK(r.agree);
}

TEST_CASE("report encoding") {
    CHECK(report::number(1.5) == 1.5);
    const auto inf = report::number(INFINITY, 0.25);
    CHECK(inf.at("divergent") == true);
    CHECK(inf.at("rate") == 0.25);
    CHECK(report::dump({{"b", 1.0}, {"a", 0.1}}) == "{\n  \"a\": 0.10000000000000001,\n  \"b\": 1.0\n}\n");
    CHECK(report::csv({{1.0, 2.0}, {3.0, INFINITY}}) == "t,F(t)\n1.0,2.0\n3.0,inf\n");
}
