// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cmath>

#include "orlicz/conditions.hpp"
#include "orlicz/errors.hpp"

using namespace orlicz;

namespace {
const YoungFunction t2 = YoungFunction::power(2);
const YoungFunction t3 = YoungFunction::power(3);
const YoungFunction t4 = YoungFunction::power(4);
const YoungFunction t5 = YoungFunction::power(5);
const YoungFunction s6r = builtin::powerlog_range();
const YoungFunction s6d = builtin::powerlog_domain();

bool inner(const ConditionReport& r) { return !r.holds() && r.mode == FailMode::InnerDivergence; }
bool sup_div(const ConditionReport& r) { return !r.holds() && r.mode == FailMode::SupDivergence; }
}  // namespace

TEST_CASE("sup_search on synthetic functions") {
    const auto a = sup_search_linear([](double t) { return 1.0 / (1.0 + t + 1.0 / t); });
    CHECK_FALSE(a.divergent);
    CHECK(a.sup == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(a.argmax == doctest::Approx(1.0).epsilon(1e-4));

    const auto b = sup_search_linear([](double t) { return std::sqrt(std::log1p(t)); });
    CHECK(b.divergent);
    CHECK(b.growth.end == "upper");
    CHECK(b.growth.exponent == doctest::Approx(0.5).epsilon(0.1));
    CHECK(std::fabs(b.growth.exponent - 0.5) <= 0.05);

    const auto c = sup_search_linear([](double) { return 2.5; });
    CHECK_FALSE(c.divergent);
    CHECK(c.sup == doctest::Approx(2.5).epsilon(1e-15));

    CHECK_THROWS_AS(sup_search_linear([](double) { return 0.0; }), numeric_error);
}

TEST_CASE("Zygmund-Stromberg lower condition") {
    const auto h = check_zs_lower(t3, t3, 2);
    CHECK(h.holds());
    CHECK(h.sup_value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(h.scale == 1.0);
    CHECK(h.grid.relative_change <= 0.01);

    CHECK(inner(check_zs_lower(t2, t2, 2)));

    const auto s = check_zs_lower(t4, t2, 2);
    CHECK(sup_div(s));
    CHECK(s.growth.end == "upper");

    CHECK_THROWS_AS(check_zs_lower(t3, t3, 1.0), precondition_error);
}

TEST_CASE("Zygmund-Stromberg upper condition") {
    const auto h = check_zs_upper(t3, t3, 4);
    CHECK(h.holds());
    CHECK(h.sup_value == doctest::Approx(1.0).epsilon(1e-6));

    CHECK(inner(check_zs_upper(t4, t4, 4)));

    const auto s = check_zs_upper(t2, t5, 4);
    CHECK(sup_div(s));
    CHECK(s.growth.end == "lower");
}

TEST_CASE("Cianchi-type lower condition") {
    CHECK(check_cianchi_lower(t3, t3, 2, 1).holds());
    CHECK(check_cianchi_lower(t5, t5, 4, 2).holds());

    const auto f = check_cianchi_lower(s6r, s6d, 4, 1);
    CHECK(inner(f));
    // truncations of the divergent tail grow like (log X)^{1/3}
    CHECK(std::fabs(f.certificate.fitted_exponent - 1.0 / 3.0) <= 0.05);

    const auto h = check_cianchi_lower(s6r, s6d, 4, 2);
    REQUIRE(h.holds());
    CHECK(h.grid.relative_change <= 0.01);
    // F(x)^2 = 6 (4 + 1/ln x) for large x at D = 1
    REQUIRE(h.scale == 1.0);
    const auto [x, Fx] = h.curve.back();
    CHECK(x > 1e7);
    CHECK(Fx == doctest::Approx(std::sqrt(6.0 * (4.0 + 1.0 / std::log(x)))).epsilon(1e-4));

    CHECK_THROWS_AS(check_cianchi_lower(t3, t3, 2, 2), precondition_error);
}

TEST_CASE("Cianchi-type upper condition") {
    const auto h = check_cianchi_upper(t2, t2, 4, 1);
    CHECK(h.holds());
    // for power pairs the product is constant, so the maximiser sits on the first node
    CHECK(h.argmax_t > 0.0);
    CHECK(inner(check_cianchi_upper(t4, t4, 4, 1)));
    CHECK(inner(check_cianchi_upper(t5, t3, 4, 2)));
}

TEST_CASE("Stepanov pair") {
    CHECK(check_stepanov_pair(t3, t3, 2, 1).holds());
    CHECK_FALSE(check_stepanov_pair(s6r, s6d, 4, 1).holds());
    const auto h = check_stepanov_pair(s6r, s6d, 4, 2);
    CHECK(h.holds());
    CHECK(h.parts.size() == 2);
}

TEST_CASE("two-endpoint combined check") {
    const auto lp = check_theoremA(t3, t3, Indices(2, 2), Indices(4, 4));
    REQUIRE(lp.holds());
    REQUIRE(lp.parts.size() == 2);
    CHECK(lp.parts[0].branch == "zs-lower");
    CHECK(lp.parts[1].branch == "zs-upper");
    CHECK(lp.parts[0].sup_value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(lp.parts[1].sup_value == doctest::Approx(1.0).epsilon(1e-6));

    const auto rho = check_theoremA(t3, t3, Indices(2, 1), Indices(4, 1));
    CHECK(rho.holds());
    CHECK(rho.parts[0].branch == "rho0-form");
    CHECK(rho.parts[1].branch == "rho1-form");

    const auto bad = check_theoremA(s6r, s6d, Indices(4, 1), Indices(6, 6));
    CHECK_FALSE(bad.holds());
    CHECK(bad.branch == "fails at endpoint 0");
    CHECK_FALSE(bad.parts[0].holds());

    CHECK(check_theoremA(s6r, s6d, Indices(4, 2), Indices(6, 6)).holds());
    CHECK_THROWS_AS(check_theoremA(t3, t3, Indices(4, 1), Indices(2, 1)), precondition_error);
}

TEST_CASE("strict monotonicity in r on the worked example") {
    CHECK_FALSE(check_cianchi_lower(s6r, s6d, 4, 1).holds());
    CHECK(check_cianchi_lower(s6r, s6d, 4, 2).holds());
    CHECK(check_cianchi_lower(s6r, s6d, 4, 3).holds());
}

TEST_CASE("scaling soundness: bounded at D stays bounded for larger D") {
    const struct {
        const char* name;
        YoungFunction a, b;
        double p, r;
    } cases[] = {{"zs-lower", t3, t3, 2, 2}, {"cianchi-lower", s6r, s6d, 4, 2}, {"stepanov-pair", t3, t3, 2, 1}};
    for (const auto& c : cases) {
        const auto base = check_by_name(c.name, c.a, c.b, c.p, c.r);
        REQUIRE(base.holds());
        const int kmin = static_cast<int>(std::lround(std::log2(base.scale_min)));
        for (int k = kmin; k <= 20; k += 3) {
            CheckConfig cfg;
            cfg.scale_kmin = cfg.scale_kmax = k;
            CAPTURE(c.name);
            CAPTURE(k);
            CHECK(check_by_name(c.name, c.a, c.b, c.p, c.r, cfg).holds());
        }
    }
}

TEST_CASE("condition forms agree on verdicts across the head-exponent variants") {
    // the lower endpoint of the two-endpoint check (Phi1 head) against the phi1-head Cianchi form
    const struct {
        YoungFunction a, b;
        double p, r;
    } cases[] = {{t3, t3, 2, 1}, {s6r, s6d, 4, 1}, {s6r, s6d, 4, 2}, {t5, t5, 4, 2}};
    for (const auto& c : cases) {
        const auto A = check_theoremA(c.a, c.b, Indices(c.p, c.r), Indices(c.p + 2, c.p + 2));
        const auto C = check_cianchi_lower(c.a, c.b, c.p, c.r);
        CHECK(A.parts[0].holds() == C.holds());
    }
}

TEST_CASE("reports serialise with the divergence encoding") {
    const auto j = check_zs_lower(t2, t2, 2).to_json();
    CHECK(j.at("verdict") == "Fails");
    CHECK(j.at("mode") == "InnerDivergence");
    CHECK(j.at("sup").at("divergent") == true);
    CHECK(j.contains("certificate"));
}
