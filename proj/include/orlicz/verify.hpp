// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#pragma once

/**
 * @file verify.hpp
 * @brief Direct numerical checks of the inequalities the conditions are
 *        supposed to characterise, and the worked power-log example.
 *
 * Everything here samples: a family of nonincreasing step functions stands in
 * for "all f", and a log grid stands in for "all t". Agreement with the
 * condition checkers is evidence, disagreement is a bug signal.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orlicz/calderon.hpp"
#include "orlicz/conditions.hpp"
#include "orlicz/stepfn.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

/// Nonincreasing, finitely supported test functions with labels.
/// Members built from a critical sequence carry a series id and a position so
/// that growth of K along the sequence can be detected.
struct TestFamily {
    struct Member {
        StepFunction f;
        std::string label;
        int series = -1;      ///< -1 outside a critical sequence
        double position = 0;  ///< ln(1/eps) along the sequence
    };
    std::vector<Member> members;

    /// level * chi_(0,1) for level on a geometric grid.
    static TestFamily canonical(const std::vector<double>& levels = {1e-3, 1e-2, 0.1, 0.5, 1, 2, 10, 100, 1e3});
    /// count random step functions with at most 8 steps, values in [0.05, 5], lengths 10^U(-2, 1.5).
    static TestFamily random(int count, std::uint64_t seed);
    /// f(s) = Phi^{-1}(1 / (s (ln(e/s))^{1+delta})) on [eps, 1], constant on (0, eps],
    /// quantised to log steps, for delta in {0.2, 0.5} and ln(1/eps) in {10, 20, 40, 80, 160, 300}.
    static TestFamily critical(const YoungFunction& Phi);
    /// canonical + random(20, seed).
    static TestFamily standard(std::uint64_t seed = 20260101);

    TestFamily& append(const TestFamily& other);
    std::size_t size() const { return members.size(); }
};

// ---- modular inequality -----------------------------------------------------

struct ModularEntry {
    std::string label;
    double lhs = 0.0;         ///< int Phi1(op f), may be +inf
    double K = 0.0;           ///< minimal K with lhs <= int Phi2(K f); +inf past the ceiling
    bool lhs_infinite = false;
    bool over_ceiling = false;
};

struct ModularReport {
    std::vector<ModularEntry> entries;
    bool divergent = false;
    std::string reason;            ///< "infinite-lhs", "ceiling", "growth" or empty
    std::optional<StepFunction> witness;
    double max_K = 0.0;            ///< over the entries with finite K
    double growth_exponent = 0.0;  ///< largest log-log slope of K along a critical series

    nlohmann::json to_json() const;
};

struct ModularOptions {
    double K_min = 1e-3;
    double K_max = 1e6;
    double rel_tol = 1e-6;
    double growth_threshold = 0.1;
};

ModularReport verify_modular(const OperatorTag& op, const YoungFunction& Phi1, const YoungFunction& Phi2,
                             const TestFamily& fam, const ModularOptions& opt = {});

// ---- weak type and dominance -----------------------------------------------

/// sup over the family and a level grid of lambda m_{op f}(lambda)^{1/p} / ||f||_{p,r}
/// (distributional Lorentz form). The zero function contributes 0.
double verify_weak_type(const OperatorTag& op, const Indices& idx, const TestFamily& fam);

enum class ExampleOperator { Rearrangement, LogTail, Calderon };

/// max over the family and 25 log-spaced t in [1e-3, 1e3] of (T f)*(t) / (op f*)(c t).
/// For ExampleOperator::Calderon, T is @p op itself.
double verify_dominance(ExampleOperator T, const OperatorTag& op, const TestFamily& fam, double c = 1.0);

// ---- sandwich suites --------------------------------------------------------

struct SandwichSummary {
    int cases = 0;
    int lower_violations = 0;
    int upper_violations = 0;
    double worst_lower = 0.0;  ///< max lower / mid over the violations
    double worst_upper = 0.0;  ///< max mid / upper over the violations
    std::vector<std::string> examples;  ///< first few violating cases

    int violations() const { return lower_violations + upper_violations; }
    nlohmann::json to_json() const;
};

/// Runs sandwich_check_Hpr (kind Hpr) or sandwich_check_Sqr (kind Sqr) over
/// every index pair, family member and t.
SandwichSummary sandwich_suite(OpKind kind, const std::vector<Indices>& indices, const TestFamily& fam,
                               const std::vector<double>& ts, double slack = 1e-9);

/// n log-spaced points on [a, b].
std::vector<double> log_grid(double a, double b, int n);

// ---- worked example ---------------------------------------------------------

struct WorkedExampleOptions {
    double r1 = 1.0;
    double r2 = 2.0;
    bool quick = false;        ///< three decades instead of six, wider tolerances
    bool ir2_literal = false;  ///< use the (log x)^{1+alpha2} head as printed
    CheckConfig check;
};

struct WorkedExampleReport {
    // (a) head integral growth
    std::vector<std::pair<double, double>> head_values;  ///< (x, I_{r1}(x))
    double head_exponent = 0.0;
    bool head_ok = false;
    // (b) truncated tail growth
    std::vector<std::pair<double, double>> tail_values;  ///< (X, J_{r1}(x0, X))
    double tail_exponent = 0.0;
    bool tail_ok = false;
    // (c) bounded product at r2
    std::vector<std::pair<double, double>> product_curve;  ///< (x, F_{r2}(x))
    double plateau_ratio = 0.0;                             ///< F(1e6) / F(1e3)
    bool plateau_ok = false;
    // (d) checker verdicts
    ConditionReport at_r1, at_r2;
    bool verdicts_ok = false;

    double tolerance_exponent = 0.05;
    double tolerance_ratio = 0.15;
    std::vector<std::string> notes;

    bool all_ok() const { return head_ok && tail_ok && plateau_ok && verdicts_ok; }
    nlohmann::json to_json() const;
};

WorkedExampleReport reproduce_section6(const WorkedExampleOptions& opt = {});

// ---- cross check ------------------------------------------------------------

struct PanelEntry {
    std::string name;
    YoungFunction Phi1, Phi2;
    Indices idx0, idx1;
};

struct CrossCheckRow {
    std::string name;
    ConditionReport condition;
    ModularReport modular;
    bool agree = false;
};

/// The six-pair panel: powers 1.9, 3, 4.1 and the exponential type at (2,1),(4,1);
/// the power-log pair at (4,1),(6,6) and (4,2),(6,6).
std::vector<PanelEntry> default_panel();

std::vector<CrossCheckRow> cross_check(const std::vector<PanelEntry>& panel, std::uint64_t seed = 20260101,
                                       const CheckConfig& cfg = {});

}  // namespace orlicz
