// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#pragma once

/**
 * @file conditions.hpp
 * @brief Executable forms of the integral conditions that decide whether a
 *        pair (Phi2 domain, Phi1 range) interpolates a weak-type class.
 *
 * Each checker builds a function F(t) > 0 whose supremum over t > 0 must be
 * finite for some scaling constant. Work happens in w = ln t. Inner integrals
 * are cumulative improper integrals of log-represented integrands, built once
 * on a lattice w_j = j ln2 / 10 and reused across scaling constants through
 * the substitution y -> D y.
 *
 * A verdict is one of
 *   Holds{B, argmax, scale}                (bounded, stable under grid doubling)
 *   Fails{InnerDivergence, certificate}    (an inner integral is +inf for every t)
 *   Fails{SupDivergence, growth fit}       (F grows without bound at an end)
 */

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "orlicz/calderon.hpp"
#include "orlicz/quad.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

enum class Verdict { Holds, Fails };
enum class FailMode { None, InnerDivergence, SupDivergence };

struct GrowthFit {
    double exponent = 0.0;  ///< gamma in F ~ (log t)^gamma (or the truncation exponent)
    double residual = 0.0;
    std::string model;      ///< "log-power", "offset-power", ...
    std::string end;        ///< "upper" (t -> inf) or "lower" (t -> 0)
};

struct GridInfo {
    double tmin = 1e-8, tmax = 1e8;
    int nodes = 0;
    int refinement_depth = 0;
    double relative_change = 0.0;  ///< sup change on the last grid doubling
};

struct ConditionReport {
    std::string condition;
    std::string branch;  ///< for the two-endpoint check: which form was used
    Verdict verdict = Verdict::Holds;
    FailMode mode = FailMode::None;
    double sup_value = 0.0;
    double argmax_t = 0.0;
    double scale = 1.0;       ///< the scaling constant (B, D, L or C) the sup refers to
    double scale_min = 1.0;   ///< smallest grid value of the constant with a bounded sup
    GrowthFit growth;
    quad::DivergenceCertificate certificate;
    GridInfo grid;
    std::vector<std::pair<double, double>> curve;  ///< (t, F(t)) on the final grid
    std::vector<ConditionReport> parts;            ///< sub-reports (two-endpoint check, Stepanov pair)

    bool holds() const { return verdict == Verdict::Holds; }
    nlohmann::json to_json(bool with_curve = false) const;
};

/// Grid and tolerance knobs shared by all checkers.
struct CheckConfig {
    double tmin = 1e-8;
    double tmax = 1e8;
    int steps_per_octave = 10;   ///< lattice 2^{j/10}, about 33 nodes per decade
    int scale_kmin = -6;         ///< constants searched over 2^k, k in [kmin, kmax]
    int scale_kmax = 20;
    double stability_tol = 0.01;
    double growth_threshold = 0.02;  ///< far log-slope above which F counts as growing
    quad::Options quad;
};

/// Head exponent in the single-condition forms: 1/p1 (with p1 = p/r) or the plain 1/p (Direct).
enum class HeadExponent { Conjugate, Direct };

// ---- sup search -------------------------------------------------------------

struct SupResult {
    bool divergent = false;
    double sup = 0.0;
    double argmax = 0.0;
    GrowthFit growth;
    GridInfo grid;
    std::vector<std::pair<double, double>> curve;
};

/// Supremum of F(t) = exp(logF(ln t)) over t > 0: grid over [tmin, tmax]
/// refined by golden-section search, far probes at |ln t| = 20 * 2^k (k = 0..12)
/// on both sides, and a log-power fit over the outer three decades when F grows.
SupResult sup_search(const std::function<double(double)>& logF, const CheckConfig& cfg = {});

/// Convenience overload taking F as a function of t.
SupResult sup_search_linear(const std::function<double(double)>& F, const CheckConfig& cfg = {});

// ---- checkers ---------------------------------------------------------------

/// t^p int_0^t Phi1(s)/s^{p+1} ds <= A Phi2(B t).
ConditionReport check_zs_lower(const YoungFunction& Phi1, const YoungFunction& Phi2, double p,
                               const CheckConfig& cfg = {});

/// t^q int_t^inf Phi1(s)/s^{q+1} ds <= A Phi2(B t).
ConditionReport check_zs_upper(const YoungFunction& Phi1, const YoungFunction& Phi2, double q,
                               const CheckConfig& cfg = {});

/// sup_x (int_x^inf phi2(Dy)/Phi2(Dy)^{p1'} y^{r p1'} dy)^{1/p1'} (int_0^x phi1(y)/y^p dy)^{e} <= B,
/// e = 1/p1 (default) or 1/p.
ConditionReport check_cianchi_lower(const YoungFunction& Phi1, const YoungFunction& Phi2, double p, double r,
                                    const CheckConfig& cfg = {}, HeadExponent head = HeadExponent::Conjugate);

/// sup_t (int_0^t phi2(Cy)/Phi2(Cy)^{q1'} y^{r q1'} dy)^{1/q1'} (int_t^inf phi1(y)/y^q dy)^{1/q1} <= F.
ConditionReport check_cianchi_upper(const YoungFunction& Phi1, const YoungFunction& Phi2, double q, double r,
                                    const CheckConfig& cfg = {});

/// Both weighted-Hardy conditions with a common constant C.
ConditionReport check_stepanov_pair(const YoungFunction& Phi1, const YoungFunction& Phi2, double p, double r,
                                    const CheckConfig& cfg = {});

/// The two-endpoint interpolation condition; Holds iff both endpoints hold.
ConditionReport check_theoremA(const YoungFunction& Phi1, const YoungFunction& Phi2, const Indices& idx0,
                               const Indices& idx1, const CheckConfig& cfg = {});

/// Condition names accepted by check_by_name: zs-lower, zs-upper, cianchi-lower, cianchi-upper, stepanov-pair.
ConditionReport check_by_name(const std::string& name, const YoungFunction& Phi1, const YoungFunction& Phi2,
                              double p, double r, const CheckConfig& cfg = {});

std::string to_string(Verdict v);
std::string to_string(FailMode m);

}  // namespace orlicz
