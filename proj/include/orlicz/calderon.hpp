// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#pragma once

/**
 * @file calderon.hpp
 * @brief Calderon-type operators on nonincreasing step functions.
 *
 * For g with values a_i on (b_{i-1}, b_i] every operator here is a finite sum
 * of powers of t, evaluated in closed form:
 *
 *   H^{p,r} g(t) = (t^{-r/p} int_0^t g^r s^{r/p-1} ds)^{1/r}
 *   H_{q,r} g(t) = (t^{-r/q} int_t^inf g^r s^{r/q-1} ds)^{1/r}
 *   P g(t)       = (1/t) int_0^t g
 *   S_{q,r}      = P + H_{q,r},   Joint = H^{p0,r0} + H_{p1,r1}.
 */

#include <string>
#include <utility>

#include <vector>

#include <json.hpp>

#include "orlicz/logmath.hpp"
#include "orlicz/stepfn.hpp"

namespace orlicz {

/// An index pair (p, r) with p >= 1, r >= 1.
struct Indices {
    double p = 2.0;
    double r = 1.0;

    Indices() = default;
    Indices(double p_, double r_);

    double p_conj() const { return p / (p - 1.0); }  ///< p' (inf for p = 1)
    double rho() const { return p / r; }
    /// rho' = rho / (rho - 1); only meaningful when r < p.
    double rho_conj() const;
    nlohmann::json to_json() const { return {{"p", p}, {"r", r}}; }
};

enum class OpKind { Hpr, HqrDual, P, Sqr, Joint };

struct OperatorTag {
    OpKind kind = OpKind::Hpr;
    Indices a;  ///< (p, r) for Hpr, (q, r) for HqrDual and Sqr, (p0, r0) for Joint
    Indices b;  ///< (p1, r1) for Joint

    static OperatorTag hpr(double p, double r);
    static OperatorTag hqr_dual(double q, double r);
    static OperatorTag averaging();
    static OperatorTag sqr(double q, double r);
    static OperatorTag joint(Indices lower, Indices upper);
    /// Parses "Hpr:2,1", "Hqr:2,1", "P", "Sqr:2,1", "Joint:2,1,4,1".
    static OperatorTag parse(const std::string& text);

    std::string name() const;
};

/// (op g)(t). Throws precondition_error for increasing g, domain_error for t <= 0.
double apply(const OperatorTag& op, const StepFunction& g, double t);

/// ln (op g)(e^w); stays accurate at |w| ~ 1e6 where apply() would under/overflow.
double log_apply(const OperatorTag& op, const StepFunction& g, double w);

/// op applied to one fixed g, with prefix sums so that each evaluation costs
/// O(log n) in the number of steps. Same values as log_apply.
class PreparedOperator {
public:
    PreparedOperator(const OperatorTag& op, const StepFunction& g);
    double log_value(double w) const;

private:
    struct Moments {
        double r = 1.0, rho = 1.0;
        std::vector<double> head;  ///< head[i] = ln of the moment over pieces 0..i-1
        std::vector<double> tail;  ///< tail[i] = ln of the moment over pieces i..n-1
    };
    Moments make(double r, double rho) const;
    double log_h_upper(const Moments& m, double p, double w, std::size_t i) const;
    double log_h_lower(const Moments& m, double w, std::size_t i) const;
    double log_average(double w, std::size_t i) const;

    OperatorTag op_;
    StepFunction g_;
    std::vector<double> lb_;        ///< ln breakpoints
    std::vector<double> integral_;  ///< integral_[i] = int_0^{b_{i-1}} g
    Moments first_, second_;
};

/// Beyond the support of g the operator is c * t^{-1/s} (or zero). Returns
/// {ln c, 1/s}; ln c = -inf when the operator vanishes there.
std::pair<double, double> tail_law(const OperatorTag& op, const StepFunction& g);

/// m_{op g}(lambda) = |{t : (op g)(t) > lambda}|.
struct LevelMeasure {
    double value = 0.0;         ///< the measure (overflows to inf when log_value > 709)
    double log_value = kNegInf; ///< ln of the measure
    bool infinite = false;      ///< the operator never drops to lambda
};
LevelMeasure distribution_of(const OperatorTag& op, const StepFunction& g, double lambda);

/// A three-sided estimate lower <= mid <= upper.
struct Sandwich {
    double lower = 0.0, mid = 0.0, upper = 0.0;
    bool lower_ok(double slack = 1e-9) const { return lower <= mid * (1.0 + slack) + 1e-300; }
    bool upper_ok(double slack = 1e-9) const { return mid <= upper * (1.0 + slack) + 1e-300; }
};

/// int_A^B m_g(s)^e s^{k-1} ds in closed form (B may be +inf).
double distribution_moment(const StepFunction& g, double A, double B, double e, double k);

/// Distribution sandwich for H^{p,r}: lower and upper bounds for t^p m_{Hg}(t).
Sandwich sandwich_check_Hpr(const Indices& idx, const StepFunction& g, double t);

/// Distribution sandwich for S_{q,r}: bounds for m_{Sg}(t).
Sandwich sandwich_check_Sqr(const Indices& idx, const StepFunction& g, double t);

/// Constants of the S_{q,r} upper estimate.
struct SqrConstants {
    double E = 0.0, beta = 0.0, M1 = 0.0, Mqr = 0.0;
};
SqrConstants sqr_constants(const Indices& idx);

/// (H_{q,r} g(t), (q/r)^{1/r} H_{q,q} g(2^{q/r-1} t)) for r >= q.
std::pair<double, double> reduction_r_ge_q(const Indices& idx, const StepFunction& g, double t);

}  // namespace orlicz
