// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#pragma once

/**
 * @file stepfn.hpp
 * @brief Nonnegative step functions on (0, inf) and their rearrangements.
 *
 * A StepFunction takes the value a_i on (t_{i-1}, t_i] (t_0 = 0) and vanishes
 * beyond t_n. Everything here is finite sums and sorting, so identities such
 * as equimeasurability of f and f* hold with ==, not within a tolerance.
 */

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace orlicz {

class StepFunction {
public:
    StepFunction() = default;

    /// Canonicalises: drops empty pieces, merges equal neighbours, trims trailing zeros.
    StepFunction(std::vector<double> breakpoints, std::vector<double> values);

    /// height * chi_(0,a).
    static StepFunction indicator(double a, double height = 1.0);

    /// Samples (t_i, v_i) read as v_i on (t_{i-1}, t_i]; more than @p max_pieces
    /// samples are quantised onto a log grid with @p max_pieces cells.
    static StepFunction from_samples(const std::vector<double>& t, const std::vector<double>& v,
                                     std::size_t max_pieces = 1024);
    /// Two-column CSV (t, value); a header line is skipped if present.
    static StepFunction from_csv(const std::string& path, std::size_t max_pieces = 1024);

    const std::vector<double>& breakpoints() const { return t_; }
    const std::vector<double>& values() const { return a_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }

    /// Value at x > 0 (left-continuous convention).
    double operator()(double x) const;
    /// Right end of the support (0 for the zero function).
    double support() const { return t_.empty() ? 0.0 : t_.back(); }
    double max_value() const;
    bool is_nonincreasing() const;

    /// x -> f(a x).
    StepFunction dilate(double a) const;
    StepFunction scaled(double k) const;
    /// Pointwise min(f, level).
    StepFunction clipped(double level) const;

    double integral() const;
    /// int_0^x f.
    double integral_to(double x) const;

    nlohmann::json to_json() const;

    friend StepFunction operator+(const StepFunction& f, const StepFunction& g);
    friend StepFunction operator-(const StepFunction& f, const StepFunction& g);  ///< requires f >= g
    friend bool operator==(const StepFunction& f, const StepFunction& g) = default;

private:
    std::vector<double> t_;
    std::vector<double> a_;
};

/// lambda_f(s) = |{f > s}|, stored by the distinct positive values of f in
/// decreasing order v_1 > ... > v_K and cumulative measures M_1 < ... < M_K:
/// lambda(s) = M_j for v_{j+1} <= s < v_j, M_K below v_K, 0 from v_1 on.
struct DistributionFunction {
    std::vector<double> levels;
    std::vector<double> measures;

    double operator()(double s) const;
    friend bool operator==(const DistributionFunction&, const DistributionFunction&) = default;
};

DistributionFunction distribution(const StepFunction& f);
StepFunction rearrangement(const StepFunction& f);

/// f*(t) = inf{s : lambda_f(s) <= t} (right-continuous).
double rearranged_value(const StepFunction& f, double t);

/// f**(t) = (1/t) int_0^t f*. Throws domain_error for t <= 0.
double maximal(const StepFunction& f, double t);

/// (f0, f1) with f1 = min(f, f*(t)) and f0 = f - f1.
std::pair<StepFunction, StepFunction> decompose(const StepFunction& f, double t);

/// int f g.
double inner_product(const StepFunction& f, const StepFunction& g);

}  // namespace orlicz
