// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#pragma once

/**
 * @file quad.hpp
 * @brief Adaptive quadrature of log-represented integrands, with tail
 *        classification and divergence certificates.
 *
 * Every integrand is supplied as w -> ln h(w), where w is the integration
 * variable (usually w = ln t). Results are returned as logarithms too, so an
 * integral of e^{800} is an ordinary value here.
 *
 * Improper integrals over [a, inf) or (-inf, b] are decided by probing the
 * integrand far out: for the power-log and exponential families used in this
 * library, ln h(w) behaves like kappa*w + gamma*ln|w| + o(1), and the local
 * slope d ln h / d ln|w| at |w| ~ 1e6 separates convergent from divergent
 * tails without ambiguity (threshold -1).
 */

#include <functional>
#include <string>
#include <vector>

namespace orlicz::quad {

/// w -> ln h(w). Returning -inf means h(w) = 0.
using LogFn = std::function<double(double)>;

struct Options {
    double rel_tol = 1e-12;
    int max_intervals = 2000;
};

/// Result of a finite-interval integral in log form.
struct LogIntegral {
    double log_value = 0.0;  ///< ln of the integral (-inf for zero)
    double rel_error = 0.0;  ///< estimated relative error
    bool converged = true;
};

/// ln of the integral of e^{f(w)} over [a, b] (a <= b).
LogIntegral integrate(const LogFn& f, double a, double b, const Options& opt = {});

enum class Direction { PlusInfinity, MinusInfinity };

/// Far-field behaviour of ln h(w) as |w| grows in the given direction.
struct Asymptote {
    bool integrable = true;
    double log_slope = 0.0;  ///< d ln h / d|w| at the probe points
    double power = 0.0;      ///< d ln h / d ln|w| at the probe points
};

Asymptote probe(const LogFn& f, Direction dir, double start);

/// Truncated integrals used as divergence evidence.
struct DivergenceCertificate {
    std::vector<double> cutoffs_log10;   ///< log10 of the cutoffs X (or 1/eps)
    std::vector<double> log_truncated;   ///< ln of the truncated integrals
    std::vector<double> ratios;          ///< successive ratios on the decade cutoffs
    double fitted_exponent = 0.0;        ///< gamma in a + b (ln X)^gamma, or the power of X for power-type growth
    double fit_residual = 0.0;           ///< rms residual of that fit, relative
    double integrand_power = 0.0;        ///< far-field d ln h / d ln|w|
    double integrand_slope = 0.0;        ///< far-field d ln h / d|w|
};

struct Improper {
    bool finite = true;
    double log_value = 0.0;
    double rel_error = 0.0;
    Asymptote asymptote;
    DivergenceCertificate certificate;  ///< filled only when !finite
};

/// ln of the integral of e^{f(w)} over [a, +inf).
Improper integrate_to_infinity(const LogFn& f, double a, const Options& opt = {});

/// ln of the integral of e^{f(w)} over (-inf, b].
Improper integrate_from_minus_infinity(const LogFn& f, double b, const Options& opt = {});

/// Least-squares fit of y ~ a + b x^gamma; gamma is searched in [-3, 3].
struct OffsetPowerFit {
    double a = 0.0, b = 0.0, gamma = 0.0;
    double rms_relative = 0.0;
};
OffsetPowerFit fit_offset_power(const std::vector<double>& x, const std::vector<double>& y);

/// Ordinary least-squares slope of y against x, with rms residual.
struct LinearFit {
    double slope = 0.0, intercept = 0.0, rms = 0.0;
};
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace orlicz::quad
