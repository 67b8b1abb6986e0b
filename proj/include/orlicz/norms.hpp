// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#pragma once

/**
 * @file norms.hpp
 * @brief Lorentz quasi-norms, Orlicz modulars and the Luxemburg gauge norm.
 */

#include "orlicz/calderon.hpp"
#include "orlicz/quad.hpp"
#include "orlicz/stepfn.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

enum class LorentzForm { Primary, Distributional };

/// ||f||_{p,r}; pass r = inf for sup_t t^{1/p} f*(t).
double lorentz_norm(const StepFunction& f, double p, double r, LorentzForm form = LorentzForm::Primary);
inline double lorentz_norm(const StepFunction& f, const Indices& idx, LorentzForm form = LorentzForm::Primary) {
    return lorentz_norm(f, idx.p, idx.r, form);
}

/// int Phi(...) with its accuracy. An infinite modular carries the tail certificate.
struct ModularValue {
    double value = 0.0;
    double log_value = kNegInf;
    double quadrature_error = 0.0;  ///< relative
    bool infinite = false;
    quad::DivergenceCertificate certificate;
};

/// int Phi(k f(x)) dx, a finite sum.
ModularValue modular(const StepFunction& f, const YoungFunction& Y, double k = 1.0);

/// int_0^inf Phi((op g)(t)) dt. The integral runs in w = ln t, split at the
/// breakpoints of g; both improper ends go through the tail classifier.
ModularValue modular_of_operator(const OperatorTag& op, const StepFunction& g, const YoungFunction& Y,
                                 const quad::Options& opt = {});

/// inf{lambda > 0 : int Phi(|f| / lambda) <= 1}.
double gauge_norm(const StepFunction& f, const YoungFunction& Y, double rel_tol = 1e-10);

/// Gauge norm of op g. Returns +inf if the modular of op(g / lambda) is infinite for every lambda.
double gauge_norm_of_operator(const OperatorTag& op, const StepFunction& g, const YoungFunction& Y,
                              double rel_tol = 1e-8);

}  // namespace orlicz
