// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#include "orlicz/norms.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/errors.hpp"

namespace orlicz {

double lorentz_norm(const StepFunction& f, double p, double r, LorentzForm form) {
    if (!(p > 0.0)) throw precondition_error("lorentz_norm: p must be positive");
    if (!(r > 0.0)) throw precondition_error("lorentz_norm: r must be positive");
    const DistributionFunction d = distribution(f);
    if (d.levels.empty()) return 0.0;
    if (r == kInf) {
        double best = 0.0;
        for (std::size_t j = 0; j < d.levels.size(); ++j)
            best = std::max(best, std::pow(d.measures[j], 1.0 / p) * d.levels[j]);
        return best;
    }
    double sum = 0.0;
    if (form == LorentzForm::Primary) {
        // f* = v_j on (M_{j-1}, M_j]
        const double rho = r / p;
        double prev = 0.0;
        for (std::size_t j = 0; j < d.levels.size(); ++j) {
            sum += std::pow(d.levels[j], r) * (std::pow(d.measures[j], rho) - std::pow(prev, rho));
            prev = d.measures[j];
        }
    } else {
        // lambda = M_j on [v_{j+1}, v_j)
        for (std::size_t j = 0; j < d.levels.size(); ++j) {
            const double below = j + 1 < d.levels.size() ? d.levels[j + 1] : 0.0;
            sum += std::pow(d.measures[j], r / p) * (std::pow(d.levels[j], r) - std::pow(below, r));
        }
    }
    return std::pow(sum, 1.0 / r);
}

ModularValue modular(const StepFunction& f, const YoungFunction& Y, double k) {
    if (!(k > 0.0)) throw domain_error("modular: k must be positive");
    ModularValue m;
    const auto& t = f.breakpoints();
    const auto& a = f.values();
    double prev = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (a[i] > 0.0) m.log_value = log_add(m.log_value, Y.log_Phi(std::log(k * a[i])) + std::log(t[i] - prev));
        prev = t[i];
    }
    m.value = safe_exp(m.log_value);
    m.infinite = m.log_value == kInf;
    return m;
}

ModularValue modular_of_operator(const OperatorTag& op, const StepFunction& g, const YoungFunction& Y,
                                 const quad::Options& opt) {
    ModularValue m;
    if (g.is_zero()) return m;
    if (!g.is_nonincreasing()) throw precondition_error("modular_of_operator: g must be nonincreasing");
    const PreparedOperator prepared(op, g);
    const quad::LogFn h = [&](double w) {
        const double v = prepared.log_value(w);
        if (v == kNegInf) return kNegInf;
        return Y.log_Phi(v) + w;
    };
    std::vector<double> cuts;
    for (double b : g.breakpoints()) cuts.push_back(std::log(b));

    auto note = [&](const quad::Improper& part) {
        if (!part.finite) {
            m.infinite = true;
            m.certificate = part.certificate;
        }
        m.log_value = log_add(m.log_value, part.log_value);
        m.quadrature_error = std::max(m.quadrature_error, part.rel_error);
    };
    note(quad::integrate_from_minus_infinity(h, cuts.front(), opt));
    if (!m.infinite) note(quad::integrate_to_infinity(h, cuts.back(), opt));
    if (m.infinite) {
        m.log_value = kInf;
        m.value = kInf;
        return m;
    }
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        const auto part = quad::integrate(h, cuts[i - 1], cuts[i], opt);
        m.log_value = log_add(m.log_value, part.log_value);
        m.quadrature_error = std::max(m.quadrature_error, part.rel_error);
    }
    m.value = safe_exp(m.log_value);
    return m;
}

namespace {

// Smallest lambda (to relative tolerance) with log_mod(lambda) <= 0, by
// bisection in ln lambda; log_mod is nonincreasing.
template <class F>
double gauge_bisect(F log_mod, double start, double rel_tol) {
    double lo = std::log(start), hi = lo;
    if (log_mod(hi) <= 0.0) {
        while (log_mod(lo) <= 0.0) {
            hi = lo;
            lo -= 1.0;
            if (lo < -800.0) return 0.0;
        }
    } else {
        while (log_mod(hi) > 0.0) {
            lo = hi;
            hi += 1.0;
            if (hi > 800.0) return kInf;
        }
    }
    const double tol = std::log1p(rel_tol);
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (log_mod(mid) <= 0.0) hi = mid; else lo = mid;
    }
    return std::exp(hi);
}

}  // namespace

double gauge_norm(const StepFunction& f, const YoungFunction& Y, double rel_tol) {
    if (f.is_zero()) return 0.0;
    return gauge_bisect([&](double ll) { return modular(f, Y, std::exp(-ll)).log_value; }, f.max_value(), rel_tol);
}

double gauge_norm_of_operator(const OperatorTag& op, const StepFunction& g, const YoungFunction& Y, double rel_tol) {
    if (g.is_zero()) return 0.0;
    // every operator here is positively homogeneous: op(g / lambda) = op(g) / lambda
    return gauge_bisect(
        [&](double ll) { return modular_of_operator(op, g.scaled(std::exp(-ll)), Y).log_value; },
        std::max(g.max_value(), 1e-300), rel_tol);
}

}  // namespace orlicz
