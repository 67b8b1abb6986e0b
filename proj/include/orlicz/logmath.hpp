// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#pragma once

/**
 * @file logmath.hpp
 * @brief Small helpers for arithmetic on natural logarithms of positive numbers.
 *
 * Integrands such as phi(Dy) / Phi(Dy)^{p'} overflow a double long before the
 * quantities of interest do, so the checkers carry ln(value) around and only
 * exponentiate at the end.
 */

#include <cmath>
#include <limits>

namespace orlicz {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// ln(e^a + e^b), exact for infinite arguments.
inline double log_add(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    if (a == kInf || b == kInf) return kInf;
    if (a < b) std::swap(a, b);
    return a + std::log1p(std::exp(b - a));
}

/// ln(e^a - e^b) for a >= b; returns -inf when the difference vanishes.
inline double log_sub(double a, double b) {
    if (b == kNegInf) return a;
    if (b >= a) return kNegInf;
    return a + std::log1p(-std::exp(b - a));
}

/// ln(x) that maps 0 to -inf and rejects nothing else.
inline double safe_log(double x) { return x > 0.0 ? std::log(x) : kNegInf; }

/// exp that keeps +inf and -inf meaningful.
inline double safe_exp(double l) { return l == kNegInf ? 0.0 : std::exp(l); }

}  // namespace orlicz
