// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#pragma once

/**
 * @file young.hpp
 * @brief Young functions Phi(t) = int_0^t phi(s) ds and their complements.
 *
 * A YoungFunction is stored through its density phi. Three representations
 * exist behind one interface:
 *
 *  - power-log pieces: on each piece phi = c * G'(t) with G(t) = t^p (ln t)^alpha
 *    where ln t > 0 and G(t) = t^p otherwise, or G(t) = e^{k t} for the
 *    exponential kind. Phi is the running integral, so it is continuous even
 *    when a piece boundary carries a density jump;
 *  - a tabulated density on log-spaced nodes, interpolated linearly and
 *    continued by power laws outside the table;
 *  - the complement of another Young function (see complementary()).
 *
 * Every evaluator has a log-space twin taking w = ln t and returning a natural
 * logarithm, because the condition checkers work at t = e^{+-1e6}.
 */

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace orlicz {

struct ComplementaryPair;
class YoungFunction;
ComplementaryPair complementary(const YoungFunction& Y, int nodes_per_decade);

enum class PieceKind { PowerLog, Exponential };

/// One piece of a power-log density, active on (from, next piece's from].
struct Piece {
    double from = 0.0;  ///< left breakpoint; the first piece must start at 0
    double c = 1.0;
    double p = 1.0;      ///< power (PowerLog)
    double alpha = 0.0;  ///< log exponent (PowerLog)
    double k = 1.0;      ///< rate (Exponential)
    PieceKind kind = PieceKind::PowerLog;
};

/// How the constructor treats density jumps at breakpoints.
enum class Continuity {
    Keep,     ///< use the coefficients as given
    Rescale,  ///< rescale c of each later piece so phi is continuous
};

class YoungFunction {
public:
    /// c * t^p.
    static YoungFunction power(double p, double c = 1.0);

    /// Power-log pieces. Throws invariant_violation if the resulting density
    /// is negative or decreasing. Rescaling notes are appended to @p log.
    static YoungFunction from_pieces(std::vector<Piece> pieces, Continuity mode = Continuity::Keep,
                                     std::vector<std::string>* log = nullptr);

    /// Density samples phi(t_i) on strictly increasing t_i > 0.
    static YoungFunction tabulated(std::vector<double> t, std::vector<double> phi);

    /// e^t - 1 (phi(0+) = 1, so this is not a Young function in the strict sense).
    static YoungFunction exp_minus_one();

    /// Parses {"pieces":[...]} , {"tabulated":{"t":[...],"phi":[...]}} or {"builtin":name}.
    static YoungFunction from_json(const nlohmann::json& spec, std::vector<std::string>* log = nullptr);
    static YoungFunction load(const std::string& path, std::vector<std::string>* log = nullptr);

    /// phi(t), left-continuous. Throws domain_error for t <= 0.
    double density(double t) const;
    /// Phi(t); Phi(0) = 0. Throws domain_error for t < 0.
    double Phi(double t) const;

    /// ln phi(e^w).
    double log_density(double w) const;
    /// ln Phi(e^w).
    double log_Phi(double w) const;
    /// w with ln Phi(e^w) = y, i.e. ln Phi^{-1}(e^y).
    double log_Phi_inverse(double y) const;

    /// Phi^{-1}(y) for y > 0.
    double Phi_inverse(double y) const;

    /// Points where the density may jump or change formula.
    std::vector<double> breakpoints() const;

    /// True when phi(t) -> 0 as t -> 0+.
    bool density_vanishes_at_zero() const;

    /// True for a single pure power c t^p.
    bool is_pure_power(double* c = nullptr, double* p = nullptr) const;

    /// Description used in reports.
    nlohmann::json to_json() const;

    struct Impl;

private:
    explicit YoungFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
    friend ComplementaryPair complementary(const YoungFunction& Y, int nodes_per_decade);
};

/// Phi with its complementary function Psi(t) = int_0^t psi, psi(t) = inf{s : phi(s) >= t}.
struct ComplementaryPair {
    YoungFunction phi;
    YoungFunction psi;
};

/// Builds the complement. Pure powers get the closed form; everything else
/// is evaluated through a table of psi at @p nodes_per_decade log-spaced
/// nodes, refined by bisection, with Psi(t) = t psi(t) - Phi(psi(t)).
/// Requires phi(0+) = 0 and phi(t) -> inf. Throws invariant_violation for a
/// non-monotone density and precondition_error for the endpoint behaviour.
ComplementaryPair complementary(const YoungFunction& Y, int nodes_per_decade = 512);

/// Checks density monotonicity on a log grid (64 nodes per decade over
/// [1e-6, 1e6]) and at every breakpoint. Throws invariant_violation.
void validate_density(const YoungFunction& Y);

/// Phi(t) <= t phi(t) <= Phi(2t) with relative slack @p tol.
bool growth_bounds_hold(const YoungFunction& Y, double t, double tol = 1e-12);

/// Named functions shared by the CLI, the verification panel and the tests.
namespace builtin {
/// Range function of the worked example: t^5 below e, t^4 shape above (alpha1 = 0).
YoungFunction powerlog_range();
/// Domain function of the worked example: t^5 below e, t^4 (ln t)^2 shape above.
YoungFunction powerlog_domain();
/// t^2 on (0,1], then a density proportional to e^t.
YoungFunction exp_type();
/// The worked-example family: t^beta below e, density of c t^p (ln t)^alpha above,
/// with c chosen so the density is continuous at e.
YoungFunction worked_example(double beta, double p, double alpha);
YoungFunction by_name(const std::string& name);
}  // namespace builtin

}  // namespace orlicz
