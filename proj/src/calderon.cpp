// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#include "orlicz/calderon.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "orlicz/errors.hpp"

namespace orlicz {

Indices::Indices(double p_, double r_) : p(p_), r(r_) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw precondition_error("Indices: p must satisfy 1 <= p < inf");
    if (!(r >= 1.0) || !std::isfinite(r)) throw precondition_error("Indices: r must satisfy 1 <= r < inf");
}

double Indices::rho_conj() const {
    if (!(r < p)) throw precondition_error("Indices: rho' requires r < p");
    const double rh = rho();
    return rh / (rh - 1.0);
}

OperatorTag OperatorTag::hpr(double p, double r) { return {OpKind::Hpr, Indices(p, r), Indices()}; }

OperatorTag OperatorTag::hqr_dual(double q, double r) {
    if (!(q > 1.0)) throw precondition_error("H_{q,r} requires q > 1");
    return {OpKind::HqrDual, Indices(q, r), Indices()};
}

OperatorTag OperatorTag::averaging() { return {OpKind::P, Indices(), Indices()}; }

OperatorTag OperatorTag::sqr(double q, double r) {
    if (!(q > 1.0)) throw precondition_error("S_{q,r} requires q > 1");
    return {OpKind::Sqr, Indices(q, r), Indices()};
}

OperatorTag OperatorTag::joint(Indices lower, Indices upper) {
    if (!(upper.p > 1.0)) throw precondition_error("joint operator requires p1 > 1");
    return {OpKind::Joint, lower, upper};
}

OperatorTag OperatorTag::parse(const std::string& text) {
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    std::vector<double> nums;
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        for (char& ch : rest)
            if (ch == ',') ch = ' ';
        std::istringstream in(rest);
        double x;
        while (in >> x) nums.push_back(x);
        if (!in.eof()) throw precondition_error("operator '" + text + "': bad number list");
    }
    auto need = [&](std::size_t n) {
        if (nums.size() != n)
            throw precondition_error("operator '" + text + "' expects " + std::to_string(n) + " indices");
    };
    if (head == "Hpr") { need(2); return hpr(nums[0], nums[1]); }
    if (head == "Hqr") { need(2); return hqr_dual(nums[0], nums[1]); }
    if (head == "P") { need(0); return averaging(); }
    if (head == "Sqr") { need(2); return sqr(nums[0], nums[1]); }
    if (head == "Joint") { need(4); return joint(Indices(nums[0], nums[1]), Indices(nums[2], nums[3])); }
    throw precondition_error("unknown operator '" + text + "'");
}

std::string OperatorTag::name() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind) {
        case OpKind::Hpr: os << "Hpr:" << a.p << ',' << a.r; break;
        case OpKind::HqrDual: os << "Hqr:" << a.p << ',' << a.r; break;
        case OpKind::P: os << "P"; break;
        case OpKind::Sqr: os << "Sqr:" << a.p << ',' << a.r; break;
        case OpKind::Joint: os << "Joint:" << a.p << ',' << a.r << ',' << b.p << ',' << b.r; break;
    }
    return os.str();
}

namespace {

// ln(b^k - a^k) for 0 <= a < b, k > 0.
double log_pow_diff(double a, double b, double k) {
    if (a == 0.0) return k * std::log(b);
    return k * std::log(b) + std::log1p(-std::pow(a / b, k));
}

// ln int_0^inf g^r s^{rho-1} ds over the whole support.
double log_total_moment(const StepFunction& g, double r, double rho) {
    const auto& b = g.breakpoints();
    const auto& a = g.values();
    double acc = kNegInf;
    double prev = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (a[i] > 0.0) acc = log_add(acc, r * std::log(a[i]) + log_pow_diff(prev, b[i], rho) - std::log(rho));
        prev = b[i];
    }
    return acc;
}

double log_hpr(const StepFunction& g, double p, double r, double w) {
    if (g.is_zero()) return kNegInf;
    const auto& b = g.breakpoints();
    const auto& a = g.values();
    const double rho = r / p;
    if (w <= std::log(b.front())) return std::log(a.front()) + std::log(p / r) / r;
    if (w >= std::log(b.back())) return (log_total_moment(g, r, rho) - rho * w) / r;
    const double t = std::exp(w);
    double acc = kNegInf;
    double prev = 0.0;
    for (std::size_t i = 0; i < b.size() && prev < t; ++i) {
        const double hi = std::min(t, b[i]);
        if (a[i] > 0.0) acc = log_add(acc, r * std::log(a[i]) + log_pow_diff(prev, hi, rho) - std::log(rho));
        prev = b[i];
    }
    return (acc - rho * w) / r;
}

double log_hqr(const StepFunction& g, double q, double r, double w) {
    if (g.is_zero()) return kNegInf;
    const auto& b = g.breakpoints();
    const auto& a = g.values();
    const double sigma = r / q;
    if (w >= std::log(b.back())) return kNegInf;
    std::size_t i = 0;
    while (i < b.size() && w > std::log(b[i])) ++i;
    double acc = kNegInf;
    for (std::size_t j = i + 1; j < b.size(); ++j)
        if (a[j] > 0.0) acc = log_add(acc, r * std::log(a[j]) + log_pow_diff(b[j - 1], b[j], sigma) - std::log(sigma));
    if (a[i] > 0.0) {
        const double lb = std::log(b[i]);
        const double part = r * std::log(a[i]) + sigma * lb + std::log1p(-std::exp(sigma * (w - lb))) - std::log(sigma);
        acc = log_add(acc, part);
    }
    return (acc - sigma * w) / r;
}

double log_avg(const StepFunction& g, double w) {
    if (g.is_zero()) return kNegInf;
    const auto& b = g.breakpoints();
    if (w <= std::log(b.front())) return std::log(g.values().front());
    if (w >= std::log(b.back())) return std::log(g.integral()) - w;
    return std::log(g.integral_to(std::exp(w))) - w;
}

void require_monotone(const StepFunction& g) {
    if (!g.is_nonincreasing())
        throw precondition_error("Calderon operators act on nonincreasing functions; pass the rearrangement");
}

double log_apply_unchecked(const OperatorTag& op, const StepFunction& g, double w) {
    switch (op.kind) {
        case OpKind::Hpr: return log_hpr(g, op.a.p, op.a.r, w);
        case OpKind::HqrDual: return log_hqr(g, op.a.p, op.a.r, w);
        case OpKind::P: return log_avg(g, w);
        case OpKind::Sqr: return log_add(log_avg(g, w), log_hqr(g, op.a.p, op.a.r, w));
        case OpKind::Joint: return log_add(log_hpr(g, op.a.p, op.a.r, w), log_hqr(g, op.b.p, op.b.r, w));
    }
    return kNegInf;
}

}  // namespace

PreparedOperator::PreparedOperator(const OperatorTag& op, const StepFunction& g) : op_(op), g_(g) {
    require_monotone(g_);
    const auto& b = g_.breakpoints();
    const auto& a = g_.values();
    for (double x : b) lb_.push_back(std::log(x));
    integral_.assign(b.size() + 1, 0.0);
    double prev = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        integral_[i + 1] = integral_[i] + a[i] * (b[i] - prev);
        prev = b[i];
    }
    switch (op_.kind) {
        case OpKind::Hpr: first_ = make(op_.a.r, op_.a.r / op_.a.p); break;
        case OpKind::HqrDual:
        case OpKind::Sqr: first_ = make(op_.a.r, op_.a.r / op_.a.p); break;
        case OpKind::Joint:
            first_ = make(op_.a.r, op_.a.r / op_.a.p);
            second_ = make(op_.b.r, op_.b.r / op_.b.p);
            break;
        case OpKind::P: break;
    }
}

PreparedOperator::Moments PreparedOperator::make(double r, double rho) const {
    Moments m;
    m.r = r;
    m.rho = rho;
    const auto& b = g_.breakpoints();
    const auto& a = g_.values();
    const std::size_t n = b.size();
    std::vector<double> piece(n, kNegInf);
    double prev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] > 0.0) piece[i] = r * std::log(a[i]) + log_pow_diff(prev, b[i], rho) - std::log(rho);
        prev = b[i];
    }
    m.head.assign(n + 1, kNegInf);
    m.tail.assign(n + 1, kNegInf);
    for (std::size_t i = 0; i < n; ++i) m.head[i + 1] = log_add(m.head[i], piece[i]);
    for (std::size_t i = n; i-- > 0;) m.tail[i] = log_add(m.tail[i + 1], piece[i]);
    return m;
}

// w lies in piece i: b_{i-1} < e^w <= b_i
double PreparedOperator::log_h_upper(const Moments& m, double p, double w, std::size_t i) const {
    const auto& b = g_.breakpoints();
    const auto& a = g_.values();
    if (i == 0) return std::log(a.front()) + std::log(p / m.r) / m.r;
    if (i >= b.size()) return (m.head[b.size()] - m.rho * w) / m.r;
    double acc = m.head[i];
    if (a[i] > 0.0) acc = log_add(acc, m.r * std::log(a[i]) + log_pow_diff(b[i - 1], std::exp(w), m.rho) - std::log(m.rho));
    return (acc - m.rho * w) / m.r;
}

double PreparedOperator::log_h_lower(const Moments& m, double w, std::size_t i) const {
    const auto& a = g_.values();
    if (i >= a.size()) return kNegInf;
    double acc = m.tail[i + 1];
    if (a[i] > 0.0) {
        const double lb = lb_[i];
        acc = log_add(acc, m.r * std::log(a[i]) + m.rho * lb + std::log1p(-std::exp(m.rho * (w - lb))) - std::log(m.rho));
    }
    return (acc - m.rho * w) / m.r;
}

double PreparedOperator::log_average(double w, std::size_t i) const {
    const auto& b = g_.breakpoints();
    const auto& a = g_.values();
    if (i == 0) return std::log(a.front());
    if (i >= b.size()) return std::log(integral_[b.size()]) - w;
    return std::log(integral_[i] + a[i] * (std::exp(w) - b[i - 1])) - w;
}

double PreparedOperator::log_value(double w) const {
    if (g_.is_zero()) return kNegInf;
    // first piece whose right end is at or beyond e^w
    const std::size_t i = static_cast<std::size_t>(std::lower_bound(lb_.begin(), lb_.end(), w) - lb_.begin());
    switch (op_.kind) {
        case OpKind::Hpr: return log_h_upper(first_, op_.a.p, w, i);
        case OpKind::HqrDual: return log_h_lower(first_, w, i);
        case OpKind::P: return log_average(w, i);
        case OpKind::Sqr: return log_add(log_average(w, i), log_h_lower(first_, w, i));
        case OpKind::Joint: return log_add(log_h_upper(first_, op_.a.p, w, i), log_h_lower(second_, w, i));
    }
    return kNegInf;
}

double log_apply(const OperatorTag& op, const StepFunction& g, double w) {
    require_monotone(g);
    return log_apply_unchecked(op, g, w);
}

double apply(const OperatorTag& op, const StepFunction& g, double t) {
    if (!(t > 0.0)) throw domain_error("apply: t must be positive");
    return safe_exp(log_apply(op, g, std::log(t)));
}

std::pair<double, double> tail_law(const OperatorTag& op, const StepFunction& g) {
    require_monotone(g);
    if (g.is_zero()) return {kNegInf, 1.0};
    switch (op.kind) {
        case OpKind::Hpr:
        case OpKind::Joint:
            return {log_total_moment(g, op.a.r, op.a.r / op.a.p) / op.a.r, 1.0 / op.a.p};
        case OpKind::HqrDual:
            return {kNegInf, 1.0};
        case OpKind::P:
        case OpKind::Sqr:
            return {std::log(g.integral()), 1.0};
    }
    return {kNegInf, 1.0};
}

LevelMeasure distribution_of(const OperatorTag& op, const StepFunction& g, double lambda) {
    require_monotone(g);
    if (!(lambda > 0.0)) throw domain_error("distribution_of: lambda must be positive");
    LevelMeasure out;
    if (g.is_zero()) return out;
    const double L = std::log(lambda);
    const PreparedOperator prepared(op, g);
    auto val = [&](double w) { return prepared.log_value(w); };
    const double wn = std::log(g.support());

    if (val(wn) > L) {
        // the level is crossed beyond the support, where op g = c t^{-e}
        const auto [lc, e] = tail_law(op, g);
        out.log_value = (lc - L) / e;
        out.value = std::exp(out.log_value);
        if (!std::isfinite(out.log_value)) out.infinite = true;
        return out;
    }
    double lo = std::log(g.breakpoints().front());
    if (!(val(lo) > L)) {
        if (op.kind == OpKind::Hpr || op.kind == OpKind::P) return out;  // constant on (0, b_1]
        double step = 1.0;
        const double start = lo;
        while (!(val(lo) > L)) {
            lo = start - step;
            step *= 2.0;
            if (step > 1e8)
                throw numeric_error("distribution_of: no bracket for lambda = " + std::to_string(lambda) + " with " +
                                    op.name() + " (searched down to t = exp(" + std::to_string(lo) + "))");
        }
    }
    double hi = wn;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        if (val(mid) > L) lo = mid; else hi = mid;
    }
    out.log_value = hi;
    out.value = std::exp(hi);
    return out;
}

double distribution_moment(const StepFunction& g, double A, double B, double e, double k) {
    if (!(k > 0.0)) throw precondition_error("distribution_moment: k must be positive");
    if (!(B > A)) return 0.0;
    const DistributionFunction d = distribution(g);
    double total = 0.0;
    // m_g = M_j on [v_{j+1}, v_j)
    for (std::size_t j = 0; j < d.levels.size(); ++j) {
        const double top = d.levels[j];
        const double bottom = j + 1 < d.levels.size() ? d.levels[j + 1] : 0.0;
        const double lo = std::max(A, bottom), hi = std::min(B, top);
        if (!(hi > lo)) continue;
        total += std::pow(d.measures[j], e) * (std::pow(hi, k) - std::pow(lo, k)) / k;
    }
    return total;
}

Sandwich sandwich_check_Hpr(const Indices& idx, const StepFunction& g, double t) {
    if (!(idx.p > 1.0)) throw precondition_error("sandwich_check_Hpr requires p > 1");
    if (!(t > 0.0)) throw domain_error("sandwich_check_Hpr: t must be positive");
    require_monotone(g);
    const double p = idx.p, r = idx.r;
    const double beta = std::pow(2.0, 3.0 - 1.0 / r) * std::pow(p / r, 1.0 / r);
    const double cst = std::pow(p, p / r);
    Sandwich s;
    s.lower = cst * std::pow(distribution_moment(g, t, kInf, r / p, r), p / r);
    const LevelMeasure m = distribution_of(OperatorTag::hpr(p, r), g, t);
    s.mid = m.log_value == kNegInf ? 0.0 : std::exp(p * std::log(t) + m.log_value);
    s.upper = std::pow(2.0, 2.0 * p + 1.0) * cst * std::pow(distribution_moment(g, t / beta, kInf, r / p, r), p / r);
    return s;
}

SqrConstants sqr_constants(const Indices& idx) {
    const double q = idx.p, r = idx.r;
    const double qc = q / (q - 1.0);
    // (q'/r')^{1/r'} tends to 1 as r -> 1
    const double A = r == 1.0 ? 1.0 : std::pow(qc / (r / (r - 1.0)), (r - 1.0) / r);
    const double B = std::pow(qc / r, 1.0 / r);
    SqrConstants c;
    c.E = 2.0 * std::max(1.0, std::pow(q, q / r) * std::pow((A + 1.0) / (B + 1.0), q));
    c.beta = std::pow(2.0, 3.0 - 1.0 / r) * (1.0 + B);
    c.M1 = 1.0 + B;
    c.Mqr = r == 1.0 ? 2.0 * q : (A + 1.0) * std::pow(q / r, 1.0 / r);
    return c;
}

Sandwich sandwich_check_Sqr(const Indices& idx, const StepFunction& g, double t) {
    if (!(idx.p > 1.0)) throw precondition_error("sandwich_check_Sqr requires q > 1");
    if (!(t > 0.0)) throw domain_error("sandwich_check_Sqr: t must be positive");
    require_monotone(g);
    const double q = idx.p, r = idx.r;
    const SqrConstants c = sqr_constants(idx);
    auto bracket = [&](double x) {
        return distribution_moment(g, x, kInf, 1.0, 1.0) / x +
               std::pow(x, -q) * std::pow(distribution_moment(g, 0.0, x, r / q, r), q / r);
    };
    Sandwich s;
    s.lower = bracket(t) / (std::pow(2.0, q) * (1.0 + std::pow(r / q, q / r)));
    s.mid = distribution_of(OperatorTag::sqr(q, r), g, t).value;
    s.upper = c.E * bracket(t / c.beta);
    return s;
}

std::pair<double, double> reduction_r_ge_q(const Indices& idx, const StepFunction& g, double t) {
    const double q = idx.p, r = idx.r;
    if (!(q > 1.0)) throw precondition_error("reduction_r_ge_q requires q > 1");
    if (r < q) throw precondition_error("reduction_r_ge_q requires r >= q");
    const double lhs = apply(OperatorTag::hqr_dual(q, r), g, t);
    const double rhs = std::pow(q / r, 1.0 / r) * apply(OperatorTag::hqr_dual(q, q), g, std::pow(2.0, q / r - 1.0) * t);
    return {lhs, rhs};
}

}  // namespace orlicz
