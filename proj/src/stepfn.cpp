// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#include "orlicz/stepfn.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "orlicz/errors.hpp"

namespace orlicz {

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values) {
    if (breakpoints.size() != values.size())
        throw precondition_error("StepFunction: breakpoints and values differ in length");
    double prev = 0.0;
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i] > prev) && !(breakpoints[i] == prev && i > 0))
            throw precondition_error("StepFunction: breakpoints must be positive and increasing");
        if (!(values[i] >= 0.0) || !std::isfinite(values[i]))
            throw precondition_error("StepFunction: values must be finite and nonnegative");
        if (!std::isfinite(breakpoints[i])) throw precondition_error("StepFunction: breakpoints must be finite");
        if (breakpoints[i] == prev) continue;  // empty piece
        if (!a_.empty() && a_.back() == values[i]) {
            t_.back() = breakpoints[i];
        } else {
            t_.push_back(breakpoints[i]);
            a_.push_back(values[i]);
        }
        prev = breakpoints[i];
    }
    while (!a_.empty() && a_.back() == 0.0) {
        a_.pop_back();
        t_.pop_back();
    }
}

StepFunction StepFunction::indicator(double a, double height) {
    if (!(a > 0.0)) throw domain_error("indicator: a must be positive");
    return StepFunction({a}, {height});
}

StepFunction StepFunction::from_samples(const std::vector<double>& t, const std::vector<double>& v,
                                        std::size_t max_pieces) {
    StepFunction raw(t, v);
    if (t.size() <= max_pieces || max_pieces == 0) return raw;
    std::vector<double> bp, val;
    const double l0 = std::log(t.front()), l1 = std::log(t.back());
    for (std::size_t i = 1; i <= max_pieces; ++i) {
        const double x = i == max_pieces ? t.back() : std::exp(l0 + (l1 - l0) * static_cast<double>(i) / max_pieces);
        bp.push_back(x);
        val.push_back(raw(x));
    }
    return StepFunction(bp, val);
}

StepFunction StepFunction::from_csv(const std::string& path, std::size_t max_pieces) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open step-function CSV '" + path + "'");
    std::vector<double> t, v;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double x, y;
        if (!(row >> x >> y)) {
            if (t.empty() && lineno == 1) continue;  // header
            throw precondition_error("step-function CSV '" + path + "': bad row " + std::to_string(lineno));
        }
        if (!t.empty() && !(x > t.back()))
            throw precondition_error("step-function CSV '" + path + "': t must be strictly increasing");
        t.push_back(x);
        v.push_back(y);
    }
    return from_samples(t, v, max_pieces);
}

double StepFunction::operator()(double x) const {
    if (!(x > 0.0)) throw domain_error("StepFunction: argument must be positive");
    auto it = std::lower_bound(t_.begin(), t_.end(), x);
    if (it == t_.end()) return 0.0;
    return a_[static_cast<std::size_t>(it - t_.begin())];
}

double StepFunction::max_value() const { return a_.empty() ? 0.0 : *std::max_element(a_.begin(), a_.end()); }

bool StepFunction::is_nonincreasing() const {
    for (std::size_t i = 1; i < a_.size(); ++i)
        if (a_[i] > a_[i - 1]) return false;
    return true;
}

StepFunction StepFunction::dilate(double a) const {
    if (!(a > 0.0)) throw domain_error("dilate: factor must be positive");
    std::vector<double> t(t_);
    for (double& x : t) x /= a;
    return StepFunction(t, a_);
}

StepFunction StepFunction::scaled(double k) const {
    if (!(k >= 0.0)) throw domain_error("scaled: factor must be nonnegative");
    std::vector<double> a(a_);
    for (double& x : a) x *= k;
    return StepFunction(t_, a);
}

StepFunction StepFunction::clipped(double level) const {
    std::vector<double> a(a_);
    for (double& x : a) x = std::min(x, level);
    return StepFunction(t_, a);
}

double StepFunction::integral() const { return integral_to(support()); }

double StepFunction::integral_to(double x) const {
    double s = 0.0, prev = 0.0;
    for (std::size_t i = 0; i < t_.size() && prev < x; ++i) {
        s += a_[i] * (std::min(t_[i], x) - prev);
        prev = t_[i];
    }
    return s;
}

nlohmann::json StepFunction::to_json() const { return {{"breakpoints", t_}, {"values", a_}}; }

namespace {

template <class Op>
StepFunction combine(const StepFunction& f, const StepFunction& g, Op op) {
    std::vector<double> bp;
    std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(), g.breakpoints().end(),
               std::back_inserter(bp));
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    std::vector<double> val;
    val.reserve(bp.size());
    for (double x : bp) val.push_back(op(f(x), g(x)));
    return StepFunction(bp, val);
}

}  // namespace

StepFunction operator+(const StepFunction& f, const StepFunction& g) {
    return combine(f, g, [](double a, double b) { return a + b; });
}

StepFunction operator-(const StepFunction& f, const StepFunction& g) {
    return combine(f, g, [](double a, double b) {
        if (b > a) throw precondition_error("StepFunction subtraction would go negative");
        return a - b;
    });
}

namespace {

// Correctly rounded running sum (Shewchuk partials, final rounding as in Python's fsum).
// A level set is a union of pieces, and summing +t_i - t_{i-1} through this makes the
// measure independent of how adjacent pieces happen to be merged.
class ExactSum {
public:
    void add(double x) {
        std::size_t i = 0;
        for (double y : partials_) {
            if (std::fabs(x) < std::fabs(y)) std::swap(x, y);
            const double hi = x + y;
            const double lo = y - (hi - x);
            if (lo != 0.0) partials_[i++] = lo;
            x = hi;
        }
        partials_.resize(i);
        partials_.push_back(x);
    }

    double value() const {
        std::size_t n = partials_.size();
        if (n == 0) return 0.0;
        double hi = partials_[--n], lo = 0.0;
        while (n > 0) {
            const double x = hi, y = partials_[--n];
            hi = x + y;
            lo = y - (hi - x);
            if (lo != 0.0) break;
        }
        if (n > 0 && ((lo < 0.0 && partials_[n - 1] < 0.0) || (lo > 0.0 && partials_[n - 1] > 0.0))) {
            const double y = 2.0 * lo, x = hi + y;
            if (y == x - hi) hi = x;
        }
        return hi;
    }

private:
    std::vector<double> partials_;
};

}  // namespace

double DistributionFunction::operator()(double s) const {
    if (!(s >= 0.0)) throw domain_error("distribution: level must be nonnegative");
    // first j with levels[j] <= s; lambda = measures[j-1]
    std::size_t j = 0;
    while (j < levels.size() && levels[j] > s) ++j;
    return j == 0 ? 0.0 : measures[j - 1];
}

DistributionFunction distribution(const StepFunction& f) {
    DistributionFunction d;
    const auto& t = f.breakpoints();
    const auto& a = f.values();
    if (f.is_nonincreasing()) {
        // the breakpoints are the measures of the level sets already
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0.0) continue;
            d.levels.push_back(a[i]);
            d.measures.push_back(t[i]);
        }
        return d;
    }
    std::vector<std::size_t> order(a.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a[i] > a[j]; });
    ExactSum m;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t i = order[k];
        if (a[i] == 0.0) break;
        m.add(t[i]);
        if (i > 0) m.add(-t[i - 1]);
        const bool last_of_level = k + 1 == order.size() || a[order[k + 1]] != a[i];
        if (last_of_level) {
            d.levels.push_back(a[i]);
            d.measures.push_back(m.value());
        }
    }
    return d;
}

StepFunction rearrangement(const StepFunction& f) {
    if (f.is_nonincreasing()) return f;
    const DistributionFunction d = distribution(f);
    return StepFunction(d.measures, d.levels);
}

double rearranged_value(const StepFunction& f, double t) {
    if (!(t >= 0.0)) throw domain_error("rearranged_value: t must be nonnegative");
    const DistributionFunction d = distribution(f);
    for (std::size_t j = 0; j < d.levels.size(); ++j)
        if (d.measures[j] > t) return d.levels[j];
    return 0.0;
}

double maximal(const StepFunction& f, double t) {
    if (!(t > 0.0)) throw domain_error("maximal: t must be positive");
    const DistributionFunction d = distribution(f);
    double s = 0.0, prev = 0.0;
    for (std::size_t j = 0; j < d.levels.size() && prev < t; ++j) {
        s += d.levels[j] * (std::min(d.measures[j], t) - prev);
        prev = d.measures[j];
    }
    return s / t;
}

std::pair<StepFunction, StepFunction> decompose(const StepFunction& f, double t) {
    if (!(t > 0.0)) throw domain_error("decompose: t must be positive");
    const double level = rearranged_value(f, t);
    StepFunction f1 = f.clipped(level);
    StepFunction f0 = f - f1;
    return {f0, f1};
}

double inner_product(const StepFunction& f, const StepFunction& g) {
    const StepFunction prod = [&] {
        std::vector<double> bp;
        std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(), g.breakpoints().end(),
                   std::back_inserter(bp));
        bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
        std::vector<double> val;
        for (double x : bp) val.push_back(f(x) * g(x));
        return StepFunction(bp, val);
    }();
    return prod.integral();
}

}  // namespace orlicz
