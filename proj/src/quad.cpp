// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#include "orlicz/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "orlicz/errors.hpp"
#include "orlicz/logmath.hpp"

namespace orlicz::quad {
namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
using Gauss = boost::math::quadrature::gauss<double, 10>;

struct Panel {
    double a, b;
    double log_value;
    double log_error;
    bool at_noise = false;  ///< the Kronrod/Gauss gap is within rounding noise
};

Panel eval_panel(const LogFn& f, double a, double b) {
    const auto& x = Kronrod::abscissa();
    const auto& wk = Kronrod::weights();
    const auto& wg = Gauss::weights();
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    // 21 nodes: index 0 is the centre, then +/- pairs.
    double l[41];
    int n = 0;
    double m = kNegInf;
    l[n++] = f(c);
    for (std::size_t i = 1; i < x.size(); ++i) {
        l[n++] = f(c + h * x[i]);
        l[n++] = f(c - h * x[i]);
    }
    for (int i = 0; i < n; ++i) {
        if (std::isnan(l[i])) throw numeric_error("quadrature: integrand returned NaN");
        m = std::max(m, l[i]);
    }
    if (m == kNegInf) return {a, b, kNegInf, kNegInf};
    if (m == kInf) return {a, b, kInf, kInf};

    double k = wk[0] * std::exp(l[0] - m);
    double g = 0.0;  // Gauss-10 has no centre node
    int j = 1;
    for (std::size_t i = 1; i < x.size(); ++i, j += 2) {
        const double s = std::exp(l[j] - m) + std::exp(l[j + 1] - m);
        k += wk[i] * s;
        if (i % 2 == 1) g += wg[i / 2] * s;
    }
    // log-represented integrands carry an absolute error of order eps * |w|
    // in the exponent (or eps * |ln h| when that is larger); panels at that
    // level are not split further
    double lmag = 0.0;
    for (int i = 0; i < n; ++i)
        if (std::isfinite(l[i])) lmag = std::max(lmag, std::fabs(l[i]));
    const double noise =
        64.0 * std::numeric_limits<double>::epsilon() * std::max({1.0, std::fabs(c) + h, lmag});
    const double gap = std::fabs(k - g);
    const double err = std::max(gap, 4e-16 * k);
    return {a, b, m + std::log(h * k), m + std::log(h * err), gap <= noise * k};
}

struct ByError {
    bool operator()(const Panel& p, const Panel& q) const { return p.log_error < q.log_error; }
};

}  // namespace

LogIntegral integrate(const LogFn& f, double a, double b, const Options& opt) {
    if (!(a <= b)) throw precondition_error("quad::integrate: a must not exceed b");
    if (a == b) return {kNegInf, 0.0, true};

    std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
    std::vector<Panel> done;
    const Panel first = eval_panel(f, a, b);
    if (first.log_value == kInf) return {kInf, 0.0, true};
    if (first.log_value == kNegInf) return {kNegInf, 0.0, true};
    heap.push(first);
    const double log_tol = std::log(opt.rel_tol);

    // Running sums are kept in linear scale relative to the first estimate and
    // rebuilt from scratch every few splits to shed cancellation drift.
    double ref = first.log_value;
    double sum_v = 1.0, sum_e = std::exp(first.log_error - ref);
    auto rebuild = [&] {
        sum_v = 0.0;
        sum_e = 0.0;
        auto copy = heap;
        while (!copy.empty()) {
            sum_v += std::exp(copy.top().log_value - ref);
            sum_e += std::exp(copy.top().log_error - ref);
            copy.pop();
        }
        for (const auto& p : done) {
            sum_v += std::exp(p.log_value - ref);
            sum_e += std::exp(p.log_error - ref);
        }
    };

    int count = 1;
    int since_rebuild = 0;
    for (;;) {
        if (since_rebuild >= 64) {
            rebuild();
            since_rebuild = 0;
        }
        if (!(sum_v > 0.0) || !std::isfinite(sum_v)) {
            rebuild();
            if (!std::isfinite(sum_v)) return {kInf, 0.0, true};
            if (!(sum_v > 0.0)) return {kNegInf, 0.0, true};
        }
        if (std::log(std::max(sum_e, 0.0)) - std::log(sum_v) <= log_tol) break;
        if (heap.empty() || count >= opt.max_intervals) break;
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (worst.at_noise || !(mid > worst.a && mid < worst.b) ||
            (worst.b - worst.a) <= 1e-13 * std::max(1.0, std::fabs(mid))) {
            done.push_back(worst);  // cannot split further
            continue;
        }
        const Panel left = eval_panel(f, worst.a, mid);
        const Panel right = eval_panel(f, mid, worst.b);
        if (left.log_value == kInf || right.log_value == kInf) return {kInf, 0.0, true};
        heap.push(left);
        heap.push(right);
        const double top = std::max(left.log_value, right.log_value);
        if (top > ref + 300.0) {
            // the first panel badly underestimated this part; rebase the sums
            ref = top;
            rebuild();
            since_rebuild = 0;
        } else {
            sum_v += std::exp(left.log_value - ref) + std::exp(right.log_value - ref) - std::exp(worst.log_value - ref);
            sum_e += std::exp(left.log_error - ref) + std::exp(right.log_error - ref) - std::exp(worst.log_error - ref);
        }
        ++count;
        ++since_rebuild;
    }
    rebuild();
    const double value = ref + std::log(sum_v);
    const double error = ref + std::log(sum_e);
    const double rel = std::exp(error - value);
    return {value, rel, rel <= opt.rel_tol * 10.0};
}

Asymptote probe(const LogFn& f, Direction dir, double start) {
    const double sign = dir == Direction::PlusInfinity ? 1.0 : -1.0;
    const double w1 = sign * std::max(1e6, 4.0 * std::fabs(start));
    const double w2 = 2.0 * w1;
    const double l1 = f(w1);
    const double l2 = f(w2);
    if (std::isnan(l1) || std::isnan(l2)) throw numeric_error("quad::probe: integrand returned NaN");

    Asymptote as;
    if (l2 == kNegInf) {
        as.integrable = true;
        as.power = kNegInf;
        as.log_slope = kNegInf;
        return as;
    }
    if (l2 == kInf || l1 == kNegInf) {
        as.integrable = false;
        as.power = kInf;
        as.log_slope = kInf;
        return as;
    }
    as.power = (l2 - l1) / std::log(2.0);
    as.log_slope = (l2 - l1) / std::fabs(w2 - w1);
    as.integrable = as.power < -1.0 - 1e-4;
    return as;
}

namespace {

// Estimate of the integral of e^{f} over [w, inf) from the local behaviour at
// w, assuming f(v) ~ kappa v + gamma ln v. Returns +inf when unusable.
double tail_estimate(const LogFn& f, double w) {
    const double l0 = f(w);
    if (l0 == kNegInf) return kNegInf;
    const double d = 1e-4 * std::max(1.0, std::fabs(w));
    const double lp = f(w + d);
    const double lm = f(w - d);
    if (!std::isfinite(lp) || !std::isfinite(lm)) return kInf;
    const double slope = (lp - lm) / (2.0 * d);
    const double denom = w > 1.0 ? -slope - 1.0 / w : -slope;
    if (!(denom > 0.0)) return kInf;
    return l0 - std::log(denom);
}

DivergenceCertificate certify(const LogFn& f, double a, const Asymptote& as) {
    DivergenceCertificate cert;
    cert.integrand_power = as.power;
    cert.integrand_slope = as.log_slope;
    const double ln10 = std::log(10.0);

    // Ratio test on decade cutoffs 10^3 .. 10^9 (shifted if a is already large).
    double base = 3.0 * ln10;
    double shift = 0.0;
    if (a >= base - 1.0) shift = a + 1.0 - base;
    double run = kNegInf;
    double prev = a;
    std::vector<double> decade;
    for (int k = 3; k <= 9; ++k) {
        const double w = k * ln10 + shift;
        run = log_add(run, integrate(f, prev, w).log_value);
        prev = w;
        decade.push_back(run);
        cert.cutoffs_log10.push_back(w / ln10);
        cert.log_truncated.push_back(run);
    }
    for (std::size_t i = 1; i < decade.size(); ++i) cert.ratios.push_back(std::exp(decade[i] - decade[i - 1]));

    // Growth fit on cutoffs doubling in ln X, which reaches far enough for
    // lower-order terms of the truncated integral to fade.
    std::vector<double> xs, ys, lys;
    run = kNegInf;
    prev = a;
    for (int j = 0; j <= 8; ++j) {
        const double w = (base + shift) * std::ldexp(1.0, j);
        run = log_add(run, integrate(f, prev, w).log_value);
        prev = w;
        xs.push_back(w);
        lys.push_back(run);
    }
    const double top = *std::max_element(lys.begin(), lys.end());
    if (!std::isfinite(top)) {
        cert.fitted_exponent = kInf;
        cert.fit_residual = 0.0;
    } else if (as.log_slope > 1e-6) {
        // exponential in w, so the truncation grows like a power of the cutoff
        const auto fit = fit_line(xs, lys);
        cert.fitted_exponent = fit.slope;
        cert.fit_residual = fit.rms;
    } else if (top <= 600.0) {
        for (double l : lys) ys.push_back(std::exp(l));
        const auto fit = fit_offset_power(xs, ys);
        cert.fitted_exponent = fit.gamma;
        cert.fit_residual = fit.rms_relative;
    } else {
        std::vector<double> lx;
        for (double x : xs) lx.push_back(std::log(x));
        const auto fit = fit_line(lx, lys);
        cert.fitted_exponent = fit.slope;
        cert.fit_residual = fit.rms;
    }
    return cert;
}

}  // namespace

Improper integrate_to_infinity(const LogFn& f, double a, const Options& opt) {
    Improper out;
    out.asymptote = probe(f, Direction::PlusInfinity, a);
    if (!out.asymptote.integrable) {
        out.finite = false;
        out.log_value = kInf;
        out.certificate = certify(f, a, out.asymptote);
        return out;
    }
    const double log_tol = std::log(opt.rel_tol);
    double total = kNegInf;
    double worst_rel = 0.0;
    double lo = a;
    double width = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double hi = lo + width;
        const auto piece = integrate(f, lo, hi, opt);
        total = log_add(total, piece.log_value);
        worst_rel = std::max(worst_rel, piece.rel_error);
        const double rest = tail_estimate(f, hi);
        if (rest == kNegInf) {
            out.log_value = total;
            out.rel_error = worst_rel;
            return out;
        }
        const bool small = total != kNegInf && rest - total <= log_tol;
        const bool small_scaled =
            total != kNegInf && hi > 1e4 && rest - std::log(hi) - total <= log_tol;
        if (small || small_scaled) {
            total = log_add(total, rest);
            out.log_value = total;
            out.rel_error = std::max(worst_rel, opt.rel_tol);
            return out;
        }
        lo = hi;
        width *= 2.0;
        if (lo > 1e15) break;
    }
    throw numeric_error("quad::integrate_to_infinity: tail did not settle before w = 1e15");
}

Improper integrate_from_minus_infinity(const LogFn& f, double b, const Options& opt) {
    LogFn g = [&f](double v) { return f(-v); };
    Improper out = integrate_to_infinity(g, -b, opt);
    return out;
}

OffsetPowerFit fit_offset_power(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 3 || y.size() != n) throw precondition_error("fit_offset_power: need at least 3 points");
    double ymean = 0.0;
    for (double v : y) ymean += std::fabs(v);
    ymean /= static_cast<double>(n);

    auto solve = [&](double g, OffsetPowerFit& out) {
        double s1 = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double u = std::pow(x[i], g);
            s1 += 1;
            sx += u;
            sxx += u * u;
            sy += y[i];
            sxy += u * y[i];
        }
        const double det = s1 * sxx - sx * sx;
        if (std::fabs(det) <= 1e-300) return kInf;
        out.b = (s1 * sxy - sx * sy) / det;
        out.a = (sy - out.b * sx) / s1;
        out.gamma = g;
        double ss = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = out.a + out.b * std::pow(x[i], g) - y[i];
            ss += r * r;
        }
        return ss;
    };

    OffsetPowerFit best;
    double best_ss = kInf;
    for (int k = -300; k <= 300; ++k) {
        if (k == 0) continue;
        OffsetPowerFit cur;
        const double ss = solve(k * 0.01, cur);
        if (ss < best_ss) {
            best_ss = ss;
            best = cur;
        }
    }
    // Golden-section polish around the grid optimum.
    double lo = best.gamma - 0.01, hi = best.gamma + 0.01;
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int it = 0; it < 80; ++it) {
        const double m1 = hi - phi * (hi - lo);
        const double m2 = lo + phi * (hi - lo);
        OffsetPowerFit f1, f2;
        const double s1 = std::fabs(m1) < 1e-9 ? kInf : solve(m1, f1);
        const double s2 = std::fabs(m2) < 1e-9 ? kInf : solve(m2, f2);
        if (s1 < s2) hi = m2; else lo = m1;
    }
    OffsetPowerFit polished;
    const double g = 0.5 * (lo + hi);
    const double ss = std::fabs(g) < 1e-9 ? kInf : solve(g, polished);
    if (ss < best_ss) {
        best = polished;
        best_ss = ss;
    }
    best.rms_relative = ymean > 0 ? std::sqrt(best_ss / static_cast<double>(n)) / ymean : 0.0;
    return best;
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) throw precondition_error("fit_line: need at least 2 points");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    LinearFit out;
    out.slope = sxx > 0 ? sxy / sxx : 0.0;
    out.intercept = my - out.slope * mx;
    double ss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = out.intercept + out.slope * x[i] - y[i];
        ss += r * r;
    }
    out.rms = std::sqrt(ss / static_cast<double>(n));
    return out;
}

}  // namespace orlicz::quad
