// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#include "orlicz/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/logmath.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/quad.hpp"
#include "orlicz/report.hpp"

namespace orlicz {

// ---------------------------------------------------------------------------
// families

TestFamily TestFamily::canonical(const std::vector<double>& levels) {
    TestFamily fam;
    for (double lv : levels) {
        std::ostringstream os;
        os << lv << "*chi(0,1)";
        fam.members.push_back({StepFunction::indicator(1.0, lv), os.str()});
    }
    return fam;
}

TestFamily TestFamily::random(int count, std::uint64_t seed) {
    TestFamily fam;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> steps(1, 8);
    std::uniform_real_distribution<double> value(0.05, 5.0);
    std::uniform_real_distribution<double> expo(-2.0, 1.5);
    for (int i = 0; i < count; ++i) {
        const int n = steps(rng);
        std::vector<double> v(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
        for (auto& x : v) x = value(rng);
        std::sort(v.begin(), v.end(), std::greater<>());
        double at = 0.0;
        for (auto& x : b) {
            at += std::pow(10.0, expo(rng));
            x = at;
        }
        fam.members.push_back({StepFunction(b, v), "random#" + std::to_string(i)});
    }
    return fam;
}

TestFamily TestFamily::critical(const YoungFunction& Phi) {
    TestFamily fam;
    const std::vector<double> deltas = {0.2, 0.5};
    const std::vector<double> lengths = {10, 20, 40, 80, 160, 300};
    for (std::size_t d = 0; d < deltas.size(); ++d) {
        const double delta = deltas[d];
        // ln f at s = e^{-u}: Phi(f) = 1 / (s (1 + u)^{1 + delta})
        auto log_f = [&](double u) { return Phi.log_Phi_inverse(u - (1.0 + delta) * std::log1p(u)); };
        for (double L : lengths) {
            const int n = std::min(1024, static_cast<int>(std::ceil(4.0 * L)));
            std::vector<double> b, v;
            b.push_back(std::exp(-L));
            v.push_back(std::exp(log_f(L)));
            // cell (e^{-u_{j+1}}, e^{-u_j}] takes the value at its right end
            for (int j = n - 1; j >= 0; --j) {
                const double uj = L * j / n;
                b.push_back(std::exp(-uj));
                v.push_back(std::exp(log_f(uj)));
            }
            std::ostringstream os;
            os << "critical(delta=" << delta << ",ln1/eps=" << L << ")";
            fam.members.push_back({StepFunction(b, v), os.str(), static_cast<int>(d), L});
        }
    }
    return fam;
}

TestFamily TestFamily::standard(std::uint64_t seed) {
    TestFamily fam = canonical();
    fam.append(random(20, seed));
    return fam;
}

TestFamily& TestFamily::append(const TestFamily& other) {
    members.insert(members.end(), other.members.begin(), other.members.end());
    return *this;
}

// ---------------------------------------------------------------------------
// modular inequality

ModularReport verify_modular(const OperatorTag& op, const YoungFunction& Phi1, const YoungFunction& Phi2,
                             const TestFamily& fam, const ModularOptions& opt) {
    ModularReport rep;
    auto fail = [&](const std::string& why, const StepFunction& f) {
        if (!rep.divergent) {
            rep.divergent = true;
            rep.reason = why;
            rep.witness = f;
        }
    };
    for (const auto& m : fam.members) {
        ModularEntry e;
        e.label = m.label;
        if (m.f.is_zero()) {
            e.K = opt.K_min;
            rep.entries.push_back(e);
            continue;
        }
        const StepFunction f = rearrangement(m.f);
        const ModularValue lhs = modular_of_operator(op, f, Phi1);
        if (lhs.infinite) {
            e.lhs = kInf;
            e.K = kInf;
            e.lhs_infinite = true;
            rep.entries.push_back(e);
            fail("infinite-lhs", f);
            continue;
        }
        e.lhs = lhs.value;
        const double L = lhs.log_value;
        auto gap = [&](double lk) { return modular(f, Phi2, std::exp(lk)).log_value - L; };
        double lo = std::log(opt.K_min), hi = std::log(opt.K_max);
        if (gap(hi) < 0.0) {
            e.K = kInf;
            e.over_ceiling = true;
            rep.entries.push_back(e);
            fail("ceiling", f);
            continue;
        }
        if (gap(lo) >= 0.0) {
            e.K = opt.K_min;
        } else {
            const double tol = std::log1p(opt.rel_tol);
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                if (gap(mid) >= 0.0) hi = mid; else lo = mid;
            }
            e.K = std::exp(hi);
        }
        rep.max_K = std::max(rep.max_K, e.K);
        rep.entries.push_back(e);
    }

    // growth of K along each critical series
    std::map<int, std::vector<std::pair<double, double>>> series;
    for (std::size_t i = 0; i < fam.members.size(); ++i)
        if (fam.members[i].series >= 0)
            series[fam.members[i].series].emplace_back(fam.members[i].position, rep.entries[i].K);
    for (auto& [id, pts] : series) {
        std::sort(pts.begin(), pts.end());
        if (pts.size() < 3) continue;
        const auto& a = pts[pts.size() - 3];
        const auto& b = pts[pts.size() - 2];
        const auto& c = pts[pts.size() - 1];
        if (!std::isfinite(a.second) || !std::isfinite(b.second) || !std::isfinite(c.second)) continue;
        const auto fit = quad::fit_line({std::log(a.first), std::log(b.first), std::log(c.first)},
                                        {std::log(a.second), std::log(b.second), std::log(c.second)});
        rep.growth_exponent = std::max(rep.growth_exponent, fit.slope);
        if (a.second < b.second && b.second < c.second && fit.slope > opt.growth_threshold) {
            for (const auto& m : fam.members)
                if (m.series == id && m.position == c.first) fail("growth", m.f);
        }
    }
    return rep;
}

nlohmann::json ModularReport::to_json() const {
    nlohmann::json j;
    j["divergent"] = divergent;
    j["reason"] = reason;
    j["max_K"] = max_K;
    j["growth_exponent"] = growth_exponent;
    if (witness) j["witness"] = witness->to_json();
    nlohmann::json es = nlohmann::json::array();
    for (const auto& e : entries)
        es.push_back({{"label", e.label},
                      {"lhs", report::number(e.lhs)},
                      {"K", report::number(e.K)},
                      {"lhs_infinite", e.lhs_infinite},
                      {"over_ceiling", e.over_ceiling}});
    j["entries"] = es;
    return j;
}

// ---------------------------------------------------------------------------
// weak type, dominance

std::vector<double> log_grid(double a, double b, int n) {
    if (n < 2) return {a};
    std::vector<double> out;
    const double la = std::log(a), lb = std::log(b);
    for (int i = 0; i < n; ++i) out.push_back(std::exp(la + (lb - la) * i / (n - 1)));
    return out;
}

double verify_weak_type(const OperatorTag& op, const Indices& idx, const TestFamily& fam) {
    double worst = 0.0;
    for (const auto& m : fam.members) {
        if (m.f.is_zero()) continue;
        const StepFunction f = rearrangement(m.f);
        const double nrm = lorentz_norm(f, idx.p, idx.r, LorentzForm::Distributional);
        for (int k = -80; k <= 40; ++k) {
            const double lambda = nrm * std::exp(0.25 * k);
            const LevelMeasure lm = distribution_of(op, f, lambda);
            if (lm.infinite) return kInf;
            if (lm.log_value == kNegInf) continue;
            worst = std::max(worst, std::exp(std::log(lambda) + lm.log_value / idx.p - std::log(nrm)));
        }
    }
    return worst;
}

namespace {

double log_tail_operator(const StepFunction& fs, double t) {
    const auto& b = fs.breakpoints();
    const auto& a = fs.values();
    double acc = 0.0, prev = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const double lo = std::max(prev, t);
        if (b[i] > lo) acc += a[i] * std::log(b[i] / lo);
        prev = b[i];
    }
    return acc;
}

}  // namespace

double verify_dominance(ExampleOperator T, const OperatorTag& op, const TestFamily& fam, double c) {
    double worst = 0.0;
    const auto ts = log_grid(1e-3, 1e3, 25);
    for (const auto& m : fam.members) {
        if (m.f.is_zero()) continue;
        const StepFunction fs = rearrangement(m.f);
        for (double t : ts) {
            double num = 0.0;
            switch (T) {
                case ExampleOperator::Rearrangement: num = rearranged_value(fs, t); break;
                case ExampleOperator::LogTail: num = log_tail_operator(fs, t); break;
                case ExampleOperator::Calderon: num = apply(op, fs, t); break;
            }
            const double den = apply(op, fs, c * t);
            if (num == 0.0) continue;
            if (den == 0.0) return kInf;
            worst = std::max(worst, num / den);
        }
    }
    return worst;
}

// ---------------------------------------------------------------------------
// sandwich suites

SandwichSummary sandwich_suite(OpKind kind, const std::vector<Indices>& indices, const TestFamily& fam,
                               const std::vector<double>& ts, double slack) {
    if (kind != OpKind::Hpr && kind != OpKind::Sqr)
        throw precondition_error("sandwich_suite: kind must be Hpr or Sqr");
    SandwichSummary s;
    for (const auto& idx : indices)
        for (const auto& m : fam.members) {
            const StepFunction g = rearrangement(m.f);
            for (double t : ts) {
                const Sandwich sw = kind == OpKind::Hpr ? sandwich_check_Hpr(idx, g, t) : sandwich_check_Sqr(idx, g, t);
                ++s.cases;
                const bool lo = sw.lower_ok(slack), up = sw.upper_ok(slack);
                if (!lo) {
                    ++s.lower_violations;
                    s.worst_lower = std::max(s.worst_lower, sw.mid > 0 ? sw.lower / sw.mid : kInf);
                }
                if (!up) {
                    ++s.upper_violations;
                    s.worst_upper = std::max(s.worst_upper, sw.upper > 0 ? sw.mid / sw.upper : kInf);
                }
                if ((!lo || !up) && s.examples.size() < 5) {
                    std::ostringstream os;
                    os.precision(10);
                    os << "p=" << idx.p << " r=" << idx.r << " " << m.label << " t=" << t << ": lower=" << sw.lower
                       << " mid=" << sw.mid << " upper=" << sw.upper;
                    s.examples.push_back(os.str());
                }
            }
        }
    return s;
}

nlohmann::json SandwichSummary::to_json() const {
    return {{"cases", cases},
            {"lower_violations", lower_violations},
            {"upper_violations", upper_violations},
            {"worst_lower_ratio", report::number(worst_lower)},
            {"worst_upper_ratio", report::number(worst_upper)},
            {"examples", examples}};
}

// ---------------------------------------------------------------------------
// worked example

namespace {

const double kLn10 = std::log(10.0);

struct Sec6Pieces {
    YoungFunction Phi1 = builtin::powerlog_range();
    YoungFunction Phi2 = builtin::powerlog_domain();
    double p = 4.0;

    // ln of int_0^x Phi1(y^{1/r}) / y^{p/r + 1} dy
    double log_head(double r, double lx) const {
        const double pr = p / r;
        quad::LogFn f = [&](double w) { return Phi1.log_Phi(w / r) - pr * w; };
        return quad::integrate_from_minus_infinity(f, lx).log_value;
    }
    // integrand of J_r in w = ln y: (y / Phi2(y^{1/r}))^{pr' - 1} y
    quad::LogFn tail_integrand(double r) const {
        const double pr = p / r, prc = pr / (pr - 1.0);
        return [this, r, prc](double w) { return (prc - 1.0) * (w - Phi2.log_Phi(w / r)) + w; };
    }
};

}  // namespace

WorkedExampleReport reproduce_section6(const WorkedExampleOptions& opt) {
    WorkedExampleReport rep;
    const Sec6Pieces S;
    if (opt.quick) {
        rep.tolerance_exponent = 0.1;
        rep.notes.push_back("quick run: three decades of cutoffs, exponent tolerance widened to 0.1");
    }

    // (a) I_{r1}(x) for x = 10^2 .. 10^8
    {
        const int kmax = opt.quick ? 5 : 8;
        std::vector<double> xs, ys;
        for (int k = 2; k <= kmax; ++k) {
            const double lx = k * kLn10;
            const double v = std::exp(S.log_head(opt.r1, lx));
            rep.head_values.emplace_back(std::pow(10.0, k), v);
            xs.push_back(lx);
            ys.push_back(v);
        }
        rep.head_exponent = quad::fit_offset_power(xs, ys).gamma;
        rep.head_ok = std::fabs(rep.head_exponent - 1.0) <= rep.tolerance_exponent;
    }

    // (b) J_{r1}(x0, X) on cutoffs ln X = 3 ln10 * 2^j
    if (opt.r1 >= S.p) {
        rep.notes.push_back("r1 >= p: the tail form is undefined");
    } else {
        const quad::LogFn f = S.tail_integrand(opt.r1);
        const int jmax = opt.quick ? 5 : 8;
        const double w0 = kLn10;  // x0 = 10
        std::vector<double> xs, ys;
        double run = kNegInf, prev = w0;
        for (int j = 0; j <= jmax; ++j) {
            const double w = 3.0 * kLn10 * std::ldexp(1.0, j);
            run = log_add(run, quad::integrate(f, prev, w).log_value);
            prev = w;
            rep.tail_values.emplace_back(w / kLn10, std::exp(run));  // (log10 X, J)
            xs.push_back(w);
            ys.push_back(std::exp(run));
        }
        rep.tail_exponent = quad::fit_offset_power(xs, ys).gamma;
        const double expected = 1.0 / 3.0;
        rep.tail_ok = std::fabs(rep.tail_exponent - expected) <= rep.tolerance_exponent;
        if (rep.tail_exponent <= 0.0) rep.notes.push_back("truncated tail does not grow: J_{r1} converges");
    }

    // (c) F_{r2}(x) = J_{r2}(x)^{1/p2'} I_{r2}(x)^{1/p2}
    if (opt.r2 >= S.p) {
        rep.notes.push_back("r2 >= p: the product form is undefined");
    } else {
        const double p2 = S.p / opt.r2, p2c = p2 / (p2 - 1.0);
        const quad::LogFn f = S.tail_integrand(opt.r2);
        bool finite = true;
        auto logF = [&](double lx) {
            const quad::Improper J = quad::integrate_to_infinity(f, lx);
            if (!J.finite) {
                finite = false;
                return kInf;
            }
            double lI;
            if (opt.ir2_literal) {
                lI = (1.0 + 2.0) * std::log(lx);  // (log x)^{1 + alpha2}
            } else {
                lI = S.log_head(opt.r2, lx);
            }
            return J.log_value / p2c + lI / p2;
        };
        for (int k = 0; k <= 32; ++k) {
            const double lx = 0.25 * k * kLn10;
            rep.product_curve.emplace_back(std::exp(lx), safe_exp(logF(lx)));
            if (!finite) break;
        }
        if (finite) {
            rep.plateau_ratio = std::exp(logF(6.0 * kLn10) - logF(3.0 * kLn10));
            rep.plateau_ok = std::fabs(rep.plateau_ratio - 1.0) <= rep.tolerance_ratio;
        } else {
            rep.plateau_ratio = kInf;
            rep.notes.push_back("J_{r2} diverges: the product is infinite");
        }
        if (opt.ir2_literal)
            rep.notes.push_back("head at r2 taken as the printed (log x)^{1+alpha2} closed form");
    }

    // (d) verdicts
    if (opt.r1 < S.p && opt.r2 < S.p) {
        rep.at_r1 = check_cianchi_lower(S.Phi1, S.Phi2, S.p, opt.r1, opt.check);
        rep.at_r2 = check_cianchi_lower(S.Phi1, S.Phi2, S.p, opt.r2, opt.check);
        rep.verdicts_ok = !rep.at_r1.holds() && rep.at_r2.holds();
    }
    return rep;
}

nlohmann::json WorkedExampleReport::to_json() const {
    auto pairs = [](const std::vector<std::pair<double, double>>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& [x, y] : v) a.push_back({x, report::number(y)});
        return a;
    };
    return {{"head", {{"values", pairs(head_values)}, {"exponent", head_exponent}, {"expected", 1.0}, {"ok", head_ok}}},
            {"tail",
             {{"values_log10X", pairs(tail_values)},
              {"exponent", tail_exponent},
              {"expected", 1.0 / 3.0},
              {"ok", tail_ok}}},
            {"plateau", {{"ratio", report::number(plateau_ratio)}, {"ok", plateau_ok}}},
            {"verdicts", {{"r1", at_r1.to_json()}, {"r2", at_r2.to_json()}, {"ok", verdicts_ok}}},
            {"tolerance", {{"exponent", tolerance_exponent}, {"ratio", tolerance_ratio}}},
            {"notes", notes},
            {"pass", all_ok()}};
}

// ---------------------------------------------------------------------------
// cross check

std::vector<PanelEntry> default_panel() {
    const Indices a0(2, 1), a1(4, 1);
    return {
        {"power 1.9", YoungFunction::power(1.9), YoungFunction::power(1.9), a0, a1},
        {"power 3", YoungFunction::power(3.0), YoungFunction::power(3.0), a0, a1},
        {"power 4.1", YoungFunction::power(4.1), YoungFunction::power(4.1), a0, a1},
        {"power-log r=1", builtin::powerlog_range(), builtin::powerlog_domain(), Indices(4, 1), Indices(6, 6)},
        {"power-log r=2", builtin::powerlog_range(), builtin::powerlog_domain(), Indices(4, 2), Indices(6, 6)},
        {"exponential type", builtin::exp_type(), builtin::exp_type(), a0, a1},
    };
}

std::vector<CrossCheckRow> cross_check(const std::vector<PanelEntry>& panel, std::uint64_t seed,
                                       const CheckConfig& cfg) {
    std::vector<CrossCheckRow> rows;
    for (const auto& e : panel) {
        CrossCheckRow row;
        row.name = e.name;
        row.condition = check_theoremA(e.Phi1, e.Phi2, e.idx0, e.idx1, cfg);
        TestFamily fam = TestFamily::standard(seed);
        fam.append(TestFamily::critical(e.Phi2));
        row.modular = verify_modular(OperatorTag::joint(e.idx0, e.idx1), e.Phi1, e.Phi2, fam);
        row.agree = row.condition.holds() == !row.modular.divergent;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace orlicz
