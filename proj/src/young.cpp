// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/logmath.hpp"

namespace orlicz {
namespace {

// ln(e^x - 1) for x > 0, accurate at both ends.
double log_expm1(double x) {
    if (!(x > 0.0)) return kNegInf;
    if (x > 40.0) return x + std::log1p(-std::exp(-x));
    return std::log(std::expm1(x));
}

enum class Mode { Pure, Log, Exp };

struct Segment {
    double lo = 0.0, hi = kInf;
    double log_lo = kNegInf, log_hi = kInf;
    Mode mode = Mode::Pure;
    double c = 1.0, p = 1.0, alpha = 0.0, k = 1.0;
    double log_B = kNegInf;  // ln Phi(lo)
};

std::string fmt_num(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace

struct YoungFunction::Impl {
    enum class Rep { Pieces, Table, Complement };
    Rep rep = Rep::Pieces;

    std::vector<Piece> pieces;
    std::vector<Segment> segs;

    std::vector<double> tt, ph, cum;  // table: nodes, density, Phi at nodes
    double head_a = 1.0, tail_b = 1.0;

    std::shared_ptr<const Impl> base;  // complement: the function being inverted
    std::vector<double> cw, cu;        // nodes w_i and ln phi(e^{w_i}) of the base

    nlohmann::json desc;

    const Segment& seg_at(double w) const {
        for (const auto& s : segs)
            if (w <= s.log_hi) return s;
        return segs.back();
    }

    double log_Phi(double w) const;
    double log_density(double w) const;
    double psi_log(double u) const;
};

namespace {

double seg_log_density(const Segment& s, double w) {
    switch (s.mode) {
        case Mode::Pure:
            return std::log(s.c * s.p) + (s.p - 1.0) * w;
        case Mode::Log: {
            if (s.alpha == 0.0) return std::log(s.c * s.p) + (s.p - 1.0) * w;
            if (!(w > 0.0)) return s.alpha >= 1.0 ? (s.alpha == 1.0 ? std::log(s.c) : kNegInf) : kInf;
            return std::log(s.c) + (s.p - 1.0) * w + (s.alpha - 1.0) * std::log(w) +
                   std::log(s.p * w + s.alpha);
        }
        case Mode::Exp:
            return std::log(s.c * s.k) + s.k * std::exp(w);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

// ln(c * (G(e^w) - G(lo))) on one segment.
double seg_log_increment(const Segment& s, double w) {
    if (w <= s.log_lo) return kNegInf;
    const double lc = std::log(s.c);
    switch (s.mode) {
        case Mode::Pure:
            if (s.log_lo == kNegInf) return lc + s.p * w;
            return lc + s.p * s.log_lo + log_expm1(s.p * (w - s.log_lo));
        case Mode::Log: {
            const double lw = std::log(w);
            if (s.log_lo <= 0.0) {
                // lo = 1: G(1) = 0 for alpha > 0 and 1 for alpha = 0.
                if (s.alpha == 0.0) return lc + log_expm1(s.p * w);
                return lc + s.p * w + s.alpha * lw;
            }
            const double g_lo = s.p * s.log_lo + s.alpha * std::log(s.log_lo);
            const double delta = s.p * (w - s.log_lo) + s.alpha * (lw - std::log(s.log_lo));
            return lc + g_lo + log_expm1(delta);
        }
        case Mode::Exp: {
            const double t = std::exp(w);
            const double lo = s.lo;
            return lc + s.k * lo + log_expm1(s.k * (t - lo));
        }
    }
    return kNegInf;
}

}  // namespace

double YoungFunction::Impl::log_density(double w) const {
    switch (rep) {
        case Rep::Pieces:
            return seg_log_density(seg_at(w), w);
        case Rep::Table: {
            const double w0 = std::log(tt.front()), w1 = std::log(tt.back());
            if (w <= w0) return std::log(ph.front()) + (head_a) * (w - w0);
            if (w > w1) return std::log(ph.back()) + tail_b * (w - w1);
            const double t = std::exp(w);
            auto it = std::lower_bound(tt.begin(), tt.end(), t);
            std::size_t i = static_cast<std::size_t>(it - tt.begin());
            if (i == 0) return safe_log(ph.front());
            if (i >= tt.size()) i = tt.size() - 1;
            const double lam = (t - tt[i - 1]) / (tt[i] - tt[i - 1]);
            return safe_log(ph[i - 1] + lam * (ph[i] - ph[i - 1]));
        }
        case Rep::Complement:
            return psi_log(w);
    }
    return kNegInf;
}

double YoungFunction::Impl::log_Phi(double w) const {
    switch (rep) {
        case Rep::Pieces: {
            const Segment& s = seg_at(w);
            return log_add(s.log_B, seg_log_increment(s, w));
        }
        case Rep::Table: {
            const double w0 = std::log(tt.front()), w1 = std::log(tt.back());
            if (w <= w0) return std::log(ph.front() * tt.front() / (head_a + 1.0)) + (head_a + 1.0) * (w - w0);
            if (w > w1) {
                const double lk = std::log(ph.back() * tt.back() / (tail_b + 1.0));
                return log_add(std::log(cum.back()), lk + log_expm1((tail_b + 1.0) * (w - w1)));
            }
            const double t = std::exp(w);
            auto it = std::lower_bound(tt.begin(), tt.end(), t);
            std::size_t i = static_cast<std::size_t>(it - tt.begin());
            if (i == 0) return std::log(cum.front());
            if (i >= tt.size()) i = tt.size() - 1;
            const double h = t - tt[i - 1];
            const double slope = (ph[i] - ph[i - 1]) / (tt[i] - tt[i - 1]);
            return std::log(cum[i - 1] + h * ph[i - 1] + 0.5 * slope * h * h);
        }
        case Rep::Complement: {
            const double v = psi_log(w);
            if (v == kNegInf) return kNegInf;
            return log_sub(w + v, base->log_Phi(v));
        }
    }
    return kNegInf;
}

// ln psi(e^u) with psi(t) = inf{s : phi(s) >= t}.
double YoungFunction::Impl::psi_log(double u) const {
    auto it = std::lower_bound(cu.begin(), cu.end(), u);
    double lo, hi;
    if (it == cu.begin()) {
        hi = cw.front();
        double step = 1.0;
        lo = hi - step;
        while (base->log_density(lo) >= u) {
            hi = lo;
            step *= 2.0;
            lo = hi - step;
            if (step > 1e9) return kNegInf;
        }
    } else if (it == cu.end()) {
        lo = cw.back();
        double step = 1.0;
        hi = lo + step;
        while (base->log_density(hi) < u) {
            lo = hi;
            step *= 2.0;
            hi = lo + step;
            if (step > 1e9) return kInf;
        }
    } else {
        const std::size_t i = static_cast<std::size_t>(it - cu.begin());
        lo = cw[i - 1];
        hi = cw[i];
    }
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        if (base->log_density(mid) >= u) hi = mid; else lo = mid;
    }
    return hi;
}

namespace {

std::shared_ptr<YoungFunction::Impl> build_pieces(std::vector<Piece> pieces, Continuity mode,
                                                  std::vector<std::string>* log) {
    if (pieces.empty()) throw precondition_error("YoungFunction: at least one piece is required");
    if (pieces.front().from != 0.0) throw precondition_error("YoungFunction: first piece must start at 0");
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Piece& pc = pieces[i];
        if (!(pc.c > 0.0) || !std::isfinite(pc.c)) throw precondition_error("YoungFunction: c must be positive");
        if (pc.kind == PieceKind::PowerLog && !(pc.p >= 1.0))
            throw precondition_error("YoungFunction: power p must be >= 1");
        if (pc.kind == PieceKind::Exponential && !(pc.k > 0.0))
            throw precondition_error("YoungFunction: exponential rate must be positive");
        if (i > 0 && !(pc.from > pieces[i - 1].from))
            throw precondition_error("YoungFunction: breakpoints must be strictly increasing");
    }

    auto impl = std::make_shared<YoungFunction::Impl>();
    impl->rep = YoungFunction::Impl::Rep::Pieces;

    auto make_segments = [&]() {
        impl->segs.clear();
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            const Piece& pc = pieces[i];
            const double lo = pc.from;
            const double hi = i + 1 < pieces.size() ? pieces[i + 1].from : kInf;
            auto push = [&](double a, double b, Mode m) {
                Segment s;
                s.lo = a;
                s.hi = b;
                s.log_lo = safe_log(a);
                s.log_hi = b == kInf ? kInf : std::log(b);
                s.mode = m;
                s.c = pc.c;
                s.p = pc.p;
                s.alpha = pc.alpha;
                s.k = pc.k;
                impl->segs.push_back(s);
            };
            if (pc.kind == PieceKind::Exponential) {
                push(lo, hi, Mode::Exp);
            } else if (pc.alpha == 0.0) {
                push(lo, hi, Mode::Pure);
            } else {
                if (lo < 1.0) push(lo, std::min(hi, 1.0), Mode::Pure);
                if (hi > 1.0) {
                    const double a = std::max(lo, 1.0);
                    if (a == 1.0 && pc.alpha < 0.0)
                        throw precondition_error("YoungFunction: negative log exponent on a piece touching t = 1");
                    push(a, hi, Mode::Log);
                }
            }
        }
        double acc = kNegInf;
        for (std::size_t j = 0; j < impl->segs.size(); ++j) {
            impl->segs[j].log_B = acc;
            if (impl->segs[j].hi != kInf)
                acc = log_add(acc, seg_log_increment(impl->segs[j], impl->segs[j].log_hi));
        }
    };

    if (mode == Continuity::Rescale) {
        for (std::size_t i = 1; i < pieces.size(); ++i) {
            make_segments();
            const double wb = std::log(pieces[i].from);
            // left limit belongs to the previous segment, right limit to the new piece
            const double left = seg_log_density(impl->seg_at(wb), wb);
            const double right = seg_log_density(impl->seg_at(std::nextafter(wb, kInf)), std::nextafter(wb, kInf));
            const double factor = std::exp(left - right);
            if (std::isfinite(factor) && factor > 0.0 && std::fabs(factor - 1.0) > 1e-15) {
                const double old = pieces[i].c;
                pieces[i].c *= factor;
                if (log)
                    log->push_back("piece " + std::to_string(i + 1) + ": c rescaled from " + fmt_num(old) + " to " +
                                   fmt_num(pieces[i].c) + " for density continuity at t = " +
                                   fmt_num(pieces[i].from));
            }
        }
    }
    make_segments();
    impl->pieces = pieces;

    nlohmann::json arr = nlohmann::json::array();
    for (const auto& pc : pieces) {
        nlohmann::json j;
        j["from"] = pc.from;
        j["c"] = pc.c;
        if (pc.kind == PieceKind::Exponential) {
            j["kind"] = "exp";
            j["k"] = pc.k;
        } else {
            j["p"] = pc.p;
            j["alpha"] = pc.alpha;
        }
        arr.push_back(j);
    }
    impl->desc = {{"pieces", arr}};
    return impl;
}

double parse_number(const nlohmann::json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string() && v.get<std::string>() == "e") return std::exp(1.0);
    throw precondition_error("Young spec: expected a number or \"e\"");
}

}  // namespace

YoungFunction YoungFunction::power(double p, double c) {
    Piece pc;
    pc.c = c;
    pc.p = p;
    return from_pieces({pc});
}

YoungFunction YoungFunction::from_pieces(std::vector<Piece> pieces, Continuity mode, std::vector<std::string>* log) {
    YoungFunction y(build_pieces(std::move(pieces), mode, log));
    validate_density(y);
    return y;
}

YoungFunction YoungFunction::exp_minus_one() {
    Piece pc;
    pc.kind = PieceKind::Exponential;
    pc.k = 1.0;
    YoungFunction y(build_pieces({pc}, Continuity::Keep, nullptr));
    validate_density(y);
    return y;
}

YoungFunction YoungFunction::tabulated(std::vector<double> t, std::vector<double> phi) {
    if (t.size() < 2 || t.size() != phi.size())
        throw precondition_error("tabulated Young function: need at least two (t, phi) samples");
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!(t[i] > 0.0) || (i > 0 && !(t[i] > t[i - 1])))
            throw precondition_error("tabulated Young function: t must be positive and strictly increasing");
        if (!(phi[i] > 0.0)) throw precondition_error("tabulated Young function: samples must be positive");
        if (i > 0 && phi[i] < phi[i - 1]) throw invariant_violation("tabulated Young function: density decreases");
    }
    auto impl = std::make_shared<Impl>();
    impl->rep = Impl::Rep::Table;
    impl->tt = t;
    impl->ph = phi;
    const std::size_t n = t.size();
    impl->head_a = std::log(phi[1] / phi[0]) / std::log(t[1] / t[0]);
    impl->tail_b = std::log(phi[n - 1] / phi[n - 2]) / std::log(t[n - 1] / t[n - 2]);
    impl->cum.resize(n);
    impl->cum[0] = phi[0] * t[0] / (impl->head_a + 1.0);
    for (std::size_t i = 1; i < n; ++i) impl->cum[i] = impl->cum[i - 1] + 0.5 * (phi[i] + phi[i - 1]) * (t[i] - t[i - 1]);
    impl->desc = {{"tabulated", {{"t", t}, {"phi", phi}}}};
    YoungFunction y(impl);
    validate_density(y);
    return y;
}

YoungFunction YoungFunction::from_json(const nlohmann::json& spec, std::vector<std::string>* log) {
    if (!spec.is_object()) throw precondition_error("Young spec: expected a JSON object");
    if (spec.contains("builtin")) return builtin::by_name(spec.at("builtin").get<std::string>());
    if (spec.contains("tabulated")) {
        const auto& tab = spec.at("tabulated");
        return tabulated(tab.at("t").get<std::vector<double>>(), tab.at("phi").get<std::vector<double>>());
    }
    if (!spec.contains("pieces")) throw precondition_error("Young spec: missing \"pieces\"");
    const auto& arr = spec.at("pieces");
    if (!arr.is_array() || arr.empty()) throw precondition_error("Young spec: \"pieces\" must be a non-empty array");
    std::vector<Piece> pieces;
    double prev_upto = 0.0;
    bool have_upto = false;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& j = arr[i];
        Piece pc;
        if (j.contains("from")) {
            pc.from = parse_number(j.at("from"));
            if (have_upto && std::fabs(pc.from - prev_upto) > 1e-12 * std::max(1.0, prev_upto))
                throw precondition_error("Young spec: piece " + std::to_string(i + 1) +
                                         " starts at a different point than the previous piece ends");
        } else {
            if (i > 0 && !have_upto)
                throw precondition_error("Young spec: piece " + std::to_string(i + 1) + " needs \"from\"");
            pc.from = i == 0 ? 0.0 : prev_upto;
        }
        if (i == 0 && pc.from != 0.0) throw precondition_error("Young spec: first piece must start at 0");
        pc.c = j.contains("c") ? parse_number(j.at("c")) : 1.0;
        const std::string kind = j.value("kind", std::string("powerlog"));
        if (kind == "exp") {
            pc.kind = PieceKind::Exponential;
            pc.k = j.contains("k") ? parse_number(j.at("k")) : 1.0;
        } else if (kind == "powerlog") {
            if (!j.contains("p")) throw precondition_error("Young spec: piece " + std::to_string(i + 1) + " needs \"p\"");
            pc.p = parse_number(j.at("p"));
            pc.alpha = j.contains("alpha") ? parse_number(j.at("alpha")) : 0.0;
        } else {
            throw precondition_error("Young spec: unknown piece kind '" + kind + "'");
        }
        have_upto = j.contains("upto");
        if (have_upto) prev_upto = parse_number(j.at("upto"));
        pieces.push_back(pc);
    }
    return from_pieces(std::move(pieces), Continuity::Rescale, log);
}

YoungFunction YoungFunction::load(const std::string& path, std::vector<std::string>* log) {
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".toml") == 0)
        throw precondition_error("Young spec '" + path + "': only the JSON format is read");
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open Young spec '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw precondition_error("malformed Young spec '" + path + "': " + e.what());
    }
    try {
        return from_json(j, log);
    } catch (const nlohmann::json::exception& e) {
        throw precondition_error("malformed Young spec '" + path + "': " + e.what());
    }
}

double YoungFunction::density(double t) const {
    if (!(t > 0.0)) throw domain_error("density: t must be positive");
    return safe_exp(impl_->log_density(std::log(t)));
}

double YoungFunction::Phi(double t) const {
    if (!(t >= 0.0)) throw domain_error("Phi: t must be nonnegative");
    if (t == 0.0) return 0.0;
    return safe_exp(impl_->log_Phi(std::log(t)));
}

double YoungFunction::log_density(double w) const { return impl_->log_density(w); }
double YoungFunction::log_Phi(double w) const { return impl_->log_Phi(w); }

double YoungFunction::log_Phi_inverse(double y) const {
    double lo = -1.0, hi = 1.0;
    double step = 2.0;
    while (log_Phi(lo) >= y) {
        lo -= step;
        step *= 2.0;
        if (step > 1e12) return kNegInf;
    }
    step = 2.0;
    while (log_Phi(hi) < y) {
        hi += step;
        step *= 2.0;
        if (step > 1e12) return kInf;
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        if (log_Phi(mid) < y) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double YoungFunction::Phi_inverse(double y) const {
    if (!(y > 0.0)) throw domain_error("Phi_inverse: argument must be positive");
    return std::exp(log_Phi_inverse(std::log(y)));
}

std::vector<double> YoungFunction::breakpoints() const {
    std::vector<double> out;
    switch (impl_->rep) {
        case Impl::Rep::Pieces:
            for (const auto& s : impl_->segs)
                if (s.lo > 0.0) out.push_back(s.lo);
            break;
        case Impl::Rep::Table:
            out = impl_->tt;
            break;
        case Impl::Rep::Complement: {
            YoungFunction b(impl_->base);
            for (double x : b.breakpoints()) {
                const double w = std::log(x);
                out.push_back(std::exp(b.log_density(w)));
                out.push_back(std::exp(b.log_density(std::nextafter(w, kInf))));
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            break;
        }
    }
    return out;
}

bool YoungFunction::density_vanishes_at_zero() const {
    switch (impl_->rep) {
        case Impl::Rep::Pieces: {
            const Segment& s = impl_->segs.front();
            return s.mode != Mode::Exp && s.p > 1.0;
        }
        case Impl::Rep::Table:
            return impl_->head_a > 0.0;
        case Impl::Rep::Complement:
            return true;
    }
    return false;
}

bool YoungFunction::is_pure_power(double* c, double* p) const {
    if (impl_->rep != Impl::Rep::Pieces || impl_->pieces.size() != 1) return false;
    const Piece& pc = impl_->pieces.front();
    if (pc.kind != PieceKind::PowerLog || pc.alpha != 0.0) return false;
    if (c) *c = pc.c;
    if (p) *p = pc.p;
    return true;
}

nlohmann::json YoungFunction::to_json() const { return impl_->desc; }

void validate_density(const YoungFunction& Y) {
    std::vector<double> ws;
    const double l10 = std::log(10.0);
    for (int i = -6 * 64; i <= 6 * 64; ++i) ws.push_back(i * l10 / 64.0);
    for (double b : Y.breakpoints()) {
        const double w = std::log(b);
        ws.push_back(w);
        ws.push_back(std::nextafter(w, kInf));
        ws.push_back(w + 1e-9);
    }
    std::sort(ws.begin(), ws.end());
    double prev = kNegInf;
    double prev_w = kNegInf;
    for (double w : ws) {
        const double ld = Y.log_density(w);
        if (std::isnan(ld)) throw invariant_violation("Young function: density is undefined at t = " + fmt_num(std::exp(w)));
        if (ld < prev - 1e-12)
            throw invariant_violation("Young function: density decreases between t = " + fmt_num(std::exp(prev_w)) +
                                      " and t = " + fmt_num(std::exp(w)));
        prev = std::max(prev, ld);
        prev_w = w;
    }
}

bool growth_bounds_hold(const YoungFunction& Y, double t, double tol) {
    const double w = std::log(t);
    const double a = Y.log_Phi(w);
    const double b = w + Y.log_density(w);
    const double c = Y.log_Phi(w + std::log(2.0));
    return a <= b + tol && b <= c + tol;
}

ComplementaryPair complementary(const YoungFunction& Y, int nodes_per_decade) {
    if (nodes_per_decade < 1) throw precondition_error("complementary: nodes_per_decade must be positive");
    validate_density(Y);
    if (!Y.density_vanishes_at_zero())
        throw precondition_error("complementary: the density must vanish at 0+");
    if (!(Y.log_density(700.0) > Y.log_density(0.0) + 1.0))
        throw precondition_error("complementary: the density must be unbounded");

    double c = 0, p = 0;
    if (Y.is_pure_power(&c, &p) && p > 1.0) {
        // phi(s) = c p s^{p-1}  =>  psi(t) = (t/(cp))^{1/(p-1)}, Psi = (cp)^{-1/(p-1)} t^{p'} / p'
        const double pp = p / (p - 1.0);
        YoungFunction psi = YoungFunction::power(pp, std::pow(c * p, -1.0 / (p - 1.0)) / pp);
        return {Y, psi};
    }

    auto impl = std::make_shared<YoungFunction::Impl>();
    impl->rep = YoungFunction::Impl::Rep::Complement;
    impl->base = Y.impl_;
    const double l10 = std::log(10.0);
    const int decades = 30;
    for (int i = -decades * nodes_per_decade; i <= decades * nodes_per_decade; ++i) {
        const double w = i * l10 / nodes_per_decade;
        double u = Y.log_density(w);
        if (!impl->cu.empty()) u = std::max(u, impl->cu.back());
        impl->cw.push_back(w);
        impl->cu.push_back(u);
    }
    impl->desc = {{"complement_of", Y.to_json()}, {"nodes_per_decade", nodes_per_decade}};
    return {Y, YoungFunction(impl)};
}

namespace builtin {

YoungFunction worked_example(double beta, double p, double alpha) {
    const double e = std::exp(1.0);
    Piece a;
    a.p = beta;
    Piece b;
    b.from = e;
    b.p = p;
    b.alpha = alpha;
    // density continuity at e: beta e^{beta-1} = c e^{p-1} (p + alpha)
    b.c = beta * std::pow(e, beta - p) / (p + alpha);
    return YoungFunction::from_pieces({a, b});
}

YoungFunction powerlog_range() { return worked_example(5.0, 4.0, 0.0); }
YoungFunction powerlog_domain() { return worked_example(5.0, 4.0, 2.0); }

YoungFunction exp_type() {
    Piece a;
    a.p = 2.0;
    Piece b;
    b.from = 1.0;
    b.kind = PieceKind::Exponential;
    b.k = 1.0;
    b.c = 2.0 / std::exp(1.0);
    return YoungFunction::from_pieces({a, b});
}

YoungFunction by_name(const std::string& name) {
    if (name == "powerlog-range") return powerlog_range();
    if (name == "powerlog-domain") return powerlog_domain();
    if (name == "exp-type") return exp_type();
    if (name == "exp-minus-one") return YoungFunction::exp_minus_one();
    if (name.rfind("power:", 0) == 0) return YoungFunction::power(std::stod(name.substr(6)));
    throw precondition_error("unknown builtin Young function '" + name + "'");
}

}  // namespace builtin
}  // namespace orlicz
