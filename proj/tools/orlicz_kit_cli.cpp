// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
//
// orlicz-kit: command-line front end to the checkers and the harness.
// Exit codes: 0 holds / pass, 2 fails (a mathematical negative), 1 error.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orlicz/calderon.hpp"
#include "orlicz/conditions.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/report.hpp"
#include "orlicz/stepfn.hpp"
#include "orlicz/verify.hpp"
#include "orlicz/young.hpp"

namespace {

using nlohmann::json;
using namespace orlicz;

constexpr int kHolds = 0;
constexpr int kError = 1;
constexpr int kFails = 2;

struct RunConfig {
    std::string phi1, phi2;
    double p0 = 0, r0 = 0, p1 = 0, r1 = 0;
    double p = 0, r = 1;
    std::string condition;
    std::string op;
    std::string input;  // step-function CSV
    std::vector<double> ts;
    double grid_per_decade = 33.0;
    double tmin = 1e-8, tmax = 1e8;
    double tol = 0.01;
    std::uint64_t seed = 20260101;
    std::string out;
    std::string format;  // json unless the command is a curve producer
    bool quick = false;
    double r2 = 2.0;
    bool ir2_literal = false;
    bool critical = false;
    std::string kind = "Hpr";
};

// A spec argument is a path to a JSON file or "builtin:NAME".
YoungFunction load_young(const std::string& arg, std::vector<std::string>& log) {
    if (arg.rfind("builtin:", 0) == 0) return builtin::by_name(arg.substr(8));
    return YoungFunction::load(arg, &log);
}

CheckConfig check_config(const RunConfig& rc) {
    if (!(rc.tmin > 0 && rc.tmax > rc.tmin)) throw precondition_error("need 0 < tmin < tmax");
    if (!(rc.grid_per_decade >= 1)) throw precondition_error("--grid-per-decade must be at least 1");
    if (!(rc.tol > 0)) throw precondition_error("--tol must be positive");
    CheckConfig cfg;
    cfg.tmin = rc.tmin;
    cfg.tmax = rc.tmax;
    cfg.steps_per_octave = std::max(1, static_cast<int>(std::lround(rc.grid_per_decade * std::log10(2.0))));
    cfg.stability_tol = rc.tol;
    return cfg;
}

json config_json(const RunConfig& rc, const std::string& command) {
    json j = {{"command", command}, {"seed", rc.seed}};
    if (!rc.phi1.empty()) j["phi1"] = rc.phi1;
    if (!rc.phi2.empty()) j["phi2"] = rc.phi2;
    return j;
}

json envelope(const std::string& command, json config, json result) {
    return {{"schema", report::kSchema}, {"command", command}, {"config", std::move(config)},
            {"result", std::move(result)}};
}

// Writes report.json plus the given CSV curves into --out, or prints to stdout.
void emit(const RunConfig& rc, const json& doc,
          const std::vector<std::pair<std::string, std::string>>& curves, bool csv_default = false) {
    if (!rc.out.empty()) {
        std::filesystem::create_directories(rc.out);
        const std::filesystem::path dir(rc.out);
        report::write_file((dir / "report.json").string(), report::dump(doc));
        for (const auto& [name, text] : curves) report::write_file((dir / (name + ".csv")).string(), text);
        return;
    }
    if (rc.format == "csv" || (rc.format.empty() && csv_default)) {
        for (std::size_t i = 0; i < curves.size(); ++i) {
            if (curves.size() > 1) std::cout << "# " << curves[i].first << "\n";
            std::cout << curves[i].second;
        }
        return;
    }
    std::cout << report::dump(doc);
}

void collect_curves(const ConditionReport& rep, const std::string& prefix,
                    std::vector<std::pair<std::string, std::string>>& out) {
    if (!rep.curve.empty()) out.emplace_back(prefix, report::csv(rep.curve));
    for (std::size_t i = 0; i < rep.parts.size(); ++i) {
        std::string name = rep.parts[i].condition;
        for (char& c : name)
            if (c == ':' || c == ' ' || c == '/') c = '_';
        collect_curves(rep.parts[i], prefix + "_" + name, out);
    }
}

int cmd_check_pair(const RunConfig& rc) {
    if (!(rc.p0 > 1 && rc.p1 > rc.p0)) throw precondition_error("indices must satisfy 1 < p0 < p1");
    if (!(rc.r0 >= 1 && rc.r1 >= 1)) throw precondition_error("indices must satisfy r0, r1 >= 1");
    std::vector<std::string> log;
    const YoungFunction Phi1 = load_young(rc.phi1, log);
    const YoungFunction Phi2 = load_young(rc.phi2, log);
    const CheckConfig cfg = check_config(rc);
    const ConditionReport rep = check_theoremA(Phi1, Phi2, Indices(rc.p0, rc.r0), Indices(rc.p1, rc.r1), cfg);
    json conf = config_json(rc, "check-pair");
    conf["indices"] = {{"p0", rc.p0}, {"r0", rc.r0}, {"p1", rc.p1}, {"r1", rc.r1}};
    if (!log.empty()) conf["load_log"] = log;
    std::vector<std::pair<std::string, std::string>> curves;
    collect_curves(rep, "curve", curves);
    emit(rc, envelope("check-pair", conf, rep.to_json()), curves);
    return rep.holds() ? kHolds : kFails;
}

int cmd_check(const RunConfig& rc) {
    if (!(rc.p > 1)) throw precondition_error("--p must exceed 1");
    if (!(rc.r >= 1)) throw precondition_error("--r must be at least 1");
    std::vector<std::string> log;
    const YoungFunction Phi1 = load_young(rc.phi1, log);
    const YoungFunction Phi2 = load_young(rc.phi2, log);
    const ConditionReport rep = check_by_name(rc.condition, Phi1, Phi2, rc.p, rc.r, check_config(rc));
    json conf = config_json(rc, "check");
    conf["condition"] = rc.condition;
    conf["indices"] = {{"p", rc.p}, {"r", rc.r}};
    if (!log.empty()) conf["load_log"] = log;
    std::vector<std::pair<std::string, std::string>> curves;
    collect_curves(rep, "curve", curves);
    emit(rc, envelope("check", conf, rep.to_json()), curves);
    return rep.holds() ? kHolds : kFails;
}

StepFunction load_step(const RunConfig& rc) {
    if (rc.input.empty()) throw precondition_error("--input is required");
    return StepFunction::from_csv(rc.input);
}

int cmd_eval(const RunConfig& rc) {
    const OperatorTag op = OperatorTag::parse(rc.op);
    const StepFunction g = load_step(rc);
    if (!g.is_nonincreasing())
        throw precondition_error("eval: the input must be nonincreasing; run 'rearrange' first");
    std::vector<double> ts = rc.ts;
    if (ts.empty()) {
        const double decades = std::log10(rc.tmax / rc.tmin);
        const int n = std::max(2, static_cast<int>(std::lround(decades * rc.grid_per_decade)) + 1);
        ts = log_grid(rc.tmin, rc.tmax, n);
    }
    std::vector<std::pair<double, double>> rows;
    json vals = json::array();
    for (double t : ts) {
        const double v = apply(op, g, t);
        rows.emplace_back(t, v);
        vals.push_back({t, report::number(v)});
    }
    json conf = config_json(rc, "eval");
    conf["operator"] = op.name();
    conf["input"] = rc.input;
    emit(rc, envelope("eval", conf, {{"values", vals}}), {{"eval", report::csv(rows, "t", "value")}}, true);
    return kHolds;
}

int cmd_rearrange(const RunConfig& rc) {
    const StepFunction f = load_step(rc);
    const StepFunction fs = rearrangement(f);
    std::vector<std::pair<double, double>> rows;
    for (std::size_t i = 0; i < fs.size(); ++i) rows.emplace_back(fs.breakpoints()[i], fs.values()[i]);
    json conf = config_json(rc, "rearrange");
    conf["input"] = rc.input;
    emit(rc, envelope("rearrange", conf, {{"rearrangement", fs.to_json()}}),
         {{"rearrangement", report::csv(rows, "t", "value")}}, true);
    return kHolds;
}

int cmd_verify_modular(const RunConfig& rc) {
    const OperatorTag op = OperatorTag::parse(rc.op);
    std::vector<std::string> log;
    const YoungFunction Phi1 = load_young(rc.phi1, log);
    const YoungFunction Phi2 = load_young(rc.phi2, log);
    TestFamily fam = TestFamily::standard(rc.seed);
    if (rc.critical) fam.append(TestFamily::critical(Phi2));
    const ModularReport rep = verify_modular(op, Phi1, Phi2, fam);
    json conf = config_json(rc, "verify-modular");
    conf["operator"] = op.name();
    conf["critical_family"] = rc.critical;
    conf["family_size"] = fam.size();
    std::vector<std::pair<double, double>> rows;
    for (std::size_t i = 0; i < rep.entries.size(); ++i)
        rows.emplace_back(static_cast<double>(i), rep.entries[i].lhs_infinite ? HUGE_VAL : rep.entries[i].K);
    emit(rc, envelope("verify-modular", conf, rep.to_json()), {{"modular_K", report::csv(rows, "member", "K")}});
    return rep.divergent ? kFails : kHolds;
}

int cmd_reproduce_sec6(const RunConfig& rc) {
    WorkedExampleOptions opt;
    opt.r2 = rc.r2;
    opt.quick = rc.quick;
    opt.ir2_literal = rc.ir2_literal;
    opt.check = check_config(rc);
    const WorkedExampleReport rep = reproduce_section6(opt);
    json conf = config_json(rc, "reproduce-sec6");
    conf["r1"] = opt.r1;
    conf["r2"] = opt.r2;
    conf["quick"] = opt.quick;
    conf["ir2_literal"] = opt.ir2_literal;
    emit(rc, envelope("reproduce-sec6", conf, rep.to_json()),
         {{"head_integral", report::csv(rep.head_values, "x", "I(x)")},
          {"tail_truncation", report::csv(rep.tail_values, "log10X", "J(x0,X)")},
          {"product_r2", report::csv(rep.product_curve, "x", "F(x)")}});
    return rep.all_ok() ? kHolds : kFails;
}

int cmd_sandwich_test(const RunConfig& rc) {
    OpKind kind;
    std::vector<Indices> indices;
    if (rc.kind == "Hpr") {
        kind = OpKind::Hpr;
        for (double p : {2.0, 4.0})
            for (double r : {1.0, 2.0, 3.0}) indices.emplace_back(p, r);
    } else if (rc.kind == "Sqr") {
        kind = OpKind::Sqr;
        for (double q : {2.0, 3.0})
            for (double r : {1.0, 2.0, 3.0}) indices.emplace_back(q, r);
    } else {
        throw precondition_error("--kind must be Hpr or Sqr");
    }
    TestFamily fam = TestFamily::canonical({1.0});
    fam.append(TestFamily::random(20, rc.seed));
    const SandwichSummary s = sandwich_suite(kind, indices, fam, log_grid(1e-3, 1e3, 25));
    json conf = config_json(rc, "sandwich-test");
    conf["kind"] = rc.kind;
    emit(rc, envelope("sandwich-test", conf, s.to_json()), {});
    return s.violations() == 0 ? kHolds : kFails;
}

void add_grid_flags(CLI::App* sc, RunConfig& rc) {
    sc->add_option("--grid-per-decade", rc.grid_per_decade, "grid nodes per decade")->capture_default_str();
    sc->add_option("--tmin", rc.tmin, "left end of the t grid")->capture_default_str();
    sc->add_option("--tmax", rc.tmax, "right end of the t grid")->capture_default_str();
    sc->add_option("--tol", rc.tol, "relative sup stability tolerance")->capture_default_str();
}

void add_output_flags(CLI::App* sc, RunConfig& rc) {
    sc->add_option("--out", rc.out, "output directory for report.json and CSV curves");
    sc->add_option("--format", rc.format, "stdout format: json or csv")->check(CLI::IsMember({"json", "csv"}));
    sc->add_option("--seed", rc.seed, "seed for random test families")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orlicz-kit: interpolation conditions for Orlicz spaces"};
    app.require_subcommand(1);
    RunConfig rc;

    auto* pair = app.add_subcommand("check-pair", "decide the joint condition for (phi1, phi2)");
    pair->add_option("--phi1", rc.phi1, "range Young function (JSON path or builtin:NAME)")->required();
    pair->add_option("--phi2", rc.phi2, "domain Young function (JSON path or builtin:NAME)")->required();
    pair->add_option("--p0", rc.p0)->required();
    pair->add_option("--r0", rc.r0)->required();
    pair->add_option("--p1", rc.p1)->required();
    pair->add_option("--r1", rc.r1)->required();
    add_grid_flags(pair, rc);
    add_output_flags(pair, rc);

    auto* check = app.add_subcommand("check", "run one condition by name");
    check->add_option("condition", rc.condition, "condition name")
        ->required()
        ->check(CLI::IsMember({"zs-lower", "zs-upper", "cianchi-lower", "cianchi-upper", "stepanov-pair"}));
    check->add_option("--phi1", rc.phi1)->required();
    check->add_option("--phi2", rc.phi2)->required();
    check->add_option("--p,--q", rc.p, "exponent p (or q for the upper conditions)")->required();
    check->add_option("--r", rc.r, "secondary exponent")->capture_default_str();
    add_grid_flags(check, rc);
    add_output_flags(check, rc);

    auto* eval = app.add_subcommand("eval", "evaluate an operator on a step function");
    eval->add_option("--op", rc.op, "Hpr:p,r | Hqr:q,r | P | Sqr:q,r | Joint:p0,r0,p1,r1")->required();
    eval->add_option("--input", rc.input, "two-column CSV (t, value)")->required();
    eval->add_option("--t", rc.ts, "evaluation points (default: the log grid)")->delimiter(',');
    add_grid_flags(eval, rc);
    add_output_flags(eval, rc);

    auto* rearr = app.add_subcommand("rearrange", "decreasing rearrangement of a step function");
    rearr->add_option("--input", rc.input, "two-column CSV (t, value)")->required();
    add_output_flags(rearr, rc);

    auto* vmod = app.add_subcommand("verify-modular", "search the modular constant over a test family");
    vmod->add_option("--op", rc.op)->required();
    vmod->add_option("--phi1", rc.phi1)->required();
    vmod->add_option("--phi2", rc.phi2)->required();
    vmod->add_flag("--critical", rc.critical, "append the critical sequence built from phi2");
    add_output_flags(vmod, rc);

    auto* worked = app.add_subcommand("reproduce-sec6", "reproduce the power-log worked example");
    worked->add_option("--r2", rc.r2, "second secondary exponent")->capture_default_str();
    worked->add_flag("--quick", rc.quick, "three decades, wider tolerances");
    worked->add_flag("--ir2-literal", rc.ir2_literal, "use the head exponent exactly as printed");
    add_grid_flags(worked, rc);
    add_output_flags(worked, rc);

    auto* sand = app.add_subcommand("sandwich-test", "distribution sandwich over the standard panel");
    sand->add_option("--kind", rc.kind, "Hpr or Sqr")->capture_default_str();
    add_output_flags(sand, rc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    try {
        if (*pair) return cmd_check_pair(rc);
        if (*check) return cmd_check(rc);
        if (*eval) return cmd_eval(rc);
        if (*rearr) return cmd_rearrange(rc);
        if (*vmod) return cmd_verify_modular(rc);
        if (*worked) return cmd_reproduce_sec6(rc);
        if (*sand) return cmd_sandwich_test(rc);
    } catch (const std::exception& e) {
        std::cerr << "orlicz-kit: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
