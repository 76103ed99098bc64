// homore: exact verification of hom-associative Ore extensions.
//
// Subcommands:
//   verify     run verification suites for a family (axioms, corollaries,
//              general-table, unitalization, reduce, all)
//   reduce     execute the commutator descent from a nonzero element to 1 in
//              the hom-associative Weyl algebra
//   unitalize  run the weak-unitalization checks over a chosen base ring
//
// Exit codes: 0 all checks passed, 1 at least one counterexample, 2 invalid
// input.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "homore/catalog.hpp"
#include "homore/homcheck.hpp"
#include "homore/json_report.hpp"
#include "homore/parse.hpp"
#include "homore/unitalization.hpp"

namespace {

using namespace homore;
using nlohmann::json;

struct CommonOptions {
    std::string family;
    std::string k = "1";
    std::string q;
    std::size_t deg_x = 3;
    std::size_t deg_y = 3;
    std::string suite = "all";
    std::string mode = "star";
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string out;
    std::string config_path;
    std::string poly;
    std::size_t max_steps = 1000;
    std::string base = "scalar";
    std::size_t samples = 20;
};

bool is_symbolic(const std::string& text) { return text == "symbolic"; }

FamilySpec build_family(const std::string& family, const std::string& k_text,
                        const std::string& q_text) {
    if (family == "weyl" || family == "enveloping") {
        if (is_symbolic(k_text))
            return family == "weyl" ? symbolic_weyl() : symbolic_enveloping();
        Scalar k = Scalar::of(Rational::parse(k_text));
        return family == "weyl" ? make_weyl(k) : make_enveloping(k);
    }
    if (family == "quantum_plane") {
        if (q_text.empty())
            throw std::invalid_argument("quantum_plane requires --q");
        if (is_symbolic(k_text) || is_symbolic(q_text)) {
            Ring ring = Ring::parameters({"k", "q"});
            auto param_or_const = [&](const std::string& text, const std::string& name) {
                if (is_symbolic(text))
                    return Scalar::of(ParamPoly::generator(ring.params(), name));
                return Scalar::of(
                    ParamPoly::constant(ring.params(), Rational::parse(text)));
            };
            return make_quantum_plane(param_or_const(q_text, "q"),
                                      param_or_const(k_text, "k"));
        }
        return make_quantum_plane(Scalar::of(Rational::parse(q_text)),
                                  Scalar::of(Rational::parse(k_text)));
    }
    throw std::invalid_argument("unknown family '" + family +
                                "' (expected weyl, enveloping, or quantum_plane)");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output path '" + out_path + "'");
    f << text;
}

std::string render_text(const json& config, const std::vector<Report>& reports) {
    std::ostringstream out;
    out << "config:";
    for (auto it = config.begin(); it != config.end(); ++it) {
        out << " " << it.key() << "=";
        if (it.value().is_string())
            out << it.value().get<std::string>();
        else
            out << it.value().dump();
    }
    out << "\n";
    std::size_t passed = 0;
    for (const auto& r : reports) {
        out << (r.pass ? "[pass] " : "[FAIL] ") << r.property << " (" << r.bounds << ") "
            << r.millis << " ms\n";
        if (r.counterexample) {
            out << "       inputs: " << r.counterexample->inputs << "\n";
            out << "       lhs:    " << r.counterexample->lhs << "\n";
            out << "       rhs:    " << r.counterexample->rhs << "\n";
        }
        if (r.pass) ++passed;
    }
    out << "summary: " << passed << "/" << reports.size() << " passed\n";
    return out.str();
}

void apply_config_file(const CLI::App* cmd, CommonOptions& opt) {
    if (opt.config_path.empty()) return;
    std::ifstream f(opt.config_path);
    if (!f) throw std::invalid_argument("cannot read config file '" + opt.config_path + "'");
    json j = json::parse(f);
    auto unset = [&](const char* flag) {
        const CLI::Option* o = cmd->get_option(flag);
        return o->count() == 0;
    };
    if (j.contains("family") && unset("--family")) opt.family = j["family"];
    if (j.contains("k") && unset("--k")) opt.k = j["k"].is_string() ? j["k"].get<std::string>() : j["k"].dump();
    if (j.contains("q") && unset("--q")) opt.q = j["q"].is_string() ? j["q"].get<std::string>() : j["q"].dump();
    if (j.contains("deg_x") && unset("--deg-x")) opt.deg_x = j["deg_x"];
    if (j.contains("deg_y") && unset("--deg-y")) opt.deg_y = j["deg_y"];
    if (j.contains("suite") && unset("--suite")) opt.suite = j["suite"];
    if (j.contains("mode") && unset("--mode")) opt.mode = j["mode"];
    if (j.contains("seed") && unset("--seed")) opt.seed = j["seed"];
    if (j.contains("format") && unset("--format")) opt.format = j["format"];
    if (j.contains("out") && unset("--out")) opt.out = j["out"];
    if (j.contains("poly") && unset("--poly")) opt.poly = j["poly"];
    if (j.contains("max_steps") && unset("--max-steps")) opt.max_steps = j["max_steps"];
}

std::vector<Report> run_reduce_suite(const FamilySpec& family, const CommonOptions& opt) {
    // batch of seeded nonzero elements, each reduced to 1
    if (family.kind != FamilyKind::Weyl || family.ctx.ring() != Ring::rationals())
        throw std::invalid_argument(
            "the reduce suite needs the weyl family with a concrete rational k");
    Rational k = Rational::parse(opt.k);
    SampleGen gen(opt.seed);
    std::size_t count = 10;
    auto start = std::chrono::steady_clock::now();
    Report report = Report::passed("simplicity-reduction",
                                   "count=" + std::to_string(count) + " degX<=3 degY<=3");
    report.seed = opt.seed;
    for (std::size_t i = 0; i < count; ++i) {
        OrePoly p = random_ore_poly(gen, Ring::rationals(), 3, 3);
        while (p.is_zero()) p = random_ore_poly(gen, Ring::rationals(), 3, 3);
        ReductionTrace trace = simplicity_reduce(k, p, opt.max_steps);
        if (trace.final_element != OrePoly::one(Ring::rationals()) || !trace.regeneration_ok) {
            report = Report::failed("simplicity-reduction", report.bounds,
                                    Counterexample{"p = " + p.to_string(),
                                                   trace.final_element.to_string(), "1"});
            report.seed = opt.seed;
            break;
        }
    }
    report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return {report};
}

std::vector<Report> run_unitalization_suite(const OreContext& ctx, const CommonOptions& opt) {
    BulletAlgebra u(ctx, ctx.ring());
    std::vector<Report> reports =
        check_unitalization(u, opt.deg_x, opt.deg_y, opt.samples, opt.seed);
    reports.push_back(check_embedding(u, opt.deg_x, opt.deg_y));
    reports.push_back(check_hom_ideal(u, opt.deg_x, opt.deg_y));
    return reports;
}

int run_verify(CommonOptions opt) {
    FamilySpec family = build_family(opt.family, opt.k, opt.q);
    MulMode mode;
    if (opt.mode == "plain")
        mode = MulMode::Plain;
    else if (opt.mode == "star")
        mode = MulMode::Star;
    else
        throw std::invalid_argument("unknown mode '" + opt.mode + "'");
    if (opt.deg_x < 1 || opt.deg_y < 1)
        throw std::invalid_argument("degree bounds must be at least 1");
    FamilySpec under_test = family;
    under_test.ctx = with_mode(family.ctx, mode);
    const OreContext& ctx = under_test.ctx;

    bool all = opt.suite == "all";
    std::vector<Report> reports;
    auto want = [&](const char* name) { return all || opt.suite == name; };
    bool ran_any = false;

    if (want("axioms")) {
        ran_any = true;
        reports.push_back(check_hom_associativity(ctx, opt.deg_x, opt.deg_y));
        reports.push_back(check_weak_unit(ctx, OrePoly::one(ctx.ring()), opt.deg_x, opt.deg_y));
        reports.push_back(check_commutation_relation(under_test));
    }
    if (want("corollaries")) {
        ran_any = true;
        for (auto& r : check_homogeneous_corollaries(ctx, opt.deg_y))
            reports.push_back(std::move(r));
        reports.push_back(check_pi_sum_condition(ctx, opt.deg_x, opt.deg_y));
        reports.push_back(check_endo_extension(ctx.alpha(), ctx, opt.deg_x, opt.deg_y));
    }
    if (want("general-table")) {
        ran_any = true;
        TwistTable table = TwistTable::diagonal(ctx.alpha(), opt.deg_x, opt.deg_x);
        reports.push_back(check_general_condition(ctx, table, opt.deg_x, opt.deg_y));
        for (auto& r : check_necessary_conditions(ctx, table, opt.deg_y))
            reports.push_back(std::move(r));
    }
    if (opt.suite == "reduce" ||
        (all && family.kind == FamilyKind::Weyl && ctx.ring() == Ring::rationals())) {
        ran_any = true;
        for (auto& r : run_reduce_suite(under_test, opt)) reports.push_back(std::move(r));
    }
    if (want("unitalization")) {
        ran_any = true;
        for (auto& r : run_unitalization_suite(ctx, opt)) reports.push_back(std::move(r));
    }
    if (!ran_any) throw std::invalid_argument("unknown suite '" + opt.suite + "'");

    json config{{"family", opt.family}, {"k", opt.k},         {"mode", opt.mode},
                {"degX", opt.deg_x},    {"degY", opt.deg_y},  {"suite", opt.suite},
                {"seed", opt.seed}};
    if (!opt.q.empty()) config["q"] = opt.q;
    if (opt.format == "json")
        emit(report_document(config, reports, opt.seed).dump(2) + "\n", opt.out);
    else
        emit(render_text(config, reports), opt.out);
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

const char* step_name(ReductionStep::Kind kind) {
    switch (kind) {
        case ReductionStep::Kind::CommutatorWithX:
            return "[X, .]";
        case ReductionStep::Kind::CommutatorWithY:
            return "[., Y]";
        case ReductionStep::Kind::ScaleToOne:
            return "scale";
    }
    return "?";
}

int run_reduce(CommonOptions opt) {
    if (opt.poly.empty()) throw std::invalid_argument("reduce requires --poly");
    Rational k = Rational::parse(opt.k);
    OrePoly p = parse_ore_poly(opt.poly, Ring::rationals());
    if (p.is_zero()) throw std::invalid_argument("cannot reduce the zero polynomial");
    ReductionTrace trace = simplicity_reduce(k, p, opt.max_steps);

    json config{{"k", opt.k}, {"poly", opt.poly}, {"max_steps", opt.max_steps}};
    if (opt.format == "json") {
        json steps = json::array();
        for (const auto& s : trace.steps)
            steps.push_back({{"step", step_name(s.kind)}, {"result", s.result.to_string()}});
        json j{{"config", config},
               {"start", trace.start.to_string()},
               {"steps", steps},
               {"final", trace.final_element.to_string()},
               {"x_steps", trace.x_steps},
               {"y_steps", trace.y_steps},
               {"regeneration",
                {{"preimage", trace.regeneration_preimage.to_string()},
                 {"product", trace.regeneration_product.to_string()},
                 {"ok", trace.regeneration_ok}}},
               {"version", kVersion}};
        emit(j.dump(2) + "\n", opt.out);
    } else {
        std::ostringstream out;
        out << "start: " << trace.start.to_string() << "\n";
        for (std::size_t i = 0; i < trace.steps.size(); ++i)
            out << "step " << (i + 1) << " " << step_name(trace.steps[i].kind) << " -> "
                << trace.steps[i].result.to_string() << "\n";
        out << "final: " << trace.final_element.to_string() << " (" << trace.x_steps
            << " X-steps, " << trace.y_steps << " Y-steps, 1 scaling)\n";
        out << "regeneration: 1 * (" << trace.regeneration_preimage.to_string()
            << ") = " << trace.regeneration_product.to_string() << " ["
            << (trace.regeneration_ok ? "ok" : "MISMATCH") << "]\n";
        emit(out.str(), opt.out);
    }
    return trace.regeneration_ok ? 0 : 1;
}

int run_unitalize(CommonOptions opt) {
    if (opt.deg_x < 1 || opt.deg_y < 1)
        throw std::invalid_argument("degree bounds must be at least 1");
    std::vector<Report> reports;
    json config{{"family", opt.family}, {"k", opt.k},        {"base", opt.base},
                {"degX", opt.deg_x},    {"degY", opt.deg_y}, {"seed", opt.seed},
                {"samples", opt.samples}};
    std::uint64_t char_result = 0;
    if (opt.base.rfind("intmod:", 0) == 0) {
        std::uint64_t n = std::stoull(opt.base.substr(7));
        if (opt.family != "weyl")
            throw std::invalid_argument("intmod base is only wired up for the weyl family");
        Ring ring = Ring::integers_mod(n);
        FamilySpec fam = make_weyl(Scalar::from_bigint(ring, BigInt(Rational::parse(opt.k).numerator())));
        BulletAlgebra u(fam.ctx, ring);
        reports = check_unitalization(u, opt.deg_x, opt.deg_y, opt.samples, opt.seed);
        reports.push_back(check_embedding(u, opt.deg_x, opt.deg_y));
        reports.push_back(check_hom_ideal(u, opt.deg_x, opt.deg_y));
        reports.push_back(check_characteristic_propagation(u, opt.deg_x, opt.deg_y,
                                                           opt.samples, opt.seed));
        char_result = characteristic(u);
    } else {
        FamilySpec fam = build_family(opt.family, opt.k, opt.q);
        Ring base = opt.base == "integer" ? Ring::integers() : fam.ctx.ring();
        if (opt.base != "integer" && opt.base != "scalar")
            throw std::invalid_argument("unknown base '" + opt.base +
                                        "' (expected scalar, integer, or intmod:N)");
        BulletAlgebra u(fam.ctx, base);
        reports = check_unitalization(u, opt.deg_x, opt.deg_y, opt.samples, opt.seed);
        reports.push_back(check_embedding(u, opt.deg_x, opt.deg_y));
        reports.push_back(check_hom_ideal(u, opt.deg_x, opt.deg_y));
        char_result = characteristic(u);
    }
    config["characteristic"] = char_result;
    if (opt.format == "json")
        emit(report_document(config, reports, opt.seed).dump(2) + "\n", opt.out);
    else
        emit(render_text(config, reports), opt.out);
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hom-associative Ore extension toolkit"};
    app.require_subcommand(1);
    CommonOptions opt;

    CLI::App* verify = app.add_subcommand("verify", "run verification suites for a family");
    verify->add_option("--family", opt.family, "weyl | enveloping | quantum_plane");
    verify->add_option("--k", opt.k, "rational p/q or 'symbolic'");
    verify->add_option("--q", opt.q, "quantum plane parameter, rational or 'symbolic'");
    verify->add_option("--deg-x", opt.deg_x, "X-degree bound (default 3)");
    verify->add_option("--deg-y", opt.deg_y, "Y-degree bound (default 3)");
    verify->add_option("--suite", opt.suite,
                       "axioms | corollaries | general-table | unitalization | reduce | all");
    verify->add_option("--mode", opt.mode, "plain | star (default star)");
    verify->add_option("--seed", opt.seed, "seed for sampled checks (default 0)");
    verify->add_option("--format", opt.format, "text | json");
    verify->add_option("--out", opt.out, "write the report here instead of stdout");
    verify->add_option("--config", opt.config_path, "JSON config file; flags override it");

    CLI::App* reduce = app.add_subcommand("reduce", "commutator descent to 1 (weyl family)");
    reduce->add_option("--k", opt.k, "rational twist parameter");
    reduce->add_option("--poly", opt.poly, "ore polynomial, e.g. \"Y^2*X + 1\"");
    reduce->add_option("--max-steps", opt.max_steps, "step budget (default 1000)");
    reduce->add_option("--format", opt.format, "text | json");
    reduce->add_option("--out", opt.out, "write the trace here instead of stdout");
    reduce->add_option("--config", opt.config_path, "JSON config file; flags override it");

    CLI::App* unitalize =
        app.add_subcommand("unitalize", "weak unitalization checks over a base ring");
    unitalize->add_option("--family", opt.family, "weyl | enveloping | quantum_plane");
    unitalize->add_option("--k", opt.k, "family parameter");
    unitalize->add_option("--q", opt.q, "quantum plane parameter");
    unitalize->add_option("--base", opt.base, "scalar | integer | intmod:N (default scalar)");
    unitalize->add_option("--deg-x", opt.deg_x, "X-degree bound");
    unitalize->add_option("--deg-y", opt.deg_y, "Y-degree bound");
    unitalize->add_option("--samples", opt.samples, "seeded dense samples (default 20)");
    unitalize->add_option("--seed", opt.seed, "sample seed");
    unitalize->add_option("--format", opt.format, "text | json");
    unitalize->add_option("--out", opt.out, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            apply_config_file(verify, opt);
            if (opt.family.empty())
                throw std::invalid_argument("verify requires --family (flag or config file)");
            return run_verify(opt);
        }
        if (reduce->parsed()) {
            apply_config_file(reduce, opt);
            return run_reduce(opt);
        }
        if (unitalize->parsed()) {
            if (opt.family.empty())
                throw std::invalid_argument("unitalize requires --family");
            return run_unitalize(opt);
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const window_exceeded_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ring_mismatch_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const not_invertible_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
