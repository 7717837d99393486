#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kummerlab/acceptance.hpp"
#include "kummerlab/bernoulli.hpp"
#include "kummerlab/class_space.hpp"
#include "kummerlab/classifier.hpp"
#include "kummerlab/cyclotomic.hpp"
#include "kummerlab/global_units.hpp"
#include "kummerlab/parser.hpp"
#include "kummerlab/report.hpp"
#include "kummerlab/tame.hpp"

namespace {

using namespace kummerlab;

// 0 success, 1 property violation, 2 parse/usage error, 3 precision error
int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const PrecisionTooLow*>(&e) != nullptr ||
        dynamic_cast<const BadPrecision*>(&e) != nullptr)
        return 3;
    if (dynamic_cast<const ParseError*>(&e) != nullptr ||
        dynamic_cast<const BadIndex*>(&e) != nullptr ||
        dynamic_cast<const NotAnOddPrime*>(&e) != nullptr ||
        dynamic_cast<const NotAPrime*>(&e) != nullptr ||
        dynamic_cast<const NotAUnit*>(&e) != nullptr ||
        dynamic_cast<const DivisibleByP*>(&e) != nullptr ||
        dynamic_cast<const BadGaloisIndex*>(&e) != nullptr ||
        dynamic_cast<const WildRamification*>(&e) != nullptr ||
        dynamic_cast<const BadDegree*>(&e) != nullptr ||
        dynamic_cast<const TooLarge*>(&e) != nullptr ||
        dynamic_cast<const OutOfConfiguredRange*>(&e) != nullptr ||
        dynamic_cast<const ContextMismatch*>(&e) != nullptr)
        return 2;
    return 1;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

const std::vector<std::string> kGlobalAssumptions = {
    "the global-unit image is generated by -zeta and the cyclotomic units c_a; "
    "this equals the full unit image whenever the real class number is prime to p "
    "(classically known for the shipped grid p <= 31)"};

int cmd_classify(u64 p, int k, const std::string& expr) {
    auto ctx = RingContext::make(p, k);
    const CycloElem elem = parse_element(expr, ctx);
    const ClassificationReport rep = classify(elem);
    emit(report_document(ctx, expr, elem, rep, {}, "ok"));
    return 0;
}

int cmd_chain(u64 p, int k) {
    auto ctx = RingContext::make(p, k);
    Json doc;
    doc["version"] = kReportVersion;
    doc["command"] = "chain";
    doc["p"] = p;
    doc["precision"] = {{"k", ctx->k()}, {"N", ctx->pi_precision()}};

    bool ok = true;
    Json dims = Json::array();
    for (u64 n = 1; n <= p + 1; ++n) {
        const auto s = filtration_subspace(ctx, n);
        dims.push_back(s.dim());
        ok = ok && s.dim() == p + 1 - n;
    }
    doc["filtration_dims"] = dims;

    const Subspace primar = primar_subspace(ctx);
    const auto extra = primar_extra_levels(p);
    doc["primar_dim"] = primar.dim();
    doc["primar_extra_levels"] = extra;
    ok = ok && primar.dim() == 2 + extra.size();

    const bool equality = primar == filtration_subspace(ctx, p - 1);
    doc["primar_equals_level_pm1"] = equality;
    ok = ok && (equality == (p == 3));

    Json witnesses;
    if (p >= 5) {
        const auto a = classify(frame_unit(ctx, p));
        witnesses["p_primary_not_pth_power"] = classification_json(a);
        ok = ok && a.is_p_primary && !a.is_pth_power;
        const auto b = classify(ctx->from_integer(static_cast<i64>(1 + p)));
        witnesses["primaire_not_p_primary"] = classification_json(b);
        ok = ok && b.is_primaire && !b.is_p_primary;
        const auto d = classify(ctx->one() + ctx->varpi().pow(p - 2));
        witnesses["primar_not_primaire"] = classification_json(d);
        ok = ok && d.is_primar && !d.is_primaire;
    } else {
        const auto a = classify(frame_unit(ctx, p));
        witnesses["p_primary_not_pth_power"] = classification_json(a);
        ok = ok && a.is_p_primary && !a.is_pth_power;
        const auto b = classify(ctx->from_integer(static_cast<i64>(1 + p)));
        witnesses["primaire_not_p_primary"] = classification_json(b);
        ok = ok && b.is_primaire && !b.is_p_primary;
    }
    doc["witnesses"] = witnesses;
    doc["status"] = ok ? "ok" : "violation";
    emit(doc);
    return ok ? 0 : 1;
}

int cmd_counterexamples(u64 p, int k) {
    auto ctx = RingContext::make(p, k);
    bool ok = true;
    Json doc;
    doc["version"] = kReportVersion;
    doc["command"] = "counterexamples";
    doc["p"] = p;
    doc["precision"] = {{"k", ctx->k()}, {"N", ctx->pi_precision()}};

    {
        const auto rep = classify(ctx->from_integer(static_cast<i64>(1 + p)));
        const bool match = rep.is_primaire && !rep.is_p_primary;
        ok = ok && match;
        doc["one_plus_p"] = {{"expected", {{"is_primaire", true}, {"is_p_primary", false}}},
                             {"actual", classification_json(rep)},
                             {"match", match}};
    }
    {
        const auto rep = classify(ctx->one() + ctx->varpi().pow(p - 2));
        const bool expected_primar = p > 3;
        const bool match = p > 3 ? (rep.is_primar && !rep.is_primaire) : !rep.is_primar;
        ok = ok && match;
        doc["one_plus_varpi_pm2"] = {
            {"expected", {{"is_primar", expected_primar}, {"is_primaire", false}}},
            {"actual", classification_json(rep)},
            {"match", match}};
    }
    doc["status"] = ok ? "ok" : "violation";
    emit(doc);
    return ok ? 0 : 1;
}

int cmd_global(u64 p, int k, u64 samples, u64 seed) {
    auto ctx = RingContext::make(p, k);
    Json doc;
    doc["version"] = kReportVersion;
    doc["command"] = "global";
    doc["p"] = p;
    doc["precision"] = {{"k", ctx->k()}, {"N", ctx->pi_precision()}};
    Json gens = Json::array();
    for (const auto& g : global_unit_generators(p)) gens.push_back(g.label);
    doc["generators"] = gens;

    const auto rep = check_prop3_prop6(ctx, samples, seed);
    doc["dim_global_image"] = rep.dim_global;
    doc["intersections"] = {{"with_primar", rep.dim_meet_primar},
                            {"with_level_pm1", rep.dim_meet_level_pm1}};
    doc["samples"] = rep.samples;
    doc["seed"] = seed;
    doc["primar_products"] = rep.primar_products;
    doc["certified"] = rep.certified;
    Json certs = Json::array();
    for (const auto& cert : rep.certificates) certs.push_back(certificate_json(cert));
    doc["certificates"] = certs;
    doc["assumptions"] = kGlobalAssumptions;

    const bool ok = rep.dim_meet_primar == 0 && rep.dim_meet_level_pm1 == 0 &&
                    rep.certified == rep.primar_products;
    doc["status"] = ok ? "ok" : "violation";
    emit(doc);
    return ok ? 0 : 1;
}

int cmd_cor5(u64 p, u64 e, u64 r, int k, u64 samples, u64 seed) {
    auto ctx = TameContext::make(p, e, k);
    const Cor5CellReport rep = run_cor5_cell(ctx, r, samples, seed);
    Json doc;
    doc["version"] = kReportVersion;
    doc["command"] = "cor5";
    doc["p"] = p;
    doc["e"] = e;
    doc["r"] = r;
    doc["precision"] = {{"k", ctx->k()}, {"pi_precision", ctx->pi_precision()}};
    doc["samples"] = rep.samples;
    doc["seed"] = seed;
    doc["hypothesis_met"] = rep.hypothesis_met;
    doc["violations"] = rep.violations;
    doc["boundary_witness"] = {{"element", "1 + p^r"},
                               {"level_exactly_re", rep.boundary_level_exact},
                               {"fails_norm_hypothesis", rep.boundary_hypothesis_fails}};
    const bool ok = rep.violations == 0 && rep.boundary_level_exact && rep.boundary_hypothesis_fails;
    doc["status"] = ok ? "ok" : "violation";
    emit(doc);
    return ok ? 0 : 1;
}

int cmd_regular(u64 p) {
    const auto rep = is_regular(p);
    Json doc;
    doc["version"] = kReportVersion;
    doc["command"] = "regular";
    doc["p"] = p;
    doc["regular"] = rep.regular;
    doc["irregular_indices"] = rep.irregular_indices;
    doc["status"] = "ok";
    emit(doc);
    return 0;
}

int cmd_selftest(const std::string& grid) {
    AcceptanceConfig cfg;
    cfg.small_grid = grid != "full";
    const auto results = run_acceptance(cfg, &std::cerr);
    Json doc;
    doc["version"] = kReportVersion;
    doc["command"] = "selftest";
    doc["grid"] = cfg.small_grid ? "small" : "full";
    Json criteria = Json::array();
    for (const auto& r : results) {
        Json c;
        c["id"] = r.id;
        c["name"] = r.name;
        c["pass"] = r.pass;
        if (!r.pass) c["detail"] = r.detail;
        criteria.push_back(c);
    }
    doc["criteria"] = criteria;
    const bool ok = all_passed(results);
    doc["all_pass"] = ok;
    doc["status"] = ok ? "ok" : "violation";
    emit(doc);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"kummerlab: exact arithmetic in Z_p[zeta] and local unit classification"};
    app.require_subcommand(1);

    u64 p = 0, e = 0, r = 1, samples = 0, seed = 0;
    int k = 4;
    std::string element, grid = "small";

    auto* classify_cmd = app.add_subcommand("classify", "classify a unit under the four notions");
    classify_cmd->add_option("--p", p, "odd prime")->required();
    classify_cmd->add_option("--k", k, "coefficient precision (default 4)");
    classify_cmd->add_option("--element", element, "expression over zeta, pi, varpi, p")->required();

    auto* chain_cmd = app.add_subcommand("chain", "filtration and primar-class dimensions with witnesses");
    chain_cmd->add_option("--p", p, "odd prime")->required();
    chain_cmd->add_option("--k", k, "coefficient precision (default 4)");

    auto* ce_cmd = app.add_subcommand("counterexamples", "the separating units, expected vs actual");
    ce_cmd->add_option("--p", p, "odd prime")->required();
    ce_cmd->add_option("--k", k, "coefficient precision (default 4)");

    auto* global_cmd = app.add_subcommand("global", "global-unit image, intersections, certificates");
    global_cmd->add_option("--p", p, "odd prime")->required();
    global_cmd->add_option("--k", k, "coefficient precision (default 4)");
    global_cmd->add_option("--samples", samples, "sampled generator products (default 200)");
    global_cmd->add_option("--seed", seed, "sampling seed (default 0)");

    auto* cor5_cmd = app.add_subcommand("cor5", "tame norm filtration sweep on one (p, e, r) cell");
    cor5_cmd->add_option("--p", p, "prime (2 allowed)")->required();
    cor5_cmd->add_option("--e", e, "tame ramification degree")->required();
    cor5_cmd->add_option("--r", r, "filtration step (default 1)");
    cor5_cmd->add_option("--k", k, "coefficient precision (default 4)");
    cor5_cmd->add_option("--samples", samples, "samples (default 1000)");
    cor5_cmd->add_option("--seed", seed, "sampling seed (default 0)");

    auto* regular_cmd = app.add_subcommand("regular", "Kummer regularity via exact Bernoulli numerators");
    regular_cmd->add_option("--p", p, "odd prime up to 150")->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance criteria");
    selftest_cmd->add_option("--grid", grid, "small or full (default small)")
        ->check(CLI::IsMember({"small", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) return app.exit(err); // --help
        app.exit(err);
        return 2;
    }

    try {
        if (app.got_subcommand(classify_cmd)) return cmd_classify(p, k, element);
        if (app.got_subcommand(chain_cmd)) return cmd_chain(p, k);
        if (app.got_subcommand(ce_cmd)) return cmd_counterexamples(p, k);
        if (app.got_subcommand(global_cmd)) return cmd_global(p, k, samples ? samples : 200, seed);
        if (app.got_subcommand(cor5_cmd)) return cmd_cor5(p, e, r, k, samples ? samples : 1000, seed);
        if (app.got_subcommand(regular_cmd)) return cmd_regular(p);
        if (app.got_subcommand(selftest_cmd)) return cmd_selftest(grid);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return exit_code_for(ex);
    }
    return 2;
}
