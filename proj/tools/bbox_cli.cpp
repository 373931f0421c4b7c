#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "bbox/harness/report.hpp"
#include "bbox/harness/scaling.hpp"
#include "bbox/mst/graph.hpp"
#include "bbox/ops/bit_ops.hpp"
#include "bbox/ops/pred_ops.hpp"
#include "bbox/ops/verify.hpp"
#include "bbox/sssp/instance.hpp"

using namespace bbox;

namespace {

int cmd_generate(const std::string& family, int n, long long m, const std::string& weights,
                 std::uint64_t seed, const std::string& out_path) {
    std::string text;
    auto mode = [&]() -> mst::WeightMode {
        if (weights == "distinct") return mst::DistinctUniform{};
        if (weights == "reals") return mst::RandomReals{};
        return mst::UnitWeights{};
    }();
    if (family == "path") {
        text = mst::to_dimacs(mst::gen_path(m > 0 ? m : n - 1, mode));
    } else if (family == "random") {
        text = mst::to_dimacs(mst::gen_random_connected(n, m, mode, seed));
    } else if (family == "complete-hidden-tree") {
        text = mst::to_dimacs(mst::gen_complete_hidden_tree(n, seed));
    } else if (family == "hidden-path") {
        text = sssp::to_dimacs(sssp::gen_hidden_path(n, seed, false));
    } else if (family == "hidden-path-complete") {
        text = sssp::to_dimacs(sssp::gen_hidden_path(n, seed, true));
    } else if (family == "cheap-pred") {
        text = sssp::to_dimacs(sssp::gen_complete_cheap_pred(n, seed));
    } else if (family == "sssp-random") {
        text = sssp::to_dimacs(sssp::gen_random_connected(n, m, mode, seed));
    } else {
        std::cerr << "unknown family: " << family << "\n";
        return 2;
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(out_path);
        os << text;
    }
    return 0;
}

int run_sections(const std::string& config_path, const std::string& only_section,
                 const std::string& out_path, int jobs, double budget_multiplier,
                 std::uint64_t seed, bool timings) {
    auto doc = harness::parse_toml_file(config_path);
    std::vector<RunRecord> rows;
    bool matched = false;
    for (const auto& [name, table] : doc) {
        if (!only_section.empty() && name != only_section) continue;
        matched = true;
        auto cfg = harness::config_from_table(name.empty() ? "experiment" : name, table);
        if (jobs > 0) cfg.jobs = jobs;
        if (budget_multiplier > 0) cfg.budget_multiplier = budget_multiplier;
        if (seed > 0) cfg.seed_base = seed;
        cfg.timings = cfg.timings || timings;
        auto r = harness::run_experiment(cfg);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    if (!matched) throw ConfigError("no matching experiment section in " + config_path);
    if (out_path.empty()) {
        std::cout << csv_header() << "\n";
        for (const auto& r : rows) std::cout << csv_row(r) << "\n";
    } else {
        harness::write_csv(out_path, rows);
        std::cout << rows.size() << " runs written to " << out_path << "\n";
    }
    return 0;
}

// The shipped operator panel with its symmetry notions; the biased controls
// must fail.
int cmd_verify(const std::string& only_op, std::size_t trials, std::ostream& out) {
    using namespace bbox::ops;
    struct Entry {
        VariationOp op;
        SymmetryNotion notion;
        std::size_t dim;
        bool expect_pass;
        std::vector<std::vector<Point>> panel;
    };
    std::vector<Entry> entries;
    auto add = [&](VariationOp op, SymmetryNotion notion, std::size_t dim, bool expect) {
        auto panel = random_parent_panel(op, dim, 5, 0xA11CE);
        entries.push_back({std::move(op), notion, dim, expect, std::move(panel)});
    };

    add(uniform_bits(6), SymmetryNotion::HypercubeUnbiased, 6, true);
    add(rls(), SymmetryNotion::HypercubeUnbiased, 4, true);
    add(complement(), SymmetryNotion::HypercubeUnbiased, 4, true);
    add(rls_k(2), SymmetryNotion::HypercubeUnbiased, 4, true);
    add(update(), SymmetryNotion::HypercubeUnbiased, 4, true);
    add(test_op(), SymmetryNotion::HypercubeUnbiased, 4, true);
    add(standard_mutation(0.25), SymmetryNotion::HypercubeUnbiased, 4, true);
    add(one_or_two_flip(), SymmetryNotion::HypercubeUnbiased, 4, true);
    add(hamming_probe_op(2), SymmetryNotion::HypercubeUnbiased, 4, true);
    add(flip_first_bit(), SymmetryNotion::HypercubeUnbiased, 4, false);

    add(self_loops(4), SymmetryNotion::StructurePreserving, 4, true);
    add(one_to_source(4), SymmetryNotion::StructurePreserving, 4, true);
    add(extend_tree(), SymmetryNotion::StructurePreserving, 4, true);
    add(all_to_one(4), SymmetryNotion::StructurePreserving, 4, true);
    add(coincide_probe(1), SymmetryNotion::StructurePreserving, 4, true);
    add(pred_merge(), SymmetryNotion::StructurePreserving, 4, true);
    add(attach_unmarked(), SymmetryNotion::StructurePreserving, 4, true);
    add(attach_to_source_unmarked(), SymmetryNotion::StructurePreserving, 4, true);
    add(redirect_2_to_1(), SymmetryNotion::StructurePreserving, 4, false);

    add(redirect_one(), SymmetryNotion::Redirecting, 4, true);
    add(uniform_pred(4), SymmetryNotion::Redirecting, 4, true);
    add(redirect_2_to_1(), SymmetryNotion::Redirecting, 4, false);

    // extend_path and endpoint_connected_probe need path-shaped parents
    {
        PredVector p1(5);
        p1.set(2, 1); // path 1-2
        PredVector p2(5);
        p2.set(3, 1);
        p2.set(4, 3); // path 1-3-4
        entries.push_back({extend_path(),
                           SymmetryNotion::StructurePreserving,
                           5,
                           true,
                           {{Point{p1}}, {Point{p2}}}});
        PredVector other(5);
        other.set(2, 1);
        other.set(5, 2);
        entries.push_back({endpoint_connected_probe(),
                           SymmetryNotion::StructurePreserving,
                           5,
                           true,
                           {{Point{other}, Point{p1}}, {Point{other}, Point{p2}}}});
    }
    // attach on canonical partial trees of a fixed target shape
    {
        auto shape = std::make_shared<TreeShape>(std::vector<int>{-1, 0, 1, 1, 0});
        PredVector y0(5);
        PredVector y1(5);
        y1.set(3, 1);
        PredVector y2(5);
        y2.set(3, 1);
        y2.set(5, 3);
        entries.push_back({attach(shape),
                           SymmetryNotion::StructurePreserving,
                           5,
                           true,
                           {{Point{y0}}, {Point{y1}}, {Point{y2}}}});
    }

    VerifyConfig cfg;
    cfg.trials = trials;
    int rc = 0;
    for (const auto& e : entries) {
        if (!only_op.empty() && e.op.name != only_op) continue;
        auto rep = verify_unbiased(e.op, e.notion, e.dim, e.panel, cfg);
        bool ok = e.expect_pass ? rep.pass : (rep.max_tv >= 0.3);
        out << to_json(rep) << (ok ? "" : "  <-- UNEXPECTED") << "\n";
        if (!ok) rc = 1;
    }
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"black-box query-complexity laboratory"};
    app.require_subcommand(1);

    std::string config_path, out_path, family = "random", weights = "unit", section, only_op,
                predictor = "m", in_csv;
    int n = 8, jobs = 0;
    long long m = 0;
    std::uint64_t seed = 0;
    double budget_multiplier = 0.0;
    std::size_t trials = 100000;
    bool timings = false, use_median = false;

    auto* gen = app.add_subcommand("generate", "write an instance file");
    gen->add_option("--family", family, "instance family");
    gen->add_option("--n", n, "vertex count");
    gen->add_option("--m", m, "edge count (family-dependent)");
    gen->add_option("--weights", weights, "unit | distinct | reals");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--out", out_path, "output path (stdout when omitted)");

    auto* runc = app.add_subcommand("run", "execute one experiment section");
    runc->add_option("--config", config_path, "TOML campaign file")->required();
    runc->add_option("--name", section, "section name (first/all when omitted)");
    runc->add_option("--out", out_path, "CSV output path");
    runc->add_option("--jobs", jobs, "parallel jobs");
    runc->add_option("--seed", seed, "seed base override");
    runc->add_option("--budget-multiplier", budget_multiplier, "budget multiplier override");
    runc->add_flag("--timings", timings, "record wall times (breaks byte determinism)");

    auto* sweep = app.add_subcommand("sweep", "execute every experiment section");
    sweep->add_option("--config", config_path, "TOML campaign file")->required();
    sweep->add_option("--out", out_path, "CSV output path");
    sweep->add_option("--jobs", jobs, "parallel jobs");
    sweep->add_option("--seed", seed, "seed base override");
    sweep->add_option("--budget-multiplier", budget_multiplier, "budget multiplier override");
    sweep->add_flag("--timings", timings, "record wall times");

    auto* fit = app.add_subcommand("fit", "fit a scaling law to a CSV of runs");
    fit->add_option("--in", in_csv, "input CSV")->required();
    fit->add_option("--predictor", predictor, "normalization expression")->required();
    fit->add_flag("--median", use_median, "aggregate with medians");

    auto* verify = app.add_subcommand("verify-unbiased", "statistical operator verification");
    verify->add_option("--op", only_op, "single operator name (all when omitted)");
    verify->add_option("--trials", trials, "samples per distribution");
    verify->add_flag("--all", "run the whole panel (default)");

    auto* report = app.add_subcommand("report", "run the default campaign and summarize");
    report->add_option("--config", config_path, "campaign override");
    report->add_option("--jobs", jobs, "parallel jobs");
    report->add_option("--seed", seed, "seed base override");
    report->add_option("--budget-multiplier", budget_multiplier, "budget multiplier override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_generate(family, n, m, weights, seed, out_path);
        if (runc->parsed())
            return run_sections(config_path, section, out_path, jobs, budget_multiplier, seed,
                                timings);
        if (sweep->parsed())
            return run_sections(config_path, "", out_path, jobs, budget_multiplier, seed, timings);
        if (fit->parsed()) {
            auto rows = harness::read_csv(in_csv);
            auto f = harness::fit_scaling(
                rows, predictor,
                use_median ? harness::FitStat::Median : harness::FitStat::Mean);
            std::cout << harness::to_json(f) << "\n";
            return 0;
        }
        if (verify->parsed()) return cmd_verify(only_op, trials, std::cout);
        if (report->parsed()) {
            harness::ReportOptions opts;
            if (!config_path.empty()) opts.config_path = config_path;
            opts.jobs = jobs;
            opts.budget_multiplier = budget_multiplier;
            opts.seed_base = seed;
            return harness::run_report(opts, std::cout);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
