#include "bbox/harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>

namespace bbox::harness {

ExperimentConfig config_from_table(const std::string& name, const TomlTable& t) {
    ExperimentConfig cfg;
    cfg.name = name;
    auto get = [&](const char* key) -> const TomlValue* {
        auto it = t.find(key);
        return it == t.end() ? nullptr : &it->second;
    };
    if (const auto* v = get("algorithm")) cfg.algorithm = v->as_string();
    if (cfg.algorithm.empty()) throw ConfigError("experiment needs an algorithm");
    if (const auto* v = get("family")) cfg.family = v->as_string();
    if (cfg.family.empty()) throw ConfigError("experiment needs a family");
    if (const auto* v = get("weights")) cfg.weights = v->as_string();
    if (const auto* v = get("seeds")) cfg.seeds = static_cast<std::uint64_t>(v->as_int());
    if (const auto* v = get("seed-base")) cfg.seed_base = static_cast<std::uint64_t>(v->as_int());
    if (const auto* v = get("budget-multiplier")) cfg.budget_multiplier = v->as_double();
    if (const auto* v = get("timings")) cfg.timings = v->as_bool();

    const auto* ns = get("n");
    const auto* ms = get("m");
    if (ns && ms) {
        const auto& na = ns->as_array();
        const auto& ma = ms->as_array();
        if (na.size() != ma.size()) throw ConfigError("n and m arrays differ in length");
        for (std::size_t i = 0; i < na.size(); ++i)
            cfg.sizes.push_back({static_cast<std::int32_t>(na[i].as_int()),
                                 ma[i].as_int()});
    } else if (ns) {
        for (const auto& v : ns->as_array())
            cfg.sizes.push_back({static_cast<std::int32_t>(v.as_int()), 0});
    } else if (ms) {
        for (const auto& v : ms->as_array())
            cfg.sizes.push_back({static_cast<std::int32_t>(v.as_int() + 1), v.as_int()});
    }
    if (cfg.sizes.empty()) throw ConfigError("experiment needs a size grid (n and/or m arrays)");
    return cfg;
}

std::vector<ExperimentConfig> default_campaign() {
    auto mk = [](const char* alg, const char* family, const char* weights,
                 std::vector<SizeCell> sizes, std::uint64_t seeds) {
        ExperimentConfig c;
        c.name = alg;
        c.algorithm = alg;
        c.family = family;
        c.weights = weights;
        c.sizes = std::move(sizes);
        c.seeds = seeds;
        return c;
    };
    std::vector<ExperimentConfig> cs;
    cs.push_back(mk("mst-unrestricted", "random", "distinct",
                    {{6, 10}, {8, 16}, {10, 24}, {12, 30}}, 20));
    cs.push_back(mk("mst-unary", "random", "distinct", {{6, 12}, {8, 16}, {10, 20}, {12, 24}}, 15));
    cs.push_back(mk("mst-rb-unary", "random", "unit", {{6, 12}, {8, 16}, {10, 20}, {12, 24}}, 15));
    cs.push_back(
        mk("mst-binary", "random", "distinct", {{9, 16}, {17, 32}, {33, 64}, {65, 128}}, 15));
    cs.push_back(
        mk("mst-3ary", "random", "distinct", {{17, 32}, {33, 64}, {65, 128}, {129, 256}}, 15));
    cs.push_back(mk("mst-rls", "random", "distinct", {{5, 8}, {6, 10}, {7, 12}, {8, 16}}, 15));
    cs.push_back(mk("mst-ea", "random", "distinct", {{5, 8}, {6, 10}, {7, 12}, {8, 16}}, 15));
    cs.push_back(mk("sssp-multi", "hidden-path", "unit", {{8, 0}, {12, 0}, {16, 0}, {24, 0}}, 25));
    cs.push_back(
        mk("sssp-multi-complete", "cheap-pred", "unit", {{8, 0}, {12, 0}, {16, 0}, {24, 0}}, 25));
    cs.push_back(mk("sssp-single-unrestricted", "random", "distinct",
                    {{6, 15}, {8, 28}, {10, 45}, {12, 66}}, 25));
    cs.push_back(mk("sssp-single-ranking", "random", "distinct",
                    {{6, 15}, {8, 28}, {10, 45}, {12, 66}}, 25));
    cs.push_back(mk("sssp-struct-unary", "random", "reals",
                    {{6, 15}, {8, 28}, {10, 45}, {12, 66}}, 10));
    cs.push_back(mk("sssp-struct-binary", "random", "reals",
                    {{6, 15}, {8, 28}, {10, 45}, {12, 66}}, 10));
    cs.push_back(mk("sssp-struct-3ary", "random", "reals",
                    {{6, 15}, {8, 28}, {10, 45}, {12, 66}}, 10));
    cs.push_back(mk("sssp-redirect-rls", "random", "reals",
                    {{6, 15}, {8, 28}, {10, 45}, {12, 66}}, 10));
    return cs;
}

int run_report(const ReportOptions& opts, std::ostream& out) {
    std::vector<ExperimentConfig> campaign;
    if (opts.config_path) {
        for (const auto& [name, table] : parse_toml_file(*opts.config_path))
            campaign.push_back(config_from_table(name, table));
    } else {
        campaign = default_campaign();
    }

    out << std::left << std::setw(26) << "algorithm" << std::setw(16) << "model"
        << std::setw(18) << "claimed" << std::setw(12) << "mean-q/pred" << std::setw(10)
        << "spread" << std::setw(10) << "success" << std::setw(10) << "violations"
        << "\n";
    out << std::string(102, '-') << "\n";

    int exit_code = 0;
    for (auto cfg : campaign) {
        if (opts.jobs > 0) cfg.jobs = opts.jobs;
        if (opts.budget_multiplier > 0) cfg.budget_multiplier = opts.budget_multiplier;
        if (opts.seed_base > 0) cfg.seed_base = opts.seed_base;
        const AlgorithmInfo& info = find_algorithm(cfg.algorithm);
        auto rows = run_experiment(cfg);

        std::map<std::pair<std::int32_t, std::int64_t>, std::pair<double, std::size_t>> cells;
        std::size_t ok = 0, violations = 0;
        for (const auto& r : rows) {
            if (r.queries_to_optimum) {
                ++ok;
                auto& cell = cells[{r.n, r.m}];
                cell.first += static_cast<double>(*r.queries_to_optimum);
                ++cell.second;
                if (info.exact &&
                    static_cast<double>(*r.queries_to_optimum) > info.bound(r.n, r.m) + 1e-9)
                    ++violations;
            } else if (info.exact) {
                ++violations; // exact algorithms must always latch in budget
            }
        }
        double norm_min = INF, norm_max = 0.0, norm_sum = 0.0;
        for (const auto& [size, cell] : cells) {
            double mean = cell.first / static_cast<double>(cell.second);
            double norm = mean / eval_predictor(info.predictor, size.first, size.second);
            norm_min = std::min(norm_min, norm);
            norm_max = std::max(norm_max, norm);
            norm_sum += norm;
        }
        double norm_mean = cells.empty() ? 0.0 : norm_sum / static_cast<double>(cells.size());
        double spread = (norm_min > 0 && !cells.empty()) ? norm_max / norm_min : 0.0;

        out << std::left << std::setw(26) << info.id << std::setw(16)
            << to_string(info.session_cap) << std::setw(18) << info.claimed << std::setw(12)
            << std::fixed << std::setprecision(3) << norm_mean << std::setw(10)
            << std::setprecision(2) << spread << std::setw(10)
            << (std::to_string(ok) + "/" + std::to_string(rows.size())) << std::setw(10)
            << violations << "\n";
        if (violations > 0 || ok != rows.size()) exit_code = 1;
    }
    return exit_code;
}

} // namespace bbox::harness
