#include "bbox/harness/experiment.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <omp.h>

namespace bbox::harness {

std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg) {
    if (cfg.sizes.empty()) throw ConfigError("empty size grid");
    if (cfg.seeds < 1) throw ConfigError("need at least one seed");
    const AlgorithmInfo& info = find_algorithm(cfg.algorithm);

    struct Cell {
        SizeCell size;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < cfg.sizes.size(); ++i)
        for (std::uint64_t s = 0; s < cfg.seeds; ++s)
            cells.push_back({cfg.sizes[i],
                             mix_seed(cfg.seed_base, (static_cast<std::uint64_t>(i) << 32) | s)});

    std::vector<RunRecord> rows(cells.size());
    std::exception_ptr failure = nullptr;

    const int jobs = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(cells.size()); ++i) {
        try {
            const Cell& cell = cells[static_cast<std::size_t>(i)];
            PreparedInstance inst = prepare_instance(info.problem, cfg.family, cfg.weights,
                                                     cell.size.n, cell.size.m, cell.seed);
            double bound = info.bound(inst.facts.n, inst.facts.m);
            auto budget = static_cast<std::uint64_t>(
                std::ceil(std::max(1.0, cfg.budget_multiplier * bound)));
            AlgorithmSpec alg = info.make();
            RunResult res = run(alg, *inst.oracle, inst.optimum, inst.facts, info.session_cap,
                                budget, cell.seed, cfg.timings);
            res.record.instance_id = inst.instance_id;
            rows[static_cast<std::size_t>(i)] = res.record;
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

void write_csv(const std::string& path, const std::vector<RunRecord>& rows) {
    std::ofstream os(path);
    if (!os) throw Error("cannot open for writing: " + path);
    os << csv_header() << "\n";
    for (const auto& r : rows) os << csv_row(r) << "\n";
}

std::vector<RunRecord> read_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open: " + path);
    std::string line;
    std::getline(is, line);
    if (line != csv_header()) throw Error("unexpected CSV header in " + path);
    std::vector<RunRecord> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::string cur;
        for (char c : line) {
            if (c == ',') {
                f.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        f.push_back(cur);
        if (f.size() != 10) throw Error("bad CSV row: " + line);
        RunRecord r;
        r.instance_id = f[0];
        r.algorithm = f[1];
        r.model = f[2];
        r.n = static_cast<std::int32_t>(std::stol(f[3]));
        r.m = std::stoll(f[4]);
        r.seed = std::stoull(f[5]);
        if (!f[6].empty()) r.queries_to_optimum = std::stoull(f[6]);
        r.budget = std::stoull(f[7]);
        r.success = f[8] == "1";
        r.wall_ms = std::stoull(f[9]);
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace bbox::harness
