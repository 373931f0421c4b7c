#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bbox/core/run.hpp"
#include "bbox/harness/registry.hpp"

namespace bbox::harness {

struct SizeCell {
    std::int32_t n = 0;
    std::int64_t m = 0;
};

struct ExperimentConfig {
    std::string name = "experiment";
    std::string algorithm;
    std::string family;
    std::string weights = "unit";
    std::vector<SizeCell> sizes;
    std::uint64_t seeds = 10;
    std::uint64_t seed_base = 1;
    double budget_multiplier = 50.0;
    int jobs = 0;       // 0 = library default
    bool timings = false;
};

// One row per (size, seed), deterministic per seed and independent of the job
// count; cells execute in parallel.
std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg);

void write_csv(const std::string& path, const std::vector<RunRecord>& rows);
std::vector<RunRecord> read_csv(const std::string& path);

} // namespace bbox::harness
