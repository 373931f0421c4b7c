#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bbox/harness/experiment.hpp"
#include "bbox/harness/toml_lite.hpp"

namespace bbox::harness {

ExperimentConfig config_from_table(const std::string& name, const TomlTable& t);

// The shipped default campaign: one sweep per registered algorithm at desk
// scale, mirroring the bound table rows.
std::vector<ExperimentConfig> default_campaign();

struct ReportOptions {
    std::optional<std::string> config_path; // overrides the default campaign
    int jobs = 0;
    double budget_multiplier = 0.0; // 0 keeps per-config values
    std::uint64_t seed_base = 0;    // 0 keeps per-config values
};

// Runs the campaign and renders one row per algorithm: claimed bound,
// measured normalized mean, spread, and the exact-bound violation counter.
// Returns 0, or 1 when any exact bound was violated or a run failed.
int run_report(const ReportOptions& opts, std::ostream& out);

} // namespace bbox::harness
