#pragma once

#include <string>
#include <vector>

#include "bbox/core/run.hpp"

namespace bbox::harness {

struct ScalingFit {
    std::string predictor;
    double slope = 0.0;       // log-log least squares vs the raw size variable
    double intercept = 0.0;
    double residual = 0.0;    // max absolute log-space residual
    double ratio = 0.0;       // max/min of mean queries / predictor over the grid
    std::size_t points = 0;
};

enum class FitStat { Mean, Median };

// Groups records by (n, m), aggregates queries-to-optimum per cell, fits
// log(stat) against log(size variable: m for m-predictors, n otherwise) and
// normalizes against the predictor. Requires >= 4 sizes and >= 10 seeds each.
ScalingFit fit_scaling(const std::vector<RunRecord>& records, const std::string& predictor,
                       FitStat stat = FitStat::Mean);

std::string to_json(const ScalingFit& f);

} // namespace bbox::harness
