#include "bbox/harness/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <json.hpp>

#include "bbox/harness/registry.hpp"

namespace bbox::harness {

ScalingFit fit_scaling(const std::vector<RunRecord>& records, const std::string& predictor,
                       FitStat stat) {
    std::map<std::pair<std::int32_t, std::int64_t>, std::vector<double>> cells;
    for (const auto& r : records) {
        if (!r.queries_to_optimum) throw Error("fit_scaling: unsuccessful run in input");
        cells[{r.n, r.m}].push_back(static_cast<double>(*r.queries_to_optimum));
    }
    if (cells.size() < 4) throw ConfigError("fit_scaling needs at least 4 sizes");

    const bool m_based = predictor.front() == 'm';
    std::vector<double> xs, ys, normalized;
    for (auto& [size, qs] : cells) {
        if (qs.size() < 10) throw ConfigError("fit_scaling needs at least 10 seeds per size");
        double q;
        if (stat == FitStat::Mean) {
            q = 0.0;
            for (double v : qs) q += v;
            q /= static_cast<double>(qs.size());
        } else {
            std::sort(qs.begin(), qs.end());
            q = qs[qs.size() / 2];
        }
        xs.push_back(std::log(m_based ? static_cast<double>(size.second)
                                      : static_cast<double>(size.first)));
        ys.push_back(std::log(q));
        normalized.push_back(q / eval_predictor(predictor, size.first, size.second));
    }

    const auto k = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    ScalingFit fit;
    fit.predictor = predictor;
    fit.points = xs.size();
    fit.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / k;
    for (std::size_t i = 0; i < xs.size(); ++i)
        fit.residual = std::max(fit.residual, std::fabs(ys[i] - (fit.intercept + fit.slope * xs[i])));
    fit.ratio = *std::max_element(normalized.begin(), normalized.end()) /
                *std::min_element(normalized.begin(), normalized.end());
    return fit;
}

std::string to_json(const ScalingFit& f) {
    nlohmann::json j;
    j["predictor"] = f.predictor;
    j["slope"] = f.slope;
    j["intercept"] = f.intercept;
    j["residual"] = f.residual;
    j["ratio"] = f.ratio;
    j["points"] = f.points;
    return j.dump();
}

} // namespace bbox::harness
