#include "bbox/ops/verify.hpp"

#include <cmath>
#include <unordered_map>

#include <json.hpp>

namespace bbox::ops {

namespace {

std::uint64_t encode(const Point& p) {
    if (const auto* b = std::get_if<BitString>(&p)) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < b->size(); ++i) v = (v << 1) | (*b)[i];
        return v;
    }
    const auto& x = std::get<PredVector>(p);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        v = v * static_cast<std::uint64_t>(x.n) + static_cast<std::uint64_t>(x.pred[i] - 1);
    return v;
}

double tv_distance(const std::unordered_map<std::uint64_t, std::uint64_t>& a,
                   const std::unordered_map<std::uint64_t, std::uint64_t>& b, double trials) {
    double sum = 0.0;
    for (const auto& [k, ca] : a) {
        auto it = b.find(k);
        double cb = it == b.end() ? 0.0 : static_cast<double>(it->second);
        sum += std::fabs(static_cast<double>(ca) - cb);
    }
    for (const auto& [k, cb] : b)
        if (!a.count(k)) sum += static_cast<double>(cb);
    return sum / (2.0 * trials);
}

} // namespace

std::string to_json(const VerifyReport& r) {
    nlohmann::json j;
    j["operator"] = r.op;
    j["notion"] = r.notion;
    j["dim"] = r.dim;
    j["trials"] = r.trials;
    j["max_tv"] = r.max_tv;
    j["threshold"] = r.threshold;
    j["pass"] = r.pass;
    return j.dump();
}

VerifyReport verify_unbiased(const VariationOp& op, SymmetryNotion notion, std::size_t dim,
                             const std::vector<std::vector<Point>>& parent_panel,
                             const VerifyConfig& cfg) {
    const bool bits = op.domain == Domain::BitString;
    if ((bits && dim > 8) || (!bits && dim > 6))
        throw Error("dimension-too-large for unbiasedness verification");
    if ((bits && notion != SymmetryNotion::HypercubeUnbiased) ||
        (!bits && notion == SymmetryNotion::HypercubeUnbiased))
        throw DomainMismatch("symmetry notion does not fit operator domain");

    RngStream rng(cfg.seed);
    VerifyReport report{op.name, to_string(notion), dim, cfg.trials, 0.0, cfg.threshold, false};

    for (const auto& parents : parent_panel) {
        for (std::size_t t = 0; t < cfg.symmetries; ++t) {
            Symmetry sym = random_symmetry(notion, dim, rng);
            std::vector<Point> transformed;
            transformed.reserve(parents.size());
            for (const auto& p : parents) transformed.push_back(apply_symmetry(sym, p));

            std::unordered_map<std::uint64_t, std::uint64_t> hist_a, hist_b;
            for (std::size_t i = 0; i < cfg.trials; ++i) {
                Point a = op.sample(transformed, rng);
                ++hist_a[encode(a)];
                Point b = apply_symmetry(sym, op.sample(parents, rng));
                ++hist_b[encode(b)];
            }
            report.max_tv =
                std::max(report.max_tv, tv_distance(hist_a, hist_b, static_cast<double>(cfg.trials)));
        }
    }
    report.pass = report.max_tv <= cfg.threshold;
    return report;
}

std::vector<std::vector<Point>> random_parent_panel(const VariationOp& op, std::size_t dim,
                                                    std::size_t count, std::uint64_t seed) {
    RngStream rng(seed);
    std::vector<std::vector<Point>> panel;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Point> parents;
        for (int a = 0; a < op.arity; ++a) {
            if (op.domain == Domain::BitString) {
                BitString x(dim);
                for (std::size_t j = 0; j < dim; ++j) x[j] = static_cast<std::uint8_t>(rng.coin());
                parents.emplace_back(std::move(x));
            } else {
                PredVector x(static_cast<std::int32_t>(dim));
                for (std::int32_t v = 2; v <= x.n; ++v)
                    x.set(v, static_cast<std::int32_t>(1 + rng.below(dim)));
                parents.emplace_back(std::move(x));
            }
        }
        panel.push_back(std::move(parents));
        if (op.arity == 0) break; // one empty tuple is the whole panel
    }
    return panel;
}

} // namespace bbox::ops
