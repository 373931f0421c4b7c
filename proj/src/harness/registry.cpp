#include "bbox/harness/registry.hpp"

#include <cmath>

#include "bbox/mst/mst_algorithms.hpp"
#include "bbox/mst/mst_oracle.hpp"
#include "bbox/sssp/algorithms.hpp"
#include "bbox/sssp/oracles.hpp"

namespace bbox::harness {

namespace {

double dn(std::int32_t n) { return static_cast<double>(n); }
double dm(std::int64_t m) { return static_cast<double>(m); }
double ln(double x) { return std::log(std::max(x, 2.0)); }

std::vector<AlgorithmInfo> build_registry() {
    std::vector<AlgorithmInfo> r;

    r.push_back({"mst-unrestricted", &mst::alg_mst_unrestricted,
                 Capability::ranking_unrestricted(), ProblemKind::MstBi, "2m+1", "m", true,
                 [](std::int32_t, std::int64_t m) { return 2.0 * dm(m) + 1.0; }});
    r.push_back({"mst-unary", &mst::alg_mst_unary, Capability::unbiased(1), ProblemKind::MstBi,
                 "O(mn log(m/n))", "m*n*log(m/n)", false,
                 [](std::int32_t n, std::int64_t m) {
                     return dm(m) * dn(n) * ln(dm(m) / dn(n)) + 8.0 * dm(m) * ln(dm(m)) +
                            4.0 * dm(m);
                 }});
    r.push_back({"mst-rb-unary", &mst::alg_mst_rb_unary, Capability::ranking_unbiased(1),
                 ProblemKind::MstBi, "O(mn log n)", "m*n*logn", false,
                 [](std::int32_t n, std::int64_t m) {
                     return 3.0 * dm(m) * ln(dm(m)) * (dn(n) + 2.0) + 4.0 * dm(m);
                 }});
    r.push_back({"mst-binary", &mst::alg_mst_binary, Capability::ranking_unbiased(2),
                 ProblemKind::MstBi, "O(m log n)", "m*logn", false,
                 [](std::int32_t, std::int64_t m) {
                     return 14.0 * dm(m) * ln(dm(m)) + 12.0 * dm(m);
                 }});
    r.push_back({"mst-3ary", &mst::alg_mst_3ary, Capability::ranking_unbiased(3),
                 ProblemKind::MstBi, "O(m)", "m", false,
                 [](std::int32_t, std::int64_t m) { return 6.0 * dm(m) + 4.0; }});
    r.push_back({"mst-rls", &mst::baseline_rls_mst, Capability::unbiased(1), ProblemKind::MstBi,
                 "O(m^2 log n)", "m2*logn", false,
                 [](std::int32_t n, std::int64_t m) {
                     return 4.0 * dm(m) * dm(m) * ln(dn(n)) + 16.0 * dm(m);
                 }});
    r.push_back({"mst-ea", &mst::baseline_ea_mst, Capability::unbiased(1), ProblemKind::MstBi,
                 "O(m^2 log n)", "m2*logn", false,
                 [](std::int32_t n, std::int64_t m) {
                     return 4.0 * dm(m) * dm(m) * ln(dn(n)) + 16.0 * dm(m);
                 }});

    r.push_back({"sssp-multi", &sssp::alg_sssp_multi, Capability::unrestricted(),
                 ProblemKind::SsspMulti, "n-1", "n", true,
                 [](std::int32_t n, std::int64_t) { return dn(n) - 1.0; }});
    r.push_back({"sssp-multi-complete", &sssp::alg_sssp_multi_complete, Capability::unrestricted(),
                 ProblemKind::SsspMulti, "floor((n+1)/2)+1", "n", true,
                 [](std::int32_t n, std::int64_t) {
                     return std::floor((dn(n) + 1.0) / 2.0) + 1.0;
                 }});
    r.push_back({"sssp-single-unrestricted", &sssp::alg_sssp_single_unrestricted,
                 Capability::unrestricted(), ProblemKind::SsspSingle, "n(n-1)/2", "n2", true,
                 [](std::int32_t n, std::int64_t) { return dn(n) * (dn(n) - 1.0) / 2.0; }});
    r.push_back({"sssp-single-ranking", &sssp::alg_sssp_single_ranking,
                 Capability::ranking_unrestricted(), ProblemKind::SsspSingle, "(n-1)^2", "n2",
                 true, [](std::int32_t n, std::int64_t) { return (dn(n) - 1.0) * (dn(n) - 1.0); }});
    r.push_back({"sssp-struct-unary", &sssp::alg_struct_unary, Capability::unbiased(1),
                 ProblemKind::SsspSingle, "O(n^3 log n)", "n3*logn", false,
                 [](std::int32_t n, std::int64_t) {
                     return dn(n) * dn(n) * dn(n) * ln(dn(n)) + 6.0 * dn(n) * ln(dn(n)) + 8.0;
                 }});
    r.push_back({"sssp-struct-binary", &sssp::alg_struct_binary, Capability::unbiased(2),
                 ProblemKind::SsspSingle, "O(n^2 log n)", "n2*logn", false,
                 [](std::int32_t n, std::int64_t) {
                     return 6.0 * dn(n) * dn(n) * ln(dn(n)) + 8.0 * dn(n) * dn(n) + 16.0;
                 }});
    r.push_back({"sssp-struct-3ary", &sssp::alg_struct_3ary, Capability::unbiased(3),
                 ProblemKind::SsspSingle, "O(n^2)", "n2", false,
                 [](std::int32_t n, std::int64_t) {
                     return 4.0 * dn(n) * dn(n) + 8.0 * dn(n) + 8.0;
                 }});
    r.push_back({"sssp-redirect-rls", &sssp::baseline_redirect_rls, Capability::unbiased(1),
                 ProblemKind::SsspSingle, "O(n^3)", "n3", false,
                 [](std::int32_t n, std::int64_t) {
                     return 8.0 * dn(n) * dn(n) * dn(n) + 64.0;
                 }});
    return r;
}

} // namespace

const std::vector<AlgorithmInfo>& registry() {
    static const std::vector<AlgorithmInfo> r = build_registry();
    return r;
}

const AlgorithmInfo& find_algorithm(const std::string& id) {
    for (const auto& a : registry())
        if (a.id == id) return a;
    throw ConfigError("unknown algorithm: " + id);
}

namespace {

mst::WeightMode parse_weights(const std::string& w) {
    if (w == "unit" || w.empty()) return mst::UnitWeights{};
    if (w == "distinct") return mst::DistinctUniform{};
    if (w == "reals") return mst::RandomReals{};
    throw ConfigError("unknown weight mode: " + w);
}

InstanceFacts facts_of(const mst::GraphInstance& g, double big_c = 0.0) {
    InstanceFacts f;
    f.n = g.n;
    f.m = g.m();
    f.complete = g.is_complete();
    f.duplicate_weights = g.has_duplicate_weights();
    f.distinct_perm = g.is_distinct_perm();
    f.big_c = big_c;
    return f;
}

} // namespace

PreparedInstance prepare_instance(ProblemKind problem, const std::string& family,
                                  const std::string& weights, std::int32_t n, std::int64_t m,
                                  std::uint64_t seed) {
    PreparedInstance out;
    if (problem == ProblemKind::MstBi) {
        mst::GraphInstance g;
        if (family == "path")
            g = mst::gen_path(m > 0 ? m : n - 1, parse_weights(weights));
        else if (family == "complete-hidden-tree")
            g = mst::gen_complete_hidden_tree(n, seed);
        else if (family == "random")
            g = mst::gen_random_connected(n, m, parse_weights(weights), seed);
        else
            throw ConfigError("unknown MST family: " + family);
        auto oracle = std::make_shared<mst::MstOracle>(std::move(g));
        out.optimum = oracle->optimum();
        out.facts = facts_of(oracle->instance());
        out.instance_id = oracle->instance().id;
        out.oracle = std::move(oracle);
        return out;
    }

    sssp::SSSPInstance inst;
    if (family == "hidden-path")
        inst = sssp::gen_hidden_path(n, seed, false);
    else if (family == "hidden-path-complete")
        inst = sssp::gen_hidden_path(n, seed, true);
    else if (family == "cheap-pred")
        inst = sssp::gen_complete_cheap_pred(n, seed);
    else if (family == "random")
        inst = sssp::gen_random_connected(n, m > 0 ? m : static_cast<std::int64_t>(n) * (n - 1) / 2,
                                          parse_weights(weights), seed);
    else
        throw ConfigError("unknown SSSP family: " + family);

    out.instance_id = inst.graph.id;
    if (problem == ProblemKind::SsspMulti) {
        auto oracle = std::make_shared<sssp::MultiOracle>(std::move(inst));
        out.optimum = oracle->optimum();
        out.facts = facts_of(oracle->instance().graph, oracle->instance().big_c);
        out.oracle = std::move(oracle);
    } else {
        auto oracle = std::make_shared<sssp::SingleOracle>(std::move(inst));
        out.optimum = oracle->optimum();
        out.facts = facts_of(oracle->instance().graph, oracle->instance().big_c);
        out.oracle = std::move(oracle);
    }
    return out;
}

double eval_predictor(const std::string& expr, std::int32_t n, std::int64_t m) {
    const double N = dn(n), M = dm(m);
    if (expr == "m") return M;
    if (expr == "n") return N;
    if (expr == "m*logn") return M * ln(N);
    if (expr == "m*logm") return M * ln(M);
    if (expr == "m*n*log(m/n)") return M * N * ln(M / N);
    if (expr == "m*n*logn") return M * N * ln(N);
    if (expr == "m2*logn") return M * M * ln(N);
    if (expr == "n2") return N * N;
    if (expr == "n2*logn") return N * N * ln(N);
    if (expr == "n3") return N * N * N;
    if (expr == "n3*logn") return N * N * N * ln(N);
    throw ConfigError("unknown predictor: " + expr);
}

} // namespace bbox::harness
