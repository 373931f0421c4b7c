#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "bbox/core/oracle.hpp"
#include "bbox/core/run.hpp"

namespace bbox::harness {

enum class ProblemKind { MstBi, SsspMulti, SsspSingle };

struct AlgorithmInfo {
    std::string id;
    std::function<AlgorithmSpec()> make;
    Capability session_cap; // canonical model for the run
    ProblemKind problem = ProblemKind::MstBi;
    std::string claimed;    // bound as printed
    std::string predictor;  // normalization for sweeps
    bool exact = false;     // the bound is a per-run cap, not an expectation
    std::function<double(std::int32_t n, std::int64_t m)> bound;
};

const std::vector<AlgorithmInfo>& registry();
const AlgorithmInfo& find_algorithm(const std::string& id);

// A ready-to-run instance: oracle, reference optimum, promised facts.
struct PreparedInstance {
    std::shared_ptr<const Oracle> oracle;
    Objective optimum;
    InstanceFacts facts;
    std::string instance_id;
};

// family: mst problems accept path | random | complete-hidden-tree;
// sssp problems accept hidden-path | hidden-path-complete | cheap-pred | random.
// weights: unit | distinct | reals.
PreparedInstance prepare_instance(ProblemKind problem, const std::string& family,
                                  const std::string& weights, std::int32_t n, std::int64_t m,
                                  std::uint64_t seed);

// Predictor expressions for scaling fits: m, n, m*logn, m*logm, m*n*log(m/n),
// m*n*logn, n2, n2*logn, n3, n3*logn.
double eval_predictor(const std::string& expr, std::int32_t n, std::int64_t m);

} // namespace bbox::harness
