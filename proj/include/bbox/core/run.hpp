#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "bbox/core/session.hpp"

namespace bbox {

// Facts about an instance an algorithm is allowed to know up front: the
// encoding sizes plus promises the problem class makes (completeness,
// distinctness of weights). Never the structure itself.
struct InstanceFacts {
    std::int32_t n = 0;
    std::int64_t m = 0;
    bool complete = false;
    bool duplicate_weights = false;
    bool distinct_perm = false; // weights promised to be a permutation of 1..m
    double big_c = 0.0;         // single-criterion SSSP penalty constant, known per the model
};

struct AlgorithmSpec {
    std::string id;
    Capability capability;
    std::function<void(Session&, const InstanceFacts&)> body;
};

// One algorithm execution.
struct RunRecord {
    std::string instance_id;
    std::string algorithm;
    std::string model;
    std::int32_t n = 0;
    std::int64_t m = 0;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> queries_to_optimum;
    std::uint64_t budget = 0;
    bool success = false;
    std::uint64_t wall_ms = 0;
};

// CSV columns, in order: instance_id, algorithm, model, n, m, seed,
// queries_to_optimum, budget, success, wall_ms. NONE serializes as an empty
// field.
inline std::string csv_header() {
    return "instance_id,algorithm,model,n,m,seed,queries_to_optimum,budget,success,wall_ms";
}

inline std::string csv_row(const RunRecord& r) {
    std::string s;
    s += r.instance_id;
    s += ',';
    s += r.algorithm;
    s += ',';
    s += r.model;
    s += ',';
    s += std::to_string(r.n);
    s += ',';
    s += std::to_string(r.m);
    s += ',';
    s += std::to_string(r.seed);
    s += ',';
    if (r.queries_to_optimum) s += std::to_string(*r.queries_to_optimum);
    s += ',';
    s += std::to_string(r.budget);
    s += ',';
    s += r.success ? '1' : '0';
    s += ',';
    s += std::to_string(r.wall_ms);
    return s;
}

struct RunResult {
    RunRecord record;
    std::optional<Point> terminal;    // the first optimal point queried, when any
    std::optional<Objective> terminal_value;
};

// Executes one run. The harness, not the algorithm, detects optimality: the
// session latches the first query matching `optimum` and unwinds the
// algorithm. Deterministic given (algorithm, oracle, optimum, seed).
inline RunResult run(const AlgorithmSpec& alg, const Oracle& oracle, const Objective& optimum,
                     const InstanceFacts& facts, Capability session_cap, std::uint64_t budget,
                     std::uint64_t seed, bool record_wall_time = false) {
    if (!subsumes(session_cap, alg.capability))
        throw CapabilityError("algorithm " + alg.id + " requires " + to_string(alg.capability) +
                              ", session grants " + to_string(session_cap));
    Session session(oracle, session_cap, budget, seed, optimum);
    auto t0 = std::chrono::steady_clock::now();
    try {
        alg.body(session, facts);
        // The algorithm returned without ever querying an optimal point.
    } catch (const OptimumReached&) {
    } catch (const BudgetExhausted&) {
    }
    auto t1 = std::chrono::steady_clock::now();

    RunResult res;
    res.record.algorithm = alg.id;
    res.record.model = to_string(session_cap);
    res.record.n = facts.n;
    res.record.m = facts.m;
    res.record.seed = seed;
    res.record.budget = budget;
    res.record.queries_to_optimum = session.queries_to_optimum();
    res.record.success = session.queries_to_optimum().has_value();
    if (record_wall_time)
        res.record.wall_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    if (auto h = session.latched_handle()) {
        res.terminal = session.audit_point(*h);
        res.terminal_value = session.audit_value(*h);
    }
    return res;
}

// Remark-20 restart wrapper: independent s-query attempts until one of them
// queries an optimum (which unwinds through OptimumReached) or the overall
// budget runs out.
inline AlgorithmSpec restart(const AlgorithmSpec& alg, std::uint64_t s) {
    AlgorithmSpec wrapped;
    wrapped.id = alg.id + "+restart";
    wrapped.capability = alg.capability;
    wrapped.body = [inner = alg.body, s](Session& session, const InstanceFacts& facts) {
        for (;;) {
            session.set_attempt_cap(session.queries() + s);
            try {
                inner(session, facts);
            } catch (const AttemptCapReached&) {
                // attempt used up its queries; run a fresh one
            }
            // returning normally also counts as a failed attempt
        }
    };
    return wrapped;
}

} // namespace bbox
