#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bbox/core/capability.hpp"
#include "bbox/core/common.hpp"
#include "bbox/core/objective.hpp"
#include "bbox/core/oracle.hpp"
#include "bbox/core/ranking.hpp"
#include "bbox/core/types.hpp"
#include "bbox/core/variation.hpp"

namespace bbox {

// Opaque handle to a queried point. Under unbiased capabilities this is all an
// algorithm ever holds of a search point.
struct Handle {
    std::uint64_t id = 0;
    bool operator==(const Handle&) const = default;
};

// Per-component ranks of one queried point within the whole query history.
// For BiCriteria the two components are (components, weight); for Scalar only
// `first` is populated.
struct Ranks {
    std::int64_t first = 0;
    std::int64_t second = 0;
};

// Capability-filtered oracle access with an exact query ledger.
//
// Points sampled through operators stay inside the session; algorithms
// observe only handles, plus objective values or ranks as the capability
// admits. The optimal objective is supplied by the harness and is invisible
// to the algorithm: the session latches queries_to_optimum on the first query
// whose value matches it and stops the run by throwing OptimumReached.
class Session {
public:
    Session(const Oracle& oracle, Capability cap, std::uint64_t budget, std::uint64_t seed,
            std::optional<Objective> optimum = std::nullopt)
        : oracle_(oracle), cap_(cap), budget_(budget), rng_(seed), optimum_(std::move(optimum)) {}

    const Capability& capability() const { return cap_; }
    std::uint64_t queries() const { return count_; }
    std::uint64_t budget() const { return budget_; }
    RngStream& rng() { return rng_; }

    // --- querying ---------------------------------------------------------

    // Literal point query. Forbidden under unbiased capabilities.
    Handle query(Point p) {
        if (cap_.is_unbiased()) throw LiteralPointInjection{};
        check_point(p);
        return admit(std::move(p));
    }

    // Operator application over existing handles.
    Handle apply(const VariationOp& op, std::span<const Handle> parents) {
        if (static_cast<int>(parents.size()) != op.arity)
            throw ArityViolation("operator " + op.name + " expects " + std::to_string(op.arity) +
                                 " parents, got " + std::to_string(parents.size()));
        if (!cap_.arity_allows(op.arity))
            throw ArityViolation("operator " + op.name + " has arity " + std::to_string(op.arity) +
                                 " > session arity " + std::to_string(cap_.arity));
        if (op.domain != oracle_.domain())
            throw DomainMismatch("operator " + op.name + " domain does not match oracle");
        parent_buf_.clear();
        for (Handle h : parents) parent_buf_.push_back(points_.at(h.id));
        take_malformed_parent_flag();
        Point child = op.sample(parent_buf_, rng_);
        if (take_malformed_parent_flag()) malformed_flag_ = true;
        check_point(child);
        return admit(std::move(child));
    }

    Handle apply(const VariationOp& op, std::initializer_list<Handle> parents) {
        return apply(op, std::span<const Handle>(parents.begin(), parents.size()));
    }

    // --- views -------------------------------------------------------------

    // Raw objective value; forbidden under ranking capabilities.
    const Objective& value(Handle h) const {
        if (cap_.is_ranking())
            throw CapabilityError("raw objective values are hidden under a ranking capability");
        return values_.at(h.id);
    }

    // Current per-component ranks of a queried point, refreshed over the whole
    // history. Available under every capability (ranks derive from values).
    Ranks ranks(Handle h) const {
        const Objective& o = values_.at(h.id);
        if (const auto* b = std::get_if<BiCriteria>(&o))
            return {comp_rank_.rank(static_cast<double>(b->components)),
                    weight_rank_.rank(b->weight)};
        if (const auto* s = std::get_if<Scalar>(&o)) return {scalar_rank_.rank(s->value), 0};
        throw CapabilityError("ranking is not defined for multi-criteria tuples");
    }

    // Reading a point's coordinates. Forbidden under unbiased capabilities;
    // under (ranking-)unrestricted this mirrors that the algorithm constructed
    // the point itself.
    const Point& point(Handle h) const {
        if (cap_.is_unbiased())
            throw CapabilityError("point contents are opaque under an unbiased capability");
        return points_.at(h.id);
    }

    // Diagnostic flag raised by operators whose precondition failed (they
    // return the parent unchanged, which keeps the family unbiased).
    bool malformed_parent_flag() const { return malformed_flag_; }
    void raise_malformed_parent() { malformed_flag_ = true; }
    void clear_malformed_parent() { malformed_flag_ = false; }

    // --- restart support ----------------------------------------------------

    void set_attempt_cap(std::uint64_t total_query_count) { attempt_cap_ = total_query_count; }
    void clear_attempt_cap() { attempt_cap_.reset(); }

    // --- harness-side accessors (not part of the algorithm-facing surface) --

    const Point& audit_point(Handle h) const { return points_.at(h.id); }
    const Objective& audit_value(Handle h) const { return values_.at(h.id); }
    std::optional<std::uint64_t> queries_to_optimum() const { return queries_to_optimum_; }
    std::optional<Handle> latched_handle() const { return latched_; }
    std::optional<Handle> last_handle() const {
        if (count_ == 0) return std::nullopt;
        return Handle{count_ - 1};
    }

    // Serialized trace of everything the algorithm could observe. Used by the
    // information-hiding property test: under unbiased capabilities entries
    // carry handle ids and objective views only, never coordinates.
    const std::vector<std::string>& observable_trace() const { return trace_; }

private:
    void check_point(const Point& p) const {
        if (domain_of(p) != oracle_.domain())
            throw DomainMismatch("point domain does not match oracle");
        if (dimension_of(p) != oracle_.dimension())
            throw LengthMismatch("point dimension does not match oracle");
    }

    Handle admit(Point p) {
        if (count_ >= budget_) throw BudgetExhausted{};
        if (attempt_cap_ && count_ >= *attempt_cap_) throw AttemptCapReached{};
        Objective val = oracle_.evaluate(p);
        Handle h{count_};
        ++count_;
        points_.push_back(std::move(p));
        values_.push_back(val);
        if (const auto* b = std::get_if<BiCriteria>(&val)) {
            comp_rank_.insert(static_cast<double>(b->components));
            weight_rank_.insert(b->weight);
        } else if (const auto* s = std::get_if<Scalar>(&val)) {
            scalar_rank_.insert(s->value);
        }
        if (cap_.is_unbiased()) {
            trace_.push_back("q" + std::to_string(h.id) + "=" +
                             (cap_.is_ranking() ? rank_string(h) : to_string(val)));
        }
        if (optimum_ && !queries_to_optimum_ && approx_equal(val, *optimum_)) {
            queries_to_optimum_ = count_;
            latched_ = h;
            throw OptimumReached{count_};
        }
        return h;
    }

    std::string rank_string(Handle h) const {
        Ranks r = ranks(h);
        return "[" + std::to_string(r.first) + "," + std::to_string(r.second) + "]";
    }

    const Oracle& oracle_;
    Capability cap_;
    std::uint64_t budget_;
    RngStream rng_;
    std::optional<Objective> optimum_;

    std::uint64_t count_ = 0;
    std::optional<std::uint64_t> attempt_cap_;
    std::vector<Point> points_;
    std::vector<Objective> values_;
    std::vector<Point> parent_buf_;
    RankTracker comp_rank_, weight_rank_, scalar_rank_;
    std::optional<std::uint64_t> queries_to_optimum_;
    std::optional<Handle> latched_;
    bool malformed_flag_ = false;
    std::vector<std::string> trace_;
};

} // namespace bbox
