#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace bbox {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExhausted : Error {
    BudgetExhausted() : Error("query budget exhausted") {}
};

struct CapabilityError : Error {
    explicit CapabilityError(const std::string& what) : Error(what) {}
};

struct ArityViolation : CapabilityError {
    explicit ArityViolation(const std::string& what) : CapabilityError(what) {}
};

struct LiteralPointInjection : CapabilityError {
    LiteralPointInjection()
        : CapabilityError("literal point injected under an unbiased capability") {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& what) : Error(what) {}
};

struct DomainMismatch : Error {
    explicit DomainMismatch(const std::string& what) : Error(what) {}
};

struct DuplicateWeights : Error {
    DuplicateWeights() : Error("instance has duplicate edge weights") {}
};

struct NotCompleteGraph : Error {
    NotCompleteGraph() : Error("algorithm requires a complete input graph") {}
};

struct InfeasibleInstance : Error {
    explicit InfeasibleInstance(const std::string& what) : Error(what) {}
};

struct MalformedParent : Error {
    explicit MalformedParent(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Control-flow signals used by the run loop. Not errors: the harness stops an
// algorithm the moment it first queries an optimal point, and the restart
// wrapper cuts an attempt when its per-attempt cap is hit.
struct OptimumReached {
    std::uint64_t queries;
};

struct AttemptCapReached {};

// ---------------------------------------------------------------------------
// Search-space domains
// ---------------------------------------------------------------------------

enum class Domain { BitString, PredVector };

inline const char* to_string(Domain d) {
    return d == Domain::BitString ? "bit-string" : "pred-vector";
}

// ---------------------------------------------------------------------------
// RNG: one 64-bit-seeded stream per run. Draw helpers avoid
// std::uniform_*_distribution so sequences are pinned to this code, not to a
// particular standard library.
// ---------------------------------------------------------------------------

class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    // xorshift* core
    std::uint64_t next_u64() {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1DULL;
    }

    // uniform integer in [0, bound), bound >= 1; rejection sampling
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    // uniform integer in [lo, hi] inclusive
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // uniform double in [0, 1)
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool coin() { return (next_u64() & 1) != 0; }

private:
    std::uint64_t state_;
};

// FNV-1a, used for instance ids and derived seeds.
inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a + 0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

} // namespace bbox
