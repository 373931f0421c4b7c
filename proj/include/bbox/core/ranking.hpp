#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace bbox {

// rank(c) = 1 + |{c' : f(c') < f(c)}|; equal values share a rank.
template <typename T>
std::vector<std::int64_t> rank_of(const std::vector<T>& values) {
    std::vector<T> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::int64_t> ranks(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        ranks[i] = 1 + (std::lower_bound(sorted.begin(), sorted.end(), values[i]) - sorted.begin());
    }
    return ranks;
}

// Incrementally maintained ranking over a growing multiset of values.
// rank(v) is recomputed on demand against the current contents, so ranks of
// earlier points refresh as new points arrive.
class RankTracker {
public:
    void insert(double v) {
        sorted_.insert(std::lower_bound(sorted_.begin(), sorted_.end(), v), v);
    }

    std::int64_t rank(double v) const {
        return 1 + (std::lower_bound(sorted_.begin(), sorted_.end(), v) - sorted_.begin());
    }

    std::size_t size() const { return sorted_.size(); }

private:
    std::vector<double> sorted_;
};

} // namespace bbox
