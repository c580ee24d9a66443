#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylsheaf/cartan_type.hpp"

namespace weylsheaf {

using Partition = std::vector<int>;  // weakly decreasing, positive parts

/// p(0..n) by Euler's pentagonal-number recurrence.
inline std::vector<std::uint64_t> partition_numbers(int n) {
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::int64_t total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            if (g1 > m) break;
            const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(m - g1)];
            int g2 = k * (3 * k + 1) / 2;
            if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return {p.begin(), p.end()};
}

inline std::uint64_t partition_count(int n) {
    if (n < 0) return 0;
    return partition_numbers(n).back();
}

/// b(n) = number of ordered pairs of partitions with total size n.
inline std::uint64_t bipartition_count(int n) {
    auto p = partition_numbers(n);
    std::uint64_t total = 0;
    for (int k = 0; k <= n; ++k)
        total = detail::checked_add(total, detail::checked_mul(p[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(n - k)]));
    return total;
}

/// Partitions of n in descending lexicographic order, produced one at a time.
class PartitionIterator {
public:
    explicit PartitionIterator(int n) {
        if (n > 0) current_ = Partition{n};
        else current_ = Partition{};
    }

    const Partition& operator*() const { return current_; }

    /// Advances to the next partition; false once the last, [1,...,1], was passed.
    bool next() {
        if (done_) return false;
        // Find the rightmost part > 1.
        int ones = 0;
        while (!current_.empty() && current_.back() == 1) {
            current_.pop_back();
            ++ones;
        }
        if (current_.empty()) {
            done_ = true;
            return false;
        }
        int part = --current_.back();
        int remaining = ones + 1;
        while (remaining > 0) {
            int take = std::min(part, remaining);
            current_.push_back(take);
            remaining -= take;
        }
        return true;
    }

private:
    Partition current_;
    bool done_ = false;
};

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    PartitionIterator it(n);
    do out.push_back(*it);
    while (it.next());
    return out;
}

inline std::string partition_string(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

} // namespace weylsheaf
