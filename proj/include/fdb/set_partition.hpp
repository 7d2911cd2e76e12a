#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fdb/limits.hpp"
#include "fdb/numeric.hpp"

namespace fdb {

/// A partition of {1..n} into non-empty blocks. Canonical form: each block
/// ascending, blocks ordered by their minimum element.
class SetPartition {
public:
    using Block = std::vector<unsigned>;

    SetPartition() = default;

    /// Validates that blocks partition {1..n} and canonicalizes them; throws
    /// std::invalid_argument otherwise.
    SetPartition(std::size_t n, std::vector<Block> blocks);

    /// Block labels a[i] for element i+1, a restricted growth string:
    /// a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
    static SetPartition from_restricted_growth(const std::vector<unsigned>& labels);

    std::size_t ground_size() const noexcept { return n_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Block> blocks_;
};

/// Streams every partition of {1..n} exactly once via restricted growth
/// strings. Each step either opens a new block for the last element or adds
/// it to an existing one, which is the incremental construction of partitions
/// of {1..n+1} from those of {1..n}.
class SetPartitionGenerator {
public:
    /// Throws guard_exceeded when n > limits.set_partition_size.
    explicit SetPartitionGenerator(std::size_t n, const Limits& limits = {});

    /// Next partition in restricted-growth order, or nullopt once exhausted.
    std::optional<SetPartition> next();

    /// Lower-level form of next(): returns the restricted growth string of the
    /// next partition without materializing blocks, or nullptr once exhausted.
    /// The pointer stays valid until the following call.
    const std::vector<unsigned>* next_labels();

private:

    std::size_t n_;
    std::vector<unsigned> labels_;
    std::vector<unsigned> prefix_max_;
    bool started_ = false;
    bool done_ = false;
};

/// All partitions of {1..n}; convenience wrapper around SetPartitionGenerator.
std::vector<SetPartition> enumerate_set_partitions(std::size_t n, const Limits& limits = {});

/// Stirling numbers of the second kind, S(n, k), from the recurrence
/// S(n+1, k) = S(n, k-1) + k S(n, k).
BigInt stirling2(unsigned n, unsigned k);

/// Bell number B_n: the number of partitions of an n-element set.
BigInt bell(unsigned n);

/// B_0 .. B_n.
std::vector<BigInt> bell_sequence(unsigned n);

} // namespace fdb
