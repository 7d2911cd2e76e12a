#include "fdb/set_partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fdb/errors.hpp"

namespace fdb {

SetPartition::SetPartition(std::size_t n, std::vector<Block> blocks) : n_(n)
{
    std::vector<bool> seen(n + 1, false);
    std::size_t covered = 0;
    for (auto& block : blocks) {
        if (block.empty()) {
            throw std::invalid_argument("set partition blocks must be non-empty");
        }
        for (unsigned e : block) {
            if (e == 0 || e > n || seen[e]) {
                throw std::invalid_argument("element " + std::to_string(e)
                                            + " out of range or repeated in set partition");
            }
            seen[e] = true;
            ++covered;
        }
        std::sort(block.begin(), block.end());
    }
    if (covered != n) {
        throw std::invalid_argument("set partition blocks do not cover {1.." + std::to_string(n) + "}");
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
    blocks_ = std::move(blocks);
}

SetPartition SetPartition::from_restricted_growth(const std::vector<unsigned>& labels)
{
    SetPartition pi;
    pi.n_ = labels.size();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const unsigned label = labels[i];
        if (label > pi.blocks_.size()) {
            throw std::invalid_argument("not a restricted growth string");
        }
        if (label == pi.blocks_.size()) {
            pi.blocks_.emplace_back();
        }
        pi.blocks_[label].push_back(static_cast<unsigned>(i + 1));
    }
    return pi;
}

SetPartitionGenerator::SetPartitionGenerator(std::size_t n, const Limits& limits)
    : n_(n), labels_(n, 0), prefix_max_(n, 0)
{
    if (n > limits.set_partition_size) {
        throw guard_exceeded("set partition enumeration of {1.." + std::to_string(n)
                                 + "} exceeds the limit of " + std::to_string(limits.set_partition_size),
                             n, limits.set_partition_size);
    }
}

const std::vector<unsigned>* SetPartitionGenerator::next_labels()
{
    if (done_) {
        return nullptr;
    }
    if (!started_) {
        started_ = true;
        return &labels_;
    }
    // Rightmost position that can still grow: labels_[i] <= max of the prefix before it.
    std::size_t i = n_;
    while (i > 1) {
        --i;
        if (labels_[i] <= prefix_max_[i - 1]) {
            ++labels_[i];
            prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
            for (std::size_t j = i + 1; j < n_; ++j) {
                labels_[j] = 0;
                prefix_max_[j] = prefix_max_[i];
            }
            return &labels_;
        }
    }
    done_ = true;
    return nullptr;
}

std::optional<SetPartition> SetPartitionGenerator::next()
{
    const auto* labels = next_labels();
    if (labels == nullptr) {
        return std::nullopt;
    }
    return SetPartition::from_restricted_growth(*labels);
}

std::vector<SetPartition> enumerate_set_partitions(std::size_t n, const Limits& limits)
{
    SetPartitionGenerator gen(n, limits);
    std::vector<SetPartition> out;
    while (auto pi = gen.next()) {
        out.push_back(std::move(*pi));
    }
    return out;
}

namespace {

// S(m+1, .) from S(m, .): element m+1 opens a new block, or joins one of the
// k existing blocks.
std::vector<BigInt> stirling_step(const std::vector<BigInt>& row)
{
    std::vector<BigInt> next(row.size() + 1, 0);
    for (std::size_t k = 0; k < row.size(); ++k) {
        next[k + 1] += row[k];
        next[k] += row[k] * k;
    }
    return next;
}

BigInt row_sum(const std::vector<BigInt>& row)
{
    BigInt total = 0;
    for (const auto& s : row) {
        total += s;
    }
    return total;
}

// Row n of the Stirling triangle, S(n, 0..n).
std::vector<BigInt> stirling_row(unsigned n)
{
    std::vector<BigInt> row{1};
    for (unsigned m = 0; m < n; ++m) {
        row = stirling_step(row);
    }
    return row;
}

} // namespace

BigInt stirling2(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    return stirling_row(n)[k];
}

BigInt bell(unsigned n)
{
    return row_sum(stirling_row(n));
}

std::vector<BigInt> bell_sequence(unsigned n)
{
    std::vector<BigInt> out;
    out.reserve(n + 1);
    std::vector<BigInt> row{1};
    out.push_back(row_sum(row));
    for (unsigned m = 0; m < n; ++m) {
        row = stirling_step(row);
        out.push_back(row_sum(row));
    }
    return out;
}

} // namespace fdb
