#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "fdb/limits.hpp"
#include "fdb/multiset.hpp"
#include "fdb/set_partition.hpp"

namespace fdb {

/// A multiset written as a sum m_1 tau_1 + m_2 tau_2 + ... of pairwise
/// distinct non-empty parts tau_i with repetition counts m_i.
///
/// Parts are stored in canonical order (see canonical_part_less), so two
/// partitions are equal exactly when their part lists are equal.
class MultisetPartition {
public:
    struct Part {
        Multiset block;
        unsigned times = 1;

        friend bool operator==(const Part&, const Part&) = default;
    };

    MultisetPartition() = default;

    /// Accepts parts in any order and with repeats; equal blocks are merged
    /// and empty blocks rejected (std::invalid_argument).
    explicit MultisetPartition(std::vector<Part> parts);

    /// One Part per listed block, merged.
    static MultisetPartition from_blocks(const std::vector<Multiset>& blocks);

    const std::vector<Part>& parts() const noexcept { return parts_; }

    /// Number of blocks counted with repetition (the f-derivative order).
    std::size_t block_count() const noexcept;

    /// Sum of all blocks with repetition.
    Multiset total() const;

    /// Blocks expanded with repetition, in canonical order.
    std::vector<Multiset> blocks() const;

    /// Same partition with var added to one copy of the part at index part_index.
    MultisetPartition with_member_added(std::size_t part_index, VarId var) const;

    /// Same partition with an extra singleton block {var}.
    MultisetPartition with_singleton(VarId var) const;

    friend bool operator==(const MultisetPartition&, const MultisetPartition&) = default;
    friend std::strong_ordering operator<=>(const MultisetPartition& a, const MultisetPartition& b);

private:
    std::vector<Part> parts_;
};

/// Map from the ground set {1..n} to variable ids; element j collapses onto
/// target(j). Applied to {1..n} it produces the signature multiset.
class CollapseMap {
public:
    CollapseMap() = default;

    /// targets[j-1] is the image of element j.
    explicit CollapseMap(std::vector<VarId> targets);

    /// The map induced by tau = {1^k1, 2^k2, ...}: the first k1 elements go
    /// to the first id of tau, the next k2 to the second, and so on.
    static CollapseMap canonical(const Multiset& tau);

    static CollapseMap identity(std::size_t n);

    std::size_t ground_size() const noexcept { return targets_.size(); }
    VarId operator()(unsigned element) const;
    const std::vector<VarId>& targets() const noexcept { return targets_; }

    /// Image of the whole ground set.
    Multiset image() const;

private:
    std::vector<VarId> targets_;
};

/// Collapses every block of pi under cmap and merges equal images. Throws
/// std::invalid_argument if the map's ground set differs from pi's.
MultisetPartition collapse(const SetPartition& pi, const CollapseMap& cmap);

/// Streams every partition of tau exactly once (Knuth's multipartition
/// algorithm, TAOCP 7.2.1.5 M). The empty multiset has one empty partition.
class MultisetPartitionGenerator {
public:
    explicit MultisetPartitionGenerator(const Multiset& tau, const Limits& limits = {});

    /// Throws guard_exceeded once more than limits.multiset_partition_count
    /// partitions have been requested.
    std::optional<MultisetPartition> next();

private:
    struct Component {
        std::size_t index = 0; // position in ids_
        unsigned unused = 0;   // "u" in Knuth
        unsigned taken = 0;    // "v" in Knuth
    };

    MultisetPartition visit() const;
    bool descend();
    bool decrease();

    std::vector<VarId> ids_;
    std::vector<Component> stack_;
    std::vector<std::size_t> frames_;
    std::size_t a_ = 0;
    std::size_t b_ = 0;
    std::size_t level_ = 0;
    std::size_t emitted_ = 0;
    std::size_t cap_;
    bool started_ = false;
    bool done_ = false;
    bool empty_input_ = false;
};

std::vector<MultisetPartition> enumerate_multiset_partitions(const Multiset& tau,
                                                             const Limits& limits = {});

/// Number of set partitions of {1..|tau|} collapsing to mp, in closed form:
///
///     k_1! ... k_n! / (tau_1!!^m_1 tau_2!!^m_2 ... m_1! m_2! ...)
///
/// Throws invalid_partition if mp does not sum to tau.
BigInt multiplicity(const Multiset& tau, const MultisetPartition& mp);

/// Same count obtained by enumerating all set partitions of {1..|tau|},
/// collapsing each under CollapseMap::canonical(tau) and counting matches.
BigInt multiplicity_bruteforce(const Multiset& tau, const MultisetPartition& mp,
                               const Limits& limits = {});

/// Brute-force counts for every multiset partition of tau in one pass.
std::map<MultisetPartition, BigInt> collapse_counts(const Multiset& tau, const Limits& limits = {});

} // namespace fdb
