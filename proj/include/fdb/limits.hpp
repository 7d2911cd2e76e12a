#pragma once

#include <cstddef>

namespace fdb {

/// Size guards for the exhaustive enumerations. Closed-form paths ignore them.
struct Limits {
    /// Largest n for which set partitions of {1..n} are streamed (B_15 ~ 1.38e9).
    std::size_t set_partition_size = 15;
    /// Largest number of multiset partitions a single enumeration may emit.
    std::size_t multiset_partition_count = 5'000'000;
    /// Largest |tau| accepted by the polynomial composition/product oracle.
    std::size_t oracle_size = 6;
    /// Largest |tau| covered by the brute-force multiplicity sweep.
    std::size_t bruteforce_sweep_size = 8;

    /// Defaults overridden by FDB_SET_PARTITION_LIMIT, FDB_MULTISET_PARTITION_LIMIT,
    /// FDB_ORACLE_LIMIT and FDB_SWEEP_LIMIT when those are set to non-negative integers.
    static Limits from_environment();
};

} // namespace fdb
