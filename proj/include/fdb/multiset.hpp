#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "fdb/numeric.hpp"

namespace fdb {

/// A set with positive multiplicities. Entries are kept sorted by variable id,
/// so equality and ordering are structural.
///
/// The same type plays several roles: a derivative signature (which variables
/// are differentiated and how often), one part of a multiset partition, and
/// the exponent vector of a polynomial monomial.
class Multiset {
public:
    using Entry = std::pair<VarId, unsigned>;
    using const_iterator = std::vector<Entry>::const_iterator;

    Multiset() = default;

    /// Entries as (id, multiplicity); repeated ids accumulate, zero multiplicities are dropped.
    Multiset(std::initializer_list<Entry> entries);

    /// One copy per listed member: of_members({1, 2, 2}) is {1 -> 1, 2 -> 2}.
    static Multiset of_members(std::initializer_list<VarId> members);
    template <typename Range>
    static Multiset of_member_range(const Range& members)
    {
        Multiset m;
        for (auto id : members) {
            m.add(static_cast<VarId>(id));
        }
        return m;
    }

    /// n copies of a single id.
    static Multiset repeated(VarId id, unsigned n);

    /// {1 -> k[0], 2 -> k[1], ...}, skipping zero entries.
    static Multiset from_multiplicities(const std::vector<unsigned>& k);

    void add(VarId id, unsigned count = 1);

    /// Removes `count` copies of id; throws std::invalid_argument if fewer are present.
    void remove(VarId id, unsigned count = 1);

    unsigned count(VarId id) const noexcept;
    std::size_t size() const noexcept { return size_; }
    std::size_t distinct() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    bool is_set() const noexcept;

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    const_iterator begin() const noexcept { return entries_.begin(); }
    const_iterator end() const noexcept { return entries_.end(); }

    /// Members expanded with repetition, ascending: {1 -> 2, 3 -> 1} gives 1, 1, 3.
    std::vector<VarId> members() const;

    /// Componentwise <=.
    bool is_submultiset_of(const Multiset& other) const noexcept;

    Multiset& operator+=(const Multiset& other);
    friend Multiset operator+(Multiset lhs, const Multiset& rhs)
    {
        lhs += rhs;
        return lhs;
    }
    /// Componentwise difference; rhs must be a sub-multiset of lhs.
    friend Multiset operator-(const Multiset& lhs, const Multiset& rhs);

    /// Scales every multiplicity by factor (factor >= 1).
    Multiset scaled(unsigned factor) const;

    friend bool operator==(const Multiset&, const Multiset&) = default;
    friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b)
    {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<Entry> entries_;
    std::size_t size_ = 0;
};

/// Order used for parts inside a multiset partition: larger parts first, ties
/// broken lexicographically on the (id, multiplicity) entry lists.
bool canonical_part_less(const Multiset& a, const Multiset& b) noexcept;

/// Product of the factorials of the multiplicities ("sigma!!").
BigInt multiset_factorial(const Multiset& sigma);

/// Every sub-multiset of m (including empty and m itself), in odometer order
/// over the entries.
std::vector<Multiset> submultisets(const Multiset& m);

} // namespace fdb
