#include "fdb/multiset.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fdb {

Multiset::Multiset(std::initializer_list<Entry> entries)
{
    for (const auto& [id, count] : entries) {
        add(id, count);
    }
}

Multiset Multiset::of_members(std::initializer_list<VarId> members)
{
    return of_member_range(members);
}

Multiset Multiset::repeated(VarId id, unsigned n)
{
    Multiset m;
    m.add(id, n);
    return m;
}

Multiset Multiset::from_multiplicities(const std::vector<unsigned>& k)
{
    Multiset m;
    for (std::size_t i = 0; i < k.size(); ++i) {
        m.add(static_cast<VarId>(i + 1), k[i]);
    }
    return m;
}

void Multiset::add(VarId id, unsigned count)
{
    if (id == 0) {
        throw std::invalid_argument("variable ids start at 1");
    }
    if (count == 0) {
        return;
    }
    auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                               [](const Entry& e, VarId v) { return e.first < v; });
    if (it != entries_.end() && it->first == id) {
        it->second += count;
    } else {
        entries_.insert(it, Entry{id, count});
    }
    size_ += count;
}

void Multiset::remove(VarId id, unsigned count)
{
    if (count == 0) {
        return;
    }
    auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                               [](const Entry& e, VarId v) { return e.first < v; });
    if (it == entries_.end() || it->first != id || it->second < count) {
        throw std::invalid_argument("cannot remove " + std::to_string(count) + " copies of "
                                    + std::to_string(id));
    }
    it->second -= count;
    size_ -= count;
    if (it->second == 0) {
        entries_.erase(it);
    }
}

unsigned Multiset::count(VarId id) const noexcept
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                               [](const Entry& e, VarId v) { return e.first < v; });
    return (it != entries_.end() && it->first == id) ? it->second : 0;
}

bool Multiset::is_set() const noexcept
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.second == 1; });
}

std::vector<VarId> Multiset::members() const
{
    std::vector<VarId> out;
    out.reserve(size_);
    for (const auto& [id, count] : entries_) {
        out.insert(out.end(), count, id);
    }
    return out;
}

bool Multiset::is_submultiset_of(const Multiset& other) const noexcept
{
    return std::all_of(entries_.begin(), entries_.end(),
                       [&](const Entry& e) { return other.count(e.first) >= e.second; });
}

Multiset& Multiset::operator+=(const Multiset& other)
{
    for (const auto& [id, count] : other.entries_) {
        add(id, count);
    }
    return *this;
}

Multiset operator-(const Multiset& lhs, const Multiset& rhs)
{
    Multiset out = lhs;
    for (const auto& [id, count] : rhs.entries_) {
        out.remove(id, count);
    }
    return out;
}

Multiset Multiset::scaled(unsigned factor) const
{
    Multiset out = *this;
    for (auto& e : out.entries_) {
        e.second *= factor;
    }
    out.size_ *= factor;
    return out;
}

bool canonical_part_less(const Multiset& a, const Multiset& b) noexcept
{
    if (a.size() != b.size()) {
        return a.size() > b.size();
    }
    return a.entries() < b.entries();
}

BigInt multiset_factorial(const Multiset& sigma)
{
    BigInt result = 1;
    for (const auto& [id, count] : sigma) {
        result *= factorial(count);
    }
    return result;
}

std::vector<Multiset> submultisets(const Multiset& m)
{
    const auto& entries = m.entries();
    std::vector<unsigned> digits(entries.size(), 0);
    std::vector<Multiset> out;
    while (true) {
        Multiset sub;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            sub.add(entries[i].first, digits[i]);
        }
        out.push_back(std::move(sub));

        std::size_t i = 0;
        while (i < entries.size() && digits[i] == entries[i].second) {
            digits[i] = 0;
            ++i;
        }
        if (i == entries.size()) {
            break;
        }
        ++digits[i];
    }
    return out;
}

} // namespace fdb
