#include "fdb/multiset_partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fdb/errors.hpp"

namespace fdb {

namespace {

std::strong_ordering compare_parts(const MultisetPartition::Part& a, const MultisetPartition::Part& b)
{
    if (a.block != b.block) {
        return canonical_part_less(a.block, b.block) ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
    }
    return a.times <=> b.times;
}

} // namespace

MultisetPartition::MultisetPartition(std::vector<Part> parts)
{
    for (const auto& p : parts) {
        if (p.block.empty()) {
            throw std::invalid_argument("multiset partition parts must be non-empty");
        }
        if (p.times == 0) {
            throw std::invalid_argument("multiset partition part repetition must be >= 1");
        }
    }
    std::sort(parts.begin(), parts.end(),
              [](const Part& a, const Part& b) { return canonical_part_less(a.block, b.block); });
    for (auto& p : parts) {
        if (!parts_.empty() && parts_.back().block == p.block) {
            parts_.back().times += p.times;
        } else {
            parts_.push_back(std::move(p));
        }
    }
}

MultisetPartition MultisetPartition::from_blocks(const std::vector<Multiset>& blocks)
{
    std::vector<Part> parts;
    parts.reserve(blocks.size());
    for (const auto& b : blocks) {
        parts.push_back(Part{b, 1});
    }
    return MultisetPartition(std::move(parts));
}

std::size_t MultisetPartition::block_count() const noexcept
{
    std::size_t count = 0;
    for (const auto& p : parts_) {
        count += p.times;
    }
    return count;
}

Multiset MultisetPartition::total() const
{
    Multiset sum;
    for (const auto& p : parts_) {
        sum += p.block.scaled(p.times);
    }
    return sum;
}

std::vector<Multiset> MultisetPartition::blocks() const
{
    std::vector<Multiset> out;
    for (const auto& p : parts_) {
        out.insert(out.end(), p.times, p.block);
    }
    return out;
}

MultisetPartition MultisetPartition::with_member_added(std::size_t part_index, VarId var) const
{
    if (part_index >= parts_.size()) {
        throw std::out_of_range("part index out of range");
    }
    std::vector<Part> parts = parts_;
    Multiset grown = parts[part_index].block;
    grown.add(var);
    if (--parts[part_index].times == 0) {
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(part_index));
    }
    parts.push_back(Part{std::move(grown), 1});
    return MultisetPartition(std::move(parts));
}

MultisetPartition MultisetPartition::with_singleton(VarId var) const
{
    std::vector<Part> parts = parts_;
    parts.push_back(Part{Multiset{{var, 1}}, 1});
    return MultisetPartition(std::move(parts));
}

std::strong_ordering operator<=>(const MultisetPartition& a, const MultisetPartition& b)
{
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                  b.parts_.end(), compare_parts);
}

CollapseMap::CollapseMap(std::vector<VarId> targets) : targets_(std::move(targets))
{
    for (VarId t : targets_) {
        if (t == 0) {
            throw std::invalid_argument("collapse targets must be variable ids >= 1");
        }
    }
}

CollapseMap CollapseMap::canonical(const Multiset& tau)
{
    std::vector<VarId> targets = tau.members();
    return CollapseMap(std::move(targets));
}

CollapseMap CollapseMap::identity(std::size_t n)
{
    std::vector<VarId> targets(n);
    for (std::size_t i = 0; i < n; ++i) {
        targets[i] = static_cast<VarId>(i + 1);
    }
    return CollapseMap(std::move(targets));
}

VarId CollapseMap::operator()(unsigned element) const
{
    if (element == 0 || element > targets_.size()) {
        throw std::out_of_range("element " + std::to_string(element) + " outside the collapse map domain");
    }
    return targets_[element - 1];
}

Multiset CollapseMap::image() const
{
    return Multiset::of_member_range(targets_);
}

MultisetPartition collapse(const SetPartition& pi, const CollapseMap& cmap)
{
    if (pi.ground_size() != cmap.ground_size()) {
        throw std::invalid_argument("collapse map ground set does not match the partition");
    }
    std::vector<Multiset> images;
    images.reserve(pi.block_count());
    for (const auto& block : pi.blocks()) {
        Multiset image;
        for (unsigned e : block) {
            image.add(cmap(e));
        }
        images.push_back(std::move(image));
    }
    return MultisetPartition::from_blocks(images);
}

MultisetPartitionGenerator::MultisetPartitionGenerator(const Multiset& tau, const Limits& limits)
    : cap_(limits.multiset_partition_count)
{
    if (tau.empty()) {
        empty_input_ = true;
        return;
    }
    const std::size_t m = tau.distinct();
    const std::size_t n = tau.size();
    stack_.resize(m * n + 1);
    frames_.resize(n + 2, 0);
    for (std::size_t j = 0; j < m; ++j) {
        ids_.push_back(tau.entries()[j].first);
        stack_[j] = Component{j, tau.entries()[j].second, tau.entries()[j].second};
    }
    frames_[0] = 0;
    frames_[1] = m;
    a_ = 0;
    b_ = m;
    level_ = 0;
}

// M2-M3: subtract the current part from what remains and push the remainder
// as the next part, as long as anything remains.
bool MultisetPartitionGenerator::descend()
{
    while (true) {
        std::size_t k = b_;
        bool changed = false;
        for (std::size_t j = a_; j < b_; ++j) {
            const unsigned remaining = stack_[j].unused - stack_[j].taken;
            stack_[k].unused = remaining;
            if (remaining == 0) {
                changed = true;
            } else if (!changed) {
                stack_[k].index = stack_[j].index;
                stack_[k].taken = std::min(stack_[j].taken, remaining);
                changed = remaining < stack_[j].taken;
                ++k;
            } else {
                stack_[k].index = stack_[j].index;
                stack_[k].taken = remaining;
                ++k;
            }
        }
        if (k > b_) {
            a_ = b_;
            b_ = k;
            ++level_;
            frames_[level_ + 1] = b_;
        } else {
            return true;
        }
    }
}

// M5-M6: decrease the last part's vector, backtracking over exhausted levels.
bool MultisetPartitionGenerator::decrease()
{
    while (true) {
        std::size_t j = b_ - 1;
        while (stack_[j].taken == 0) {
            --j;
        }
        if (j == a_ && stack_[j].taken == 1) {
            if (level_ == 0) {
                return false;
            }
            --level_;
            b_ = a_;
            a_ = frames_[level_];
            continue;
        }
        --stack_[j].taken;
        for (std::size_t k = j + 1; k < b_; ++k) {
            stack_[k].taken = stack_[k].unused;
        }
        return true;
    }
}

MultisetPartition MultisetPartitionGenerator::visit() const
{
    std::vector<Multiset> blocks;
    blocks.reserve(level_ + 1);
    for (std::size_t i = 0; i <= level_; ++i) {
        Multiset block;
        for (std::size_t c = frames_[i]; c < frames_[i + 1]; ++c) {
            block.add(ids_[stack_[c].index], stack_[c].taken);
        }
        blocks.push_back(std::move(block));
    }
    return MultisetPartition::from_blocks(blocks);
}

std::optional<MultisetPartition> MultisetPartitionGenerator::next()
{
    if (done_) {
        return std::nullopt;
    }
    if (empty_input_) {
        if (started_) {
            done_ = true;
            return std::nullopt;
        }
        started_ = true;
        return MultisetPartition{};
    }
    if (!started_) {
        started_ = true;
        descend();
    } else {
        if (!decrease()) {
            done_ = true;
            return std::nullopt;
        }
        descend();
    }
    if (++emitted_ > cap_) {
        done_ = true;
        throw guard_exceeded("multiset partition enumeration exceeds the limit of "
                                 + std::to_string(cap_) + " partitions",
                             emitted_, cap_);
    }
    return visit();
}

std::vector<MultisetPartition> enumerate_multiset_partitions(const Multiset& tau, const Limits& limits)
{
    MultisetPartitionGenerator gen(tau, limits);
    std::vector<MultisetPartition> out;
    while (auto mp = gen.next()) {
        out.push_back(std::move(*mp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt multiplicity(const Multiset& tau, const MultisetPartition& mp)
{
    if (mp.total() != tau) {
        throw invalid_partition("multiset partition does not sum to the signature");
    }
    BigInt numerator = multiset_factorial(tau);
    BigInt denominator = 1;
    for (const auto& part : mp.parts()) {
        denominator *= boost::multiprecision::pow(multiset_factorial(part.block), part.times);
        denominator *= factorial(part.times);
    }
    BigInt remainder;
    BigInt quotient;
    boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
    if (remainder != 0) {
        throw std::logic_error("collapsing-partition count is not an integer");
    }
    return quotient;
}

namespace {

template <typename Visitor>
void for_each_collapsed(const Multiset& tau, const Limits& limits, Visitor&& visitor)
{
    const std::vector<VarId> targets = tau.members();
    SetPartitionGenerator gen(targets.size(), limits);
    std::vector<Multiset> blocks;
    while (const auto* labels = gen.next_labels()) {
        blocks.clear();
        for (std::size_t i = 0; i < labels->size(); ++i) {
            const unsigned label = (*labels)[i];
            if (label == blocks.size()) {
                blocks.emplace_back();
            }
            blocks[label].add(targets[i]);
        }
        visitor(MultisetPartition::from_blocks(blocks));
    }
}

} // namespace

BigInt multiplicity_bruteforce(const Multiset& tau, const MultisetPartition& mp, const Limits& limits)
{
    if (mp.total() != tau) {
        throw invalid_partition("multiset partition does not sum to the signature");
    }
    BigInt count = 0;
    for_each_collapsed(tau, limits, [&](const MultisetPartition& image) {
        if (image == mp) {
            ++count;
        }
    });
    return count;
}

std::map<MultisetPartition, BigInt> collapse_counts(const Multiset& tau, const Limits& limits)
{
    std::map<MultisetPartition, BigInt> counts;
    for_each_collapsed(tau, limits, [&](const MultisetPartition& image) { ++counts[image]; });
    return counts;
}

} // namespace fdb
