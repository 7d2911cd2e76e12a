#include "fdb/cumulants.hpp"

#include <charconv>
#include <stdexcept>

#include "fdb/errors.hpp"
#include "fdb/multiset_partition.hpp"

namespace fdb {

namespace {

template <typename Map>
const Rational& lookup(const Map& values, const Multiset& key, const char* what)
{
    const auto it = values.find(key);
    if (it == values.end()) {
        const std::string name = assignment_key(key);
        throw incomplete_assignment(std::string("missing ") + what + " for key '" + name + "'", name);
    }
    return it->second;
}

std::map<Multiset, Rational> univariate_map(VarId variable, const std::vector<Rational>& values)
{
    std::map<Multiset, Rational> out;
    for (std::size_t j = 0; j < values.size(); ++j) {
        out.emplace(Multiset::repeated(variable, static_cast<unsigned>(j + 1)), values[j]);
    }
    return out;
}

// Weighted sum over partitions of target; skip_whole drops the one-part
// partition {target}.
template <typename CumulantOf>
Rational partition_sum(const Multiset& target, bool skip_whole, const Limits& limits, CumulantOf&& cumulant)
{
    Rational total = 0;
    MultisetPartitionGenerator gen(target, limits);
    while (auto mp = gen.next()) {
        if (skip_whole && mp->block_count() == 1) {
            continue;
        }
        Rational term(multiplicity(target, *mp));
        for (const auto& part : mp->parts()) {
            term *= power(cumulant(part.block), part.times);
        }
        total += term;
    }
    return total;
}

class CumulantSolver {
public:
    CumulantSolver(const MomentAssignment& mu, const Limits& limits) : mu_(mu), limits_(limits) {}

    const Rational& solve(const Multiset& target)
    {
        if (const auto it = memo_.find(target); it != memo_.end()) {
            return it->second;
        }
        // kappa(T) = E(T) - sum over partitions with at least two blocks
        Rational value = mu_.at(target)
                         - partition_sum(target, true, limits_, [this](const Multiset& b) { return solve(b); });
        return memo_.emplace(target, std::move(value)).first->second;
    }

    const std::map<Multiset, Rational>& memo() const noexcept { return memo_; }

private:
    const MomentAssignment& mu_;
    const Limits& limits_;
    std::map<Multiset, Rational> memo_;
};

} // namespace

CumulantAssignment CumulantAssignment::univariate(VarId variable, const std::vector<Rational>& values)
{
    return CumulantAssignment{univariate_map(variable, values)};
}

const Rational& CumulantAssignment::at(const Multiset& key) const
{
    return lookup(joint, key, "cumulant");
}

MomentAssignment MomentAssignment::univariate(VarId variable, const std::vector<Rational>& values)
{
    return MomentAssignment{univariate_map(variable, values)};
}

const Rational& MomentAssignment::at(const Multiset& key) const
{
    return lookup(raw, key, "moment");
}

Rational moment_from_cumulants(const Multiset& target, const CumulantAssignment& kappa, const Limits& limits)
{
    return partition_sum(target, false, limits, [&](const Multiset& b) { return kappa.at(b); });
}

Rational cumulants_from_moments(const Multiset& target, const MomentAssignment& mu, const Limits& limits)
{
    if (target.empty()) {
        throw std::invalid_argument("cumulants are defined for non-empty targets only");
    }
    CumulantSolver solver(mu, limits);
    return solver.solve(target);
}

CumulantAssignment all_cumulants_from_moments(const Multiset& target, const MomentAssignment& mu,
                                              const Limits& limits)
{
    CumulantSolver solver(mu, limits);
    CumulantAssignment out;
    for (const auto& sub : submultisets(target)) {
        if (!sub.empty()) {
            out.joint.emplace(sub, solver.solve(sub));
        }
    }
    return out;
}

MomentAssignment all_moments_from_cumulants(const Multiset& target, const CumulantAssignment& kappa,
                                            const Limits& limits)
{
    MomentAssignment out;
    for (const auto& sub : submultisets(target)) {
        if (!sub.empty()) {
            out.raw.emplace(sub, moment_from_cumulants(sub, kappa, limits));
        }
    }
    return out;
}

CollapseIdentityReport collapse_cumulant_identity_check(unsigned n, const CumulantAssignment& kappa,
                                                        VarId variable, const Limits& limits)
{
    if (n > limits.bruteforce_sweep_size) {
        throw guard_exceeded("collapse identity check of order " + std::to_string(n)
                                 + " exceeds the limit of " + std::to_string(limits.bruteforce_sweep_size),
                             n, limits.bruteforce_sweep_size);
    }
    Multiset distinct;
    for (VarId id = 1; id <= n; ++id) {
        distinct.add(id);
    }
    // Joint cumulants of X_1..X_n after identifying every X_i with X.
    CumulantAssignment identified;
    for (const auto& subset : submultisets(distinct)) {
        if (!subset.empty()) {
            identified.joint.emplace(subset,
                                     kappa.at(Multiset::repeated(variable, static_cast<unsigned>(subset.size()))));
        }
    }
    CollapseIdentityReport report;
    report.n = n;
    report.distinct_path = moment_from_cumulants(distinct, identified, limits);
    report.collapsed_path = moment_from_cumulants(Multiset::repeated(variable, n), kappa, limits);
    report.equal = report.distinct_path == report.collapsed_path;
    return report;
}

std::string assignment_key(const Multiset& key)
{
    std::string out;
    for (const auto& [id, count] : key) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(id) + ':' + std::to_string(count);
    }
    return out;
}

Multiset parse_assignment_key(std::string_view text)
{
    Multiset key;
    std::size_t pos = 0;
    auto read_number = [&](std::size_t& value) {
        const char* begin = text.data() + pos;
        const char* end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr == begin) {
            throw parse_error("expected a positive integer", pos);
        }
        pos += static_cast<std::size_t>(ptr - begin);
    };
    if (text.empty()) {
        throw parse_error("empty assignment key", 0);
    }
    while (true) {
        std::size_t id = 0;
        std::size_t count = 0;
        const std::size_t id_pos = pos;
        read_number(id);
        if (id == 0) {
            throw parse_error("variable ids start at 1", id_pos);
        }
        if (pos >= text.size() || text[pos] != ':') {
            throw parse_error("expected ':'", pos);
        }
        ++pos;
        const std::size_t count_pos = pos;
        read_number(count);
        if (count == 0) {
            throw parse_error("multiplicities must be >= 1", count_pos);
        }
        key.add(static_cast<VarId>(id), static_cast<unsigned>(count));
        if (pos == text.size()) {
            return key;
        }
        if (text[pos] != ',') {
            throw parse_error("expected ','", pos);
        }
        ++pos;
    }
}

} // namespace fdb
