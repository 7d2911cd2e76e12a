#include "fdb/expansion.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "fdb/errors.hpp"

namespace fdb {

namespace {

bool display_block_less(const Multiset& a, const Multiset& b)
{
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a.entries() < b.entries();
}

using TermKey = std::pair<std::size_t, MultisetPartition>;

CompositionExpansion collect(const Multiset& signature, bool exponential,
                             const std::map<TermKey, BigInt>& accumulated)
{
    CompositionExpansion out;
    out.signature = signature;
    out.exponential = exponential;
    out.terms.reserve(accumulated.size());
    for (const auto& [key, coefficient] : accumulated) {
        out.terms.push_back(CompositionTerm{key.first, key.second, coefficient});
    }
    normalize(out);
    return out;
}

} // namespace

std::vector<Multiset> display_blocks(const MultisetPartition& shape)
{
    std::vector<Multiset> blocks = shape.blocks();
    std::sort(blocks.begin(), blocks.end(), display_block_less);
    return blocks;
}

bool term_display_less(const CompositionTerm& a, const CompositionTerm& b)
{
    if (a.f_order != b.f_order) {
        return a.f_order < b.f_order;
    }
    const auto lhs = display_blocks(a.shape);
    const auto rhs = display_blocks(b.shape);
    return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), display_block_less);
}

void normalize(CompositionExpansion& e)
{
    std::sort(e.terms.begin(), e.terms.end(), term_display_less);
}

CompositionExpansion expand_composition(const Multiset& tau, const Limits& limits)
{
    CompositionExpansion out;
    out.signature = tau;
    MultisetPartitionGenerator gen(tau, limits);
    while (auto mp = gen.next()) {
        BigInt coefficient = multiplicity(tau, *mp);
        const std::size_t order = mp->block_count();
        out.terms.push_back(CompositionTerm{order, std::move(*mp), std::move(coefficient)});
    }
    normalize(out);
    return out;
}

CompositionExpansion expand_exponential(const Multiset& tau, const Limits& limits)
{
    CompositionExpansion out = expand_composition(tau, limits);
    out.exponential = true;
    return out;
}

BigInt faa_di_bruno_coefficient(const std::vector<unsigned>& m)
{
    const std::size_t k = m.size();
    std::size_t weighted = 0;
    for (std::size_t j = 1; j <= k; ++j) {
        weighted += j * m[j - 1];
    }
    if (weighted != k) {
        throw invalid_signature("block counts weigh " + std::to_string(weighted) + ", expected "
                                + std::to_string(k));
    }
    BigInt denominator = 1;
    for (std::size_t j = 1; j <= k; ++j) {
        denominator *= boost::multiprecision::pow(factorial(static_cast<unsigned>(j)), m[j - 1]);
        denominator *= factorial(m[j - 1]);
    }
    return factorial(static_cast<unsigned>(k)) / denominator;
}

CompositionExpansion differentiate_expansion(const CompositionExpansion& e, VarId var)
{
    std::map<TermKey, BigInt> accumulated;
    for (const auto& term : e.terms) {
        // d/dvar f^(m)(y) = f^(m+1)(y) * dy/dvar
        accumulated[{term.f_order + 1, term.shape.with_singleton(var)}] += term.coefficient;
        // d/dvar (d_part y)^times = times * (d_part y)^(times-1) * d_{part+var} y
        const auto& parts = term.shape.parts();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            accumulated[{term.f_order, term.shape.with_member_added(i, var)}] +=
                term.coefficient * parts[i].times;
        }
    }
    Multiset signature = e.signature;
    signature.add(var);
    return collect(signature, e.exponential, accumulated);
}

CompositionExpansion differentiate_sequence(const std::vector<VarId>& order, bool exponential)
{
    CompositionExpansion e;
    e.exponential = exponential;
    e.terms.push_back(CompositionTerm{0, MultisetPartition{}, 1});
    for (VarId var : order) {
        e = differentiate_expansion(e, var);
    }
    return e;
}

ProductExpansion expand_product(const Multiset& tau)
{
    ProductExpansion out;
    out.signature = tau;
    for (auto& u : submultisets(tau)) {
        BigInt coefficient = 1;
        for (const auto& [id, k] : tau) {
            coefficient *= binomial(k, u.count(id));
        }
        Multiset v = tau - u;
        out.terms.push_back(ProductTerm{std::move(u), std::move(v), std::move(coefficient)});
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const ProductTerm& a, const ProductTerm& b) {
        return display_block_less(a.u_part, b.u_part);
    });
    return out;
}

BigInt coefficient_sum(const CompositionExpansion& e)
{
    BigInt total = 0;
    for (const auto& t : e.terms) {
        total += t.coefficient;
    }
    return total;
}

BigInt coefficient_sum(const ProductExpansion& e)
{
    BigInt total = 0;
    for (const auto& t : e.terms) {
        total += t.coefficient;
    }
    return total;
}

} // namespace fdb
