#pragma once

#include <cstddef>
#include <vector>

#include "fdb/limits.hpp"
#include "fdb/multiset.hpp"
#include "fdb/multiset_partition.hpp"

namespace fdb {

/// coefficient * f^(f_order)(y) * prod over parts of (d_part y)^times.
struct CompositionTerm {
    std::size_t f_order = 0;
    MultisetPartition shape;
    BigInt coefficient = 1;

    friend bool operator==(const CompositionTerm&, const CompositionTerm&) = default;
};

/// Fully collected expansion of d_signature f(y). When exponential is set,
/// f = exp and every f^(m)(y) is the common factor e^y.
struct CompositionExpansion {
    Multiset signature;
    std::vector<CompositionTerm> terms;
    bool exponential = false;

    friend bool operator==(const CompositionExpansion&, const CompositionExpansion&) = default;
};

/// Blocks of a shape with repetition, smallest first (ascending size, then
/// entries). This is the order in which factors are displayed.
std::vector<Multiset> display_blocks(const MultisetPartition& shape);

/// Display order of terms: ascending f-order, then display_blocks compared
/// lexicographically. Gives {1}+{2,3}, {2}+{1,3}, {3}+{1,2} and, for a single
/// variable, y' y''' ahead of (y'')^2.
bool term_display_less(const CompositionTerm& a, const CompositionTerm& b);

/// Sorts terms into display order.
void normalize(CompositionExpansion& e);

/// d_tau f(y), one term per multiset partition of tau with its collapsing
/// multiplicity as coefficient. Coefficients come from the closed form, so
/// no set partitions are enumerated. tau = {} gives the single term f(y).
CompositionExpansion expand_composition(const Multiset& tau, const Limits& limits = {});

/// d_tau e^y: the composition expansion with f = exp.
CompositionExpansion expand_exponential(const Multiset& tau, const Limits& limits = {});

/// Classical Faa di Bruno coefficient k! / (1!^m_1 ... k!^m_k m_1! ... m_k!)
/// where m[j-1] counts blocks of size j. Throws invalid_signature unless
/// sum_j j * m_j = k = m.size(). An empty vector is the k = 0 case.
BigInt faa_di_bruno_coefficient(const std::vector<unsigned>& m);

/// One more derivative d/d_var applied term by term (chain rule on f^(m)(y),
/// product rule on the y-factors), then collected.
CompositionExpansion differentiate_expansion(const CompositionExpansion& e, VarId var);

/// iterated differentiate_expansion from f(y) along the given sequence.
CompositionExpansion differentiate_sequence(const std::vector<VarId>& order, bool exponential = false);

/// coefficient * d_u_part u * d_v_part v.
struct ProductTerm {
    Multiset u_part;
    Multiset v_part;
    BigInt coefficient = 1;

    friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
};

struct ProductExpansion {
    Multiset signature;
    std::vector<ProductTerm> terms;

    friend bool operator==(const ProductExpansion&, const ProductExpansion&) = default;
};

/// d_tau (uv): one term per sub-multiset l of tau with coefficient
/// prod_i C(k_i, l_i). Terms ordered by |u_part|, then by u_part entries.
ProductExpansion expand_product(const Multiset& tau);

/// Sum of all coefficients.
BigInt coefficient_sum(const CompositionExpansion& e);
BigInt coefficient_sum(const ProductExpansion& e);

} // namespace fdb
