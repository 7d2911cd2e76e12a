#include "doctest.h"

#include <random>

#include "fdb/errors.hpp"
#include "fdb/expansion.hpp"
#include "fdb/oracle.hpp"
#include "support/naive_partitions.hpp"

using namespace fdb;

namespace {

Multiset ms(std::initializer_list<VarId> members)
{
    return Multiset::of_members(members);
}

std::vector<BigInt> coefficients(const CompositionExpansion& e)
{
    std::vector<BigInt> out;
    for (const auto& t : e.terms) {
        out.push_back(t.coefficient);
    }
    return out;
}

std::vector<BigInt> coefficients(const ProductExpansion& e)
{
    std::vector<BigInt> out;
    for (const auto& t : e.terms) {
        out.push_back(t.coefficient);
    }
    return out;
}

std::vector<BigInt> big(std::initializer_list<int> values)
{
    return {values.begin(), values.end()};
}

// Integer partition counts by the standard coin DP, independent of the library.
std::uint64_t partition_count(unsigned n)
{
    std::vector<std::uint64_t> p(n + 1, 0);
    p[0] = 1;
    for (unsigned part = 1; part <= n; ++part) {
        for (unsigned s = part; s <= n; ++s) {
            p[s] += p[s - part];
        }
    }
    return p[n];
}

} // namespace

TEST_CASE("distinct variables: five coefficient-1 terms")
{
    const auto e = expand_composition(ms({1, 2, 3}));
    REQUIRE(e.terms.size() == 5);
    CHECK(coefficients(e) == big({1, 1, 1, 1, 1}));
    std::vector<std::size_t> orders;
    for (const auto& t : e.terms) {
        orders.push_back(t.f_order);
    }
    CHECK(orders == std::vector<std::size_t>{1, 2, 2, 2, 3});
    // 2-block terms in the order {1}+{2,3}, {2}+{1,3}, {3}+{1,2}
    CHECK(e.terms[1].shape == MultisetPartition::from_blocks({ms({1}), ms({2, 3})}));
    CHECK(e.terms[2].shape == MultisetPartition::from_blocks({ms({2}), ms({1, 3})}));
    CHECK(e.terms[3].shape == MultisetPartition::from_blocks({ms({3}), ms({1, 2})}));
}

TEST_CASE("x2 and x3 identified: coefficients 1, 1, 2, 1")
{
    const auto e = expand_composition(ms({1, 2, 2}));
    REQUIRE(e.terms.size() == 4);
    CHECK(coefficients(e) == big({1, 1, 2, 1}));
    CHECK(e.terms[0].shape == MultisetPartition::from_blocks({ms({1, 2, 2})}));
    CHECK(e.terms[1].shape == MultisetPartition::from_blocks({ms({1}), ms({2, 2})}));
    CHECK(e.terms[2].shape == MultisetPartition::from_blocks({ms({2}), ms({1, 2})}));
    CHECK(e.terms[2].f_order == 2);
    CHECK(e.terms[3].shape == MultisetPartition::from_blocks({ms({1}), ms({2}), ms({2})}));
    CHECK(e.terms[3].f_order == 3);
}

TEST_CASE("full collapse k = 3 against the naive collapse count")
{
    const auto histogram = naive::collapse_histogram({1, 1, 1});
    // shapes {x,x,x}, {x}+{x,x}, {x}+{x}+{x}
    const std::vector<std::uint64_t> expected{histogram.at({{1, 1, 1}}), histogram.at({{1}, {1, 1}}),
                                              histogram.at({{1}, {1}, {1}})};
    CHECK(expected == std::vector<std::uint64_t>{1, 3, 1});
    const auto e = expand_composition(Multiset::repeated(1, 3));
    REQUIRE(e.terms.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(e.terms[i].coefficient == expected[i]);
    }
}

TEST_CASE("empty signature is f(y)")
{
    const auto e = expand_composition(Multiset{});
    REQUIRE(e.terms.size() == 1);
    CHECK(e.terms[0].f_order == 0);
    CHECK(e.terms[0].shape.parts().empty());
    CHECK(e.terms[0].coefficient == 1);
}

TEST_CASE("exponential specialization")
{
    const auto e = expand_exponential(ms({1, 2, 3}));
    CHECK(e.exponential);
    auto plain = expand_composition(ms({1, 2, 3}));
    plain.exponential = true;
    CHECK(e == plain);

    const auto first = expand_exponential(ms({1}));
    REQUIRE(first.terms.size() == 1);
    CHECK(first.terms[0].shape == MultisetPartition::from_blocks({ms({1})}));

    for (unsigned n = 1; n <= 12; ++n) {
        const auto full = expand_exponential(Multiset::repeated(1, n));
        CHECK(full.terms.size() == partition_count(n));
        CHECK(coefficient_sum(full) == bell(n));
    }
}

TEST_CASE("faa di bruno coefficients")
{
    CHECK(faa_di_bruno_coefficient({0, 1, 2, 0, 0, 0, 0, 0}) == 280);
    CHECK(faa_di_bruno_coefficient({5, 0, 0, 0, 0}) == 1);
    CHECK(faa_di_bruno_coefficient({0, 0, 0, 0, 0, 1}) == 1);
    CHECK(faa_di_bruno_coefficient({}) == 1);
    CHECK(faa_di_bruno_coefficient({2, 1, 0, 0}) == 6);
    CHECK_THROWS_AS(faa_di_bruno_coefficient({1, 0, 1}), invalid_signature);
    CHECK_THROWS_AS(faa_di_bruno_coefficient({0, 0, 1, 0}), invalid_signature);

    for (unsigned k = 1; k <= 12; ++k) {
        const Multiset tau = Multiset::repeated(1, k);
        for (const auto& term : expand_composition(tau).terms) {
            std::vector<unsigned> m(k, 0);
            for (const auto& part : term.shape.parts()) {
                m[part.block.size() - 1] += part.times;
            }
            CHECK(term.coefficient == faa_di_bruno_coefficient(m));
        }
    }
}

TEST_CASE("incremental differentiation")
{
    SUBCASE("base case")
    {
        const auto e = differentiate_expansion(expand_composition(Multiset{}), 1);
        REQUIRE(e.terms.size() == 1);
        CHECK(e.terms[0].f_order == 1);
        CHECK(e.terms[0].shape == MultisetPartition::from_blocks({ms({1})}));
        CHECK(e.signature == ms({1}));
    }
    SUBCASE("new variable")
    {
        CHECK(differentiate_expansion(expand_composition(ms({1, 2})), 3) == expand_composition(ms({1, 2, 3})));
    }
    SUBCASE("repeated variable collects the coefficient 2")
    {
        const auto e = differentiate_expansion(expand_composition(ms({1, 2})), 2);
        CHECK(e == expand_composition(ms({1, 2, 2})));
        CHECK(coefficients(e) == big({1, 1, 2, 1}));
    }
    SUBCASE("exponential flag carries through")
    {
        CHECK(differentiate_expansion(expand_exponential(ms({1})), 1) == expand_exponential(ms({1, 1})));
    }
    SUBCASE("random orders up to size 6")
    {
        std::mt19937_64 rng(11);
        for (unsigned n = 1; n <= 6; ++n) {
            for (const auto& k : integer_compositions(n)) {
                const Multiset tau = Multiset::from_multiplicities(k);
                auto order = tau.members();
                std::shuffle(order.begin(), order.end(), rng);
                CHECK(differentiate_sequence(order) == expand_composition(tau));
            }
        }
    }
}

TEST_CASE("identifying variables only merges terms")
{
    std::mt19937_64 rng(5);
    for (unsigned n = 1; n <= 7; ++n) {
        const auto distinct = expand_composition(Multiset::of_member_range(CollapseMap::identity(n).targets()));
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<VarId> targets(n);
            for (auto& t : targets) {
                t = 1 + static_cast<VarId>(rng() % 3);
            }
            const CollapseMap cmap(targets);
            std::map<std::pair<std::size_t, MultisetPartition>, BigInt> merged;
            for (const auto& term : distinct.terms) {
                std::vector<Multiset> images;
                for (const auto& block : term.shape.blocks()) {
                    Multiset image;
                    for (const auto& [id, count] : block) {
                        image.add(cmap(id), count);
                    }
                    images.push_back(image);
                }
                merged[{term.f_order, MultisetPartition::from_blocks(images)}] += term.coefficient;
            }
            const auto collapsed = expand_composition(cmap.image());
            REQUIRE(collapsed.terms.size() == merged.size());
            for (const auto& term : collapsed.terms) {
                CHECK(merged.at({term.f_order, term.shape}) == term.coefficient);
            }
        }
    }
}

TEST_CASE("coefficients sum to Bell numbers on every shape up to size 8")
{
    for (unsigned n = 0; n <= 8; ++n) {
        for (const auto& k : integer_compositions(n)) {
            const auto e = expand_composition(Multiset::from_multiplicities(k));
            CHECK(coefficient_sum(e) == bell(n));
            for (const auto& t : e.terms) {
                CHECK(t.f_order == t.shape.block_count());
                CHECK(t.coefficient >= 1);
            }
        }
    }
}

TEST_CASE("product rule")
{
    SUBCASE("x1 x2^2")
    {
        const auto e = expand_product(ms({1, 2, 2}));
        REQUIRE(e.terms.size() == 6);
        CHECK(coefficients(e) == big({1, 1, 2, 2, 1, 1}));
        CHECK(e.terms[0].u_part.empty());
        CHECK(e.terms[2].u_part == ms({2}));
        CHECK(e.terms[2].v_part == ms({1, 2}));
        CHECK(e.terms[3].u_part == ms({1, 2}));
        CHECK(e.terms[5].v_part.empty());
    }
    SUBCASE("distinct variables: one term per subset")
    {
        const auto e = expand_product(ms({1, 2, 3}));
        CHECK(e.terms.size() == 8);
        CHECK(coefficients(e) == std::vector<BigInt>(8, 1));
    }
    SUBCASE("Leibniz")
    {
        CHECK(coefficients(expand_product(Multiset::repeated(1, 2))) == big({1, 2, 1}));
        CHECK(coefficients(expand_product(Multiset::repeated(1, 4))) == big({1, 4, 6, 4, 1}));
    }
    SUBCASE("empty signature")
    {
        const auto e = expand_product(Multiset{});
        REQUIRE(e.terms.size() == 1);
        CHECK(e.terms[0].u_part.empty());
        CHECK(e.terms[0].v_part.empty());
    }
    SUBCASE("sums, counts and u/v symmetry")
    {
        for (unsigned n = 0; n <= 8; ++n) {
            for (const auto& k : integer_compositions(n)) {
                const Multiset tau = Multiset::from_multiplicities(k);
                const auto e = expand_product(tau);
                CHECK(coefficient_sum(e) == BigInt(1) << n);
                std::size_t count = 1;
                for (unsigned ki : k) {
                    count *= ki + 1;
                }
                CHECK(e.terms.size() == count);
                std::map<std::pair<Multiset, Multiset>, BigInt> by_parts;
                for (const auto& t : e.terms) {
                    CHECK(t.u_part + t.v_part == tau);
                    by_parts[{t.u_part, t.v_part}] = t.coefficient;
                }
                CHECK(by_parts.size() == e.terms.size());
                for (const auto& t : e.terms) {
                    CHECK(by_parts.at({t.v_part, t.u_part}) == t.coefficient);
                }
            }
        }
    }
}
