#include "doctest.h"

#include <algorithm>

#include "fdb/errors.hpp"
#include "fdb/oracle.hpp"

using namespace fdb;

namespace {

const Polynomial x1 = Polynomial::variable(1);
const Polynomial x2 = Polynomial::variable(2);
const Polynomial x3 = Polynomial::variable(3);

EvaluationContext composition_ctx(Polynomial y, UnivariatePolynomial f, std::map<VarId, Rational> point)
{
    EvaluationContext ctx;
    ctx.y = std::move(y);
    ctx.f = std::move(f);
    ctx.point = std::move(point);
    return ctx;
}

EvaluationContext product_ctx(Polynomial u, Polynomial v, std::map<VarId, Rational> point)
{
    EvaluationContext ctx;
    ctx.u = std::move(u);
    ctx.v = std::move(v);
    ctx.point = std::move(point);
    return ctx;
}

} // namespace

TEST_CASE("composition checks")
{
    SUBCASE("cubic of x1 + x2 x3")
    {
        const auto ctx = composition_ctx(x1 + x2 * x3, UnivariatePolynomial::monomial(3),
                                         {{1, Rational(1, 3)}, {2, -2}, {3, Rational(5, 7)}});
        const auto r = verify_composition(Multiset::of_members({1, 2, 3}), ctx);
        CHECK(r.equal);
        CHECK(r.direct != 0);
        CHECK(r.terms == 5);
    }
    SUBCASE("square of x1 x2^2 exercises the multiplicity-2 term")
    {
        const auto ctx = composition_ctx(x1 * x2 * x2, UnivariatePolynomial::monomial(2),
                                         {{1, Rational(3, 2)}, {2, Rational(-1, 4)}});
        const auto r = verify_composition(Multiset::of_members({1, 2, 2}), ctx);
        CHECK(r.equal);
        CHECK(r.direct != 0);

        // dropping the 2 must be detected
        auto wrong = expand_composition(Multiset::of_members({1, 2, 2}));
        wrong.terms[2].coefficient = 1;
        CHECK(evaluate_expansion(wrong, ctx) != r.direct);
    }
    SUBCASE("chain rule identity")
    {
        const auto r = verify_composition(Multiset{{1, 1}}, composition_ctx(x1, UnivariatePolynomial::monomial(1), {{1, 9}}));
        CHECK(r.equal);
        CHECK(r.direct == 1);
        CHECK(r.expanded == 1);
    }
    SUBCASE("errors")
    {
        const auto ctx = composition_ctx(x1 + x2, UnivariatePolynomial::monomial(2), {{1, 1}});
        CHECK_THROWS_AS(verify_composition(Multiset{{1, 1}}, ctx), incomplete_assignment);
        CHECK_THROWS_AS(verify_composition(Multiset::repeated(1, 7), ctx), guard_exceeded);
        Limits wide;
        wide.oracle_size = 7;
        auto full = ctx;
        full.point[2] = 3;
        CHECK(verify_composition(Multiset::repeated(1, 7), full, wide).equal);
    }
}

TEST_CASE("product checks")
{
    SUBCASE("x1 x2 times x2^2")
    {
        const auto r = verify_product(Multiset::of_members({1, 2, 2}),
                                      product_ctx(x1 * x2, x2 * x2, {{1, Rational(2, 5)}, {2, 3}}));
        CHECK(r.equal);
        CHECK(r.direct != 0);
        CHECK(r.terms == 6);
    }
    SUBCASE("Leibniz on x * x")
    {
        const auto r = verify_product(Multiset::repeated(1, 2), product_ctx(x1, x1, {{1, 4}}));
        CHECK(r.equal);
        CHECK(r.direct == 2);
    }
    SUBCASE("degree-2 factors in three variables")
    {
        const auto u = x1 * x2 + Rational(1, 2) * x3 * x3 - x1;
        const auto v = x2 * x3 + 3 * x1 * x1 + x2;
        const auto r = verify_product(Multiset::of_members({1, 2, 3}),
                                      product_ctx(u, v, {{1, -1}, {2, Rational(2, 3)}, {3, 5}}));
        CHECK(r.equal);
    }
    SUBCASE("missing variable")
    {
        CHECK_THROWS_AS(verify_product(Multiset{{1, 1}}, product_ctx(x1, x3, {{1, 1}})), incomplete_assignment);
    }
}

TEST_CASE("mixed partials commute on polynomials")
{
    const Polynomial p = pow(x1 * x2 + x3, 3) + Rational(2, 3) * x1 * x1 * x3;
    const Multiset tau = Multiset::of_members({1, 1, 2, 3});
    auto order = tau.members();
    const Polynomial reference = poly_partial(p, order);
    CHECK(!reference.is_zero());
    do {
        CHECK(poly_partial(p, order) == reference);
    } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("random trials are reproducible and pass")
{
    const auto a = random_composition_trials(60, 6, 99);
    CHECK(a.trials == 60);
    CHECK(a.all_equal());
    const auto b = random_composition_trials(60, 6, 99);
    CHECK(b.passed == a.passed);

    const auto p = random_product_trials(60, 6);
    CHECK(p.seed == default_seed);
    CHECK(p.all_equal());
}

TEST_CASE("sweeps")
{
    const auto m = sweep_multiplicities(6);
    CHECK(m.all_agree());
    CHECK(m.signatures == 64); // compositions of 0..6
    CHECK_THROWS_AS(sweep_multiplicities(9), guard_exceeded);

    const auto p = sweep_differentiation_paths(5, 2, 3);
    CHECK(p.all_equal());
    CHECK(p.orders_checked == 2 * 31);

    CHECK(integer_compositions(4).size() == 8);
    CHECK(integer_compositions(0).size() == 1);
}
