#include "doctest.h"

#include "fdb/errors.hpp"
#include "fdb/polynomial.hpp"

using namespace fdb;

namespace {

const Polynomial x1 = Polynomial::variable(1);
const Polynomial x2 = Polynomial::variable(2);
const Polynomial x3 = Polynomial::variable(3);

} // namespace

TEST_CASE("arithmetic")
{
    const Polynomial p = x1 * x1 * x2 + Rational(1, 2);
    CHECK(p.terms().size() == 2);
    CHECK(p.total_degree() == 3);
    CHECK(p.variables() == std::set<VarId>{1, 2});
    CHECK((p - p).is_zero());
    CHECK(pow(x1 + 1, 2) == x1 * x1 + 2 * x1 + 1);
    CHECK(pow(x1, 0) == Polynomial(1));
    CHECK(-(x1 - x2) == x2 - x1);
    CHECK(Polynomial(0).is_zero());
}

TEST_CASE("evaluation")
{
    const Polynomial p = x1 * x1 * x2 + Rational(1, 2);
    CHECK(p.evaluate({{1, Rational(2, 3)}, {2, 3}}) == Rational(4, 3) + Rational(1, 2));
    CHECK_THROWS_AS(p.evaluate({{1, 1}}), incomplete_assignment);
    CHECK(Polynomial(7).evaluate({}) == 7);
}

TEST_CASE("partial derivatives")
{
    CHECK(poly_partial(x1 * x1 * x2, 1) == 2 * x1 * x2);
    CHECK(poly_partial(Polynomial(Rational(5, 3)), 1).is_zero());
    CHECK(poly_partial(x1 * x2, std::vector<VarId>{1, 2}) == Polynomial(1));
    CHECK(poly_partial(x1 * x2, std::vector<VarId>{2, 1}) == Polynomial(1));
    CHECK(poly_partial(x3, 1).is_zero());
    const Polynomial q = pow(x1 + x2 * x3, 3);
    CHECK(poly_derivative(q, Multiset::of_members({1, 2, 3}))
          == poly_partial(poly_partial(poly_partial(q, 3), 1), 2));
    CHECK(poly_derivative(pow(x1, 4), Multiset::repeated(1, 4)) == Polynomial(24));
}

TEST_CASE("univariate")
{
    const UnivariatePolynomial f({1, 0, 3, Rational(1, 2)}); // 1 + 3t^2 + t^3/2
    CHECK(f.degree() == 3);
    CHECK(f.derivative() == UnivariatePolynomial({0, 6, Rational(3, 2)}));
    CHECK(f.derivative(3) == UnivariatePolynomial({3}));
    CHECK(f.derivative(4).degree() == -1);
    CHECK(f.evaluate(2) == 1 + 12 + 4);
    CHECK(UnivariatePolynomial({1, 2, 0, 0}).degree() == 1);
    CHECK(UnivariatePolynomial::monomial(3).compose(x1 + x2) == pow(x1 + x2, 3));
    CHECK(f.compose(x1 * x2).evaluate({{1, 2}, {2, Rational(1, 2)}}) == f.evaluate(1));
}
