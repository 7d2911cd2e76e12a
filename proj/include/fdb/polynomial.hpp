#pragma once

#include <map>
#include <set>
#include <vector>

#include "fdb/multiset.hpp"
#include "fdb/numeric.hpp"

namespace fdb {

/// Exact multivariate polynomial over the rationals. A monomial is the
/// multiset of its variables (x1^2 x3 is {1 -> 2, 3 -> 1}); the constant
/// monomial is the empty multiset. Zero coefficients are never stored.
class Polynomial {
public:
    using Monomial = Multiset;

    Polynomial() = default;
    Polynomial(Rational constant); // NOLINT(google-explicit-constructor)
    Polynomial(int constant) : Polynomial(Rational(constant)) {} // NOLINT(google-explicit-constructor)

    static Polynomial variable(VarId id);
    static Polynomial term(Rational coefficient, Monomial monomial);

    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    unsigned total_degree() const noexcept;
    std::set<VarId> variables() const;

    /// Throws incomplete_assignment when a variable of this polynomial has no value.
    Rational evaluate(const std::map<VarId, Rational>& point) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void accumulate(const Monomial& m, const Rational& c);

    std::map<Monomial, Rational> terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Exact partial derivative with respect to var.
Polynomial poly_partial(const Polynomial& p, VarId var);

/// Applies poly_partial once per listed variable, in order.
Polynomial poly_partial(const Polynomial& p, const std::vector<VarId>& sequence);

/// d_sigma p: one partial per member of sigma, with repetition.
Polynomial poly_derivative(const Polynomial& p, const Multiset& sigma);

/// Polynomial in a single formal variable t: c[0] + c[1] t + c[2] t^2 + ...
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<Rational> coefficients);

    /// t^n.
    static UnivariatePolynomial monomial(unsigned n);

    const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
    int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }

    /// m-th derivative in t.
    UnivariatePolynomial derivative(unsigned m = 1) const;
    Rational evaluate(const Rational& t) const;

    /// f(y) as a multivariate polynomial (Horner).
    Polynomial compose(const Polynomial& y) const;

    friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

private:
    void trim();

    std::vector<Rational> coefficients_;
};

} // namespace fdb
