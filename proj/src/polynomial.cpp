#include "fdb/polynomial.hpp"

#include <string>

#include "fdb/errors.hpp"

namespace fdb {

Polynomial::Polynomial(Rational constant)
{
    if (constant != 0) {
        terms_.emplace(Monomial{}, std::move(constant));
    }
}

Polynomial Polynomial::variable(VarId id)
{
    return term(1, Monomial{{id, 1}});
}

Polynomial Polynomial::term(Rational coefficient, Monomial monomial)
{
    Polynomial p;
    p.accumulate(monomial, coefficient);
    return p;
}

void Polynomial::accumulate(const Monomial& m, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

unsigned Polynomial::total_degree() const noexcept
{
    unsigned degree = 0;
    for (const auto& [m, c] : terms_) {
        degree = std::max(degree, static_cast<unsigned>(m.size()));
    }
    return degree;
}

std::set<VarId> Polynomial::variables() const
{
    std::set<VarId> out;
    for (const auto& [m, c] : terms_) {
        for (const auto& [id, e] : m) {
            out.insert(id);
        }
    }
    return out;
}

Rational Polynomial::evaluate(const std::map<VarId, Rational>& point) const
{
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational value = c;
        for (const auto& [id, e] : m) {
            const auto it = point.find(id);
            if (it == point.end()) {
                throw incomplete_assignment("no value assigned to x" + std::to_string(id),
                                            "x" + std::to_string(id));
            }
            value *= power(it->second, e);
        }
        total += value;
    }
    return total;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    for (const auto& [m, c] : rhs.terms_) {
        accumulate(m, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    for (const auto& [m, c] : rhs.terms_) {
        accumulate(m, -c);
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.accumulate(ma + mb, ca * cb);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs)
{
    *this = *this * rhs;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out;
    return out -= *this;
}

Polynomial pow(const Polynomial& base, unsigned exponent)
{
    Polynomial result = 1;
    Polynomial square = base;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= square;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            square *= square;
        }
    }
    return result;
}

Polynomial poly_partial(const Polynomial& p, VarId var)
{
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = m.count(var);
        if (e == 0) {
            continue;
        }
        Multiset lowered = m;
        lowered.remove(var);
        out += Polynomial::term(c * e, std::move(lowered));
    }
    return out;
}

Polynomial poly_partial(const Polynomial& p, const std::vector<VarId>& sequence)
{
    Polynomial out = p;
    for (VarId var : sequence) {
        out = poly_partial(out, var);
    }
    return out;
}

Polynomial poly_derivative(const Polynomial& p, const Multiset& sigma)
{
    return poly_partial(p, sigma.members());
}

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients))
{
    trim();
}

UnivariatePolynomial UnivariatePolynomial::monomial(unsigned n)
{
    std::vector<Rational> c(n + 1, 0);
    c[n] = 1;
    return UnivariatePolynomial(std::move(c));
}

void UnivariatePolynomial::trim()
{
    while (!coefficients_.empty() && coefficients_.back() == 0) {
        coefficients_.pop_back();
    }
}

UnivariatePolynomial UnivariatePolynomial::derivative(unsigned m) const
{
    if (m >= coefficients_.size()) {
        return {};
    }
    std::vector<Rational> out(coefficients_.size() - m);
    for (std::size_t i = m; i < coefficients_.size(); ++i) {
        // d^m/dt^m t^i = i (i-1) ... (i-m+1) t^(i-m)
        BigInt falling = 1;
        for (std::size_t j = 0; j < m; ++j) {
            falling *= static_cast<unsigned long>(i - j);
        }
        out[i - m] = coefficients_[i] * Rational(falling);
    }
    return UnivariatePolynomial(std::move(out));
}

Rational UnivariatePolynomial::evaluate(const Rational& t) const
{
    Rational acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

Polynomial UnivariatePolynomial::compose(const Polynomial& y) const
{
    Polynomial acc;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * y + Polynomial(*it);
    }
    return acc;
}

} // namespace fdb
