#include "fdb/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "fdb/errors.hpp"

namespace fdb {

namespace {

void check_order(std::size_t order, const Limits& limits)
{
    if (order > limits.oracle_size) {
        throw guard_exceeded("oracle verification of order " + std::to_string(order)
                                 + " exceeds the limit of " + std::to_string(limits.oracle_size),
                             order, limits.oracle_size);
    }
}

void check_size(const Multiset& tau, const Limits& limits)
{
    check_order(tau.size(), limits);
}

void check_covered(const Polynomial& p, const std::map<VarId, Rational>& point)
{
    for (VarId id : p.variables()) {
        if (point.find(id) == point.end()) {
            throw incomplete_assignment("no value assigned to x" + std::to_string(id),
                                        "x" + std::to_string(id));
        }
    }
}

// mt19937_64's output sequence is fixed by the standard, unlike the
// distributions, so reduce it by hand to keep runs reproducible everywhere.
class TrialRng {
public:
    explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    Rational small_rational(bool nonzero = false)
    {
        while (true) {
            const long num = static_cast<long>(below(11)) - 5;
            const long den = static_cast<long>(below(4)) + 1;
            if (num != 0 || !nonzero) {
                return Rational(num, den);
            }
        }
    }

    Multiset signature(std::size_t max_size)
    {
        const unsigned size = 1 + static_cast<unsigned>(below(max_size));
        const unsigned vars = 1 + static_cast<unsigned>(below(std::min(size, 4U)));
        std::vector<unsigned> k(vars, 1);
        for (unsigned extra = vars; extra < size; ++extra) {
            ++k[below(vars)];
        }
        return Multiset::from_multiplicities(k);
    }

    Polynomial polynomial(unsigned vars, unsigned max_degree)
    {
        Polynomial p;
        while (p.is_zero()) {
            const unsigned terms = 1 + static_cast<unsigned>(below(5));
            for (unsigned t = 0; t < terms; ++t) {
                Multiset monomial;
                const unsigned degree = static_cast<unsigned>(below(max_degree + 1));
                for (unsigned d = 0; d < degree; ++d) {
                    monomial.add(1 + static_cast<VarId>(below(vars)));
                }
                p += Polynomial::term(small_rational(true), std::move(monomial));
            }
        }
        return p;
    }

    UnivariatePolynomial univariate(unsigned max_degree)
    {
        const unsigned degree = 1 + static_cast<unsigned>(below(max_degree));
        std::vector<Rational> c(degree + 1);
        for (auto& x : c) {
            x = small_rational();
        }
        c.back() = small_rational(true);
        return UnivariatePolynomial(std::move(c));
    }

    std::map<VarId, Rational> point(unsigned vars)
    {
        std::map<VarId, Rational> out;
        for (VarId id = 1; id <= vars; ++id) {
            out[id] = small_rational();
        }
        return out;
    }

    template <typename T>
    void shuffle(std::vector<T>& items)
    {
        // Fisher-Yates with the portable reduction above
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace

Rational evaluate_expansion(const CompositionExpansion& e, const EvaluationContext& ctx)
{
    const Rational y0 = ctx.y.evaluate(ctx.point);
    std::map<Multiset, Rational> block_values;
    Rational total = 0;
    for (const auto& term : e.terms) {
        Rational value = ctx.f.derivative(static_cast<unsigned>(term.f_order)).evaluate(y0);
        value *= Rational(term.coefficient);
        for (const auto& part : term.shape.parts()) {
            auto it = block_values.find(part.block);
            if (it == block_values.end()) {
                it = block_values.emplace(part.block, poly_derivative(ctx.y, part.block).evaluate(ctx.point))
                         .first;
            }
            value *= power(it->second, part.times);
        }
        total += value;
    }
    return total;
}

Rational evaluate_expansion(const ProductExpansion& e, const EvaluationContext& ctx)
{
    Rational total = 0;
    for (const auto& term : e.terms) {
        total += Rational(term.coefficient) * poly_derivative(ctx.u, term.u_part).evaluate(ctx.point)
                 * poly_derivative(ctx.v, term.v_part).evaluate(ctx.point);
    }
    return total;
}

VerificationReport verify_composition(const Multiset& tau, const EvaluationContext& ctx, const Limits& limits)
{
    check_size(tau, limits);
    check_covered(ctx.y, ctx.point);

    VerificationReport report;
    report.kind = "composition";
    report.signature = tau;
    report.direct = poly_derivative(ctx.f.compose(ctx.y), tau).evaluate(ctx.point);
    const auto expansion = expand_composition(tau, limits);
    report.terms = expansion.terms.size();
    report.expanded = evaluate_expansion(expansion, ctx);
    report.equal = report.direct == report.expanded;
    return report;
}

VerificationReport verify_product(const Multiset& tau, const EvaluationContext& ctx, const Limits& limits)
{
    check_size(tau, limits);
    check_covered(ctx.u, ctx.point);
    check_covered(ctx.v, ctx.point);

    VerificationReport report;
    report.kind = "product";
    report.signature = tau;
    report.direct = poly_derivative(ctx.u * ctx.v, tau).evaluate(ctx.point);
    const auto expansion = expand_product(tau);
    report.terms = expansion.terms.size();
    report.expanded = evaluate_expansion(expansion, ctx);
    report.equal = report.direct == report.expanded;
    return report;
}

TrialSummary random_composition_trials(std::size_t trials, std::size_t max_size, std::uint64_t seed,
                                       const Limits& limits)
{
    TrialRng rng(seed);
    TrialSummary summary;
    summary.kind = "composition";
    check_order(max_size, limits);
    summary.seed = seed;
    for (std::size_t t = 0; t < trials; ++t) {
        const Multiset tau = rng.signature(max_size);
        const auto vars = static_cast<unsigned>(tau.distinct());
        EvaluationContext ctx;
        ctx.y = rng.polynomial(vars, 4);
        ctx.f = rng.univariate(4);
        ctx.point = rng.point(vars);
        auto report = verify_composition(tau, ctx, limits);
        report.seed = seed;
        ++summary.trials;
        if (report.equal) {
            ++summary.passed;
        } else {
            summary.failures.push_back(std::move(report));
        }
    }
    return summary;
}

TrialSummary random_product_trials(std::size_t trials, std::size_t max_size, std::uint64_t seed,
                                   const Limits& limits)
{
    TrialRng rng(seed);
    TrialSummary summary;
    summary.kind = "product";
    check_order(max_size, limits);
    summary.seed = seed;
    for (std::size_t t = 0; t < trials; ++t) {
        const Multiset tau = rng.signature(max_size);
        const auto vars = static_cast<unsigned>(tau.distinct());
        EvaluationContext ctx;
        ctx.u = rng.polynomial(vars, 4);
        ctx.v = rng.polynomial(vars, 4);
        ctx.point = rng.point(vars);
        auto report = verify_product(tau, ctx, limits);
        report.seed = seed;
        ++summary.trials;
        if (report.equal) {
            ++summary.passed;
        } else {
            summary.failures.push_back(std::move(report));
        }
    }
    return summary;
}

std::vector<std::vector<unsigned>> integer_compositions(unsigned n)
{
    if (n == 0) {
        return {{}};
    }
    std::vector<std::vector<unsigned>> out;
    for (unsigned first = 1; first <= n; ++first) {
        for (auto& rest : integer_compositions(n - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    }
    return out;
}

SweepReport sweep_multiplicities(std::size_t max_size, const Limits& limits)
{
    if (max_size > limits.bruteforce_sweep_size) {
        throw guard_exceeded("multiplicity sweep up to size " + std::to_string(max_size)
                                 + " exceeds the limit of " + std::to_string(limits.bruteforce_sweep_size),
                             max_size, limits.bruteforce_sweep_size);
    }
    SweepReport report;
    report.max_size = max_size;
    for (unsigned n = 0; n <= max_size; ++n) {
        const BigInt expected_sum = bell(n);
        for (const auto& k : integer_compositions(n)) {
            const Multiset tau = Multiset::from_multiplicities(k);
            const auto counts = collapse_counts(tau, limits);
            const auto partitions = enumerate_multiset_partitions(tau, limits);
            ++report.signatures;
            BigInt sum = 0;
            for (const auto& mp : partitions) {
                ++report.pairs;
                const BigInt closed = multiplicity(tau, mp);
                const auto it = counts.find(mp);
                const BigInt brute = it == counts.end() ? BigInt(0) : it->second;
                if (closed != brute) {
                    report.mismatches.push_back({tau, mp, closed, brute});
                }
                sum += closed;
            }
            // every collapsed set partition must be one of the enumerated shapes
            if (counts.size() != partitions.size() || sum != expected_sum) {
                ++report.conservation_failures;
            }
        }
    }
    return report;
}

PathReport sweep_differentiation_paths(std::size_t max_size, std::size_t orders_per_signature,
                                       std::uint64_t seed)
{
    TrialRng rng(seed);
    PathReport report;
    report.max_size = max_size;
    report.seed = seed;
    for (unsigned n = 1; n <= max_size; ++n) {
        for (const auto& k : integer_compositions(n)) {
            const Multiset tau = Multiset::from_multiplicities(k);
            const auto reference = expand_composition(tau);
            ++report.signatures;
            std::vector<VarId> order = tau.members();
            for (std::size_t r = 0; r < orders_per_signature; ++r) {
                rng.shuffle(order);
                ++report.orders_checked;
                if (differentiate_sequence(order) != reference) {
                    report.failures.push_back(order);
                }
            }
        }
    }
    return report;
}

} // namespace fdb
