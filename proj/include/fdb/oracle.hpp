#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fdb/expansion.hpp"
#include "fdb/limits.hpp"
#include "fdb/polynomial.hpp"

namespace fdb {

/// Concrete functions and a rational point at which both sides of an
/// expansion identity are evaluated. Composition checks use y and f,
/// product checks use u and v.
struct EvaluationContext {
    std::map<VarId, Rational> point;
    Polynomial y;
    UnivariatePolynomial f;
    Polynomial u;
    Polynomial v;
};

struct VerificationReport {
    std::string kind; // "composition" or "product"
    Multiset signature;
    Rational direct;   // iterated differentiation of the concrete function
    Rational expanded; // symbolic expansion instantiated at the point
    bool equal = false;
    std::size_t terms = 0;
    std::optional<std::uint64_t> seed;
};

/// Compares d_tau f(y(x)) computed by iterated poly_partial with
/// expand_composition(tau) evaluated term by term. Throws guard_exceeded when
/// |tau| > limits.oracle_size and incomplete_assignment when the point misses
/// a variable of y.
VerificationReport verify_composition(const Multiset& tau, const EvaluationContext& ctx,
                                      const Limits& limits = {});

/// Compares d_tau (u v) with expand_product(tau) the same way.
VerificationReport verify_product(const Multiset& tau, const EvaluationContext& ctx,
                                  const Limits& limits = {});

/// Evaluates d_tau f(y) for a given expansion (the right-hand side alone).
Rational evaluate_expansion(const CompositionExpansion& e, const EvaluationContext& ctx);
Rational evaluate_expansion(const ProductExpansion& e, const EvaluationContext& ctx);

inline constexpr std::uint64_t default_seed = 20240611;

struct TrialSummary {
    std::string kind;
    std::uint64_t seed = default_seed;
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::vector<VerificationReport> failures;

    bool all_equal() const noexcept { return passed == trials; }
};

/// Randomized composition checks: random signatures of size 1..max_size,
/// random y of total degree <= 4 and f of degree <= 4, random rational points.
/// Deterministic for a given seed.
TrialSummary random_composition_trials(std::size_t trials, std::size_t max_size,
                                       std::uint64_t seed = default_seed, const Limits& limits = {});

/// Randomized product checks with random u, v of total degree <= 4.
TrialSummary random_product_trials(std::size_t trials, std::size_t max_size,
                                   std::uint64_t seed = default_seed, const Limits& limits = {});

struct MultiplicityMismatch {
    Multiset signature;
    MultisetPartition partition;
    BigInt closed_form;
    BigInt brute_force;
};

struct SweepReport {
    std::size_t max_size = 0;
    std::size_t signatures = 0;
    std::size_t pairs = 0;
    std::size_t conservation_failures = 0;
    std::vector<MultiplicityMismatch> mismatches;

    bool all_agree() const noexcept { return mismatches.empty() && conservation_failures == 0; }
};

/// Every multiplicity shape {1^k1, 2^k2, ...} with |tau| <= max_size (one per
/// integer composition), every partition of it: closed form against brute
/// force, plus the Bell-number sum. Throws guard_exceeded when
/// max_size > limits.bruteforce_sweep_size.
SweepReport sweep_multiplicities(std::size_t max_size, const Limits& limits = {});

struct PathReport {
    std::size_t max_size = 0;
    std::size_t signatures = 0;
    std::size_t orders_checked = 0;
    std::uint64_t seed = default_seed;
    std::vector<std::vector<VarId>> failures;

    bool all_equal() const noexcept { return failures.empty(); }
};

/// For every multiplicity shape with |tau| <= max_size, differentiates along
/// orders_per_signature random orderings of tau's members and compares with
/// expand_composition(tau).
PathReport sweep_differentiation_paths(std::size_t max_size, std::size_t orders_per_signature,
                                       std::uint64_t seed = default_seed);

/// k-vectors of all integer compositions of n.
std::vector<std::vector<unsigned>> integer_compositions(unsigned n);

} // namespace fdb
