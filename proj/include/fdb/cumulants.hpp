#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fdb/limits.hpp"
#include "fdb/multiset.hpp"
#include "fdb/numeric.hpp"

namespace fdb {

/// Joint cumulants kappa(X_i : i in key) keyed by non-empty multisets of
/// random-variable ids; kappa_n(X) is the key {X -> n}.
struct CumulantAssignment {
    std::map<Multiset, Rational> joint;

    /// kappa_1 .. kappa_n of one variable: values[j] is kappa_{j+1}(X).
    static CumulantAssignment univariate(VarId variable, const std::vector<Rational>& values);

    /// Throws incomplete_assignment naming the key when absent.
    const Rational& at(const Multiset& key) const;
};

/// Raw joint moments E(prod X_i) keyed by multisets of random-variable ids.
struct MomentAssignment {
    std::map<Multiset, Rational> raw;

    static MomentAssignment univariate(VarId variable, const std::vector<Rational>& values);

    const Rational& at(const Multiset& key) const;
};

/// E(prod over target) as the sum over multiset partitions of target of
/// multiplicity * prod kappa(part)^times. For a set this is the plain sum
/// over set partitions; for n copies of X it is the raw moment E(X^n).
/// The empty target gives 1.
Rational moment_from_cumulants(const Multiset& target, const CumulantAssignment& kappa,
                               const Limits& limits = {});

/// kappa(target) from raw moments of target and its sub-multisets, solving
/// the triangular system from the smallest sub-multisets up (memoized).
/// Throws std::invalid_argument for an empty target.
Rational cumulants_from_moments(const Multiset& target, const MomentAssignment& mu, const Limits& limits = {});

/// Every cumulant of target and its non-empty sub-multisets.
CumulantAssignment all_cumulants_from_moments(const Multiset& target, const MomentAssignment& mu,
                                              const Limits& limits = {});

/// Every raw moment of target and its non-empty sub-multisets.
MomentAssignment all_moments_from_cumulants(const Multiset& target, const CumulantAssignment& kappa,
                                            const Limits& limits = {});

struct CollapseIdentityReport {
    unsigned n = 0;
    Rational distinct_path;  // n distinct ids, joint cumulants identified afterwards
    Rational collapsed_path; // n copies of one id
    bool equal = false;
};

/// Checks kappa(X, ..., X) = kappa_n(X) at the moment level: the moment of n
/// distinct variables whose joint cumulants are all set to the matching
/// kappa_{|S|}(X) equals E(X^n). kappa must hold kappa_1..kappa_n of
/// `variable`. Throws guard_exceeded when n > limits.bruteforce_sweep_size.
CollapseIdentityReport collapse_cumulant_identity_check(unsigned n, const CumulantAssignment& kappa,
                                                        VarId variable = 1, const Limits& limits = {});

/// Key text "id:mult,id:mult" with ids ascending, e.g. {1 -> 2, 3 -> 1} is "1:2,3:1".
std::string assignment_key(const Multiset& key);

/// Inverse of assignment_key; also accepts unsorted or repeated ids. Throws
/// parse_error on malformed text.
Multiset parse_assignment_key(std::string_view text);

} // namespace fdb
