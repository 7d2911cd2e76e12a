#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "fdb/cumulants.hpp"
#include "fdb/expansion.hpp"
#include "fdb/oracle.hpp"

namespace fdb {

enum class Format { text, latex, json };

/// "text", "latex" or "json"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

// Plain text uses d for the partial symbol:
//
//   d^3/(dx1 dx2^2) f(y) =
//       f'(y) * d^3y/(dx1 dx2^2)
//     + 2 * f''(y) * dy/dx2 * d^2y/(dx1 dx2)
//     ...
std::string render_text(const CompositionExpansion& e);
std::string render_text(const ProductExpansion& e);

// LaTeX math-mode body: \partial fractions, primes on f up to order 3 and
// f^{(m)} beyond, repeated blocks as powers.
std::string render_latex(const CompositionExpansion& e);
std::string render_latex(const ProductExpansion& e);

// JSON documents. Big integers are strings; variable ids are object keys.
//
//   { "mode": "composition" | "exponential",
//     "signature": {"1": 1, "2": 2},
//     "terms": [ { "f_order": 2, "coefficient": "2",
//                  "parts": [ {"vars": {"1": 1, "2": 1}, "times": 1}, ... ] } ] }
//
//   { "mode": "product", "signature": {...},
//     "terms": [ { "u": {...}, "v": {...}, "coefficient": "2" } ] }
nlohmann::json to_json(const CompositionExpansion& e);
nlohmann::json to_json(const ProductExpansion& e);

/// Throws std::invalid_argument on schema violations.
CompositionExpansion composition_from_json(const nlohmann::json& doc);
ProductExpansion product_from_json(const nlohmann::json& doc);

std::string render(const CompositionExpansion& e, Format format);
std::string render(const ProductExpansion& e, Format format);

nlohmann::json multiset_to_json(const Multiset& m);
Multiset multiset_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const TrialSummary& summary);
nlohmann::json to_json(const SweepReport& report);
nlohmann::json to_json(const PathReport& report);
nlohmann::json to_json(const CollapseIdentityReport& report);

/// Assignment documents map assignment_key strings to rationals given as
/// "p/q" strings or JSON integers: {"1:1": "1/2", "1:2": "3"}.
CumulantAssignment cumulants_from_json(const nlohmann::json& doc);
MomentAssignment moments_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const CumulantAssignment& kappa);
nlohmann::json to_json(const MomentAssignment& mu);

} // namespace fdb
