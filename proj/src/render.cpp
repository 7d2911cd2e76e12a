#include "fdb/render.hpp"

#include <stdexcept>

#include "fdb/notation.hpp"

namespace fdb {

using nlohmann::json;

namespace {

// ---- plain text -----------------------------------------------------------

std::string text_denominator(const Multiset& m)
{
    std::string out;
    for (const auto& [id, count] : m) {
        if (!out.empty()) {
            out += ' ';
        }
        out += "dx" + std::to_string(id);
        if (count > 1) {
            out += '^' + std::to_string(count);
        }
    }
    return m.distinct() > 1 ? "(" + out + ")" : out;
}

std::string text_operator(const Multiset& m)
{
    if (m.empty()) {
        return "";
    }
    const std::string order = m.size() == 1 ? "d" : "d^" + std::to_string(m.size());
    return order + "/" + text_denominator(m) + " ";
}

std::string text_derivative(const char* symbol, const Multiset& m)
{
    if (m.empty()) {
        return symbol;
    }
    const std::string order = m.size() == 1 ? "d" : "d^" + std::to_string(m.size());
    return order + symbol + "/" + text_denominator(m);
}

std::string text_f(std::size_t order)
{
    if (order <= 3) {
        return "f" + std::string(order, '\'') + "(y)";
    }
    return "f^(" + std::to_string(order) + ")(y)";
}

std::string join(const std::vector<std::string>& pieces, const char* separator)
{
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i > 0) {
            out += separator;
        }
        out += pieces[i];
    }
    return out;
}

// Display-ordered (block, times) runs of a shape.
std::vector<std::pair<Multiset, unsigned>> display_runs(const MultisetPartition& shape)
{
    std::vector<std::pair<Multiset, unsigned>> runs;
    for (auto& block : display_blocks(shape)) {
        if (!runs.empty() && runs.back().first == block) {
            ++runs.back().second;
        } else {
            runs.emplace_back(std::move(block), 1);
        }
    }
    return runs;
}

std::string text_lines(const std::vector<std::string>& terms)
{
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        out += (i == 0 ? "    " : "  + ") + terms[i] + "\n";
    }
    return out;
}

// ---- LaTeX ----------------------------------------------------------------

std::string latex_denominator(const Multiset& m)
{
    std::string out;
    for (const auto& [id, count] : m) {
        if (!out.empty()) {
            out += "\\,";
        }
        out += "\\partial x_{" + std::to_string(id) + "}";
        if (count > 1) {
            out += "^{" + std::to_string(count) + "}";
        }
    }
    return out;
}

std::string latex_partial(std::size_t order)
{
    return order == 1 ? "\\partial" : "\\partial^{" + std::to_string(order) + "}";
}

std::string latex_operator(const Multiset& m)
{
    if (m.empty()) {
        return "";
    }
    return "\\frac{" + latex_partial(m.size()) + "}{" + latex_denominator(m) + "}";
}

std::string latex_derivative(const char* symbol, const Multiset& m)
{
    if (m.empty()) {
        return symbol;
    }
    return "\\frac{" + latex_partial(m.size()) + " " + symbol + "}{" + latex_denominator(m) + "}";
}

std::string latex_f(std::size_t order)
{
    if (order <= 3) {
        return "f" + std::string(order, '\'') + "(y)";
    }
    return "f^{(" + std::to_string(order) + ")}(y)";
}

std::string latex_lines(const std::vector<std::string>& terms)
{
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        out += (i == 0 ? "  " : "  + ") + terms[i] + "\n";
    }
    return out;
}

// ---- JSON helpers -----------------------------------------------------------

const json& require(const json& doc, const char* key)
{
    if (!doc.is_object() || !doc.contains(key)) {
        throw std::invalid_argument(std::string("missing field '") + key + "'");
    }
    return doc.at(key);
}

BigInt bigint_from_json(const json& value)
{
    if (value.is_string()) {
        return parse_bigint(value.get<std::string>());
    }
    if (value.is_number_integer()) {
        return BigInt(value.get<long long>());
    }
    throw std::invalid_argument("expected an integer or an integer string");
}

unsigned unsigned_from_json(const json& value, const char* what)
{
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0)) {
        throw std::invalid_argument(std::string(what) + " must be a non-negative integer");
    }
    return value.get<unsigned>();
}

Rational rational_from_json(const json& value)
{
    if (value.is_string()) {
        return parse_rational(value.get<std::string>());
    }
    if (value.is_number_integer()) {
        return Rational(value.get<long long>());
    }
    throw std::invalid_argument("expected a rational string \"p/q\" or an integer");
}

std::map<Multiset, Rational> assignment_from_json(const json& doc)
{
    if (!doc.is_object()) {
        throw std::invalid_argument("assignment document must be a JSON object");
    }
    std::map<Multiset, Rational> out;
    for (const auto& [key, value] : doc.items()) {
        Multiset parsed = parse_assignment_key(key);
        if (!out.emplace(std::move(parsed), rational_from_json(value)).second) {
            throw std::invalid_argument("duplicate assignment key '" + key + "'");
        }
    }
    return out;
}

json assignment_to_json(const std::map<Multiset, Rational>& values)
{
    json out = json::object();
    for (const auto& [key, value] : values) {
        out[assignment_key(key)] = to_string(value);
    }
    return out;
}

} // namespace

Format parse_format(std::string_view name)
{
    if (name == "text") {
        return Format::text;
    }
    if (name == "latex") {
        return Format::latex;
    }
    if (name == "json") {
        return Format::json;
    }
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string render_text(const CompositionExpansion& e)
{
    std::vector<std::string> terms;
    for (const auto& term : e.terms) {
        std::vector<std::string> factors;
        if (term.coefficient != 1) {
            factors.push_back(to_string(term.coefficient));
        }
        if (!e.exponential) {
            factors.push_back(text_f(term.f_order));
        }
        for (const auto& [block, times] : display_runs(term.shape)) {
            std::string d = text_derivative("y", block);
            factors.push_back(times == 1 ? d : "(" + d + ")^" + std::to_string(times));
        }
        terms.push_back(factors.empty() ? "1" : join(factors, " * "));
    }
    const std::string lhs = text_operator(e.signature) + (e.exponential ? "e^y" : "f(y)");
    if (e.exponential) {
        return lhs + " = e^y * (\n" + text_lines(terms) + ")\n";
    }
    return lhs + " =\n" + text_lines(terms);
}

std::string render_text(const ProductExpansion& e)
{
    std::vector<std::string> terms;
    for (const auto& term : e.terms) {
        std::vector<std::string> factors;
        if (term.coefficient != 1) {
            factors.push_back(to_string(term.coefficient));
        }
        factors.push_back(text_derivative("u", term.u_part));
        factors.push_back(text_derivative("v", term.v_part));
        terms.push_back(join(factors, " * "));
    }
    return text_operator(e.signature) + "(u v) =\n" + text_lines(terms);
}

std::string render_latex(const CompositionExpansion& e)
{
    std::vector<std::string> terms;
    for (const auto& term : e.terms) {
        std::string out;
        if (term.coefficient != 1) {
            out += to_string(term.coefficient) + "\\cdot ";
        }
        std::vector<std::string> blocks;
        for (const auto& [block, times] : display_runs(term.shape)) {
            std::string d = latex_derivative("y", block);
            blocks.push_back(times == 1 ? d : "\\left(" + d + "\\right)^{" + std::to_string(times) + "}");
        }
        if (!e.exponential) {
            out += latex_f(term.f_order);
            if (!blocks.empty()) {
                out += "\\,";
            }
        } else if (blocks.empty()) {
            out += "1";
        }
        out += join(blocks, "\\cdot ");
        terms.push_back(std::move(out));
    }
    const std::string op = latex_operator(e.signature);
    const std::string lhs = op + (op.empty() ? "" : " ") + (e.exponential ? "e^{y}" : "f(y)");
    if (e.exponential) {
        return lhs + " = e^{y}\\left(\n" + latex_lines(terms) + "\\right)\n";
    }
    return lhs + " =\n" + latex_lines(terms);
}

std::string render_latex(const ProductExpansion& e)
{
    std::vector<std::string> terms;
    for (const auto& term : e.terms) {
        std::string out;
        if (term.coefficient != 1) {
            out += to_string(term.coefficient) + "\\cdot ";
        }
        out += latex_derivative("u", term.u_part) + "\\cdot " + latex_derivative("v", term.v_part);
        terms.push_back(std::move(out));
    }
    const std::string op = latex_operator(e.signature);
    return op + (op.empty() ? "" : " ") + "(uv) =\n" + latex_lines(terms);
}

json multiset_to_json(const Multiset& m)
{
    json out = json::object();
    for (const auto& [id, count] : m) {
        out[std::to_string(id)] = count;
    }
    return out;
}

Multiset multiset_from_json(const json& doc)
{
    if (!doc.is_object()) {
        throw std::invalid_argument("multiset must be a JSON object of id -> multiplicity");
    }
    Multiset m;
    for (const auto& [key, value] : doc.items()) {
        const BigInt id = parse_bigint(key);
        if (id < 1 || id > std::numeric_limits<VarId>::max()) {
            throw std::invalid_argument("invalid variable id '" + key + "'");
        }
        const unsigned count = unsigned_from_json(value, "multiplicity");
        if (count == 0) {
            throw std::invalid_argument("multiplicities must be >= 1");
        }
        m.add(id.convert_to<VarId>(), count);
    }
    return m;
}

json to_json(const CompositionExpansion& e)
{
    json terms = json::array();
    for (const auto& term : e.terms) {
        json parts = json::array();
        for (const auto& part : term.shape.parts()) {
            parts.push_back({{"vars", multiset_to_json(part.block)}, {"times", part.times}});
        }
        terms.push_back({{"f_order", term.f_order}, {"coefficient", to_string(term.coefficient)}, {"parts", parts}});
    }
    return {{"mode", e.exponential ? "exponential" : "composition"},
            {"signature", multiset_to_json(e.signature)},
            {"terms", terms}};
}

json to_json(const ProductExpansion& e)
{
    json terms = json::array();
    for (const auto& term : e.terms) {
        terms.push_back({{"u", multiset_to_json(term.u_part)},
                         {"v", multiset_to_json(term.v_part)},
                         {"coefficient", to_string(term.coefficient)}});
    }
    return {{"mode", "product"}, {"signature", multiset_to_json(e.signature)}, {"terms", terms}};
}

CompositionExpansion composition_from_json(const json& doc)
{
    const std::string mode = require(doc, "mode").get<std::string>();
    if (mode != "composition" && mode != "exponential") {
        throw std::invalid_argument("not a composition expansion (mode '" + mode + "')");
    }
    CompositionExpansion e;
    e.exponential = mode == "exponential";
    e.signature = multiset_from_json(require(doc, "signature"));
    const json& terms = require(doc, "terms");
    if (!terms.is_array()) {
        throw std::invalid_argument("'terms' must be an array");
    }
    for (const auto& t : terms) {
        CompositionTerm term;
        term.f_order = unsigned_from_json(require(t, "f_order"), "f_order");
        term.coefficient = bigint_from_json(require(t, "coefficient"));
        std::vector<MultisetPartition::Part> parts;
        for (const auto& p : require(t, "parts")) {
            parts.push_back({multiset_from_json(require(p, "vars")), unsigned_from_json(require(p, "times"), "times")});
        }
        term.shape = MultisetPartition(std::move(parts));
        e.terms.push_back(std::move(term));
    }
    return e;
}

ProductExpansion product_from_json(const json& doc)
{
    if (require(doc, "mode").get<std::string>() != "product") {
        throw std::invalid_argument("not a product expansion");
    }
    ProductExpansion e;
    e.signature = multiset_from_json(require(doc, "signature"));
    const json& terms = require(doc, "terms");
    if (!terms.is_array()) {
        throw std::invalid_argument("'terms' must be an array");
    }
    for (const auto& t : terms) {
        e.terms.push_back({multiset_from_json(require(t, "u")), multiset_from_json(require(t, "v")),
                           bigint_from_json(require(t, "coefficient"))});
    }
    return e;
}

std::string render(const CompositionExpansion& e, Format format)
{
    switch (format) {
    case Format::text:
        return render_text(e);
    case Format::latex:
        return render_latex(e);
    case Format::json:
        return to_json(e).dump(2) + "\n";
    }
    throw std::invalid_argument("unknown format");
}

std::string render(const ProductExpansion& e, Format format)
{
    switch (format) {
    case Format::text:
        return render_text(e);
    case Format::latex:
        return render_latex(e);
    case Format::json:
        return to_json(e).dump(2) + "\n";
    }
    throw std::invalid_argument("unknown format");
}

json to_json(const VerificationReport& report)
{
    json out = {{"kind", report.kind},
                {"signature", multiset_to_json(report.signature)},
                {"direct", to_string(report.direct)},
                {"expanded", to_string(report.expanded)},
                {"equal", report.equal},
                {"terms", report.terms}};
    if (report.seed) {
        out["seed"] = *report.seed;
    }
    return out;
}

json to_json(const TrialSummary& summary)
{
    json failures = json::array();
    for (const auto& f : summary.failures) {
        failures.push_back(to_json(f));
    }
    return {{"kind", summary.kind},     {"seed", summary.seed},
            {"trials", summary.trials}, {"passed", summary.passed},
            {"all_equal", summary.all_equal()}, {"failures", failures}};
}

json to_json(const SweepReport& report)
{
    json mismatches = json::array();
    for (const auto& m : report.mismatches) {
        mismatches.push_back({{"signature", multiset_to_json(m.signature)},
                              {"partition", format_partition(m.partition)},
                              {"closed_form", to_string(m.closed_form)},
                              {"brute_force", to_string(m.brute_force)}});
    }
    return {{"kind", "multiplicity"},
            {"max_size", report.max_size},
            {"signatures", report.signatures},
            {"pairs", report.pairs},
            {"conservation_failures", report.conservation_failures},
            {"all_agree", report.all_agree()},
            {"mismatches", mismatches}};
}

json to_json(const PathReport& report)
{
    return {{"kind", "paths"},
            {"max_size", report.max_size},
            {"signatures", report.signatures},
            {"orders_checked", report.orders_checked},
            {"seed", report.seed},
            {"all_equal", report.all_equal()},
            {"failures", report.failures}};
}

json to_json(const CollapseIdentityReport& report)
{
    return {{"n", report.n},
            {"distinct_path", to_string(report.distinct_path)},
            {"collapsed_path", to_string(report.collapsed_path)},
            {"equal", report.equal}};
}

CumulantAssignment cumulants_from_json(const json& doc)
{
    return CumulantAssignment{assignment_from_json(doc)};
}

MomentAssignment moments_from_json(const json& doc)
{
    return MomentAssignment{assignment_from_json(doc)};
}

json to_json(const CumulantAssignment& kappa)
{
    return assignment_to_json(kappa.joint);
}

json to_json(const MomentAssignment& mu)
{
    return assignment_to_json(mu.raw);
}

} // namespace fdb
