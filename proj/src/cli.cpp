#include "fdb/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fdb/cumulants.hpp"
#include "fdb/errors.hpp"
#include "fdb/expansion.hpp"
#include "fdb/notation.hpp"
#include "fdb/oracle.hpp"
#include "fdb/render.hpp"

namespace fdb::cli {

namespace {

struct Options {
    // expand
    std::string signature;
    std::string mode = "composition";
    std::string format = "text";
    // multiplicity
    std::string partition;
    bool check = false;
    // bell
    unsigned n = 0;
    // verify
    std::string kind;
    std::size_t max_size = 0;
    std::size_t trials = 50;
    std::size_t orders = 3;
    std::uint64_t seed = default_seed;
    // cumulants
    std::string direction;
    std::string file;
    std::string target;
    bool all = false;
};

int cmd_expand(const Options& o, std::ostream& out, const Limits& limits)
{
    const Multiset tau = parse_signature(o.signature);
    const Format format = parse_format(o.format);
    if (o.mode == "product") {
        out << render(expand_product(tau), format);
    } else if (o.mode == "exponential") {
        out << render(expand_exponential(tau, limits), format);
    } else {
        out << render(expand_composition(tau, limits), format);
    }
    return exit_ok;
}

int cmd_multiplicity(const Options& o, std::ostream& out, const Limits& limits)
{
    const Multiset tau = parse_signature(o.signature);
    const MultisetPartition mp = parse_partition(o.partition);
    const BigInt value = multiplicity(tau, mp);
    out << to_string(value) << "\n";
    if (o.check) {
        const BigInt brute = multiplicity_bruteforce(tau, mp, limits);
        const bool agree = brute == value;
        out << "brute force: " << to_string(brute) << (agree ? " (agree)" : " (MISMATCH)") << "\n";
        return agree ? exit_ok : exit_mismatch;
    }
    return exit_ok;
}

int cmd_bell(const Options& o, std::ostream& out)
{
    out << to_string(bell(o.n)) << "\n";
    return exit_ok;
}

int cmd_partitions(const Options& o, std::ostream& out, const Limits& limits)
{
    const Multiset tau = parse_signature(o.signature);
    const auto expansion = expand_composition(tau, limits);
    if (parse_format(o.format) == Format::json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& term : expansion.terms) {
            rows.push_back({{"partition", format_partition(term.shape)},
                            {"blocks", term.f_order},
                            {"multiplicity", to_string(term.coefficient)}});
        }
        out << nlohmann::json{{"signature", multiset_to_json(tau)}, {"partitions", rows}}.dump(2) << "\n";
        return exit_ok;
    }
    for (const auto& term : expansion.terms) {
        out << to_string(term.coefficient) << "  " << format_partition(term.shape) << "\n";
    }
    return exit_ok;
}

int report(bool ok, const nlohmann::json& doc, const std::string& summary, const Options& o, std::ostream& out)
{
    if (o.format == "json") {
        out << doc.dump(2) << "\n";
    } else {
        out << summary << "\n";
    }
    return ok ? exit_ok : exit_mismatch;
}

int cmd_verify(const Options& o, std::ostream& out, const Limits& base)
{
    Limits limits = base;
    if (o.kind == "multiplicity") {
        const std::size_t max_size = o.max_size == 0 ? 8 : o.max_size;
        const auto r = sweep_multiplicities(max_size, limits);
        std::ostringstream s;
        s << (r.all_agree() ? "all agree" : "MISMATCH") << ": " << r.pairs << " partitions of " << r.signatures
          << " signatures up to size " << r.max_size;
        return report(r.all_agree(), to_json(r), s.str(), o, out);
    }
    if (o.kind == "composition" || o.kind == "product") {
        const std::size_t max_size = o.max_size == 0 ? 6 : o.max_size;
        const auto r = o.kind == "composition" ? random_composition_trials(o.trials, max_size, o.seed, limits)
                                               : random_product_trials(o.trials, max_size, o.seed, limits);
        std::ostringstream s;
        s << (r.all_equal() ? "all equal" : "MISMATCH") << ": " << r.passed << "/" << r.trials << " " << r.kind
          << " trials, seed " << r.seed;
        return report(r.all_equal(), to_json(r), s.str(), o, out);
    }
    if (o.kind == "paths") {
        const std::size_t max_size = o.max_size == 0 ? 7 : o.max_size;
        const auto r = sweep_differentiation_paths(max_size, o.orders, o.seed);
        std::ostringstream s;
        s << (r.all_equal() ? "all equal" : "MISMATCH") << ": " << r.orders_checked << " orders over "
          << r.signatures << " signatures up to size " << r.max_size << ", seed " << r.seed;
        return report(r.all_equal(), to_json(r), s.str(), o, out);
    }
    if (o.kind == "cumulants") {
        const std::size_t max_n = o.max_size == 0 ? 5 : o.max_size;
        std::vector<Rational> kappas;
        for (std::size_t j = 1; j <= max_n; ++j) {
            // distinct, non-degenerate values
            kappas.emplace_back(static_cast<long>(2 * j + 1), static_cast<long>(j + 2));
        }
        const auto kappa = CumulantAssignment::univariate(1, kappas);
        nlohmann::json rows = nlohmann::json::array();
        bool ok = true;
        for (unsigned n = 1; n <= max_n; ++n) {
            const auto r = collapse_cumulant_identity_check(n, kappa, 1, limits);
            ok = ok && r.equal;
            rows.push_back(to_json(r));
        }
        std::ostringstream s;
        s << (ok ? "all equal" : "MISMATCH") << ": collapse identity for n = 1.." << max_n;
        return report(ok, {{"kind", "cumulants"}, {"checks", rows}, {"all_equal", ok}}, s.str(), o, out);
    }
    throw std::invalid_argument("unknown verification kind '" + o.kind + "'");
}

int cmd_cumulants(const Options& o, std::ostream& out, const Limits& limits)
{
    std::ifstream in(o.file);
    if (!in) {
        throw std::invalid_argument("cannot open '" + o.file + "'");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON in '") + o.file + "': " + e.what());
    }
    const Multiset target = parse_assignment_key(o.target);
    if (o.direction == "to-moment") {
        const auto kappa = cumulants_from_json(doc);
        if (o.all) {
            out << to_json(all_moments_from_cumulants(target, kappa, limits)).dump(2) << "\n";
        } else {
            out << to_string(moment_from_cumulants(target, kappa, limits)) << "\n";
        }
        return exit_ok;
    }
    if (o.direction == "to-cumulant") {
        const auto mu = moments_from_json(doc);
        if (o.all) {
            out << to_json(all_cumulants_from_moments(target, mu, limits)).dump(2) << "\n";
        } else {
            out << to_string(cumulants_from_moments(target, mu, limits)) << "\n";
        }
        return exit_ok;
    }
    throw std::invalid_argument("unknown direction '" + o.direction + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Limits& limits)
{
    Options o;
    CLI::App app{"Collapsing-partition expansions of higher-order partial derivatives", "fdb"};
    app.require_subcommand(1);

    auto* expand = app.add_subcommand("expand", "Expand d_tau f(y), d_tau e^y or d_tau (uv)");
    expand->add_option("signature", o.signature, "Derivative signature, e.g. \"x1 x2^2\"")->required();
    expand->add_option("--mode", o.mode)->check(CLI::IsMember({"composition", "exponential", "product"}));
    expand->add_option("--format", o.format)->check(CLI::IsMember({"text", "latex", "json"}));

    auto* mult = app.add_subcommand("multiplicity", "Number of set partitions collapsing to a multiset partition");
    mult->add_option("signature", o.signature)->required();
    mult->add_option("partition", o.partition, "Blocks, e.g. \"[x1^2 x5][x1^2 x5][x7 x8]\"")->required();
    mult->add_flag("--check", o.check, "Also count by brute force and compare");

    auto* bell_cmd = app.add_subcommand("bell", "Bell number B_n");
    bell_cmd->add_option("n", o.n)->required();

    auto* parts = app.add_subcommand("partitions", "Multiset partitions of a signature with multiplicities");
    parts->add_option("signature", o.signature)->required();
    parts->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "Run an oracle sweep; exits 4 on any mismatch");
    verify->add_option("kind", o.kind)
        ->required()
        ->check(CLI::IsMember({"multiplicity", "composition", "product", "paths", "cumulants"}));
    verify->add_option("--max-size", o.max_size, "Largest |tau| (or n for cumulants)");
    verify->add_option("--trials", o.trials, "Randomized trials (composition, product)");
    verify->add_option("--orders", o.orders, "Random orders per signature (paths)");
    verify->add_option("--seed", o.seed);
    verify->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* cum = app.add_subcommand("cumulants", "Convert between joint cumulants and raw moments");
    cum->add_option("direction", o.direction)->required()->check(CLI::IsMember({"to-moment", "to-cumulant"}));
    cum->add_option("file", o.file, "JSON object mapping keys like \"1:2,3:1\" to \"p/q\"")->required();
    cum->add_option("--target", o.target, "Target key, e.g. \"1:3\"")->required();
    cum->add_flag("--all", o.all, "Print every sub-multiset value as JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (expand->parsed()) {
            return cmd_expand(o, out, limits);
        }
        if (mult->parsed()) {
            return cmd_multiplicity(o, out, limits);
        }
        if (bell_cmd->parsed()) {
            return cmd_bell(o, out);
        }
        if (parts->parsed()) {
            return cmd_partitions(o, out, limits);
        }
        if (verify->parsed()) {
            return cmd_verify(o, out, limits);
        }
        if (cum->parsed()) {
            return cmd_cumulants(o, out, limits);
        }
    } catch (const guard_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return exit_guard_exceeded;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const incomplete_assignment& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}

} // namespace fdb::cli
