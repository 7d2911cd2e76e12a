// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fdb/cli.hpp"
#include "fdb/cumulants.hpp"
#include "fdb/expansion.hpp"
#include "fdb/multiset_partition.hpp"
#include "fdb/notation.hpp"
#include "fdb/oracle.hpp"
#include "fdb/render.hpp"
#include "fdb/set_partition.hpp"

using namespace fdb;

namespace {

constexpr std::uint64_t acceptance_seed = 20240611;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects sub-check failures of one criterion.
class Checks {
public:
    void expect(bool ok, const std::string& what)
    {
        ++count_;
        if (!ok) {
            failures_.push_back(what);
        }
    }

    // Runs body and requires it to finish within limit seconds.
    void timed(const std::string& what, double limit, const std::function<bool()>& body)
    {
        const auto start = Clock::now();
        const bool ok = body();
        const double elapsed = seconds_since(start);
        expect(ok, what);
        if (elapsed >= limit) {
            std::ostringstream s;
            s << what << " took " << std::fixed << std::setprecision(3) << elapsed << " s";
            expect(false, s.str());
        }
    }

    bool ok() const { return failures_.empty(); }
    std::size_t count() const { return count_; }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::size_t count_ = 0;
    std::vector<std::string> failures_;
};

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;
    std::function<void(Checks&)> body;
};

bool report(const Criterion& c)
{
    Checks checks;
    const auto start = Clock::now();
    try {
        c.body(checks);
    } catch (const std::exception& e) {
        checks.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= c.limit_seconds) {
        checks.expect(false, "time limit exceeded");
    }
    std::cout << (checks.ok() ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " ("
              << checks.count() << " checks, " << std::fixed << std::setprecision(3) << elapsed << " s, limit "
              << std::setprecision(0) << c.limit_seconds << " s)\n";
    for (const auto& f : checks.failures()) {
        std::cout << "      " << f << "\n";
    }
    std::cout.flush();
    return checks.ok();
}

MultisetPartition partition(std::string_view text) { return parse_partition(text); }

std::vector<BigInt> coefficients(const CompositionExpansion& e)
{
    std::vector<BigInt> out;
    for (const auto& t : e.terms) {
        out.push_back(t.coefficient);
    }
    return out;
}

std::vector<BigInt> coefficients(const ProductExpansion& e)
{
    std::vector<BigInt> out;
    for (const auto& t : e.terms) {
        out.push_back(t.coefficient);
    }
    return out;
}

std::vector<BigInt> ints(std::initializer_list<int> values)
{
    return {values.begin(), values.end()};
}

std::vector<Multiset> all_shapes(unsigned max_size)
{
    std::vector<Multiset> shapes;
    for (unsigned n = 0; n <= max_size; ++n) {
        for (const auto& k : integer_compositions(n)) {
            shapes.push_back(Multiset::from_multiplicities(k));
        }
    }
    return shapes;
}

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(num(rng), den(rng));
}

// ---------------------------------------------------------------------------

void worked_values(Checks& c)
{
    const double each = 1.0;
    c.timed("multiplicity 2x{1,1,5}+{7,8} = 6", each, [] {
        return multiplicity(parse_signature("x1^4 x5^2 x7 x8"), partition("[x1^2 x5][x1^2 x5][x7 x8]")) == 6;
    });
    c.timed("multiplicity 3+3+2 of 8 collapsed = 280", each, [] {
        return multiplicity(Multiset::repeated(1, 8), partition("[x1^3][x1^3][x1^2]")) == 280;
    });
    c.timed("multiplicity {2}+{1,2} = 2", each,
            [] { return multiplicity(parse_signature("x1 x2^2"), partition("[x2][x1 x2]")) == 2; });
    c.timed("bell(0..8)", each, [] {
        return bell_sequence(8) == ints({1, 1, 2, 5, 15, 52, 203, 877, 4140});
    });
    c.timed("expand_composition {1,2,3}: 5 terms, coefficient 1", each, [] {
        const auto e = expand_composition(parse_signature("x1 x2 x3"));
        return coefficients(e) == ints({1, 1, 1, 1, 1});
    });
    c.timed("expand_composition {1,2,2}: (1,1,2,1)", each, [] {
        return coefficients(expand_composition(parse_signature("x1 x2^2"))) == ints({1, 1, 2, 1});
    });
    c.timed("expand_product {1,2,2}: (1,1,2,2,1,1)", each, [] {
        return coefficients(expand_product(parse_signature("x1 x2^2"))) == ints({1, 1, 2, 2, 1, 1});
    });
    c.timed("expand_product {1,2,3}: 8 terms, coefficient 1", each, [] {
        return coefficients(expand_product(parse_signature("x1 x2 x3"))) == ints({1, 1, 1, 1, 1, 1, 1, 1});
    });
}

void oracle_sweep(Checks& c)
{
    const auto report = sweep_multiplicities(8);
    c.expect(report.signatures == all_shapes(8).size(), "every shape up to size 8 visited");
    c.expect(report.mismatches.empty(), std::to_string(report.mismatches.size()) + " closed-form mismatches");
    c.expect(report.pairs > 0, "partitions checked");
    std::cout << "      " << report.pairs << " (signature, partition) pairs over " << report.signatures
              << " signatures\n";
}

void bell_conservation(Checks& c)
{
    for (const auto& tau : all_shapes(8)) {
        const auto n = static_cast<unsigned>(tau.size());
        const std::string name = format_signature(tau);
        BigInt sum = 0;
        for (const auto& mp : enumerate_multiset_partitions(tau)) {
            sum += multiplicity(tau, mp);
        }
        c.expect(sum == bell(n), "sum of multiplicities for " + name);
        c.expect(coefficient_sum(expand_composition(tau)) == bell(n), "expansion coefficient sum for " + name);
        c.expect(coefficient_sum(expand_product(tau)) == BigInt(1) << n, "product coefficient sum for " + name);
    }
}

void path_equivalence(Checks& c)
{
    const std::size_t orders = 3;
    const auto report = sweep_differentiation_paths(7, orders, acceptance_seed);
    // the empty signature has no differentiation order
    c.expect(report.signatures == all_shapes(7).size() - 1, "every non-empty shape up to size 7 visited");
    c.expect(report.orders_checked >= orders * report.signatures, "at least 3 orders per signature");
    c.expect(report.all_equal(), std::to_string(report.failures.size()) + " differentiation orders disagree");
}

void polynomial_oracle(Checks& c)
{
    const std::size_t trials = 50;
    const auto composition = random_composition_trials(trials, 6, acceptance_seed);
    const auto product = random_product_trials(trials, 6, acceptance_seed);
    c.expect(composition.trials == trials && composition.all_equal(),
             "composition trials: " + std::to_string(composition.passed) + "/" + std::to_string(trials));
    c.expect(product.trials == trials && product.all_equal(),
             "product trials: " + std::to_string(product.passed) + "/" + std::to_string(trials));
    std::cout << "      seed " << acceptance_seed << "\n";
}

void cumulant_suite(Checks& c)
{
    std::mt19937_64 rng(acceptance_seed);
    const Multiset x3 = Multiset::repeated(1, 3);
    for (int probe = 0; probe < 25; ++probe) {
        const Rational k1 = random_rational(rng);
        const Rational k2 = random_rational(rng);
        const Rational k3 = random_rational(rng);
        const auto kappa = CumulantAssignment::univariate(1, {k1, k2, k3});
        c.expect(moment_from_cumulants(x3, kappa) == k3 + 3 * k1 * k2 + k1 * k1 * k1, "E(X^3) probe");
    }

    for (unsigned n = 0; n <= 10; ++n) {
        const auto ones = CumulantAssignment::univariate(1, std::vector<Rational>(n, Rational(1)));
        c.expect(moment_from_cumulants(Multiset::repeated(1, n), ones) == bell(n),
                 "unit cumulants give bell(" + std::to_string(n) + ")");
    }

    for (const auto& target : all_shapes(6)) {
        if (target.empty()) {
            continue;
        }
        const std::string name = format_signature(target);
        CumulantAssignment kappa;
        MomentAssignment mu;
        for (const auto& sub : submultisets(target)) {
            if (!sub.empty()) {
                kappa.joint[sub] = random_rational(rng);
                mu.raw[sub] = random_rational(rng);
            }
        }
        const auto moments = all_moments_from_cumulants(target, kappa);
        c.expect(all_cumulants_from_moments(target, moments).joint == kappa.joint, "kappa -> mu -> kappa for " + name);
        const auto cumulants = all_cumulants_from_moments(target, mu);
        c.expect(all_moments_from_cumulants(target, cumulants).raw == mu.raw, "mu -> kappa -> mu for " + name);
    }

    for (unsigned n = 1; n <= 5; ++n) {
        std::vector<Rational> values;
        for (unsigned j = 0; j < n; ++j) {
            values.push_back(random_rational(rng));
        }
        const auto report = collapse_cumulant_identity_check(n, CumulantAssignment::univariate(1, values));
        c.expect(report.equal, "collapse identity for n = " + std::to_string(n));
    }
}

struct CliResult {
    int code;
    std::string out;
};

CliResult run_cli(const std::vector<std::string>& args, const Limits& limits = {})
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err, limits);
    return {code, out.str()};
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void cli_contract(Checks& c)
{
    const std::filesystem::path dir = FDB_GOLDEN_DIR;
    const auto cases = nlohmann::json::parse(read_file(dir / "cases.json"));
    std::size_t json_cases = 0;
    for (const auto& item : cases) {
        const auto name = item["name"].get<std::string>();
        const auto args = item["args"].get<std::vector<std::string>>();
        const auto golden = read_file(dir / (name + ".txt"));
        const auto first = run_cli(args);
        const auto second = run_cli(args);
        c.expect(first.code == cli::exit_ok, name + ": exit code 0");
        c.expect(first.out == second.out, name + ": deterministic");
        c.expect(first.out == golden, name + ": matches golden file");

        const auto doc = nlohmann::json::parse(golden, nullptr, false);
        if (doc.is_discarded()) {
            continue;
        }
        ++json_cases;
        const auto signature = multiset_from_json(doc.at("signature"));
        const auto mode = doc.at("mode").get<std::string>();
        if (mode == "product") {
            const auto e = product_from_json(doc);
            c.expect(e == expand_product(signature), name + ": decodes to the library expansion");
            c.expect(render(e, Format::json) == golden, name + ": re-encodes byte for byte");
        } else {
            const auto e = composition_from_json(doc);
            const auto expected =
                mode == "exponential" ? expand_exponential(signature) : expand_composition(signature);
            c.expect(e == expected, name + ": decodes to the library expansion");
            c.expect(render(e, Format::json) == golden, name + ": re-encodes byte for byte");
        }
    }
    c.expect(json_cases == 3, "three JSON golden outputs");

    c.expect(run_cli({"expand", "x1 x2^2", "--mode", "product"}).code == cli::exit_ok, "expand: exit 0");
    c.expect(run_cli({"expand", "x1 x2^"}).code == cli::exit_input_error, "parse error: exit 2");
    c.expect(run_cli({"multiplicity", "x1 x2^2", "[x1][x2]"}).code == cli::exit_input_error,
             "non-partition: exit 2");
    c.expect(run_cli({"expand", "x1", "--format", "pdf"}).code == cli::exit_input_error, "bad option: exit 2");
    Limits small;
    small.multiset_partition_count = 10;
    c.expect(run_cli({"expand", "x1 x2 x3 x4"}, small).code == cli::exit_guard_exceeded,
             "partition guard: exit 3");
    c.expect(run_cli({"verify", "multiplicity", "--max-size", "9"}).code == cli::exit_guard_exceeded,
             "sweep guard: exit 3");
    c.expect(run_cli({"multiplicity", "x1^8", "[x1^3][x1^3][x1^2]", "--check"}).code == cli::exit_ok,
             "brute-force check agrees: exit 0");
    c.expect(run_cli({"verify", "composition", "--trials", "5"}).code == cli::exit_ok, "verify: exit 0");
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "worked-example regressions", 8.0, worked_values},
        {2, "closed-form multiplicity vs brute-force collapse, |tau| <= 8", 60.0, oracle_sweep},
        {3, "Bell and 2^n coefficient conservation, |tau| <= 8", 10.0, bell_conservation},
        {4, "differentiation-path equivalence, |tau| <= 7", 30.0, path_equivalence},
        {5, "polynomial oracle, 50 + 50 trials, |tau| <= 6", 60.0, polynomial_oracle},
        {6, "moment and cumulant suite", 10.0, cumulant_suite},
        {7, "CLI contract", 60.0, cli_contract},
    };
    bool all = true;
    for (const auto& c : criteria) {
        all = report(c) && all;
    }
    std::cout << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
