#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fdb/cumulants.hpp"
#include "fdb/errors.hpp"
#include "fdb/expansion.hpp"
#include "fdb/multiset_partition.hpp"
#include "fdb/notation.hpp"
#include "fdb/oracle.hpp"
#include "fdb/render.hpp"
#include "fdb/set_partition.hpp"

namespace py = pybind11;
using namespace fdb;

// Big integers and rationals cross the boundary as decimal text; the Python
// layer turns them into int and fractions.Fraction.

namespace {

Limits limits() { return Limits::from_environment(); }

std::string render_signature(const std::string& signature, const std::string& mode, const std::string& format)
{
    const Multiset tau = parse_signature(signature);
    const Format f = parse_format(format);
    if (mode == "composition") {
        return render(expand_composition(tau, limits()), f);
    }
    if (mode == "exponential") {
        return render(expand_exponential(tau, limits()), f);
    }
    if (mode == "product") {
        return render(expand_product(tau), f);
    }
    throw std::invalid_argument("unknown mode '" + mode + "'");
}

std::vector<std::pair<std::string, std::string>> partitions(const std::string& signature)
{
    const Multiset tau = parse_signature(signature);
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& term : expand_composition(tau, limits()).terms) {
        out.emplace_back(format_partition(term.shape), to_string(term.coefficient));
    }
    return out;
}

template <class Assignment>
Assignment assignment_from(const std::map<std::string, std::string>& values, std::map<Multiset, Rational> Assignment::*field)
{
    Assignment a;
    for (const auto& [key, value] : values) {
        (a.*field)[parse_assignment_key(key)] = parse_rational(value);
    }
    return a;
}

template <class Assignment>
std::map<std::string, std::string> assignment_to(const Assignment& a, std::map<Multiset, Rational> Assignment::*field)
{
    std::map<std::string, std::string> out;
    for (const auto& [key, value] : a.*field) {
        out[assignment_key(key)] = to_string(value);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "exact multivariate Faa di Bruno expansions";

    static py::exception<guard_exceeded> guard(m, "GuardExceeded", PyExc_RuntimeError);
    static py::exception<parse_error> parse(m, "ParseError", PyExc_ValueError);
    static py::exception<incomplete_assignment> missing(m, "IncompleteAssignment", PyExc_KeyError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const guard_exceeded& e) {
            py::set_error(guard, e.what());
        } catch (const parse_error& e) {
            py::set_error(parse, e.what());
        } catch (const incomplete_assignment& e) {
            py::set_error(missing, e.what());
        }
    });

    m.def("bell", [](unsigned n) { return to_string(bell(n)); }, py::arg("n"));
    m.def("stirling2", [](unsigned n, unsigned k) { return to_string(stirling2(n, k)); }, py::arg("n"), py::arg("k"));
    m.def("faa_di_bruno_coefficient",
          [](const std::vector<unsigned>& counts) { return to_string(faa_di_bruno_coefficient(counts)); },
          py::arg("block_counts"));
    m.def("multiplicity",
          [](const std::string& signature, const std::string& partition) {
              return to_string(multiplicity(parse_signature(signature), parse_partition(partition)));
          },
          py::arg("signature"), py::arg("partition"));
    m.def("multiplicity_bruteforce",
          [](const std::string& signature, const std::string& partition) {
              return to_string(
                  multiplicity_bruteforce(parse_signature(signature), parse_partition(partition), limits()));
          },
          py::arg("signature"), py::arg("partition"));
    m.def("partitions", &partitions, py::arg("signature"));
    m.def("render", &render_signature, py::arg("signature"), py::arg("mode") = "composition",
          py::arg("format") = "text");
    m.def("format_signature", [](const std::string& s) { return format_signature(parse_signature(s)); });

    m.def("composition_trials",
          [](std::size_t trials, std::size_t max_size, std::uint64_t seed) {
              return to_json(random_composition_trials(trials, max_size, seed, limits())).dump();
          },
          py::arg("trials") = 50, py::arg("max_size") = 6, py::arg("seed") = default_seed);
    m.def("product_trials",
          [](std::size_t trials, std::size_t max_size, std::uint64_t seed) {
              return to_json(random_product_trials(trials, max_size, seed, limits())).dump();
          },
          py::arg("trials") = 50, py::arg("max_size") = 6, py::arg("seed") = default_seed);
    m.def("sweep_multiplicities",
          [](std::size_t max_size) { return to_json(sweep_multiplicities(max_size, limits())).dump(); },
          py::arg("max_size") = 8);

    m.def("moment_from_cumulants",
          [](const std::string& target, const std::map<std::string, std::string>& kappa) {
              return to_string(moment_from_cumulants(parse_assignment_key(target),
                                                     assignment_from(kappa, &CumulantAssignment::joint), limits()));
          },
          py::arg("target"), py::arg("kappa"));
    m.def("cumulant_from_moments",
          [](const std::string& target, const std::map<std::string, std::string>& mu) {
              return to_string(cumulants_from_moments(parse_assignment_key(target),
                                                      assignment_from(mu, &MomentAssignment::raw), limits()));
          },
          py::arg("target"), py::arg("mu"));
    m.def("all_moments_from_cumulants",
          [](const std::string& target, const std::map<std::string, std::string>& kappa) {
              return assignment_to(all_moments_from_cumulants(parse_assignment_key(target),
                                                              assignment_from(kappa, &CumulantAssignment::joint),
                                                              limits()),
                                   &MomentAssignment::raw);
          },
          py::arg("target"), py::arg("kappa"));
    m.def("all_cumulants_from_moments",
          [](const std::string& target, const std::map<std::string, std::string>& mu) {
              return assignment_to(all_cumulants_from_moments(parse_assignment_key(target),
                                                              assignment_from(mu, &MomentAssignment::raw), limits()),
                                   &CumulantAssignment::joint);
          },
          py::arg("target"), py::arg("mu"));
}
