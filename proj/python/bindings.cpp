#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sgq/errors.hpp"
#include "sgq/io.hpp"
#include "sgq/prime_graph.hpp"
#include "sgq/realization.hpp"

namespace py = pybind11;
using namespace sgq;

namespace {

py::int_ to_pyint(const FactoredInteger& x) {
  return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(x.to_decimal().c_str(), nullptr, 10)));
}

ElementOrderCensus census_of(const std::string& token, std::size_t cap, unsigned threads) {
  const auto d = GroupDescriptor::parse(token);
  if (!has_realization(d)) throw DomainError(d.to_string() + " has no realization to enumerate");
  py::gil_scoped_release release;
  return enumerate_census(realize(d), {cap, threads});
}

}  // namespace

PYBIND11_MODULE(_sgq, m) {
  m.doc() = "Bindings for the sgq core library";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());
  py::register_exception<CapExceededError>(m, "CapExceededError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const sgq::LookupError& e) {
      PyErr_SetString(PyExc_LookupError, e.what());
    }
  });

  m.def("canonical", [](const std::string& token) { return canonicalize_descriptor(GroupDescriptor::parse(token)).to_string(); },
        py::arg("group"), "Canonical name of a group token.");

  m.def(
      "order",
      [](const std::string& token) {
        const auto o = order_of_descriptor(GroupDescriptor::parse(token));
        return py::make_tuple(o.to_string(), to_pyint(o));
      },
      py::arg("group"), "(factored text, integer) order of a group.");

  m.def(
      "census",
      [](const std::string& token, std::size_t cap, unsigned threads) {
        return census_of(token, cap, threads).counts();
      },
      py::arg("group"), py::arg("cap") = kDefaultElementCap, py::arg("threads") = 0,
      "Map k -> |G(k)| by exhaustive enumeration.");

  m.def(
      "invariants",
      [](const std::string& token, std::size_t cap, unsigned threads) {
        const auto inv = derive_invariants(census_of(token, cap, threads));
        py::dict d;
        d["pi"] = inv.pi;
        d["pi_e"] = inv.pi_e;
        d["npe"] = inv.npe;
        d["npe_multiset"] = std::vector<std::uint64_t>(inv.npe_multiset.begin(), inv.npe_multiset.end());
        d["involutions"] = inv.involutions;
        d["largest_prime"] = inv.largest_prime;
        d["count_p"] = inv.count_p;
        return d;
      },
      py::arg("group"), py::arg("cap") = kDefaultElementCap, py::arg("threads") = 0);

  m.def(
      "prime_graph",
      [](const std::string& token, std::size_t cap, unsigned threads) {
        const auto g = build_prime_graph(derive_invariants(census_of(token, cap, threads)).pi_e);
        py::dict d;
        d["vertices"] = g.vertices;
        d["edges"] = std::vector<std::pair<std::uint64_t, std::uint64_t>>(g.edges.begin(), g.edges.end());
        d["components"] = g.components;
        return d;
      },
      py::arg("group"), py::arg("cap") = kDefaultElementCap, py::arg("threads") = 0);

  m.def(
      "sample",
      [](const std::string& token, std::uint64_t k, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
        const auto d = GroupDescriptor::parse(token);
        if (!has_realization(d)) throw DomainError(d.to_string() + " has no realization to sample");
        OrderEstimate e;
        {
          py::gil_scoped_release release;
          e = estimate_order_fraction(realize(d), k, samples, seed, {threads});
        }
        py::dict r;
        r["estimate"] = e.estimate;
        r["std_error"] = e.std_error;
        r["hits"] = e.hits;
        r["samples"] = e.samples;
        return r;
      },
      py::arg("group"), py::arg("k"), py::arg("samples") = 100000, py::arg("seed") = 1, py::arg("threads") = 1,
      "Monte Carlo estimate of the fraction of elements of order k.");

  m.def(
      "catalog",
      [](const std::string& max_order) {
        std::vector<std::string> out;
        for (const auto& d : enumerate_catalog(FactoredInteger::parse(max_order)))
          out.push_back(canonicalize_descriptor(d).to_string());
        return out;
      },
      py::arg("max_order"), "Canonical names of simple groups of order at most max_order (integer text).");

  m.def(
      "equal_order_pairs",
      [](const std::string& max_order) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [a, b] : equal_order_pairs(enumerate_catalog(FactoredInteger::parse(max_order))))
          out.emplace_back(a.to_string(), b.to_string());
        return out;
      },
      py::arg("max_order"));

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int status;
        {
          py::gil_scoped_release release;
          status = run_command(args, out, err);
        }
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool; returns (status, stdout, stderr).");
}
