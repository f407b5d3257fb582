#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "gwtqft/cli.hpp"
#include "gwtqft/closedforms.hpp"
#include "gwtqft/error.hpp"
#include "gwtqft/frobenius.hpp"
#include "gwtqft/io.hpp"
#include "gwtqft/symchar.hpp"
#include "gwtqft/tqft.hpp"
#include "gwtqft/transforms.hpp"
#include "gwtqft/verify.hpp"

namespace py = pybind11;
using namespace gwtqft;

namespace {

// Coefficients cross the boundary as fractions.Fraction, via their exact
// string form.
py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

py::list to_python(const Series& s) {
  py::list out;
  for (const auto& c : s.coeffs()) out.append(fraction(c));
  return out;
}

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

std::vector<Partition> to_partitions(const std::vector<std::vector<int>>& list) {
  std::vector<Partition> out;
  for (const auto& p : list) out.emplace_back(p);
  return out;
}

}  // namespace

PYBIND11_MODULE(_gwtqft, m) {
  m.doc() = "Exact TQFT computations for local Gromov-Witten theory of curves";

  // Translators run newest first, so the subclass is registered last.
  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  m.attr("DEFAULT_ORDER") = kDefaultOrder;

  m.def("partitions", [](int d) {
    std::vector<std::vector<int>> out;
    for (const auto& p : enumerate_partitions(d)) out.push_back(p.parts());
    return out;
  }, py::arg("d"), "Partitions of d in canonical order, (d) first.");

  m.def("centralizer_order", [](const std::vector<int>& parts) {
    return py::int_(py::str(centralizer_order(to_partition(parts)).get_str()));
  }, py::arg("partition"));

  m.def("character_table", [](int d) { return character_table(d).values; }, py::arg("d"),
        "Rows are representations, columns classes, both in canonical order.");

  m.def("cap", [](int d, const std::vector<int>& alpha, std::size_t order) {
    return to_python(cap(d, to_partition(alpha), order));
  }, py::arg("d"), py::arg("alpha"), py::arg("order") = kDefaultOrder);

  m.def("fp_genus0", [](int d, std::size_t order) { return to_python(fp_genus0(d, order)); }, py::arg("d"),
        py::arg("order") = kDefaultOrder);

  m.def("d1_relative", [](int g, int r, std::size_t order) { return to_python(d1_relative(g, r, order)); },
        py::arg("genus"), py::arg("boundaries") = 0, py::arg("order") = kDefaultOrder);

  m.def("d2_closed", [](int g, std::size_t order) { return to_python(d2_closed(g, order)); }, py::arg("genus"),
        py::arg("order") = kDefaultOrder);

  m.def("d2_eigenvalues", [](std::size_t order) {
    const auto [plus, minus] = d2_eigenvalues(order);
    return py::make_tuple(to_python(plus), to_python(minus));
  }, py::arg("order") = kDefaultOrder);

  m.def("relative", [](const std::string& model, int d, int genus, const std::vector<std::vector<int>>& boundaries,
                       std::size_t order) {
    return to_python(relative_tensor(TqftModel::from_name(model), {d, genus, to_partitions(boundaries)}, order));
  }, py::arg("model"), py::arg("d"), py::arg("genus"), py::arg("boundaries") = std::vector<std::vector<int>>{},
        py::arg("order") = kDefaultOrder);

  m.def("gauge_invariant", [](int d, int genus, const std::vector<std::vector<int>>& boundaries) {
    return fraction(gauge_invariant({d, genus, to_partitions(boundaries)}));
  }, py::arg("d"), py::arg("genus"), py::arg("boundaries") = std::vector<std::vector<int>>{});

  m.def("hurwitz", [](int d, int genus, const std::vector<std::vector<int>>& boundaries, unsigned workers) {
    Rational value;
    {
      py::gil_scoped_release release;
      value = hurwitz_brute_force({d, genus, to_partitions(boundaries)}, {default_hurwitz_budget(), workers});
    }
    return fraction(value);
  }, py::arg("d"), py::arg("genus"), py::arg("boundaries") = std::vector<std::vector<int>>{},
        py::arg("workers") = 1u);

  m.def("class_algebra_json", [](int d, std::size_t order) { return algebra_to_json(class_algebra(d, order)).dump(); },
        py::arg("d"), py::arg("order") = kDefaultOrder, "The class algebra of S_d in the algebra JSON format.");

  m.def("lift_eigenvalues", [](const std::string& algebra_json) {
    const FrobeniusAlgebra a = algebra_from_json(Json::parse(algebra_json));
    py::list out;
    for (const auto& l : eigenvalues(a, default_seeds(a))) out.append(to_python(l));
    return out;
  }, py::arg("algebra_json"));

  m.def("connected", [](const std::vector<std::vector<std::string>>& rows) {
    std::vector<Series> series;
    for (const auto& r : rows) {
      std::vector<Rational> c;
      for (const auto& s : r) c.push_back(parse_rational(s));
      series.emplace_back(std::move(c));
    }
    const BivariateSeries connected = connected_from_disconnected(BivariateSeries(std::move(series)));
    py::list out;
    for (const auto& r : connected.rows()) out.append(to_python(r));
    return out;
  }, py::arg("rows"), "Log in q: rows[d] lists the t-coefficients of Z_d as fraction strings; rows[0] must be 1.");

  m.def("domain_genus", [](long d, long g, long b) { return fraction(domain_genus(d, g, b)); }, py::arg("d"),
        py::arg("genus"), py::arg("branch_points"));

  m.def("verify", [](const std::string& suite, int max_d, std::size_t order) {
    VerifyOptions options;
    options.max_d = max_d;
    options.order = order;
    options.budget = default_hurwitz_budget();
    std::vector<CheckResult> results;
    {
      py::gil_scoped_release release;
      results = run_suite(suite, options);
    }
    py::list out;
    for (const auto& r : results) out.append(py::make_tuple(r.suite, r.name, r.passed, r.detail));
    return out;
  }, py::arg("suite") = "all", py::arg("max_d") = 5, py::arg("order") = kDefaultOrder);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    const CommandResult r = run_cli(args);
    return py::make_tuple(r.exit_code, r.out, r.err);
  }, py::arg("args"), "Runs a command-line invocation in process; returns (exit_code, stdout, stderr).");
}
