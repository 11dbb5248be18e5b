#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orderinv/catalog.hpp"
#include "orderinv/error.hpp"
#include "orderinv/matcher.hpp"
#include "orderinv/numtheory.hpp"
#include "orderinv/order_stats.hpp"
#include "orderinv/report.hpp"
#include "orderinv/structure.hpp"
#include "orderinv/sweep.hpp"
#include "orderinv/verifier.hpp"

namespace py = pybind11;
using namespace orderinv;

namespace {

ExactScalar scalar_in(const py::handle& obj) {
  if (py::isinstance<py::bool_>(obj)) throw py::type_error("expected a number, got bool");
  if (py::isinstance<py::int_>(obj)) return ExactScalar::parse(py::str(obj).cast<std::string>());
  if (py::isinstance<py::float_>(obj)) return ExactScalar::approx(obj.cast<double>());
  if (py::isinstance<py::str>(obj)) return ExactScalar::parse(obj.cast<std::string>());
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
    return ExactScalar::parse(py::str(obj.attr("numerator")).cast<std::string>() + "/" +
                              py::str(obj.attr("denominator")).cast<std::string>());
  }
  throw py::type_error("expected int, float, str or Fraction");
}

py::object scalar_out(const ExactScalar& v) {
  if (!v.is_exact()) return py::float_(v.to_double());
  const Rational& q = v.rational();
  py::object to_int = py::module_::import("builtins").attr("int");
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_int(numerator(q).str()), to_int(denominator(q).str()));
}

py::object json_out(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::uint64_t divisor_or_order(const FiniteGroup& g, std::optional<std::uint64_t> n) {
  return n ? *n : g.order();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Order statistics of finite groups";
  m.attr("__version__") = tool_version();

  py::register_exception<Error>(m, "OrderinvError", PyExc_ValueError);

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("label", &FiniteGroup::label)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("element_orders",
           [](const FiniteGroup& g) {
             auto o = g.element_orders();
             return std::vector<std::uint64_t>(o.begin(), o.end());
           })
      .def("to_json", [](const FiniteGroup& g) { return json_out(group_to_json(g)); })
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) {
        return "<FiniteGroup " + g.label() + " of order " + std::to_string(g.order()) + ">";
      });

  m.def("cyclic", [](std::uint64_t n) { return cyclic(n); }, py::arg("n"));
  m.def("dihedral", [](std::uint64_t n) { return dihedral(n); }, py::arg("n"),
        "Symmetries of the regular n-gon (order 2n).");
  m.def("quaternion", [](std::uint64_t order) { return generalized_quaternion(order); },
        py::arg("order"));
  m.def("symmetric", [](std::uint64_t k) { return symmetric(k); }, py::arg("k"));
  m.def("alternating", [](std::uint64_t k) { return alternating(k); }, py::arg("k"));
  m.def("elementary_abelian", [](std::uint64_t p, std::uint64_t k) { return elementary_abelian(p, k); },
        py::arg("p"), py::arg("k"));
  m.def("direct_product", [](const FiniteGroup& a, const FiniteGroup& b) { return direct_product(a, b); });
  m.def("semidirect",
        [](std::uint64_t mm, std::uint64_t beta, std::uint64_t u) {
          return inverting_semidirect({mm, beta, u});
        },
        py::arg("m"), py::arg("beta"), py::arg("u"),
        "C_m x| C_(2^u beta) with the generator acting by inversion.");
  m.def("group", [](const std::string& text) { return resolve_group(text).group; }, py::arg("text"),
        "Group expression such as 'Q8xC3' or a JSON file path.");
  m.def("from_cayley_table",
        [](const std::vector<std::vector<std::int64_t>>& table, const std::string& label) {
          return from_cayley_table(table, label);
        },
        py::arg("table"), py::arg("label") = "G");
  m.def("from_permutations",
        [](std::size_t degree, const std::vector<std::vector<std::uint32_t>>& gens, const std::string& label) {
          return from_permutations({degree, gens}, label);
        },
        py::arg("degree"), py::arg("generators"), py::arg("label") = "G");

  m.def("order_profile", [](const FiniteGroup& g) { return order_profile(g).counts(); });
  m.def("frobenius_table", [](const FiniteGroup& g) {
    std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> out;
    const FrobeniusTable table = frobenius_table(order_profile(g));
    for (const auto& [k, e] : table.entries()) out[k] = {e.solutions, e.quotient};
    return out;
  });
  m.def("cyclic_subgroup_count",
        [](const FiniteGroup& g, std::optional<std::uint64_t> n) {
          return cyclic_subgroup_count(order_profile(g), divisor_or_order(g, n));
        },
        py::arg("g"), py::arg("n") = py::none());
  m.def("r_functional",
        [](const FiniteGroup& g, py::object r, py::object s, std::optional<std::uint64_t> n) {
          return scalar_out(r_functional(order_profile(g), divisor_or_order(g, n), scalar_in(r), scalar_in(s)));
        },
        py::arg("g"), py::arg("r"), py::arg("s"), py::arg("n") = py::none());
  m.def("t_functional",
        [](const FiniteGroup& g, py::object r, py::object s, std::optional<std::uint64_t> n) {
          return scalar_out(t_functional(order_profile(g), divisor_or_order(g, n), scalar_in(r), scalar_in(s)));
        },
        py::arg("g"), py::arg("r"), py::arg("s"), py::arg("n") = py::none());
  m.def("product_of_orders", [](const FiniteGroup& g) {
    std::map<std::uint64_t, py::object> out;
    py::object to_int = py::module_::import("builtins").attr("int");
    const FactoredInteger product = product_of_orders(order_profile(g));
    for (const auto& [p, e] : product.factors()) out[p] = to_int(e.str());
    return out;
  });

  m.def("is_cyclic", [](const FiniteGroup& g) { return is_cyclic(g); });
  m.def("is_nilpotent", [](const FiniteGroup& g) { return is_nilpotent(g); });
  m.def("is_solvable", [](const FiniteGroup& g) { return is_solvable(g); });
  m.def("subgroups",
        [](const FiniteGroup& g, std::size_t cap) {
          std::vector<std::vector<Element>> out;
          for (const Subgroup& h : enumerate_subgroups(g, cap)) out.push_back(h.elements);
          return out;
        },
        py::arg("g"), py::arg("cap") = default_subgroup_cap);

  m.def("divisibility_matching", [](const FiniteGroup& g) {
    const OrderProfile p = order_profile(g);
    const DivisibilityMatching dm = find_divisibility_matching(p);
    nlohmann::json j = to_json(dm);
    j["verified"] = dm.status == DivisibilityMatching::Status::found ? verify_matching(p, dm)
                                                                    : dm.violator && verify_violation(p, *dm.violator);
    return json_out(j);
  });

  m.def("divisors", &divisors);
  m.def("totient", &totient);
  m.def("moebius", &moebius);
  m.def("g_coefficient",
        [](std::uint64_t mm, std::uint64_t j, py::object r, py::object s) {
          return scalar_out(g_coefficient(mm, j, scalar_in(r), scalar_in(s)));
        },
        py::arg("m"), py::arg("j"), py::arg("r"), py::arg("s"));

  m.def("claims", [] { return claims::all(); });
  m.def("verify_json",
        [](const std::string& catalog, const std::vector<std::string>& claim_ids, const std::string& grid,
           std::size_t workers) {
          const Catalog c = build_catalog(parse_catalog_spec(catalog));
          SweepOptions options;
          options.claims = claim_ids;
          options.grid = parse_grid(grid);
          options.workers = workers;
          Report report;
          {
            py::gil_scoped_release release;
            report = run_sweep(c, options);
          }
          return render_json(report);
        },
        py::arg("catalog") = "default", py::arg("claims") = std::vector<std::string>{},
        py::arg("grid") = "default", py::arg("workers") = 1);
}
