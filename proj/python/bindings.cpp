#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cyclic_weights/cli.hpp"
#include "cyclic_weights/diagram.hpp"
#include "cyclic_weights/errors.hpp"
#include "cyclic_weights/explorer.hpp"
#include "cyclic_weights/report.hpp"

namespace py = pybind11;
using namespace cyclic_weights;

namespace {

std::vector<Int> digits_of(const Weight& w) { return {w.digits().begin(), w.digits().end()}; }

std::vector<std::pair<int, Int>> tuple_entries(const PolyTuple& t) {
  std::vector<std::pair<int, Int>> out;
  for (const auto& e : t.entries()) out.emplace_back(e.sign, e.constant);
  return out;
}

std::vector<FieldElement> scalars_of(const FieldHandle& field, const std::vector<std::vector<Int>>& raw) {
  std::vector<FieldElement> out;
  for (const auto& c : raw) out.push_back(FieldElement::make(field, c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weights, mu chains, cyclic modules and cyclic diagrams for GL_2 of a local field";

  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<Params>(m, "Params")
      .def(py::init<Int, Int>(), py::arg("p"), py::arg("f"))
      .def_property_readonly("p", &Params::p)
      .def_property_readonly("f", &Params::f)
      .def_property_readonly("q_minus_1", &Params::q_minus_1)
      .def_property_readonly("chain_length", &Params::chain_length)
      .def(py::self == py::self)
      .def("__repr__", [](const Params& p) {
        return "Params(p=" + std::to_string(p.p()) + ", f=" + std::to_string(p.f()) + ")";
      });

  py::class_<Weight>(m, "Weight")
      .def_property_readonly("params", &Weight::params)
      .def_property_readonly("digits", &digits_of)
      .def_property_readonly("twist", &Weight::twist)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const Weight& w) { return py::hash(py::str(to_string(w))); })
      .def("__repr__", [](const Weight& w) { return to_string(w); });

  py::class_<BChar>(m, "BChar")
      .def_readonly("e_a", &BChar::e_a)
      .def_readonly("e_d", &BChar::e_d)
      .def(py::self == py::self)
      .def("__repr__", [](const BChar& c) { return to_string(c); });

  m.def("make_weight", &make_weight, py::arg("digits"), py::arg("m"), py::arg("params"));
  m.def("is_generic", &is_generic);
  m.def("s_dual", &s_dual);
  m.def("chi", &chi);
  m.def("s_conjugate", &s_conjugate);
  m.def("weight_from_char", &weight_from_char);
  m.def("make_bchar", &make_bchar, py::arg("e_a"), py::arg("e_d"), py::arg("params"));

  // Tuples come back as [(sign, constant), ...].
  m.def("mu_power", [](const Params& p, Int k, Int seed) { return tuple_entries(mu_power(p, k, seed)); },
        py::arg("params"), py::arg("k"), py::arg("seed_rotation") = 0);
  m.def("mu_power_by_composition",
        [](const Params& p, Int k, Int seed) { return tuple_entries(mu_power_by_composition(p, k, seed)); },
        py::arg("params"), py::arg("k"), py::arg("seed_rotation") = 0);

  py::class_<ChainResult>(m, "ChainResult")
      .def_readonly("params", &ChainResult::params)
      .def_readonly("l", &ChainResult::l)
      .def_readonly("seed_rotation", &ChainResult::seed_rotation)
      .def_readonly("sigmas", &ChainResult::sigmas)
      .def_readonly("e_values", &ChainResult::e_values);
  m.def("build_chain",
        [](const Params& p, const std::vector<Int>& r, Int m, Int seed) { return build_chain(p, r, m, seed); },
        py::arg("params"), py::arg("r"), py::arg("m") = 0, py::arg("seed_rotation") = 0);

  m.def("gr1_weights", [](const Weight& w) { return gr1_weights(w).weights; });

  py::class_<ExtensionPair>(m, "ExtensionPair")
      .def_readonly("sub", &ExtensionPair::sub)
      .def_readonly("quotient", &ExtensionPair::quotient)
      .def_readonly("u_chars", &ExtensionPair::u_chars)
      .def("__repr__", [](const ExtensionPair& e) { return to_string(e); });
  py::class_<CyclicModule>(m, "CyclicModule")
      .def_readonly("params", &CyclicModule::params)
      .def_readonly("pairs", &CyclicModule::pairs)
      .def("__len__", &CyclicModule::size)
      .def(py::self == py::self);
  m.def("build_cyclic_module", &build_cyclic_module);
  m.def("make_cyclic_module", &make_cyclic_module);
  m.def("is_multiplicity_free", &is_multiplicity_free);
  m.def("jh_factors", &jh_factors);
  m.def("u_invariant_characters", &u_invariant_characters);
  m.def("validate_cyclic_module", [](const CyclicModule& mod) {
    const auto v = validate_cyclic_module(mod);
    py::dict d;
    d["ok"] = v.ok();
    d["subs_distinct_generic"] = v.subs_distinct_generic;
    d["cyclic_consistent"] = v.cyclic_consistent;
    d["gr1_membership"] = v.gr1_membership;
    d["u_chars_consistent"] = v.u_chars_consistent;
    d["failures"] = v.failures;
    return d;
  });

  // Scalars are coefficient lists over F_{p^d}, low degree first.
  m.def(
      "t_invariant",
      [](const CyclicModule& mod, const std::vector<std::vector<Int>>& t, Int d) {
        const auto field = field_make(mod.params.p(), d);
        const auto x = t_invariant(make_diagram(mod, scalars_of(field, t)));
        return std::vector<Int>(x.coeffs().begin(), x.coeffs().end());
      },
      py::arg("module"), py::arg("scalars"), py::arg("field_degree") = 1);
  m.def(
      "classify_isomorphic",
      [](const CyclicModule& mod, const std::vector<std::vector<Int>>& t, const std::vector<std::vector<Int>>& tp,
         Int d) {
        const auto field = field_make(mod.params.p(), d);
        const auto c = classify_isomorphic(make_diagram(mod, scalars_of(field, t)), make_diagram(mod, scalars_of(field, tp)));
        py::dict out;
        out["isomorphic"] = c.isomorphic;
        if (c.witness) {
          std::vector<std::vector<Int>> w;
          for (const auto& a : *c.witness) w.emplace_back(a.coeffs().begin(), a.coeffs().end());
          out["witness"] = w;
        } else {
          out["witness"] = py::none();
        }
        return out;
      },
      py::arg("module"), py::arg("scalars"), py::arg("scalars_prime"), py::arg("field_degree") = 1);

  // Report documents as JSON text; the package wrapper parses them.
  m.def(
      "verify_mu_lemma_json",
      [](const Params& p, unsigned workers) {
        const auto set = default_r_set(p);
        py::gil_scoped_release release;
        return report_json(verify_mu_lemma(p, set, workers)).dump();
      },
      py::arg("params"), py::arg("workers") = 1);
  m.def(
      "find_cycles_json",
      [](const Weight& start, Int max_len, std::size_t budget) {
        py::gil_scoped_release release;
        return report_json(find_cycles(start, max_len, budget)).dump();
      },
      py::arg("start"), py::arg("max_len"), py::arg("budget") = kDefaultVisitBudget);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
