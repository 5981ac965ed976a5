// Copyright 2026 The Groves Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "groves/dominance.hpp"
#include "groves/errors.hpp"
#include "groves/fixtures.hpp"
#include "groves/oel.hpp"
#include "groves/spec_io.hpp"
#include "groves/transforms.hpp"

namespace py = pybind11;

// groves::Rational <-> fractions.Fraction. Loads also accept int and "p/q".
namespace pybind11::detail {
template <>
struct type_caster<groves::Rational> {
  PYBIND11_TYPE_CASTER(groves::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || PyBool_Check(src.ptr())) return false;
    std::string text;
    if (PyLong_Check(src.ptr())) {
      text = py::str(src);
    } else if (py::isinstance(src, py::module_::import("fractions").attr("Fraction"))) {
      text = std::string(py::str(src.attr("numerator"))) + "/" + std::string(py::str(src.attr("denominator")));
    } else if (py::isinstance<py::str>(src)) {
      text = src.cast<std::string>();
    } else {
      return false;
    }
    try {
      value = groves::Rational::parse(text);
    } catch (const std::invalid_argument&) {
      return false;
    }
    return true;
  }

  static handle cast(const groves::Rational& r, return_value_policy, handle) {
    return py::module_::import("fractions").attr("Fraction")(r.to_string()).release();
  }
};
}  // namespace pybind11::detail

namespace {

using namespace groves;

py::object optional_agent(const std::optional<std::size_t>& agent) {
  return agent ? py::object(py::int_(*agent)) : py::object(py::none());
}

py::dict verdict_dict(const Verdict& v) {
  py::dict out;
  out["holds"] = v.holds;
  if (v.witness) {
    py::dict w;
    w["profile"] = v.witness->profile;
    w["agent"] = optional_agent(v.witness->agent);
    w["deviation"] = v.witness->deviation ? py::cast(*v.witness->deviation) : py::object(py::none());
    w["value"] = v.witness->value;
    out["witness"] = w;
  } else {
    out["witness"] = py::none();
  }
  return out;
}

py::list witness_list(const std::vector<DominanceWitness>& ws) {
  py::list out;
  for (const auto& w : ws) {
    py::dict d;
    d["point"] = w.point;
    d["agent"] = optional_agent(w.agent);
    d["first"] = w.first;
    d["second"] = w.second;
    out.append(d);
  }
  return out;
}

py::dict dominance_dict(const DominanceVerdict& v) {
  py::dict out;
  out["relation"] = std::string(to_string(v.relation));
  out["result"] = std::string(to_string(v.result));
  out["strict_count"] = v.strict_count;
  out["violation_count"] = v.violation_count;
  out["strict_witnesses"] = witness_list(v.strict_witnesses);
  out["violation_witnesses"] = witness_list(v.violation_witnesses);
  return out;
}

}  // namespace

PYBIND11_MODULE(_groves, m) {
  m.doc() = "Exact-arithmetic toolkit for non-deficit Groves redistribution mechanisms";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DeficitError>(m, "DeficitError", PyExc_ValueError);

  py::class_<Domain>(m, "Domain")
      .def_static("single_item", &Domain::single_item)
      .def_static("multi_unit", &Domain::multi_unit, py::arg("units"))
      .def_static("public_project_equal", &Domain::public_project_equal, py::arg("cost"))
      .def_static("public_project_general", &Domain::public_project_general, py::arg("shares"))
      .def_property_readonly("kind", [](const Domain& d) { return std::string(d.kind()); })
      .def("describe", &Domain::describe)
      .def("__eq__", [](const Domain& a, const Domain& b) { return a == b; })
      .def("__repr__", [](const Domain& d) { return "<Domain " + d.describe() + ">"; });

  py::class_<TypeGrid>(m, "TypeGrid")
      .def(py::init<std::size_t, std::vector<Rational>>(), py::arg("agents"), py::arg("values"))
      .def_property_readonly("agents", &TypeGrid::agents)
      .def_property_readonly("values", &TypeGrid::values)
      .def_property_readonly("lower", &TypeGrid::lower)
      .def_property_readonly("upper", &TypeGrid::upper)
      .def("__eq__", [](const TypeGrid& a, const TypeGrid& b) { return a == b; });

  m.def("integer_grid", &integer_grid, py::arg("agents"), py::arg("first"), py::arg("last"));

  py::class_<GrovesMechanism>(m, "Mechanism")
      .def_static("vcg", py::overload_cast<Domain, TypeGrid>(&GrovesMechanism::vcg), py::arg("domain"), py::arg("grid"))
      .def_static(
          "linear",
          [](Domain d, TypeGrid g, const Rational& constant, std::vector<Rational> coefficients) {
            return GrovesMechanism(std::move(d), std::move(g), LinearRedistribution{constant, std::move(coefficients)});
          },
          py::arg("domain"), py::arg("grid"), py::arg("constant"), py::arg("coefficients"))
      .def_property_readonly("agents", &GrovesMechanism::agents)
      .def_property_readonly("is_anonymous", &GrovesMechanism::is_anonymous)
      .def_property_readonly("domain", &GrovesMechanism::domain)
      .def_property_readonly("grid", &GrovesMechanism::grid)
      .def(
          "redistribute",
          [](const GrovesMechanism& mech, std::size_t agent, const std::vector<Rational>& others) {
            return redistribute(mech, agent, others);
          },
          py::arg("agent"), py::arg("others"))
      .def(
          "payment",
          [](const GrovesMechanism& mech, const std::vector<Rational>& profile, std::size_t agent) {
            return payment(mech, profile, agent);
          },
          py::arg("profile"), py::arg("agent"))
      .def(
          "total_payment",
          [](const GrovesMechanism& mech, const std::vector<Rational>& profile) { return total_payment(mech, profile); },
          py::arg("profile"))
      .def(
          "utility",
          [](const GrovesMechanism& mech, const std::vector<Rational>& profile, std::size_t agent) {
            return utility(mech, profile, agent);
          },
          py::arg("profile"), py::arg("agent"))
      .def("to_json", &dump_mechanism)
      .def("tables", [](const GrovesMechanism& mech) { return mech.tabulated().tables; });

  m.def("load_mechanism", &load_mechanism, py::arg("text"), py::arg("source") = "<input>");
  m.def("load_mechanism_file", &load_mechanism_file, py::arg("path"));
  m.def("dump_mechanism", &dump_mechanism, py::arg("mechanism"));
  m.def("save_mechanism_file", &save_mechanism_file, py::arg("mechanism"), py::arg("path"));

  m.def("is_non_deficit", [](const GrovesMechanism& mech) { return verdict_dict(is_non_deficit(mech)); });
  m.def("is_pay_only", [](const GrovesMechanism& mech) { return verdict_dict(is_pay_only(mech)); });
  m.def("is_strategy_proof", [](const GrovesMechanism& mech) { return verdict_dict(is_strategy_proof(mech)); });
  m.def("is_individually_undominated",
        [](const GrovesMechanism& mech) { return verdict_dict(is_individually_undominated(mech)); });

  m.def(
      "surplus_guarantee",
      [](const GrovesMechanism& mech, std::size_t agent, const std::vector<Rational>& others) {
        return surplus_guarantee(mech, agent, others);
      },
      py::arg("mechanism"), py::arg("agent"), py::arg("others"));
  m.def("bcgc", &bcgc, py::arg("mechanism"));
  m.def("bcgc_j", &bcgc_j, py::arg("mechanism"), py::arg("agent"));
  m.def(
      "priority_improve",
      [](const GrovesMechanism& mech, std::vector<std::size_t> sequence) {
        return priority_improve(mech, PriorityOrder::from_sequence(std::move(sequence)));
      },
      py::arg("mechanism"), py::arg("sequence"), "Agents are listed from highest priority to lowest.");
  m.def(
      "iterate_until",
      [](const GrovesMechanism& mech, std::size_t max_steps, const Rational& bound) {
        auto res = iterate_until(mech, max_steps, bound);
        py::dict out;
        std::vector<Rational> residuals;
        for (const auto& st : res.trace.steps) residuals.push_back(st.residual);
        out["mechanism"] = py::cast(std::move(res.mechanism));
        out["residuals"] = residuals;
        out["reason"] = std::string(to_string(res.trace.reason));
        out["steps"] = res.trace.steps_taken();
        return out;
      },
      py::arg("mechanism"), py::arg("max_steps"), py::arg("residual_bound") = Rational(0));
  m.def("anonymize", &anonymize, py::arg("mechanism"));

  m.def(
      "compare_individual",
      [](const GrovesMechanism& a, const GrovesMechanism& b, std::size_t limit) {
        return dominance_dict(compare_individual(a, b, limit));
      },
      py::arg("first"), py::arg("second"), py::arg("witness_limit") = kDefaultWitnessLimit);
  m.def(
      "compare_collective",
      [](const GrovesMechanism& a, const GrovesMechanism& b, std::size_t limit) {
        return dominance_dict(compare_collective(a, b, limit));
      },
      py::arg("first"), py::arg("second"), py::arg("witness_limit") = kDefaultWitnessLimit);
  m.def(
      "search_collective_dominator",
      [](const GrovesMechanism& base, std::size_t budget, std::uint64_t seed, std::size_t max_support) {
        const auto r = search_collective_dominator(base, SearchOptions{budget, seed, max_support});
        py::dict out;
        out["candidates"] = r.candidates;
        out["improving_directions"] = r.improving_directions;
        out["dominators"] = r.dominators;
        out["first_dominator"] = r.first_dominator ? py::cast(*r.first_dominator) : py::object(py::none());
        return out;
      },
      py::arg("base"), py::arg("budget") = 10000, py::arg("seed") = 1, py::arg("max_support") = 4);

  m.def(
      "oel_coefficients",
      [](std::size_t n, std::size_t units, std::size_t k, const Rational& lower, const Rational& upper) {
        const auto c = oel_coefficients(OELSpec{n, units, k, lower, upper});
        return py::make_tuple(py::cast(c.constant), py::cast(c.coefficients));
      },
      py::arg("n"), py::arg("m"), py::arg("k"), py::arg("lower"), py::arg("upper"));
  m.def(
      "oel_mechanism",
      [](std::size_t n, std::size_t units, std::size_t k, std::vector<Rational> values) {
        if (values.empty()) throw ContractViolation("grid values must be nonempty");
        const OELSpec spec{n, units, k, values.front(), values.back()};
        return oel_mechanism(spec, TypeGrid(n, std::move(values)));
      },
      py::arg("n"), py::arg("m"), py::arg("k"), py::arg("values"));

  m.def("fixture_names", &fixture_names);
  m.def(
      "fixture",
      [](const std::string& name) {
        const auto f = fixture(name);
        py::dict out;
        for (std::size_t i = 0; i < f.mechanisms.size(); ++i) out[py::str(f.mechanism_names[i])] = f.mechanisms[i];
        return out;
      },
      py::arg("name"));
}
