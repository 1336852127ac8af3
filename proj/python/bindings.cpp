// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Python bindings. Rationals cross the boundary as "p/q" strings; the
// package wraps them in fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rforge/cli.hpp"
#include "rforge/io.hpp"
#include "rforge/matroid.hpp"
#include "rforge/potts.hpp"
#include "rforge/rayleigh.hpp"
#include "rforge/sequences.hpp"

namespace py = pybind11;
using namespace rforge;

namespace {

std::vector<std::string> strs(const std::vector<Rat>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

std::vector<Rat> rats(const std::vector<std::string>& v) {
  std::vector<Rat> out;
  for (const auto& x : v) out.push_back(Rat::parse(x));
  return out;
}

py::dict poly_dict(const RatPoly& p) {
  py::dict d;
  for (const auto& [s, c] : p.terms()) {
    py::tuple key = py::cast(p.ground().labels_of(s));
    d[key] = c.str();
  }
  return d;
}

RatPoly poly_from(const std::vector<std::string>& elements, const py::dict& weights) {
  GroundSet g(elements);
  std::map<Mask, Rat> w;
  for (const auto& [k, v] : weights) w[g.mask_of(k.cast<std::vector<std::string>>())] += Rat::parse(py::str(v).cast<std::string>());
  return from_weights(g, w);
}

py::dict verdict_dict(const RayleighVerdict& v, const GroundSet& g) {
  return py::module_::import("json").attr("loads")(to_json(v, g).dump());
}

Model model_of(const std::string& tag, const std::optional<std::string>& q) {
  return Model::parse(tag, q ? std::optional<Rat>(Rat::parse(*q)) : std::nullopt);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Rayleigh and log-concavity checks for matroids and weight functions";
  m.attr("__version__") = RFORGE_VERSION;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<Matroid>(m, "Matroid")
      .def_property_readonly("size", &Matroid::size)
      .def_property_readonly("labels", [](const Matroid& mat) { return mat.ground().labels(); })
      .def_property_readonly("provenance", &Matroid::provenance)
      .def("rank", [](const Matroid& mat, const std::vector<std::string>& s) { return mat.rank(mat.ground().mask_of(s)); })
      .def("full_rank", [](const Matroid& mat) { return mat.rank(); })
      .def("bases",
           [](const Matroid& mat) {
             std::vector<std::vector<std::string>> out;
             for (Mask b : enumerate(mat, Family::Bases).sorted().members()) out.push_back(mat.ground().labels_of(b));
             return out;
           })
      .def("dual", [](const Matroid& mat) { return dual(mat); })
      .def("__repr__", [](const Matroid& mat) {
        return "<Matroid " + mat.provenance() + " size=" + std::to_string(mat.size()) + " rank=" + std::to_string(mat.rank()) + ">";
      });

  m.def("uniform", py::overload_cast<int, int>(&uniform), py::arg("m"), py::arg("r"));
  m.def("load_matroid", [](const std::string& spec) { return load_matroid(spec); }, py::arg("spec"),
        "U(m,r), uniform:m,r, K<n>, C<n>, or a graph or bases file.");
  m.def(
      "graphic",
      [](int n, const std::vector<std::tuple<int, int, std::string>>& edges) {
        std::vector<Graph::Edge> es;
        for (const auto& [u, v, l] : edges) es.push_back({u, v, l});
        return graphic(Graph(n, es));
      },
      py::arg("n"), py::arg("edges"));
  m.def(
      "from_bases",
      [](const std::vector<std::string>& elements, const std::vector<std::vector<std::string>>& bases) {
        GroundSet g(elements);
        std::vector<Mask> ms;
        for (const auto& b : bases) ms.push_back(g.mask_of(b));
        return from_bases(SetSystem(g, ms));
      },
      py::arg("elements"), py::arg("bases"));
  m.def("two_sum", &two_sum, py::arg("left"), py::arg("right"), py::arg("glue"));

  m.def(
      "model_poly",
      [](const Matroid& mat, const std::string& model, std::optional<std::string> q) {
        PartitionPoly p = model_poly(mat, model_of(model, q));
        if (p.symbolic()) throw InputError("symbolic Potts polynomials are available through the CLI only");
        return poly_dict(p.rat());
      },
      py::arg("matroid"), py::arg("model") = "bases", py::arg("q") = std::nullopt,
      "Coefficients keyed by label tuples; rationals as strings.");

  m.def(
      "check_pair",
      [](const std::vector<std::string>& elements, const py::dict& weights, const std::string& e, const std::string& f,
         const std::string& strategy, int samples, std::uint64_t seed) {
        RatPoly z = poly_from(elements, weights);
        Strategy s = strategy == "sample" ? Strategy::sample(samples, seed) : Strategy::coeff();
        if (strategy != "sample" && strategy != "coeff") throw InputError("strategy must be coeff or sample");
        return verdict_dict(check_pair(z, z.ground().index_of(e), z.ground().index_of(f), s), z.ground());
      },
      py::arg("elements"), py::arg("weights"), py::arg("e"), py::arg("f"), py::arg("strategy") = "coeff",
      py::arg("samples") = 1000, py::arg("seed") = kDefaultSeed);

  m.def(
      "check_matroid",
      [](const Matroid& mat, const std::string& model, std::optional<std::string> q) {
        PartitionPoly p = model_poly(mat, model_of(model, q));
        if (p.symbolic()) throw InputError("pass q for the Potts model");
        return status_name(check_all(p.rat(), Strategy::coeff()).summary);
      },
      py::arg("matroid"), py::arg("model") = "bases", py::arg("q") = std::nullopt,
      "Summary verdict of the coefficient strategy over all pairs.");

  m.def(
      "check_condition",
      [](const std::vector<std::string>& values, const std::string& cond, std::optional<int> ambient, int offset) {
        ConditionResult r = check_condition(Seq(rats(values), ambient, offset), parse_condition(cond));
        return std::make_pair(r.holds, r.witness);
      },
      py::arg("values"), py::arg("condition"), py::arg("m") = std::nullopt, py::arg("offset") = 0);

  m.def(
      "exchangeable_status",
      [](const std::vector<std::string>& a) { return status_name(exchangeable_check(SymSeq(rats(a))).status); },
      py::arg("a"));

  m.def(
      "invariants",
      [](const Matroid& mat) {
        InvariantSequences s = invariant_sequences(mat);
        py::dict d;
        d["independent"] = strs(s.independent);
        d["flats"] = strs(s.flats);
        d["broken_circuit"] = strs(s.broken_circuit);
        d["h"] = strs(s.h);
        return d;
      },
      py::arg("matroid"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool in-process; returns (exit_code, stdout, stderr).");
}
