#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "csap/classes.hpp"
#include "csap/construct.hpp"
#include "csap/corpus.hpp"
#include "csap/numtheory.hpp"
#include "csap/specparse.hpp"
#include "csap/spectra.hpp"
#include "csap/theorems.hpp"

namespace py = pybind11;
using namespace csap;

namespace {

py::dict signature_dict(const GroupSignature& s) {
  py::dict d;
  d["order"] = s.order;
  d["cs_multiset"] = s.cs_multiset;
  d["center_order"] = s.center_order;
  d["derived_order"] = s.derived_order;
  d["exponent"] = s.exponent;
  d["order_histogram"] = s.order_histogram;
  return d;
}

struct PyGroup {
  std::string spec_text;
  FiniteGroup G;
  ClassData cd;

  explicit PyGroup(const std::string& text, long cap)
      : spec_text(render_group_spec(parse_group_spec(text))),
        G(build_group(parse_group_spec(text), cap)),
        cd(conjugacy_classes(G)) {}
};

py::dict report_dict(const TheoremReport& r) {
  py::dict d;
  d["theorem_id"] = to_string(r.theorem_id);
  d["applicable"] = r.applicable;
  if (r.applicable)
    d["verdict"] = *r.verdict;
  else
    d["verdict"] = py::none();
  d["witnesses"] = r.witnesses;
  d["diagnostics"] = r.diagnostics;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite-group conjugacy class size toolkit";

  py::class_<PyGroup>(m, "Group")
      .def(py::init<const std::string&, long>(), py::arg("spec"),
           py::arg("cap") = kDefaultOrderCap)
      .def_property_readonly("spec",
                             [](const PyGroup& g) { return g.spec_text; })
      .def_property_readonly("order",
                             [](const PyGroup& g) { return g.G.order(); })
      .def_property_readonly("degree",
                             [](const PyGroup& g) { return g.G.degree(); })
      .def_property_readonly(
          "cs", [](const PyGroup& g) { return g.cd.cs_set; })
      .def_property_readonly(
          "cs_star", [](const PyGroup& g) { return g.cd.cs_star_set; })
      .def_property_readonly(
          "rank", [](const PyGroup& g) { return conjugacy_rank(g.cd); })
      .def_property_readonly(
          "class_multiplicities",
          [](const PyGroup& g) { return g.cd.multiplicities; })
      .def_property_readonly(
          "center_order", [](const PyGroup& g) { return center(g.G).order(); })
      .def_property_readonly(
          "derived_order",
          [](const PyGroup& g) { return derived_subgroup(g.G).order(); })
      .def_property_readonly(
          "is_nilpotent", [](const PyGroup& g) { return is_nilpotent(g.G); })
      .def_property_readonly(
          "is_solvable", [](const PyGroup& g) { return is_solvable(g.G); })
      .def("signature",
           [](const PyGroup& g) { return signature_dict(signature(g.G)); })
      .def("ap",
           [](const PyGroup& g, bool star) {
             APReport ap = detect_ap(star ? g.cd.cs_star_set : g.cd.cs_set);
             py::dict d;
             d["is_ap"] = ap.is_ap;
             d["a0"] = ap.a0;
             d["d"] = ap.d;
             d["r"] = ap.r;
             d["delta"] = ap.delta;
             d["primitive"] = ap.primitive;
             return d;
           },
           py::arg("star") = false)
      .def("check",
           [](const PyGroup& g, const std::string& id, long cap) {
             return report_dict(run_check(id, parse_group_spec(g.spec_text),
                                          cap));
           },
           py::arg("theorem"), py::arg("cap") = kDefaultOrderCap)
      .def("__repr__", [](const PyGroup& g) {
        return "<Group " + g.spec_text + " of order " +
               std::to_string(g.G.order()) + ">";
      });

  m.def("parse", [](const std::string& text) {
    return render_group_spec(parse_group_spec(text));
  });
  m.def("check_ids", [] { return kAllCheckIds; });

  m.def("factorize", &nt::factorize, py::arg("n"));
  m.def("is_prime", &nt::is_prime, py::arg("n"));
  m.def(
      "thompson_search",
      [](int max_n) {
        py::list out;
        for (const auto& s : nt::thompson_search(max_n)) {
          py::dict d;
          d["p"] = s.p;
          d["m"] = s.m;
          d["n"] = s.n;
          d["sign"] = s.sign;
          out.append(d);
        }
        return out;
      },
      py::arg("max_n") = 62);
  m.def("classify_ap", [](const std::vector<long>& terms) {
    auto c = nt::classify_two_prime_ap(terms);
    py::dict d;
    d["case"] = nt::to_string(c.label);
    d["p"] = c.p;
    d["q"] = c.q;
    d["alpha"] = c.alpha;
    d["beta"] = c.beta;
    d["delta"] = c.delta;
    d["reduced"] = c.reduced;
    return d;
  });
  m.def(
      "enumerate_aps",
      [](long max_term, int min_len) {
        py::list out;
        for (const auto& [ap, c] :
             nt::enumerate_primitive_two_prime_aps(max_term, min_len)) {
          py::dict d;
          d["terms"] = ap;
          d["case"] = nt::to_string(c.label);
          out.append(d);
        }
        return out;
      },
      py::arg("max_term"), py::arg("min_len") = 3);
}
