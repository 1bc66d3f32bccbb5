#include "bochert/catalog.hpp"
#include "bochert/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bochert;

namespace {

py::object big_int(const Integer &z) { return py::module_::import("builtins").attr("int")(z.str()); }

py::object fraction(const Rational &r) {
  return py::module_::import("fractions")
      .attr("Fraction")(big_int(boost::multiprecision::numerator(r)),
                        big_int(boost::multiprecision::denominator(r)));
}

std::vector<Point> to_points(const std::vector<unsigned> &pts) { return {pts.begin(), pts.end()}; }

py::dict check_dict(const CountCheck &c) {
  py::dict d;
  d["label"] = c.label;
  d["relation"] = to_string(c.relation);
  d["observed"] = big_int(c.observed);
  d["formula"] = fraction(c.formula);
  d["pass"] = c.pass;
  return d;
}

py::dict trace_dict(const TraceReport &r) {
  py::dict d;
  d["theorem"] = r.theorem;
  d["group"] = r.group;
  d["n"] = r.n;
  d["m"] = r.m;
  d["t"] = r.t;
  d["applicable"] = r.applicable;
  d["reason"] = r.reason;
  d["degenerate"] = r.degenerate ? py::object(py::str(*r.degenerate)) : py::object(py::none());
  py::dict witnesses, sizes, quantities;
  for (const auto &[k, v] : r.witnesses)
    witnesses[py::str(k)] = v;
  for (const auto &[k, v] : r.sizes)
    sizes[py::str(k)] = big_int(v);
  for (const auto &[k, v] : r.quantities)
    quantities[py::str(k)] = fraction(v);
  d["witnesses"] = witnesses;
  d["sizes"] = sizes;
  d["quantities"] = quantities;
  py::list checks;
  for (const auto &c : r.checks)
    checks.append(check_dict(c));
  d["checks"] = checks;
  d["notes"] = r.notes;
  d["conclusion_applicable"] = r.conclusion_applicable;
  d["conclusion_holds"] = r.conclusion_holds;
  d["passed"] = r.passed();
  return d;
}

Group group_from(std::size_t degree, const std::vector<std::string> &gens, const std::string &label) {
  std::vector<Permutation> ps;
  for (const auto &g : gens)
    ps.push_back(parse_cycles(g, degree));
  return Group(GeneratorSet(degree, std::move(ps), label));
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Permutation groups, minimal degrees and checks of minimal-degree bounds";
  m.attr("__version__") = library_version;

  // Translators run newest first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DegreeMismatch>(m, "DegreeMismatch", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::string &text, std::size_t degree) { return parse_cycles(text, degree); }),
           py::arg("cycles"), py::arg("degree"))
      .def_static("from_images", [](const std::vector<unsigned> &img) { return Permutation(to_points(img)); })
      .def_static("identity", &Permutation::identity)
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("images", [](const Permutation &p) {
        return std::vector<unsigned>(p.images().begin(), p.images().end());
      })
      .def("__call__", [](const Permutation &p, Point a) {
        if (a >= p.degree())
          throw py::index_error("point out of range");
        return p(a);
      })
      .def("__mul__", &compose)
      .def("inverse", &Permutation::inverse)
      .def("is_identity", &Permutation::is_identity)
      .def("support", [](const Permutation &p) {
        auto s = support(p);
        return std::vector<unsigned>(s.begin(), s.end());
      })
      .def("fixed_points", [](const Permutation &p) {
        auto s = fixed_points(p);
        return std::vector<unsigned>(s.begin(), s.end());
      })
      .def("order", &element_order)
      .def("__pow__", [](const Permutation &p, std::int64_t k) { return power(p, k); })
      .def("__eq__", [](const Permutation &a, const Permutation &b) { return a == b; })
      .def("__hash__", [](const Permutation &p) { return PermutationHash{}(p); })
      .def("__str__", &format_cycles)
      .def("__repr__", [](const Permutation &p) {
        return "Permutation('" + format_cycles(p) + "', " + std::to_string(p.degree()) + ")";
      });

  m.def("compose", &compose);
  m.def("conjugate", &conjugate, py::arg("u"), py::arg("g"), "g^-1 u g");
  m.def("commutator", &commutator, "u v u^-1 v^-1");
  m.def("prime_order_witness", &prime_order_witness);

  py::class_<Group>(m, "Group")
      .def(py::init(&group_from), py::arg("degree"), py::arg("generators"), py::arg("label") = "")
      .def_static("catalog", [](const std::string &label) { return load_builtin(label); })
      .def_static("resolve", [](const std::string &spec) { return resolve_group_spec(spec); },
                  "catalog:<label> or file:<path>")
      .def_property_readonly("degree", &Group::degree)
      .def_property_readonly("label", &Group::label)
      .def_property_readonly("order", [](const Group &g) { return big_int(g.order()); })
      .def_property_readonly("generators", [](const Group &g) { return g.generators().generators; })
      .def("__contains__", &Group::contains)
      .def("transitivity_degree", &Group::transitivity_degree)
      .def("contains_alternating", &Group::contains_alternating)
      .def("pointwise_stabilizer", [](const Group &g, const std::vector<unsigned> &delta) {
        return pointwise_stabilizer(g, PointSet(g.degree(), to_points(delta)));
      })
      .def("transporter", [](const Group &g, const std::vector<unsigned> &src, const std::vector<unsigned> &dst) {
        return transporter(g, to_points(src), to_points(dst));
      })
      .def("conjugate_orbit", [](const Group &g, const Permutation &u, std::size_t cap) {
        return conjugate_orbit(g, u, cap).elements;
      }, py::arg("u"), py::arg("cap") = default_orbit_cap)
      .def("elements", [](const Group &g) { return enumerate_elements(g.chain()); })
      .def("min_degree", [](const Group &g, const std::string &method, std::uint64_t cap, unsigned jobs) {
        MinDegResult r;
        {
          py::gil_scoped_release release;
          r = min_degree(g, parse_min_deg_method(method), cap, jobs);
        }
        py::dict d;
        d["m"] = r.m;
        d["witness"] = r.witness;
        d["method"] = to_string(r.method);
        d["elements_visited"] = r.elements_visited;
        d["nodes_pruned"] = r.nodes_pruned;
        return d;
      }, py::arg("method") = "auto", py::arg("cap") = default_exhaustive_cap, py::arg("jobs") = 1)
      .def("__repr__", [](const Group &g) {
        return "Group('" + g.label() + "', degree=" + std::to_string(g.degree()) + ", order=" +
               g.order().str() + ")";
      });

  m.def("catalog_labels", [](std::uint64_t max_order) { return catalog_labels(Integer(max_order)); },
        py::arg("max_order") = 100000);

  m.def("check_commutator_laws", [](const Permutation &u, const Permutation &v) {
    auto r = check_commutator_laws(u, v);
    py::list checks;
    for (const auto &c : r.checks)
      checks.append(check_dict(c));
    py::dict d;
    d["checks"] = checks;
    d["forward_image_containment"] = r.forward_image_containment;
    return d;
  });

  m.def("trace", [](const Group &g, const std::string &which, std::optional<std::uint64_t> choice_seed) {
    TraceOptions opts;
    opts.choice_seed = choice_seed;
    if (which == "jordan" || which == "2.2")
      return trace_dict(to_trace_report(check_jordan_bound(g, opts)));
    if (which == "double" || which == "3.1")
      return trace_dict(trace_doubly_transitive_bound(g, opts));
    if (which == "triple" || which == "3.2")
      return trace_dict(trace_triply_transitive_bound(g, opts));
    if (which == "quadruple" || which == "3.3")
      return trace_dict(trace_quadruply_transitive_bound(g, opts));
    throw py::value_error("unknown trace '" + which + "'");
  }, py::arg("group"), py::arg("which"), py::arg("choice_seed") = py::none());

  m.def("mathieu_table", [] {
    std::vector<Group> groups;
    for (const char *label : {"M11", "M12", "M23", "M24"})
      groups.push_back(load_builtin(label));
    py::list rows;
    std::vector<MathieuRow> table;
    {
      py::gil_scoped_release release;
      table = mathieu_bound_table(groups);
    }
    for (const auto &r : table) {
      py::dict d;
      d["group"] = r.label;
      d["n"] = r.n;
      d["t"] = r.t;
      d["m"] = r.m;
      d["bound"] = big_int(r.bound);
      d["matches"] = r.matches;
      rows.append(d);
    }
    return rows;
  });

  m.def("verify_json", [](const Group &g, const std::string &suite, std::size_t samples,
                          std::uint64_t seed, unsigned jobs) {
    SuiteOptions opts{samples, seed, jobs, default_exhaustive_cap};
    std::string out;
    {
      py::gil_scoped_release release;
      Report r = make_report(g, opts);
      if (suite == "laws" || suite == "all")
        r.suites.push_back(commutator_law_suite(g, opts));
      if (suite == "counts" || suite == "all")
        for (auto &s : orbit_count_suites(g, opts))
          r.suites.push_back(std::move(s));
      if (suite == "traces" || suite == "all")
        for (auto &s : trace_suites(g, opts))
          r.suites.push_back(std::move(s));
      out = to_json(r);
    }
    return out;
  }, py::arg("group"), py::arg("suite") = "all", py::arg("samples") = 1000, py::arg("seed") = 0,
     py::arg("jobs") = 1);
}
