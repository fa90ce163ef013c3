#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permforms/classify.hpp"
#include "permforms/errors.hpp"
#include "permforms/formation.hpp"
#include "permforms/groupfile.hpp"
#include "permforms/groupgen.hpp"
#include "permforms/lattice.hpp"
#include "permforms/perm_ops.hpp"
#include "permforms/verify.hpp"

namespace py = pybind11;
using namespace permforms;

namespace {

std::vector<std::string> gen_strings(const std::vector<Permutation>& gens) {
  std::vector<std::string> out;
  for (const auto& p : gens) out.push_back(p.to_cycles());
  return out;
}

Group group_from_cycles(unsigned degree, const std::vector<std::string>& cycles) {
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(Permutation::parse_cycles(c, degree));
  return Group::from_generators(degree, std::move(gens));
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["group"] = r.group_name;
  d["order"] = r.group_order;
  d["formation"] = r.formation;
  d["check"] = r.check;
  d["status"] = std::string(to_string(r.status));
  if (r.status == VerifyStatus::kVerified || r.status == VerifyStatus::kCounterexample) {
    d["s1"] = r.statements.s1;
    d["s2"] = r.statements.s2;
    d["s3"] = r.statements.s3;
  }
  if (!r.detail.empty()) d["detail"] = r.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Formation-theoretic subgroup analysis for finite permutation groups";

  py::register_exception<InputError>(m, "InputError");
  py::register_exception<ResourceError>(m, "ResourceError");
  py::register_exception<ConstructionError>(m, "ConstructionError");

  py::class_<Permutation>(m, "Permutation")
      .def_static(
          "from_cycles",
          [](const std::string& text, unsigned degree) {
            return Permutation::parse_cycles(text, degree);
          },
          py::arg("cycles"), py::arg("degree"))
      .def_property_readonly("degree", &Permutation::degree)
      .def("order", &Permutation::order)
      .def("inverse", &Permutation::inverse)
      .def("__mul__", &Permutation::operator*)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__call__", [](const Permutation& p, Point x) { return p.apply(x); })
      .def("__repr__", [](const Permutation& p) { return p.to_cycles(); });

  py::class_<Group>(m, "Group")
      .def_property_readonly("degree", &Group::degree)
      .def_property_readonly("order", &Group::order)
      .def_property_readonly("generators",
                             [](const Group& g) { return gen_strings(g.generators()); })
      .def("contains",
           [](const Group& g, const std::string& cycles) {
             return g.contains(Permutation::parse_cycles(cycles, g.degree()));
           })
      .def("same_group_as", &Group::same_group_as)
      .def("__repr__", [](const Group& g) {
        return "<Group degree " + std::to_string(g.degree()) + " order " +
               std::to_string(g.order()) + ">";
      });

  py::class_<Subgroup>(m, "Subgroup")
      .def_property_readonly("order", &Subgroup::order)
      .def_property_readonly("generators",
                             [](const Subgroup& s) { return gen_strings(s.generators()); })
      .def_property_readonly("parent", &Subgroup::parent)
      .def("as_group", &Subgroup::group)
      .def("contains",
           [](const Subgroup& s, const std::string& cycles) {
             return s.contains(Permutation::parse_cycles(cycles, s.degree()));
           })
      .def("same_subgroup_as", &Subgroup::same_subgroup_as)
      .def("__repr__", [](const Subgroup& s) {
        return "<Subgroup order " + std::to_string(s.order()) + ">";
      });

  py::class_<Formation>(m, "Formation")
      .def_property_readonly("name", &Formation::name)
      .def_property_readonly("flags",
                             [](const Formation& f) {
                               py::dict d;
                               d["subgroup_closed"] = f.flags().subgroup_closed;
                               d["saturated"] = f.flags().saturated;
                               d["superradical"] = f.flags().superradical;
                               d["contains_nilpotent"] = f.flags().contains_nilpotent;
                               return d;
                             })
      .def("__repr__", [](const Formation& f) { return "<Formation " + f.name() + ">"; });

  m.def("group", &group_from_cycles, py::arg("degree"), py::arg("generators"),
        "Group from 0-based cycle-notation generators");
  m.def("subgroup", [](const Group& g, const std::vector<std::string>& cycles) {
    std::vector<Permutation> gens;
    for (const auto& c : cycles) gens.push_back(Permutation::parse_cycles(c, g.degree()));
    return Subgroup(g, std::move(gens));
  });
  m.def("trivial_subgroup", &Subgroup::trivial_in);
  m.def("whole_subgroup", &Subgroup::whole);

  m.def("cyclic", [](unsigned n) { return cyclic_group(n); });
  m.def("elementary_abelian", [](unsigned p, unsigned n) {
    return elementary_abelian_group(p, n);
  });
  m.def("dihedral", [](unsigned n) { return dihedral_group(n); });
  m.def("symmetric", [](unsigned n) { return symmetric_group(n); });
  m.def("alternating", [](unsigned n) { return alternating_group(n); });
  m.def("quaternion", []() { return quaternion_group(); });
  m.def("dicyclic", [](unsigned n) { return dicyclic_group(n); });
  m.def("direct_product",
        [](const std::vector<Group>& factors) { return direct_product(factors); });

  m.def("formation", &Formation::by_name, py::arg("name"),
        "A, N, U, NA, S, or a product such as N*A");
  m.def("belongs", &belongs);
  m.def("residual", &residual);
  m.def("formation_pi", &formation_pi);
  m.def("pi_of_group", &pi_of_group);

  m.def("normalizer", &normalizer);
  m.def("core", &core);
  m.def("derived_subgroup", &derived_subgroup);
  m.def("derived_series_orders", [](const Group& g) {
    std::vector<std::uint64_t> orders;
    for (const auto& s : derived_series(g)) orders.push_back(s.order());
    return orders;
  });
  m.def("quotient", &quotient);
  m.def("fitting_subgroup", &fitting_subgroup);
  m.def("is_soluble", &is_soluble);
  m.def("is_nilpotent", &is_nilpotent_group);

  m.def("subgroup_classes", [](const Group& g) {
    std::vector<py::dict> out;
    LatticeIndex lat = subgroup_lattice(g);
    for (const auto& c : lat.classes()) {
      py::dict d;
      d["order"] = c.order;
      d["class_size"] = c.class_size;
      d["generators"] = gen_strings(c.representative.generators());
      out.push_back(std::move(d));
    }
    return out;
  });
  m.def("maximal_subgroups", &maximal_subgroups);
  m.def("normal_subgroups", &normal_subgroups);
  m.def("sylow_subgroup", &sylow_subgroup);
  m.def("hall_pprime_subgroup", &hall_pprime_subgroup);
  m.def("primary_cyclic_subgroups", &primary_cyclic_subgroups);
  m.def("frattini_subgroup", &frattini_subgroup);

  m.def("is_self_normalizing", &is_self_normalizing);
  m.def("is_f_subnormal", [](const Formation& f, const Group& g, const Subgroup& h) {
    auto r = is_f_subnormal(f, g, h);
    py::object chain = py::none();
    if (r.witness) {
      py::list links;
      for (const auto& link : r.witness->links) links.append(link);
      chain = std::move(links);
    }
    return py::make_tuple(r.value, chain);
  });
  m.def("is_f_abnormal", &is_f_abnormal);
  m.def("carter_subgroups", &carter_subgroups);
  m.def("is_f_projector", &is_f_projector);
  m.def("is_schmidt_group", &is_schmidt_group);
  m.def("is_minimal_non_f", &is_minimal_non_f);

  m.def(
      "verify_theorem",
      [](const Formation& f, const Group& g, const std::string& name) {
        return report_dict(verify_theorem(f, g, name));
      },
      py::arg("formation"), py::arg("group"), py::arg("name") = std::string());
  m.def(
      "verify_corollary",
      [](const Formation& f, const Group& g, const std::string& name) {
        return report_dict(verify_corollary(f, g, name));
      },
      py::arg("formation"), py::arg("group"), py::arg("name") = std::string());
  m.def("verify_lemmas", [](const Formation& f, const Group& g) {
    std::vector<py::dict> out;
    for (const auto& o : verify_lemmas(f, g)) {
      py::dict d;
      d["lemma"] = o.lemma;
      d["applicable"] = o.applicable;
      d["holds"] = o.holds;
      if (!o.detail.empty()) d["detail"] = o.detail;
      out.push_back(std::move(d));
    }
    return out;
  });

  m.def("build_example_864", []() {
    auto ex = build_example_864();
    py::dict d;
    d["group"] = ex.group;
    d["chosen"] = ex.chosen;
    d["passing"] = ex.passing;
    return d;
  });
  m.def("builtin_corpus", [](std::uint64_t order_max) {
    std::vector<py::tuple> out;
    for (const auto& g : full_corpus())
      if (order_max == 0 || g.group.order() <= order_max)
        out.push_back(py::make_tuple(g.name, g.group));
    return out;
  }, py::arg("order_max") = 0);
  m.def("isomorphic", &isomorphic);

  m.def("load_group_file", [](const std::string& path) {
    auto [spec, group] = parse_group_file(path);
    return py::make_tuple(spec.name, group);
  });

#ifdef VERSION_INFO
#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
