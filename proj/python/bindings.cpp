#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "quandlekit/catalog.hpp"
#include "quandlekit/cli.hpp"
#include "quandlekit/construct.hpp"
#include "quandlekit/enumerate.hpp"
#include "quandlekit/errors.hpp"
#include "quandlekit/oracle.hpp"
#include "quandlekit/quandle.hpp"
#include "quandlekit/quandle_file.hpp"
#include "quandlekit/report.hpp"

namespace py = pybind11;
using namespace quandlekit;

namespace {

// Group orders can exceed 64 bits; hand them over as Python ints.
py::int_ to_int(Order const& n) {
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(n.str().c_str(), nullptr, 10)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Permutation groups and finite quandles";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error);
  py::register_exception<AxiomViolation>(m, "AxiomViolation", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<VerificationError>(m, "VerificationError", error);
  py::register_exception<BoundExceeded>(m, "BoundExceeded", error);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::size_t>(), py::arg("degree"))
      .def_static("from_images", &Permutation::from_images)
      .def_static("from_cycles", &Permutation::from_cycles, py::arg("degree"),
                  py::arg("text"))
      .def_property_readonly("degree", &Permutation::degree)
      .def("__call__", &Permutation::operator())
      .def("images", &Permutation::images)
      .def("cycles", &Permutation::to_cycles)
      .def("cycle_type", &Permutation::cycle_type)
      .def("order", &Permutation::order)
      .def("is_identity", &Permutation::is_identity)
      .def("inverse", [](Permutation const& p) { return inverse(p); })
      .def("__mul__", [](Permutation const& p, Permutation const& q) { return compose(p, q); })
      .def("__pow__", [](Permutation const& p, std::int64_t k) { return power(p, k); })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](Permutation const& p) { return hash_value(p); })
      .def("__repr__", [](Permutation const& p) { return "Permutation('" + p.to_cycles() + "')"; })
      .def("__str__", &Permutation::to_cycles);
  m.def("conjugate", &conjugate, "b⁻¹ a b with products read left to right");
  m.def("commutator", &commutator);

  py::class_<PermGroup>(m, "PermGroup")
      .def(py::init<std::vector<Permutation>>(), py::arg("generators"))
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("generators", &PermGroup::generators)
      .def("order", [](PermGroup const& G) { return to_int(G.order()); })
      .def("contains", &PermGroup::contains)
      .def("__contains__", &PermGroup::contains)
      .def("elements", &PermGroup::elements, py::arg("bound") = default_enumeration_bound)
      .def("base", &PermGroup::base)
      .def(py::self == py::self);
  m.def("orbits", py::overload_cast<PermGroup const&>(&orbits));
  m.def("stabilizer", &stabilizer);
  m.def("normal_closure", &normal_closure);
  m.def("derived_subgroup", &derived_subgroup);
  m.def("center", &center, py::arg("group"), py::arg("bound") = default_enumeration_bound);
  m.def("is_transitive", &is_transitive);
  m.def("is_primitive", &is_primitive);
  m.def("is_quasiprimitive", &is_quasiprimitive);
  m.def("block_systems", [](PermGroup const& G) {
    std::vector<std::vector<std::vector<Point>>> out;
    for (auto const& b : block_systems(G)) {
      out.push_back(b.classes());
    }
    return out;
  });
  m.def("minimal_block_system", [](PermGroup const& G, Point a, Point b) {
    return minimal_block_system(G, a, b).classes();
  });

  py::class_<Quandle>(m, "Quandle")
      .def_static("from_table", &Quandle::from_table, py::arg("rows"))
      .def_property_readonly("order", &Quandle::order)
      .def("__call__", &Quandle::operator(), py::arg("x"), py::arg("y"))
      .def("left_divide", &Quandle::left_divide)
      .def("rows", &Quandle::rows)
      .def("right_translation", &Quandle::right_translation)
      .def(py::self == py::self)
      .def("__repr__",
           [](Quandle const& q) { return "<Quandle of order " + std::to_string(q.order()) + ">"; });
  m.def("trivial_quandle", &trivial_quandle);
  m.def("dihedral_quandle", &dihedral_quandle);
  m.def("relabel", &relabel);
  m.def("inner_group", &inner_group);
  m.def("displacement_group", &displacement_group);
  m.def("is_connected", &is_connected);
  m.def("is_faithful", &is_faithful);
  m.def("is_latin", &is_latin);
  m.def("is_simple", &is_simple);
  m.def("is_primitive_quandle", &is_primitive_quandle);
  m.def("is_quasiprimitive_quandle", &is_quasiprimitive_quandle);
  m.def("are_isomorphic", &are_isomorphic);
  m.def("brute_force_enumerate", &brute_force_enumerate, py::arg("n"),
        py::arg("max_order") = brute_force_max_order);
  m.def("parse_quandle_file", &parse_quandle_file);
  m.def("write_quandle_file", &write_quandle_file);
  m.def("load_quandle", &load_quandle);
  m.def("save_quandle", &save_quandle);

  py::class_<Envelope>(m, "Envelope")
      .def_readonly("group", &Envelope::group)
      .def_readonly("base_point", &Envelope::base_point)
      .def_readonly("rho", &Envelope::rho)
      .def_readonly("class_generates", &Envelope::class_generates);
  m.def("make_envelope", &make_envelope, py::arg("group"), py::arg("base_point"),
        py::arg("rho"));
  m.def("pq", py::overload_cast<Envelope const&>(&pq));
  m.def("pe", &pe, py::arg("quandle"), py::arg("base_point"));
  m.def("coset_quandle", &coset_quandle, py::arg("envelope"),
        py::arg("bound") = default_enumeration_bound);
  m.def(
      "conj_quandle",
      [](PermGroup const& G, Permutation const& g, std::uint64_t bound) {
        auto cq = conj_quandle(G, g, bound);
        return py::make_tuple(cq.quandle, cq.elements);
      },
      py::arg("group"), py::arg("element"), py::arg("bound") = default_enumeration_bound,
      "Returns (quandle, class elements); point i + 1 is elements[i].");
  m.def("affine_quandle", &affine_quandle, py::arg("p"), py::arg("k"), py::arg("psi"));
  m.def("is_irreducible", &is_irreducible, py::arg("p"), py::arg("k"), py::arg("psi"));
  m.def("xi_set", &xi_set, py::arg("group"), py::arg("base_point"),
        py::arg("bound") = default_enumeration_bound);
  m.def("check_inner_conditions", &check_inner_conditions, py::arg("group"),
        py::arg("bound") = default_enumeration_bound);

  py::class_<CatalogRecord>(m, "CatalogRecord")
      .def_readonly("label", &CatalogRecord::label)
      .def_readonly("degree", &CatalogRecord::degree)
      .def_readonly("generators", &CatalogRecord::generators)
      .def_readonly("flags", &CatalogRecord::flags)
      .def_readonly("provenance", &CatalogRecord::provenance)
      .def("group", &CatalogRecord::group)
      .def("__repr__", [](CatalogRecord const& r) { return "<CatalogRecord " + r.label + ">"; });
  m.def("parse_catalog", &parse_catalog);
  m.def("write_catalog", &write_catalog);
  m.def("load_catalog", &load_catalog);
  m.def("catalog_digest", &catalog_digest);
  m.def("verify_record", &verify_record);

  py::class_<EnumerationEntry>(m, "EnumerationEntry")
      .def_readonly("quandle", &EnumerationEntry::quandle)
      .def_readonly("group_label", &EnumerationEntry::group_label)
      .def_readonly("rho", &EnumerationEntry::rho)
      .def_property_readonly("inner_order",
                             [](EnumerationEntry const& e) { return to_int(e.inner_order); })
      .def_property_readonly(
          "displacement_order",
          [](EnumerationEntry const& e) { return to_int(e.displacement_order); })
      .def_readonly("simple", &EnumerationEntry::simple)
      .def_readonly("primitive", &EnumerationEntry::primitive)
      .def_readonly("quasiprimitive", &EnumerationEntry::quasiprimitive)
      .def_readonly("affine", &EnumerationEntry::affine);
  py::class_<EnumerationResult>(m, "EnumerationResult")
      .def_readonly("degree", &EnumerationResult::degree)
      .def_readonly("catalog_digest", &EnumerationResult::catalog_digest)
      .def_readonly("entries", &EnumerationResult::entries)
      .def_readonly("raw", &EnumerationResult::raw)
      .def_readonly("filtered", &EnumerationResult::filtered)
      .def_readonly("affine_omitted", &EnumerationResult::affine_omitted)
      .def_readonly("unfaithful", &EnumerationResult::unfaithful)
      .def_readonly("cross_check_failures", &EnumerationResult::cross_check_failures)
      .def("report", [](EnumerationResult const& r) { return report(r); });
  m.def(
      "enumerate_degree",
      [](std::size_t n, std::vector<CatalogRecord> const& catalog, std::string const& mode,
         bool non_affine_only, unsigned jobs, bool verify_flags, std::uint64_t bound) {
        EnumerationOptions opts;
        opts.non_affine_only = non_affine_only;
        opts.jobs = jobs;
        opts.verify_flags = verify_flags;
        opts.bound = bound;
        py::gil_scoped_release release;
        return enumerate_degree(n, catalog, parse_mode(mode), opts);
      },
      py::arg("degree"), py::arg("catalog"), py::arg("mode") = "primitive",
      py::arg("non_affine_only") = false, py::arg("jobs") = 1u,
      py::arg("verify_flags") = true, py::arg("bound") = default_enumeration_bound);

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "quandlekit");
        std::vector<char const*> argv;
        for (auto const& a : args) {
          argv.push_back(a.c_str());
        }
        std::ostringstream out, err;
        int const code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool; returns (exit code, stdout, stderr).");
}
