#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fusionfact/builtins.hpp"
#include "fusionfact/cli.hpp"
#include "fusionfact/cochain.hpp"
#include "fusionfact/constructions.hpp"
#include "fusionfact/factorization.hpp"
#include "fusionfact/fp_data.hpp"
#include "fusionfact/io.hpp"

namespace py = pybind11;
using namespace fusionfact;

namespace {

FusionRing ring_from_json(const std::string& text) {
  return FusionRing::validate(io::parse_ring(io::json::parse(text)));
}

py::dict report_dict(const FactorizationReport& r) {
  py::dict d;
  d["A"] = r.a.support();
  d["C"] = r.c.support();
  d["D"] = r.d_support;
  d["AC"] = r.ac_support;
  d["is_factorization"] = r.is_factorization;
  d["is_exact_dim"] = r.is_exact_dim;
  d["is_exact_unique"] = r.is_exact_unique;
  d["bijection"] = r.bijection;
  d["dims"] = py::make_tuple(r.dims.a, r.dims.c, r.dims.d, r.dims.ac, r.dims.b);
  if (r.counterexample) d["reason"] = std::string(to_string(r.counterexample->reason));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fusion rings, exact factorizations, and group-theoretical data";

  py::register_exception<Error>(m, "FusionError");

  py::class_<FusionRing>(m, "FusionRing")
      .def_static("from_json", &ring_from_json, py::arg("text"))
      .def_property_readonly("rank", &FusionRing::rank)
      .def_property_readonly("labels", &FusionRing::labels)
      .def_property_readonly("duals", &FusionRing::duals)
      .def("mult", &FusionRing::mult, py::arg("i"), py::arg("j"), py::arg("k"))
      .def("product",
           [](const FusionRing& r, std::size_t i, std::size_t j) {
             if (i >= r.rank() || j >= r.rank()) throw Error(ErrorCode::IndexOutOfRange, "basis index out of range");
             std::vector<std::pair<std::size_t, std::uint64_t>> out;
             for (const auto& e : r.product(i, j)) out.emplace_back(e.k, e.mult);
             return out;
           })
      .def("is_commutative", &FusionRing::is_commutative)
      .def("to_json", [](const FusionRing& r) { return io::ring_to_json(r).dump(); })
      .def("__eq__", [](const FusionRing& a, const FusionRing& b) { return a == b; })
      .def("__repr__", [](const FusionRing& r) { return "<FusionRing rank " + std::to_string(r.rank()) + ">"; });

  py::class_<FPData>(m, "FPData")
      .def_readonly("dims", &FPData::dims)
      .def_readonly("ring_dim", &FPData::ring_dim)
      .def_readonly("integral_dims", &FPData::integral_dims)
      .def_readonly("max_residual", &FPData::max_residual);

  m.def("builtin_ring", &builtin_ring, py::arg("name"), py::arg("seed") = 0);
  m.def("fp_data", [](const FusionRing& r, double tol) {
    FpOptions o;
    o.tolerance = tol;
    return fp_data(r, o);
  }, py::arg("ring"), py::arg("tolerance") = 1e-9);
  m.def("deligne_product", &deligne_product);
  m.def("find_isomorphism", &find_isomorphism);
  m.def("subrings", [](const FusionRing& r, std::size_t max_rank) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : enumerate_subrings(r, max_rank)) out.push_back(s.support());
    return out;
  }, py::arg("ring"), py::arg("max_rank") = 16);
  m.def("factorize", [](const FusionRing& r, std::vector<std::size_t> a, std::vector<std::size_t> c) {
    const auto fp = fp_data(r);
    return report_dict(is_exact_factorization(r, fp, FusionSubring::from_support(r, std::move(a)),
                                                 FusionSubring::from_support(r, std::move(c))));
  });
  m.def("exact_factorizations", [](const FusionRing& r, std::size_t max_rank) {
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> out;
    for (const auto& f : enumerate_exact_factorizations(r, fp_data(r), max_rank)) out.emplace_back(f.a.support(), f.c.support());
    return out;
  }, py::arg("ring"), py::arg("max_rank") = 16);

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_static("from_table", [](const std::vector<std::vector<Element>>& t) { return FiniteGroup::from_table(t); })
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("labels", &FiniteGroup::labels)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("is_abelian", &FiniteGroup::is_abelian);

  m.def("builtin_group", &builtin_group, py::arg("name"));
  m.def("subgroups", [](const FiniteGroup& g) {
    std::vector<std::vector<Element>> out;
    for (const auto& s : enumerate_subgroups(g)) out.push_back(s.elements());
    return out;
  });
  m.def("group_exact_factorizations", [](const FiniteGroup& g) {
    std::vector<std::pair<std::vector<Element>, std::vector<Element>>> out;
    for (const auto& f : exact_factorizations(g)) out.emplace_back(f.g1.elements(), f.g2.elements());
    return out;
  });
  m.def("factorization_counts", [](const FiniteGroup& g) {
    const auto c = count_factorizations(g, exact_factorizations(g));
    return py::make_tuple(c.ordered, c.unordered, c.up_to_conjugacy);
  });

  py::class_<Cochain>(m, "Cochain")
      .def_property_readonly("degree", &Cochain::degree)
      .def_property_readonly("group", &Cochain::group)
      .def("value", [](const Cochain& c, const std::vector<Element>& args) { return c.at(args).to_string(); })
      .def("to_json", [](const Cochain& c) { return io::cochain_to_json(c).dump(); });

  m.def("zero_cochain", [](const FiniteGroup& g, std::size_t k) { return Cochain(g, k); });
  m.def("cyclic_3cocycle", &cyclic_3cocycle, py::arg("n"), py::arg("q"));
  m.def("coboundary", &coboundary);
  m.def("is_cocycle", &is_cocycle);
  m.def("restrict", [](const Cochain& c, const std::vector<Element>& l) {
    return restrict_cochain(c, Subgroup::from_elements(c.group(), l));
  });
  m.def("trivialize", [](const Cochain& c) { return trivialize(c).witness; });
  m.def("brute_classes", &brute_classes, py::arg("group"), py::arg("degree"), py::arg("modulus"));

  m.def("vec_ring", &vec_ring);
  m.def("rep_ring", [](const FiniteGroup& g, std::uint64_t seed) { return rep_ring(g, seed); }, py::arg("group"),
        py::arg("seed") = 0);
  m.def("gt_fpdims", [](const FiniteGroup& g, const std::vector<Element>& l) {
    std::vector<std::int64_t> out;
    for (const auto& s : gt_simples(g, Subgroup::from_elements(g, l))) out.push_back(s.fpdim);
    return out;
  });
  m.def("coset_mdims", [](const FiniteGroup& g, const std::vector<Element>& l) {
    return coset_module(g, Subgroup::from_elements(g, l)).mdims();
  });
  m.def("pointed_classify", [](const FiniteGroup& g, const Cochain& omega, const std::vector<Element>& g1,
                               const std::vector<Element>& g2) {
    const auto cert = pointed_classify(g, omega, Subgroup::from_elements(g, g1), Subgroup::from_elements(g, g2));
    py::dict d;
    d["failed_checks"] = cert.failed_checks;
    d["conclusion"] = cert.conclusion;
    return d;
  });

  m.def("run_cli", [](const std::vector<std::string>& args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("stdin") = "");
}
