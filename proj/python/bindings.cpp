#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "groupent/cli.hpp"
#include "groupent/detection.hpp"
#include "groupent/error.hpp"
#include "groupent/io.hpp"

namespace py = pybind11;
using namespace groupent;

namespace {

// pybind11 holders are non-const; tables are never mutated after construction.
using Handle = std::shared_ptr<IrrepTable>;

Handle handle(const TablePtr& t) { return std::const_pointer_cast<IrrepTable>(t); }

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

GroupFunction as_function(const TablePtr& t, const Vector& values) { return GroupFunction(t, values); }

MapPtr map_from(const py::object& spec, const TablePtr& g) {
  const std::string s = py::str(spec);
  if (s == "theta" || s == "inversion") return make_inversion(g);
  if (py::isinstance<py::dict>(spec)) {
    const std::string text = py::str(py::module_::import("json").attr("dumps")(spec));
    return parse_map(parse_json_text(text, "map"), g);
  }
  return parse_map(read_json_file(s), g);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Harmonic analysis and entanglement detection on finite groups";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<DomainMismatch>(m, "DomainMismatch", PyExc_ValueError);
  py::register_exception<ShapeMismatch>(m, "ShapeMismatch", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<IrrepTable, Handle>(m, "Group")
      .def(py::init([](const std::string& spec) { return handle(resolve_group(spec)); }), py::arg("spec"))
      .def_property_readonly("name", &IrrepTable::name)
      .def_property_readonly("order", &IrrepTable::order)
      .def_property_readonly("irrep_labels",
                             [](const IrrepTable& t) {
                               std::vector<std::string> out;
                               for (const auto& ir : t.irreps()) out.push_back(ir.label);
                               return out;
                             })
      .def_property_readonly("irrep_dims",
                             [](const IrrepTable& t) {
                               std::vector<int> out;
                               for (const auto& ir : t.irreps()) out.push_back(ir.dim);
                               return out;
                             })
      .def("verify", [](const IrrepTable& t, double tol) { return to_python(to_json(verify_irrep_table(t, tol))); },
           py::arg("tol") = kDefaultTolerance)
      .def("to_json", [](const IrrepTable& t) { return to_python(group_to_json(t)); })
      .def("__repr__", [](const IrrepTable& t) { return "<Group " + t.name() + " of order " + std::to_string(t.order()) + ">"; });

  m.def("bundled_groups", &bundled_group_names);
  m.def("product", [](const Handle& a, const Handle& b) { return handle(product_group(a, b)); });

  m.def(
      "fourier",
      [](const Handle& g, const Vector& values) {
        const FourierBlocks b = fourier_forward(as_function(g, values));
        py::dict out;
        for (int a = 0; a < g->size(); ++a) out[py::str(g->irrep(a).label)] = b.blocks[a];
        return out;
      },
      py::arg("group"), py::arg("values"));
  m.def(
      "inverse_fourier",
      [](const Handle& g, const std::map<std::string, Matrix>& blocks) {
        FourierBlocks b;
        b.domain = g;
        for (int a = 0; a < g->size(); ++a) b.blocks.push_back(Matrix::Zero(g->irrep(a).dim, g->irrep(a).dim));
        for (const auto& [label, mat] : blocks) b.blocks[g->find_irrep(label)] = mat;
        return Vector(fourier_inverse(b).values);
      },
      py::arg("group"), py::arg("blocks"));
  m.def(
      "is_positive_definite",
      [](const Handle& g, const Vector& values, double tol, const std::string& oracle) {
        const GroupFunction f = as_function(g, values);
        return to_python(to_json(oracle == "gram" ? pd_oracle_gram(f, tol) : is_positive_definite(f, tol)));
      },
      py::arg("group"), py::arg("values"), py::arg("tol") = kDefaultTolerance, py::arg("oracle") = "blocks");
  m.def(
      "characteristic_function",
      [](const Handle& g, const Matrix& rho, const std::string& block) {
        return Vector(characteristic_function(rho, g, g->find_irrep(block)).values);
      },
      py::arg("group"), py::arg("rho"), py::arg("block"));
  m.def(
      "gns",
      [](const Handle& g, const Vector& values, double tol) {
        const GNSData d = gns_construct(as_function(g, values), tol);
        py::dict out;
        out["dimension"] = d.dimension;
        out["cyclic_vector"] = Vector(d.cyclic_vector);
        out["representation"] = d.representation;
        return out;
      },
      py::arg("group"), py::arg("values"), py::arg("tol") = kDefaultTolerance);
  m.def(
      "check_ppt",
      [](const Handle& g, const Vector& values, double tol) {
        return to_python(to_json(check_ppt(as_function(g, values), tol)));
      },
      py::arg("group"), py::arg("values"), py::arg("tol") = kDefaultTolerance);
  m.def(
      "check_separability",
      [](const Handle& g, const Vector& values, double tol) {
        return to_python(to_json(check_separability(as_function(g, values), tol)));
      },
      py::arg("group"), py::arg("values"), py::arg("tol") = kDefaultTolerance);
  m.def(
      "classify_map",
      [](const py::object& spec, const Handle& g, int samples, std::uint64_t seed, double tol) {
        SamplingBudget budget;
        budget.samples = samples;
        budget.seed = seed;
        return to_python(to_json(classify_map(*map_from(spec, g), budget, tol)));
      },
      py::arg("map"), py::arg("group"), py::arg("samples") = SamplingBudget{}.samples, py::arg("seed") = 0,
      py::arg("tol") = kDefaultTolerance);
  m.def(
      "apply_map",
      [](const py::object& spec, const Handle& g, const Vector& values) {
        const GroupFunction f = as_function(g, values);
        const ProductFactors* pf = g->factors();
        const MapPtr map = map_from(spec, pf ? pf->right : g);
        const GroupFunction out = map->source->same_as(*g) ? apply_map(*map, f) : apply_extended(*map, f);
        return Vector(out.values);
      },
      py::arg("map"), py::arg("group"), py::arg("values"));
  m.def(
      "separable_sample",
      [](const Handle& g, int k, std::uint64_t seed) { return Vector(make_separable_sample(g, k, seed).values); },
      py::arg("group"), py::arg("k"), py::arg("seed") = 0);
  m.def("bell_state", &bell_state);
  m.def("werner_state", &werner_state, py::arg("p"));
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = groupent::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run one CLI command; returns (exit code, stdout, stderr).");
}
