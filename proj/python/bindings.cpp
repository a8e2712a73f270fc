#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "precrossed/commands.hpp"
#include "precrossed/oracles.hpp"

namespace py = pybind11;
using namespace precrossed;

namespace {

py::int_ to_py(const Integer& v) { return py::int_(py::str(v.get_str())); }

py::dict group_dict(const HomologyGroup& h) {
  py::dict d;
  d["degree"] = h.degree;
  d["coeff"] = h.coeff.name();
  d["betti"] = h.betti;
  py::list torsion;
  for (const auto& t : h.torsion) torsion.append(to_py(t));
  d["torsion"] = torsion;
  d["text"] = h.render();
  return d;
}

MatrixCaps caps_of(std::size_t cap) {
  MatrixCaps caps;
  caps.simplices = cap;
  return caps;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pre-crossed module homology, rack homology and group homology";

  static py::exception<Error> error(m, "PrecrossedError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Registry>(m, "Registry")
      .def("names", &Registry::names)
      .def("kind", [](const Registry& r, const std::string& name) { return std::string(kind_name(r.at(name))); })
      .def("__contains__", &Registry::contains)
      .def("__len__", [](const Registry& r) { return r.names().size(); })
      .def("serialize", [](const Registry& r) { return serialize(r); });

  m.def("parse_registry", [](const std::string& text) { return parse_registry(text); }, py::arg("text"));
  m.def("parse_input", [](const std::string& path) { return parse_input(path); }, py::arg("path"));

  py::class_<Report>(m, "Report")
      .def_readonly("command", &Report::command)
      .def_readonly("lines", &Report::lines)
      .def_readonly("warnings", &Report::warnings)
      .def_readonly("checks", &Report::checks)
      .def_readonly("seconds", &Report::seconds)
      .def_property_readonly("verdict", [](const Report& r) { return std::string(to_string(r.verdict)); })
      .def_property_readonly("exit_code", &Report::exit_code)
      .def_property_readonly("tables",
                             [](const Report& r) {
                               py::dict d;
                               for (const auto& [tag, groups] : r.tables) {
                                 py::list l;
                                 for (const auto& h : groups) l.append(group_dict(h));
                                 d[py::str(tag)] = l;
                               }
                               return d;
                             })
      .def("render", &Report::render, py::arg("machine_only") = false)
      .def("__str__", [](const Report& r) { return r.render(); });

  const auto cap = py::arg("cap") = kDefaultSimplexCap;
  m.def(
      "validate", [](const Registry& reg) { return cmd_validate(reg, "<registry>"); }, py::arg("registry"));
  m.def(
      "homology",
      [](const Registry& reg, const std::string& object, const std::string& pipeline, int max_degree, int max_length,
         const std::string& coeff, std::size_t c) {
        return cmd_homology(reg, "<registry>", object, parse_pipeline(pipeline), max_degree, max_length,
                            Coefficients::parse(coeff), caps_of(c));
      },
      py::arg("registry"), py::arg("object"), py::arg("pipeline"), py::arg("max_degree"), py::arg("max_length"),
      py::arg("coeff") = "Z", cap);
  m.def(
      "compare_ra",
      [](const Registry& reg, const std::string& object, int max_degree, int max_length, std::size_t c) {
        return cmd_compare_ra(reg, "<registry>", object, max_degree, max_length, caps_of(c));
      },
      py::arg("registry"), py::arg("object"), py::arg("max_degree"), py::arg("max_length"), cap);
  m.def(
      "check_tri",
      [](const Registry& reg, const std::string& object, int max_degree, const std::string& coeff,
         const std::vector<int>& lengths, std::size_t c) {
        return cmd_check_tri(reg, "<registry>", object, max_degree, Coefficients::parse(coeff), lengths, caps_of(c));
      },
      py::arg("registry"), py::arg("object"), py::arg("max_degree"), py::arg("coeff"), py::arg("lengths"), cap);
  m.def(
      "check_coskeleton",
      [](const Registry& reg, const std::string& object, int max_degree, std::size_t c) {
        return cmd_check_coskeleton(reg, "<registry>", object, max_degree, caps_of(c));
      },
      py::arg("registry"), py::arg("object"), py::arg("max_degree"), cap);
  m.def(
      "sweep",
      [](const Registry& reg, const std::string& object, const std::string& pipeline, int degree,
         const std::vector<int>& lengths, const std::string& coeff, std::size_t c) {
        return cmd_sweep(reg, "<registry>", object, parse_pipeline(pipeline), degree, lengths,
                         Coefficients::parse(coeff), caps_of(c));
      },
      py::arg("registry"), py::arg("object"), py::arg("pipeline"), py::arg("degree"), py::arg("lengths"),
      py::arg("coeff") = "Z", cap);

  m.def(
      "smith_diagonal",
      [](const std::vector<std::vector<long long>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows[0].size();
        SparseIntMatrix s(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (rows[r].size() != cols) throw Error(ErrorKind::DegreeMismatch, "ragged matrix");
          for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c] != 0) s.add(r, c, Integer(static_cast<long>(rows[r][c])));
          }
        }
        py::list out;
        for (const auto& d : smith_normal_form(s).diagonal) out.append(to_py(d));
        return out;
      },
      py::arg("matrix"));
  m.def("tensor_algebra_dims", &tensor_algebra_dims, py::arg("generators"), py::arg("degree"));
}
