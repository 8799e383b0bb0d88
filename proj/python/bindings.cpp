#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hdepth/errors.hpp"
#include "hdepth/json_io.hpp"
#include "hdepth/module_spec.hpp"
#include "hdepth/partition.hpp"
#include "hdepth/stanley.hpp"
#include "hdepth/transport.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace hdepth {
namespace {

// Results cross the boundary as JSON text; the Python wrapper decodes them.
std::string dump(const json& j) { return j.dump(); }

std::string hdepth_report(const std::string& spec_text) {
  auto spec = parse_spec(spec_text);
  auto g = determine_g(spec);
  auto table = hilbert_table(spec, g);
  HdepthResult res;
  {
    py::gil_scoped_release release;
    res = hdepth(table);
  }
  return dump({{"g", to_json(g)},
               {"table", to_json(table)},
               {"depth", res.depth},
               {"witness", to_json(res.witness)},
               {"components", to_json(induced_decomposition(res.witness))}});
}

std::string stdepth_report(const std::string& spec_text) {
  auto spec = parse_spec(spec_text);
  auto g = determine_g(spec);
  StdepthResult res;
  {
    py::gil_scoped_release release;
    res = stdepth(spec);
  }
  return dump({{"g", to_json(g)},
               {"depth", res.depth},
               {"method", res.used_dim1 ? "dim1" : "general"},
               {"partition", to_json(res.partition)},
               {"witness", to_json(res.witness, spec)}});
}

std::string table_report(const std::string& spec_text) {
  auto spec = parse_spec(spec_text);
  auto g = determine_g(spec);
  auto table = hilbert_table(spec, g);
  return dump({{"g", to_json(g)}, {"table", to_json(table)}, {"polynomial", table.to_polynomial(spec.var_names)}});
}

py::int_ count(const std::string& spec_text, int min_depth) {
  auto spec = parse_spec(spec_text);
  auto table = hilbert_table(spec, determine_g(spec));
  // Arbitrary precision: go through the decimal string.
  return py::int_(py::str(count_partitions(table, min_depth).str()));
}

std::string partitions(const std::string& spec_text, int min_depth, std::size_t limit) {
  auto spec = parse_spec(spec_text);
  auto table = hilbert_table(spec, determine_g(spec));
  json out = json::array();
  for (const auto& p : enumerate_partitions(table, min_depth, limit)) out.push_back(to_json(p));
  return dump(out);
}

std::string decompose(const std::string& spec_text, const std::string& partition_text) {
  auto spec = parse_spec(spec_text);
  auto p = partition_from_json(json::parse(partition_text));
  validate_partition(p, hilbert_table(spec, p.g));
  return dump({{"depth", depth_of_partition(p)}, {"components", to_json(induced_decomposition(p))}});
}

py::tuple check(const std::string& spec_text, const std::string& candidate_text) {
  auto spec = parse_spec(spec_text);
  auto verdict = check_stanley_candidate(spec, candidate_from_json(json::parse(candidate_text)), determine_g(spec));
  return py::make_tuple(verdict.passed, verdict.failure);
}

int table_hdepth(const std::vector<int>& g, const std::vector<std::uint64_t>& values) {
  return hdepth(HilbertTable(DegreeVector(g), values)).depth;
}

}  // namespace
}  // namespace hdepth

PYBIND11_MODULE(_core, m) {
  using namespace hdepth;
  m.doc() = "Hilbert depth and Stanley depth of multigraded modules";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_ValueError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("hdepth", &hdepth_report, py::arg("spec"));
  m.def("stdepth", &stdepth_report, py::arg("spec"));
  m.def("hilbert_table", &table_report, py::arg("spec"));
  m.def("count_partitions", &count, py::arg("spec"), py::arg("min_depth"));
  m.def("partitions", &partitions, py::arg("spec"), py::arg("min_depth"), py::arg("limit") = 1000);
  m.def("decompose", &decompose, py::arg("spec"), py::arg("partition"));
  m.def("check_candidate", &check, py::arg("spec"), py::arg("candidate"));
  m.def("table_hdepth", &table_hdepth, py::arg("g"), py::arg("values"));
  m.def("extend_scalars", [](const std::string& s, std::size_t k) { return spec_to_json(extend_scalars(parse_spec(s), k)); },
        py::arg("spec"), py::arg("m"));
  m.def("specialize", [](const std::string& s, std::size_t keep) { return spec_to_json(specialize_ideal_spec(parse_spec(s), keep)); },
        py::arg("spec"), py::arg("keep"));
}
