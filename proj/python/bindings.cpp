#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "gridkrige/core.hpp"
#include "gridkrige/correlogram.hpp"
#include "gridkrige/io.hpp"
#include "gridkrige/kriging.hpp"
#include "gridkrige/linalg.hpp"
#include "gridkrige/search.hpp"

namespace py = pybind11;
using namespace gridkrige;

namespace {

SampleSet samples_from_python(const std::vector<std::tuple<double, double, double>>& rows) {
  std::vector<SamplePoint> points;
  points.reserve(rows.size());
  for (const auto& [e, n, v] : rows) points.push_back({e, n, v});
  return validate_samples(std::move(points));
}

GridSpec grid_from_python(std::tuple<double, double, double> east,
                          std::tuple<double, double, double> north) {
  return GridSpec({std::get<0>(east), std::get<1>(east), std::get<2>(east)},
                  {std::get<0>(north), std::get<1>(north), std::get<2>(north)});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Kriging estimation by grid search on |w'r + mu|";

  py::register_exception<Error>(m, "GridKrigeError", PyExc_ValueError);

  py::class_<Location>(m, "Location")
      .def(py::init<double, double>(), py::arg("east"), py::arg("north"))
      .def_readonly("east", &Location::east)
      .def_readonly("north", &Location::north)
      .def("__repr__", [](const Location& l) {
        std::ostringstream os;
        os << "Location(east=" << l.east << ", north=" << l.north << ")";
        return os.str();
      });

  py::class_<SamplePoint>(m, "SamplePoint")
      .def_readonly("east", &SamplePoint::east)
      .def_readonly("north", &SamplePoint::north)
      .def_readonly("value", &SamplePoint::value);

  py::class_<SampleSet>(m, "SampleSet")
      .def(py::init(&samples_from_python), py::arg("points"),
           "Validate a list of (east, north, value) tuples.")
      .def("__len__", &SampleSet::size)
      .def("__getitem__",
           [](const SampleSet& s, std::size_t i) {
             if (i >= s.size()) throw py::index_error();
             return s[i];
           })
      .def("values", &SampleSet::values);

  py::class_<CorrelogramModel>(m, "CorrelogramModel")
      .def(py::init<double, double, double>(), py::arg("sill") = 1.0,
           py::arg("practical_range") = 30.0, py::arg("shape_exponent") = 2.0)
      .def_property_readonly("sill", &CorrelogramModel::sill)
      .def_property_readonly("practical_range", &CorrelogramModel::practical_range)
      .def_property_readonly("shape_exponent", &CorrelogramModel::shape_exponent)
      .def("__call__", [](const CorrelogramModel& model, double h) { return evaluate(model, h); });

  py::class_<EstimateReport>(m, "EstimateReport")
      .def_readonly("node", &EstimateReport::node)
      .def_readonly("mean", &EstimateReport::mean)
      .def_readonly("variance", &EstimateReport::variance)
      .def_readonly("mse", &EstimateReport::mse)
      .def_readonly("mu", &EstimateReport::mu)
      .def_readonly("objective", &EstimateReport::objective)
      .def_readonly("weights", &EstimateReport::weights)
      .def_readonly("negative_variance", &EstimateReport::negative_variance);

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("report", &SearchResult::report)
      .def_readonly("east_index", &SearchResult::east_index)
      .def_readonly("north_index", &SearchResult::north_index)
      .def_readonly("node_index", &SearchResult::node_index)
      .def_readonly("max_unbiasedness_error", &SearchResult::max_unbiasedness_error);

  m.def("builtin_table1", &builtin_table1);
  m.def("read_samples_csv",
        py::overload_cast<const std::filesystem::path&>(&read_samples_csv), py::arg("path"));

  m.def("estimate_at",
        [](const SampleSet& s, const CorrelogramModel& model, double east, double north) {
          return estimate_at(s, model, {east, north});
        },
        py::arg("samples"), py::arg("model"), py::arg("east"), py::arg("north"));
  m.def("estimate_gls", py::overload_cast<const SampleSet&, const CorrelogramModel&>(&estimate_gls),
        py::arg("samples"), py::arg("model"));

  m.def("grid_search",
        [](const SampleSet& s, const CorrelogramModel& model,
           std::tuple<double, double, double> east, std::tuple<double, double, double> north,
           unsigned workers) {
          const GridSpec grid = grid_from_python(east, north);
          py::gil_scoped_release release;
          return grid_search(s, model, grid, {.workers = workers});
        },
        py::arg("samples"), py::arg("model"), py::arg("east") = std::make_tuple(-50.0, 50.0, 0.1),
        py::arg("north") = std::make_tuple(-50.0, 50.0, 0.1), py::arg("workers") = 0u,
        "Exhaustive search over (min, max, step) axes for the node minimizing |w'r + mu|.");

  m.def("objective_surface",
        [](const SampleSet& s, const CorrelogramModel& model,
           std::tuple<double, double, double> east, std::tuple<double, double, double> north,
           unsigned workers) {
          const GridSpec grid = grid_from_python(east, north);
          std::vector<SurfacePoint> surface;
          {
            py::gil_scoped_release release;
            surface = objective_surface(s, model, grid, {.workers = workers});
          }
          std::vector<std::tuple<double, double, double, double>> out;
          out.reserve(surface.size());
          for (const auto& p : surface) out.emplace_back(p.east, p.north, p.objective, p.mean);
          return out;
        },
        py::arg("samples"), py::arg("model"), py::arg("east"), py::arg("north"),
        py::arg("workers") = 0u,
        "List of (east, north, objective, mean), north outer, east inner.");

  m.def("write_report",
        [](const EstimateReport& report, const CorrelogramModel& model, std::size_t samples,
           bool weights) {
          return write_report({report, {"python", model, std::nullopt, samples, std::nullopt}},
                              weights);
        },
        py::arg("report"), py::arg("model"), py::arg("sample_count"), py::arg("weights") = false);
}
