// Python bindings: a thin wrapper over the JSON job runner. All parsing,
// validation and result formatting happens in C++; Python sees one call.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "rcurves/jobs.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact splitting types of pulled-back tangent bundles on rational curves";
  m.def(
      "run_jobs",
      [](const std::string& text, std::optional<std::string> field,
         std::optional<std::uint64_t> seed, int parallel) {
        rcurves::jobs::RunOptions opts;
        opts.field = std::move(field);
        opts.seed = seed;
        opts.parallel = parallel;
        rcurves::jobs::RunResult r;
        {
          py::gil_scoped_release release;
          r = rcurves::jobs::run_jobs_text(text, opts);
        }
        return py::make_tuple(r.exit_code, r.output);
      },
      py::arg("text"), py::arg("field") = std::nullopt, py::arg("seed") = std::nullopt,
      py::arg("parallel") = 1,
      "Run one job document or a batch; returns (exit_code, output_json_line).");
}
