// Copyright 2026 The finring Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Python extension: a thin layer over finring::run and the ring-spec parser.
// Reports cross the boundary as JSON text; the pure-Python wrapper decodes
// them and turns diagnostics into exceptions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "finring/cli.hpp"
#include "finring/error.hpp"
#include "finring/io.hpp"
#include "finring/parse.hpp"

namespace py = pybind11;

namespace {

py::tuple run_command(const std::string& command, const std::vector<std::string>& rings,
                      const std::vector<std::pair<std::string, std::string>>& settings) {
  finring::RunConfig config;
  std::string out, err;
  int code;
  {
    py::gil_scoped_release release;
    std::ostringstream out_stream, err_stream;
    try {
      config.command = finring::parse_command(command);
      config.rings = rings;
      for (const auto& [key, value] : settings) finring::apply_setting(config, key, value);
      code = finring::run(config, out_stream, err_stream);
    } catch (const std::exception& e) {
      finring::write_diagnostic(err_stream, "argument", e.what());
      code = finring::kExitUsage;
    }
    out = out_stream.str();
    err = err_stream.str();
  }
  return py::make_tuple(code, out, err);
}

}  // namespace

PYBIND11_MODULE(_finring, m) {
  m.doc() = "Incidence operators and Salem numbers over finite rings";

  static py::exception<finring::ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<finring::ArgumentError> argument_error(m, "ArgumentError", PyExc_ValueError);
  static py::exception<finring::ConstructionError> construction_error(m, "ConstructionError",
                                                                      PyExc_RuntimeError);
  static py::exception<finring::ScaleError> scale_error(m, "ScaleError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const finring::ParseError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(parse_error.ptr())(e.what());
      exc.attr("position") = e.position();
      py::set_error(parse_error, exc);
    } catch (const finring::ArgumentError& e) {
      py::set_error(argument_error, e.what());
    } catch (const finring::ConstructionError& e) {
      py::set_error(construction_error, e.what());
    } catch (const finring::ScaleError& e) {
      py::set_error(scale_error, e.what());
    }
  });

  m.def(
      "canonical_spec",
      [](const std::string& text) { return finring::canonical_string(finring::parse_ring_spec(text)); },
      py::arg("text"));
  m.def(
      "display_spec",
      [](const std::string& text) { return finring::display_string(finring::parse_ring_spec(text)); },
      py::arg("text"));
  m.def("run", &run_command, py::arg("command"), py::arg("rings"), py::arg("settings"),
        "Runs one command; returns (exit code, report text, diagnostics text).");
  m.def("family_names", &finring::family_names);
  m.def("suite_names", &finring::suite_names);

  m.attr("EXIT_OK") = finring::kExitOk;
  m.attr("EXIT_CHECK_FAILED") = finring::kExitCheckFailed;
  m.attr("EXIT_USAGE") = finring::kExitUsage;
  m.attr("EXIT_SCALE") = finring::kExitScale;
  m.attr("EXIT_NOT_CONVERGED") = finring::kExitNotConverged;
  m.attr("EXIT_INTERNAL") = finring::kExitInternal;
}
