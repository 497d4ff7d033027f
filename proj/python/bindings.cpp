#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "suff/commands.hpp"
#include "suff/enumerate.hpp"
#include "suff/relation.hpp"

namespace py = pybind11;

namespace {

using Outcome = std::pair<int, std::string>;

Outcome run(std::string_view command, suff::RunConfig config) {
  suff::CommandResult result;
  {
    py::gil_scoped_release release;
    result = suff::run_command(command, config);
  }
  return {result.exit_code, result.report.dump()};
}

suff::RunConfig domain_config(std::string space, std::size_t agents, unsigned workers) {
  suff::RunConfig config;
  config.space = std::move(space);
  config.agents = agents;
  config.workers = workers;
  return config;
}

int compare(const std::vector<std::string>& u, const std::vector<std::string>& v) {
  auto parse = [](const std::vector<std::string>& text) {
    std::vector<suff::Rational> out;
    for (const auto& t : text) out.push_back(suff::parse_rational(t));
    return out;
  };
  return static_cast<int>(suff::leximin_compare(parse(u), parse(v)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exhaustive axiom checks for sufficientarian ranking rules";

  m.def("fixture_names", &suff::fixture_names);
  m.def("reproduce_targets", &suff::reproduce_targets);
  m.def("ordered_bell", &suff::ordered_bell, py::arg("k"));
  m.def("leximin_compare", &compare, py::arg("u"), py::arg("v"),
        "Compare two vectors of rationals (as strings) by leximin: -1, 0 or 1.");

  m.def(
      "check",
      [](std::string space, std::size_t agents, std::string rule, std::string axioms) {
        auto config = domain_config(std::move(space), agents, 1);
        config.rule = std::move(rule);
        config.axioms = std::move(axioms);
        return run("check", std::move(config));
      },
      py::arg("space"), py::arg("agents"), py::arg("rule"), py::arg("axioms") = "all");

  m.def(
      "derive",
      [](std::string space, std::size_t agents, std::string rule) {
        auto config = domain_config(std::move(space), agents, 1);
        config.rule = std::move(rule);
        return run("derive", std::move(config));
      },
      py::arg("space"), py::arg("agents"), py::arg("rule"));

  m.def(
      "enumerate",
      [](std::string space, std::size_t agents, const std::string& mode, unsigned workers) {
        auto config = domain_config(std::move(space), agents, workers);
        config.mode = suff::enumeration_mode_from_string(mode);
        return run("enumerate", std::move(config));
      },
      py::arg("space"), py::arg("agents"), py::arg("mode") = "quotient", py::arg("workers") = 1);

  m.def(
      "search",
      [](std::string space, std::size_t agents, std::string satisfy, std::string violate, const std::string& mode,
         unsigned workers) {
        auto config = domain_config(std::move(space), agents, workers);
        config.satisfy = std::move(satisfy);
        config.violate = std::move(violate);
        config.mode = suff::enumeration_mode_from_string(mode);
        return run("search", std::move(config));
      },
      py::arg("space"), py::arg("agents"), py::arg("satisfy"), py::arg("violate") = "",
      py::arg("mode") = "quotient", py::arg("workers") = 1);

  m.def(
      "reproduce",
      [](std::string target, unsigned workers) {
        suff::RunConfig config;
        config.target = std::move(target);
        config.workers = workers;
        return run("reproduce", std::move(config));
      },
      py::arg("target"), py::arg("workers") = 1);
}
