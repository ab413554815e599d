#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fracosc/analysis.hpp"
#include "fracosc/enfds.hpp"
#include "fracosc/error.hpp"
#include "fracosc/model.hpp"
#include "fracosc/special.hpp"

namespace py = pybind11;
using namespace fracosc;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) {
  py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

// Builds a problem through the JSON loader so Python and file input share validation.
ProblemSpec make_problem(double beta, double gamma_order, double lambda, const std::string& omega,
                         const std::string& forcing, double alpha1, double alpha2, double horizon,
                         const std::optional<std::string>& exact) {
  nlohmann::json doc{{"beta", beta},     {"gamma", gamma_order}, {"lambda", lambda}, {"omega", omega},
                     {"f", forcing},     {"alpha1", alpha1},     {"alpha2", alpha2}, {"T", horizon}};
  if (exact) doc["exact"] = *exact;
  return parse_problem_json(doc.dump(), "python");
}

InitialStep parse_initial_step(const std::string& name) {
  if (name == "taylor") return InitialStep::taylor;
  if (name == "transposed") return InitialStep::transposed;
  throw InvalidArgument("unknown x1 variant '" + name + "'; valid: taylor, transposed");
}

py::dict solve_py(const ProblemSpec& spec, const std::string& method, int n, bool enforce_stability,
                  const std::string& x1) {
  const Method m = parse_method(method);
  const SolveOptions options{enforce_stability, parse_initial_step(x1)};
  std::optional<SolutionSeries> sol;
  {
    py::gil_scoped_release release;
    sol = solve(m, spec.problem, UniformGrid(n, spec.problem.horizon), options);
  }
  py::dict out;
  out["t"] = to_array(sol->grid.nodes());
  out["x"] = to_array(sol->x);
  if (sol->y) out["y"] = to_array(*sol->y);
  return out;
}

py::object opt(const std::optional<double>& v) { return v ? py::cast(*v) : py::none(); }

py::dict converge_py(const ProblemSpec& spec, const std::vector<std::string>& methods, const std::vector<int>& n_list,
                     const std::string& rule, int jobs, bool enforce_stability, const std::string& x1) {
  std::vector<Method> ms;
  for (const auto& name : methods) ms.push_back(parse_method(name));
  LadderOptions options;
  options.jobs = jobs;
  options.solve = {enforce_stability, parse_initial_step(x1)};
  const ErrorRule r = parse_rule(rule);
  std::vector<ConvergenceReport> reports;
  {
    py::gil_scoped_release release;
    reports = convergence_ladder(spec.problem, spec.exact, ms, n_list, r, options);
  }
  py::dict out;
  for (const auto& report : reports) {
    py::list rows;
    for (const auto& row : report.rows) {
      py::dict d;
      d["n"] = row.n_steps;
      d["tau"] = row.step;
      d["xi"] = opt(row.xi);
      d["p"] = opt(row.p);
      d["note"] = row.note;
      rows.append(d);
    }
    out[py::str(std::string(method_name(report.method)))] = rows;
  }
  std::ostringstream csv;
  write_report_csv(csv, reports);
  out["csv"] = csv.str();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Numerical solvers for the fractional linear oscillator";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<StabilityError>(m, "StabilityError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<NonFiniteError>(m, "NonFiniteError", base.ptr());
  py::register_exception<GridMismatchError>(m, "GridMismatchError", base.ptr());
  py::register_exception<UnsupportedOrderError>(m, "UnsupportedOrderError", base.ptr());

  m.def("gamma", &fracosc::gamma, py::arg("x"), "Gamma function");
  m.def(
      "mittag_leffler",
      [](double alpha, double beta, double z, double tol, int max_terms) {
        return mittag_leffler(MlParams{alpha, beta, tol, max_terms}, z);
      },
      py::arg("alpha"), py::arg("beta"), py::arg("z"), py::arg("tol") = 1e-15, py::arg("max_terms") = 500,
      "Two-parameter Mittag-Leffler function E_{alpha,beta}(z) by its power series");

  py::class_<ProblemSpec>(m, "Problem")
      .def(py::init(&make_problem), py::arg("beta"), py::arg("gamma"), py::arg("lam"), py::arg("omega"),
           py::arg("f"), py::arg("alpha1") = 0.0, py::arg("alpha2") = 0.0, py::arg("T") = 1.0,
           py::arg("exact") = std::nullopt,
           "Problem from expression strings in t (see the README grammar)")
      .def_static("builtin", [](const std::string& name) { return builtin_problem(name); }, py::arg("name"))
      .def_static("load", &load_problem_file, py::arg("path"))
      .def_static(
          "from_json", [](const std::string& text) { return parse_problem_json(text); }, py::arg("text"))
      .def_readonly("name", &ProblemSpec::name)
      .def_property_readonly("beta", [](const ProblemSpec& s) { return s.problem.beta; })
      .def_property_readonly("gamma", [](const ProblemSpec& s) { return s.problem.gamma_order; })
      .def_property_readonly("lam", [](const ProblemSpec& s) { return s.problem.lambda; })
      .def_property_readonly("alpha1", [](const ProblemSpec& s) { return s.problem.alpha1; })
      .def_property_readonly("alpha2", [](const ProblemSpec& s) { return s.problem.alpha2; })
      .def_property_readonly("T", [](const ProblemSpec& s) { return s.problem.horizon; })
      .def_property_readonly("has_exact", [](const ProblemSpec& s) { return s.exact.has_value(); })
      .def("omega", [](const ProblemSpec& s, double t) { return s.problem.omega(t); }, py::arg("t"))
      .def("f", [](const ProblemSpec& s, double t) { return s.problem.forcing(t); }, py::arg("t"))
      .def(
          "exact",
          [](const ProblemSpec& s, double t) {
            if (!s.exact) throw InvalidArgument("problem '" + s.name + "' has no exact solution");
            return evaluate_exact(*s.exact, t);
          },
          py::arg("t"))
      .def("__repr__", [](const ProblemSpec& s) {
        std::ostringstream os;
        os << "Problem(name='" << s.name << "', beta=" << s.problem.beta << ", gamma=" << s.problem.gamma_order
           << ", lam=" << s.problem.lambda << ", T=" << s.problem.horizon << ")";
        return os.str();
      });

  m.def("builtin_names", &builtin_names);
  m.def("stability_threshold", [](const ProblemSpec& s) { return stability_threshold(s.problem); }, py::arg("problem"));
  m.def("solve", &solve_py, py::arg("problem"), py::arg("method") = "enfds", py::arg("n"),
        py::arg("enforce_stability") = true, py::arg("x1") = "taylor",
        "Solve on N uniform steps; returns {'t', 'x'[, 'y']} as numpy arrays");
  m.def("converge", &converge_py, py::arg("problem"), py::arg("methods"), py::arg("n_list"),
        py::arg("rule") = "exact", py::arg("jobs") = 1, py::arg("enforce_stability") = true,
        py::arg("x1") = "taylor",
        "Doubling ladder; returns per-method row lists and the CSV report under 'csv'");
}
