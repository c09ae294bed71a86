#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cdgrav/limiter.hpp"
#include "cdgrav/quadrature.hpp"
#include "cdgrav/run.hpp"

namespace py = pybind11;
using namespace cdgrav;

namespace {

RunOptions options_from_kwargs(const ProblemSpec& spec, const py::dict& kw) {
  Config cfg;
  for (auto item : kw) {
    std::string key = py::str(item.first);
    if (key == "problem.eta") continue;  // handled by spec_from
    cfg.set(key, py::str(item.second));
  }
  RunOptions opt = options_from_config(cfg, spec);
  cfg.check_consumed();
  return opt;
}

ProblemSpec spec_from(const std::string& id, const py::dict& kw) {
  ProblemParams par;
  if (kw.contains("problem.eta"))
    par.eta = py::cast<double>(py::float_(py::str(kw["problem.eta"])));
  return make_problem(id, par);
}

py::dict summary(const std::string& id, double t_final, const StepStats& st,
                 const std::vector<double>& l1,
                 const std::vector<double>& wb_c,
                 const std::vector<double>& wb_d) {
  py::dict out;
  out["problem"] = id;
  out["t_final"] = t_final;
  out["steps"] = st.steps;
  out["min_rho"] = st.min_rho;
  out["min_p"] = st.min_p;
  out["weno_troubled"] = st.limiter.weno_troubled;
  if (!l1.empty()) out["l1_error"] = l1;
  out["wb_l1_primal"] = wb_c;
  out["wb_l1_dual"] = wb_d;
  return out;
}

py::dict run_problem(const std::string& id, const py::kwargs& kw) {
  py::dict kwd;
  for (auto item : kw) kwd[item.first] = item.second;
  ProblemSpec spec = spec_from(id, kwd);
  if (kwd.contains("problem.eta")) PyDict_DelItemString(kwd.ptr(), "problem.eta");
  RunOptions opt = options_from_kwargs(spec, kwd);
  if (spec.dim == 1) {
    Runner1D r(spec, opt);
    StepStats st = r.run();
    std::vector<double> l1;
    if (spec.has_exact) l1 = r.error_vs_exact(1);
    return summary(id, r.time(), st, l1, r.wb_error(true), r.wb_error(false));
  }
  Runner2D r(spec, opt);
  StepStats st = r.run();
  std::vector<double> l1;
  if (spec.has_exact) l1 = r.error_vs_exact(1);
  return summary(id, r.time(), st, l1, r.wb_error(true), r.wb_error(false));
}

py::dict convergence(const std::string& id, const std::vector<int>& ladder,
                     const py::kwargs& kw) {
  py::dict kwd;
  for (auto item : kw) kwd[item.first] = item.second;
  ProblemSpec spec = spec_from(id, kwd);
  RunOptions opt = options_from_kwargs(spec, kwd);
  std::vector<std::vector<double>> errors;
  for (int n : ladder) {
    RunOptions o = opt;
    o.nx = n;
    if (spec.dim == 2) o.ny = n;
    if (spec.dim == 1) {
      Runner1D r(spec, o);
      r.run();
      errors.push_back(r.error_vs_exact(1));
    } else {
      Runner2D r(spec, o);
      r.run();
      errors.push_back(r.error_vs_exact(1));
    }
  }
  std::vector<std::vector<double>> orders;
  for (size_t i = 1; i < errors.size(); ++i) {
    std::vector<double> row;
    for (size_t c = 0; c < errors[i].size(); ++c)
      row.push_back(std::log2(errors[i - 1][c] / errors[i][c]));
    orders.push_back(row);
  }
  py::dict out;
  out["n"] = ladder;
  out["l1_error"] = errors;
  out["order"] = orders;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "positivity-preserving well-balanced central DG solver for the "
            "Euler equations with gravity";

  m.def(
      "gauss_rule",
      [](int n, double a, double b) {
        QuadRule r = gauss_rule(n, a, b);
        return py::make_tuple(r.nodes, r.weights);
      },
      py::arg("n"), py::arg("a") = -1.0, py::arg("b") = 1.0,
      "Gauss-Legendre nodes and weights; weights sum to one");
  m.def(
      "lobatto_rule",
      [](int n, double a, double b) {
        QuadRule r = lobatto_rule(n, a, b);
        return py::make_tuple(r.nodes, r.weights);
      },
      py::arg("n"), py::arg("a") = -1.0, py::arg("b") = 1.0,
      "Gauss-Lobatto nodes and weights; weights sum to one");
  m.def("list_problems", []() {
    py::list out;
    for (const auto& [id, desc] : list_problems())
      out.append(py::make_tuple(id, desc));
    return out;
  });
  m.def("run", &run_problem, py::arg("problem_id"),
        "Advance one problem; keyword arguments use the config keys, e.g.\n"
        "run('ex2_isothermal_1d', **{'mesh.nx': 50, 'time.t_final': 2.0})");
  m.def("convergence", &convergence, py::arg("problem_id"), py::arg("ladder"),
        "Mesh-refinement study returning errors and observed orders");

  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<PositivityFault>(m, "PositivityFault");
}
