#include "ogm/fo_engine.hpp"

#include <cmath>

#include <json.hpp>

namespace ogm {

OracleFailure::OracleFailure(int iteration, const std::string& what)
    : std::runtime_error(what), iteration_(iteration) {}

namespace {

Eigen::VectorXd checked_gradient(const SmoothProblem& problem,
                                 const Eigen::VectorXd& x, int iteration) {
  Eigen::VectorXd g = problem.gradient(x);
  if (!g.allFinite())
    throw OracleFailure(iteration, "gradient oracle returned a non-finite "
                                   "value at iteration " +
                                       std::to_string(iteration));
  return g;
}

void record_gap(const SmoothProblem& problem, const Eigen::VectorXd& x,
                std::vector<double>& gaps) {
  if (problem.optimum())
    gaps.push_back(problem.value(x) - problem.optimum()->f_star);
}

}  // namespace

IterateTrace run_fo(const SmoothProblem& problem, const Eigen::VectorXd& x0,
                    const CoefficientTable& h) {
  if (x0.size() != problem.dim())
    throw std::invalid_argument("x0 dimension does not match problem");
  const int n = h.n();
  const double inv_l = 1.0 / problem.lipschitz();

  IterateTrace trace;
  trace.points.reserve(static_cast<std::size_t>(n) + 1);
  trace.points.push_back(x0);
  record_gap(problem, x0, trace.f_gaps);

  std::vector<Eigen::VectorXd> gradients;  // all of them, by design
  gradients.reserve(static_cast<std::size_t>(n));

  Eigen::VectorXd x = x0;
  for (int i = 0; i < n; ++i) {
    gradients.push_back(checked_gradient(problem, x, i));
    trace.grad_norms.push_back(gradients.back().norm());
    Eigen::VectorXd step = Eigen::VectorXd::Zero(x.size());
    for (int k = 0; k <= i; ++k) step += h(i + 1, k) * gradients[k];
    x -= inv_l * step;
    trace.points.push_back(x);
    record_gap(problem, x, trace.f_gaps);
  }
  return trace;
}

std::string trace_to_json(const IterateTrace& trace, const TraceRunInfo& info) {
  nlohmann::json j;
  j["method"] = info.method;
  j["N"] = info.n;
  j["L"] = info.lipschitz;
  j["R"] = info.r;
  j["f_gaps"] = trace.f_gaps;
  j["grad_norms"] = trace.grad_norms;
  j["bound_tight"] = info.bound_tight;
  j["bound_relaxed"] = info.bound_relaxed;
  if (info.include_points) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : trace.points)
      pts.push_back(std::vector<double>(p.data(), p.data() + p.size()));
    j["points"] = std::move(pts);
  }
  return j.dump(2);
}

}  // namespace ogm
