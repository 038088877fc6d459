#include "ogm/methods.hpp"

#include <cmath>

namespace ogm {

namespace {

void require_run(const SmoothProblem& problem, const Eigen::VectorXd& x0,
                 int n) {
  if (n < 1) throw std::invalid_argument("iteration count must be >= 1");
  if (x0.size() != problem.dim())
    throw std::invalid_argument("x0 dimension does not match problem");
}

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

double next_t(double t) { return (1.0 + std::sqrt(1.0 + 4.0 * t * t)) / 2.0; }

double next_theta(double t, bool last) {
  return (1.0 + std::sqrt(1.0 + (last ? 8.0 : 4.0) * t * t)) / 2.0;
}

}  // namespace

IterateTrace run_fgm1(const SmoothProblem& problem, const Eigen::VectorXd& x0,
                      int n) {
  require_run(problem, x0, n);
  const double inv_l = 1.0 / problem.lipschitz();

  IterateTrace trace;
  trace.points.push_back(x0);
  record_gap(problem, x0, trace.f_gaps);

  Eigen::VectorXd x = x0, y = x0;
  double t = 1.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd g = checked_gradient(problem, x, i);
    trace.grad_norms.push_back(g.norm());
    const Eigen::VectorXd y_next = x - inv_l * g;
    const double t_next = next_t(t);
    x = y_next + ((t - 1.0) / t_next) * (y_next - y);
    y = y_next;
    t = t_next;
    trace.points.push_back(x);
    trace.y.push_back(y);
    record_gap(problem, x, trace.f_gaps);
  }
  return trace;
}

IterateTrace run_fgm2(const SmoothProblem& problem, const Eigen::VectorXd& x0,
                      int n) {
  require_run(problem, x0, n);
  const double inv_l = 1.0 / problem.lipschitz();

  IterateTrace trace;
  trace.points.push_back(x0);
  record_gap(problem, x0, trace.f_gaps);

  Eigen::VectorXd x = x0;
  Eigen::VectorXd weighted_sum = Eigen::VectorXd::Zero(x0.size());
  double t = 1.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd g = checked_gradient(problem, x, i);
    trace.grad_norms.push_back(g.norm());
    const Eigen::VectorXd y_next = x - inv_l * g;
    weighted_sum += t * g;
    const Eigen::VectorXd z_next = x0 - inv_l * weighted_sum;
    const double t_next = next_t(t);
    // (1 - 1/t) y + (1/t) z, written so a fixed point stays put exactly.
    x = y_next + (1.0 / t_next) * (z_next - y_next);
    t = t_next;
    trace.points.push_back(x);
    trace.y.push_back(y_next);
    trace.z.push_back(z_next);
    record_gap(problem, x, trace.f_gaps);
  }
  return trace;
}

IterateTrace run_ogm1(const SmoothProblem& problem, const Eigen::VectorXd& x0,
                      int n) {
  require_run(problem, x0, n);
  const double inv_l = 1.0 / problem.lipschitz();

  IterateTrace trace;
  trace.points.push_back(x0);
  record_gap(problem, x0, trace.f_gaps);

  Eigen::VectorXd x = x0, y = x0;
  double theta = 1.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd g = checked_gradient(problem, x, i);
    trace.grad_norms.push_back(g.norm());
    const Eigen::VectorXd y_next = x - inv_l * g;
    const double theta_next = next_theta(theta, i == n - 1);
    x = y_next + ((theta - 1.0) / theta_next) * (y_next - y) +
        (theta / theta_next) * (y_next - x);
    y = y_next;
    theta = theta_next;
    trace.points.push_back(x);
    trace.y.push_back(y);
    record_gap(problem, x, trace.f_gaps);
  }
  return trace;
}

IterateTrace run_ogm2(const SmoothProblem& problem, const Eigen::VectorXd& x0,
                      int n) {
  require_run(problem, x0, n);
  const double inv_l = 1.0 / problem.lipschitz();

  IterateTrace trace;
  trace.points.push_back(x0);
  record_gap(problem, x0, trace.f_gaps);

  Eigen::VectorXd x = x0;
  Eigen::VectorXd weighted_sum = Eigen::VectorXd::Zero(x0.size());
  double theta = 1.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd g = checked_gradient(problem, x, i);
    trace.grad_norms.push_back(g.norm());
    const Eigen::VectorXd y_next = x - inv_l * g;
    weighted_sum += 2.0 * theta * g;
    const Eigen::VectorXd z_next = x0 - inv_l * weighted_sum;
    const double theta_next = next_theta(theta, i == n - 1);
    x = y_next + (1.0 / theta_next) * (z_next - y_next);
    theta = theta_next;
    trace.points.push_back(x);
    trace.y.push_back(y_next);
    trace.z.push_back(z_next);
    record_gap(problem, x, trace.f_gaps);
  }
  return trace;
}

}  // namespace ogm
