#include "ogm/worstcase.hpp"

#include <cmath>
#include <stdexcept>

#include "ogm/bounds.hpp"
#include "ogm/methods.hpp"
#include "ogm/sequences.hpp"

namespace ogm {

namespace {

void validate(const WorstCaseSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("worst case requires N >= 1");
  if (spec.dim < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!(spec.lipschitz > 0.0) || !(spec.r > 0.0))
    throw std::invalid_argument("requires L > 0 and R > 0");
  if (spec.nu.size() != spec.dim)
    throw std::invalid_argument("direction dimension mismatch");
  if (std::fabs(spec.nu.norm() - 1.0) > 1e-14)
    throw std::invalid_argument("direction must be a unit vector");
}

struct PhiParams {
  double lipschitz;
  double r;
  double theta_n2;  // theta_N^2

  double kink() const { return r / theta_n2; }

  double value(const Eigen::VectorXd& x) const {
    const double norm = x.norm();
    if (norm >= kink())
      return lipschitz * r / theta_n2 * norm -
             lipschitz * r * r / (2.0 * theta_n2 * theta_n2);
    return 0.5 * lipschitz * norm * norm;
  }

  Eigen::VectorXd grad(const Eigen::VectorXd& x) const {
    const double norm = x.norm();
    if (norm >= kink())
      return (lipschitz * r / (theta_n2 * norm)) * x;
    return lipschitz * x;
  }
};

PhiParams phi_params(const WorstCaseSpec& spec) {
  const double theta = ogm_theta_last(spec.n);
  return PhiParams{spec.lipschitz, spec.r, theta * theta};
}

}  // namespace

WorstCaseSpec WorstCaseSpec::make(int n, double lipschitz, double r, int dim) {
  WorstCaseSpec spec;
  spec.n = n;
  spec.lipschitz = lipschitz;
  spec.r = r;
  spec.dim = dim;
  spec.nu = Eigen::VectorXd::Zero(dim);
  if (dim >= 1) spec.nu(0) = 1.0;
  validate(spec);
  return spec;
}

double phi_value(const WorstCaseSpec& spec, const Eigen::VectorXd& x) {
  validate(spec);
  if (x.size() != spec.dim)
    throw std::invalid_argument("point dimension mismatch");
  return phi_params(spec).value(x);
}

Eigen::VectorXd phi_grad(const WorstCaseSpec& spec, const Eigen::VectorXd& x) {
  validate(spec);
  if (x.size() != spec.dim)
    throw std::invalid_argument("point dimension mismatch");
  return phi_params(spec).grad(x);
}

SmoothProblem worst_case_problem(const WorstCaseSpec& spec) {
  validate(spec);
  const PhiParams params = phi_params(spec);
  return SmoothProblem(
      spec.dim, spec.lipschitz,
      [params](const Eigen::VectorXd& x) { return params.value(x); },
      [params](const Eigen::VectorXd& x) { return params.grad(x); },
      Optimum{Eigen::VectorXd::Zero(spec.dim), 0.0});
}

std::vector<Eigen::VectorXd> predicted_trace(const WorstCaseSpec& spec) {
  validate(spec);
  const StepParamSequence theta = ogm_theta_sequence(spec.n);
  const double thn2 = theta[spec.n] * theta[spec.n];
  std::vector<Eigen::VectorXd> trace;
  trace.reserve(static_cast<std::size_t>(spec.n) + 1);
  for (int i = 0; i <= spec.n - 1; ++i) {
    const double factor = 1.0 - (theta[i] * theta[i] - 1.0) / thn2;
    trace.push_back(factor * spec.r * spec.nu);
  }
  const double final_factor = 1.0 - (thn2 - 1.0) / (2.0 * thn2);
  trace.push_back(final_factor * spec.r * spec.nu);
  return trace;
}

TightnessReport tightness_check(const WorstCaseSpec& spec, OgmVariant method,
                                double tol) {
  validate(spec);
  const SmoothProblem problem = worst_case_problem(spec);
  const Eigen::VectorXd x0 = spec.r * spec.nu;
  const IterateTrace trace = method == OgmVariant::Ogm1
                                 ? run_ogm1(problem, x0, spec.n)
                                 : run_ogm2(problem, x0, spec.n);

  TightnessReport report;
  report.predicted_gap = ogm_bound(spec.n, spec.lipschitz, spec.r).tight;
  report.achieved_gap = trace.f_gaps.back();

  const std::vector<Eigen::VectorXd> predicted = predicted_trace(spec);
  for (std::size_t i = 0; i < predicted.size(); ++i)
    report.max_trace_dev = std::max(
        report.max_trace_dev, (trace.points[i] - predicted[i]).norm());

  const double rel_err =
      std::fabs(report.achieved_gap - report.predicted_gap) /
      report.predicted_gap;
  report.pass = rel_err <= tol && report.max_trace_dev <= tol * spec.r;
  return report;
}

}  // namespace ogm
