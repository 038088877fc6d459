#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

#include "ogm/coefficients.hpp"
#include "ogm/problems.hpp"

namespace ogm {

/// Per-iteration record of a first-order run.
///
/// points holds x_0..x_N. When the method defines them, y holds y_1..y_N and
/// z holds z_1..z_N. f_gaps holds f(x_i) - f* for i = 0..N and is empty when
/// the problem's optimum is unknown. grad_norms holds |f'(x_i)| for the N
/// gradients the run actually evaluated (i = 0..N-1).
struct IterateTrace {
  std::vector<Eigen::VectorXd> points;
  std::vector<Eigen::VectorXd> y;
  std::vector<Eigen::VectorXd> z;
  std::vector<double> f_gaps;
  std::vector<double> grad_norms;

  int n() const { return static_cast<int>(points.size()) - 1; }
};

/// Thrown when a gradient oracle returns a non-finite value.
class OracleFailure : public std::runtime_error {
 public:
  OracleFailure(int iteration, const std::string& what);
  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

/// General first-order scheme: x_{i+1} = x_i - (1/L) sum_{k<=i} h_{i+1,k} f'(x_k).
///
/// Keeps every past gradient (O(N d) memory, O(N^2 d) arithmetic). This is
/// the reference the efficient O(d) methods are validated against, so no
/// truncation is applied. The weighted gradient sum is accumulated in a
/// single pass with k ascending for reproducibility.
IterateTrace run_fo(const SmoothProblem& problem, const Eigen::VectorXd& x0,
                    const CoefficientTable& h);

/// Trace serialization metadata; schema
/// {method, N, L, R, f_gaps, grad_norms, bound_tight, bound_relaxed, points?}.
struct TraceRunInfo {
  std::string method;
  int n = 0;
  double lipschitz = 1.0;
  double r = 1.0;
  double bound_tight = 0.0;
  double bound_relaxed = 0.0;
  bool include_points = false;
};

std::string trace_to_json(const IterateTrace& trace, const TraceRunInfo& info);

}  // namespace ogm
