#pragma once

#include <Eigen/Core>
#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ogm {

struct Optimum {
  Eigen::VectorXd x_star;
  double f_star = 0.0;
};

/// Gradient-oracle bundle for a smooth convex function: dimension, Lipschitz
/// constant of the gradient, value/gradient callables and (when available)
/// the optimum. Copies share the call counters, so instrumentation survives
/// passing problems by value.
class SmoothProblem {
 public:
  using ValueFn = std::function<double(const Eigen::VectorXd&)>;
  using GradFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

  SmoothProblem(int dim, double lipschitz, ValueFn value, GradFn grad,
                std::optional<Optimum> optimum = std::nullopt);

  int dim() const { return dim_; }
  double lipschitz() const { return lipschitz_; }
  const std::optional<Optimum>& optimum() const { return optimum_; }

  double value(const Eigen::VectorXd& x) const;
  Eigen::VectorXd gradient(const Eigen::VectorXd& x) const;

  /// Number of gradient-oracle calls so far (value calls counted separately).
  std::int64_t eval_count() const { return grad_calls_->load(); }
  std::int64_t value_count() const { return value_calls_->load(); }
  void reset_counters() const;

 private:
  int dim_;
  double lipschitz_;
  ValueFn value_;
  GradFn grad_;
  std::optional<Optimum> optimum_;
  std::shared_ptr<std::atomic<std::int64_t>> grad_calls_;
  std::shared_ptr<std::atomic<std::int64_t>> value_calls_;
};

/// f(x) = 0.5 (x - x*)' A (x - x*) with A = Q diag(eigenvalues) Q' for a
/// seeded random orthogonal Q and seeded x*. L = max eigenvalue. Requires
/// eigenvalues.size() == dim, all >= 0, max > 0.
SmoothProblem make_quadratic(int dim, const std::vector<double>& eigenvalues,
                             unsigned seed);

/// Coordinate-wise Huber loss around `target` with threshold delta > 0;
/// L = 1, optimum at target.
SmoothProblem make_huber(int dim, double delta, const Eigen::VectorXd& target);

/// l2-regularized logistic loss for rows of `design` with +-1 labels;
/// L = ||design||_2^2 / 4 + reg. The optimum has no closed form, so f* is
/// produced by a long plain-gradient-descent reference run at construction.
SmoothProblem make_logistic_smooth(const Eigen::MatrixXd& design,
                                   const Eigen::VectorXd& labels,
                                   double reg = 1e-3);

/// Sampled verification that a problem behaves like a convex function with
/// L-Lipschitz gradient: over seeded random pairs checks
///   |g(x) - g(y)| <= L |x - y| (1 + 1e-8)  and
///   f(y) >= f(x) + <g(x), y - x> - 1e-8 * scale.
struct SampledFunctionReport {
  double worst_smoothness_excess = 0.0;  // max of (|dg| - L|dx|) / (L|dx|)
  double worst_convexity_violation = 0.0;  // max of (linearization - f(y)) / scale
  bool pass = false;
};

SampledFunctionReport check_sampled_smooth_convex(const SmoothProblem& problem,
                                                  int pairs, unsigned seed,
                                                  double radius = 10.0);

/// Problem built from a JSON spec {type, dim, seed, params}, together with
/// the starting point implied by the spec (at distance r from the optimum).
struct LoadedProblem {
  SmoothProblem problem;
  Eigen::VectorXd x0;
  double r = 1.0;
};

LoadedProblem make_problem_from_spec_json(const std::string& json_text);

}  // namespace ogm
