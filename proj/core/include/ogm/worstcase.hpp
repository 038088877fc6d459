#pragma once

#include <Eigen/Core>
#include <vector>

#include "ogm/problems.hpp"

namespace ogm {

/// Instance of the piecewise function on which OGM's bound is attained with
/// equality: quadratic (L/2)|x|^2 inside the ball |x| <= R/theta_N^2 and
/// affine (LR/theta_N^2)|x| - LR^2/(2 theta_N^4) outside; continuously
/// differentiable across the seam. Minimizer is the origin with value 0.
struct WorstCaseSpec {
  int n = 1;
  double lipschitz = 1.0;
  double r = 1.0;
  int dim = 3;
  Eigen::VectorXd nu;  // unit direction of the trajectory

  /// nu defaults to the first standard basis vector; any dim >= 1 works
  /// since the trajectory is one-dimensional along nu.
  static WorstCaseSpec make(int n, double lipschitz = 1.0, double r = 1.0,
                            int dim = 3);
};

double phi_value(const WorstCaseSpec& spec, const Eigen::VectorXd& x);

/// Gradient of phi; the affine branch is taken at |x| >= R/theta_N^2 and
/// both branches agree there, so the seam choice is inert.
Eigen::VectorXd phi_grad(const WorstCaseSpec& spec, const Eigen::VectorXd& x);

/// phi wrapped as an instrumented problem with known optimum (0, 0).
SmoothProblem worst_case_problem(const WorstCaseSpec& spec);

/// Closed-form OGM iterates from x_0 = R nu:
/// x_i = (1 - (theta_i^2 - 1)/theta_N^2) R nu for i < N and
/// x_N = (1 - (theta_N^2 - 1)/(2 theta_N^2)) R nu.
std::vector<Eigen::VectorXd> predicted_trace(const WorstCaseSpec& spec);

enum class OgmVariant { Ogm1, Ogm2 };

struct TightnessReport {
  double predicted_gap = 0.0;
  double achieved_gap = 0.0;
  double max_trace_dev = 0.0;  // max |x_i - predicted_i| over the run
  bool pass = false;
};

/// Runs the chosen OGM variant on phi from x_0 = R nu and checks that the
/// final gap equals L R^2 / (2 theta_N^2) to relative tolerance tol, with
/// the whole trace matching the closed form.
TightnessReport tightness_check(const WorstCaseSpec& spec, OgmVariant method,
                                double tol);

}  // namespace ogm
