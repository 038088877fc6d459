#pragma once

#include "ogm/fo_engine.hpp"

namespace ogm {

// Efficient O(d)-memory forms of the fast and optimized gradient methods.
// Each evaluates exactly one gradient per iteration and keeps no gradient
// history. OGM needs the horizon N up front: its intermediate parameters
// match FGM's, but the final theta-update is different, so the last
// iteration cannot be finalized without N.

/// y_{i+1} = x_i - (1/L) f'(x_i);  x_{i+1} = y_{i+1} + ((t_i-1)/t_{i+1}) (y_{i+1} - y_i).
IterateTrace run_fgm1(const SmoothProblem& problem, const Eigen::VectorXd& x0,
                      int n);

/// Gradient-sum form: z_{i+1} = x_0 - (1/L) sum t_k f'(x_k);
/// x_{i+1} = (1 - 1/t_{i+1}) y_{i+1} + (1/t_{i+1}) z_{i+1}.
IterateTrace run_fgm2(const SmoothProblem& problem, const Eigen::VectorXd& x0,
                      int n);

/// FGM1 plus the extra momentum term (theta_i/theta_{i+1}) (y_{i+1} - x_i).
IterateTrace run_ogm1(const SmoothProblem& problem, const Eigen::VectorXd& x0,
                      int n);

/// Gradient-sum form with doubled weights: z_{i+1} = x_0 - (1/L) sum 2 theta_k f'(x_k).
IterateTrace run_ogm2(const SmoothProblem& problem, const Eigen::VectorXd& x0,
                      int n);

}  // namespace ogm
