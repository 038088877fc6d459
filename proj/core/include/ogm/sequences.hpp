#pragma once

#include <vector>

namespace ogm {

enum class SequenceKind { FgmT, OgmTheta };

/// Scalar step-parameter sequence t_0..t_N (FGM) or theta_0..theta_N (OGM).
///
/// values[0] == 1. Interior entries follow the momentum recursion
/// x_{i+1} = (1 + sqrt(1 + 4 x_i^2)) / 2, so x_{i+1}^2 - x_{i+1} - x_i^2 = 0.
/// The OGM sequence is horizon-aware: its last entry instead solves
/// theta_N^2 - theta_N - 2 theta_{N-1}^2 = 0 and is only valid for that N,
/// which is why indexing past the horizon is an error rather than an
/// on-demand extension.
struct StepParamSequence {
  SequenceKind kind = SequenceKind::FgmT;
  int horizon = 0;             // N; values holds N+1 entries
  std::vector<double> values;  // index 0..N

  int n() const { return horizon; }
  /// Bounds-checked access; throws std::out_of_range outside 0..N.
  double at(int i) const;
  double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
};

/// Nesterov t-sequence t_0..t_N, t_0 = 1.
StepParamSequence fgm_t_sequence(int n);

/// OGM theta-sequence theta_0..theta_N; equals the t-sequence up to index
/// N-1, with the heavier final update theta_N = (1 + sqrt(1 + 8 theta_{N-1}^2)) / 2.
StepParamSequence ogm_theta_sequence(int n);

/// Residuals of the algebraic identities the sequences are built on, each
/// relative to the squared parameter at that index.
struct SequenceIdentityReport {
  double recursion_residual = 0.0;  // max over i of x_{i+1}^2 - x_{i+1} - x_i^2
  double sum_residual = 0.0;        // max over i of x_i^2 - sum_{k<=i} x_k
  double final_residual = 0.0;      // OGM only: theta_N^2 - theta_N - 2 theta_{N-1}^2
  double max_residual = 0.0;
  bool pass = false;
};

SequenceIdentityReport check_sequence_identities(const StepParamSequence& seq,
                                                 double tol);

/// theta_N for horizon n without materializing the whole sequence.
double ogm_theta_last(int n);

}  // namespace ogm
