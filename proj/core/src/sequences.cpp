#include "ogm/sequences.hpp"

#include <cmath>
#include <stdexcept>

namespace ogm {

namespace {

void require_horizon(int n) {
  if (n < 1) throw std::invalid_argument("sequence horizon must be >= 1");
}

double next_t(double t) { return (1.0 + std::sqrt(1.0 + 4.0 * t * t)) / 2.0; }

}  // namespace

double StepParamSequence::at(int i) const {
  if (i < 0 || i > horizon)
    throw std::out_of_range("sequence index outside 0..N");
  return values[static_cast<std::size_t>(i)];
}

StepParamSequence fgm_t_sequence(int n) {
  require_horizon(n);
  StepParamSequence seq{SequenceKind::FgmT, n, {}};
  seq.values.resize(static_cast<std::size_t>(n) + 1);
  seq.values[0] = 1.0;
  for (int i = 0; i < n; ++i) seq.values[i + 1] = next_t(seq.values[i]);
  return seq;
}

StepParamSequence ogm_theta_sequence(int n) {
  require_horizon(n);
  StepParamSequence seq{SequenceKind::OgmTheta, n, {}};
  seq.values.resize(static_cast<std::size_t>(n) + 1);
  seq.values[0] = 1.0;
  for (int i = 0; i + 1 < n; ++i) seq.values[i + 1] = next_t(seq.values[i]);
  const double prev = seq.values[static_cast<std::size_t>(n) - 1];
  seq.values[static_cast<std::size_t>(n)] =
      (1.0 + std::sqrt(1.0 + 8.0 * prev * prev)) / 2.0;
  return seq;
}

double ogm_theta_last(int n) {
  require_horizon(n);
  double t = 1.0;
  for (int i = 0; i + 1 < n; ++i) t = next_t(t);
  return (1.0 + std::sqrt(1.0 + 8.0 * t * t)) / 2.0;
}

SequenceIdentityReport check_sequence_identities(const StepParamSequence& seq,
                                                 double tol) {
  const int n = seq.horizon;
  const bool ogm = seq.kind == SequenceKind::OgmTheta;
  SequenceIdentityReport report;

  // Recursion x_{i+1}^2 - x_{i+1} - x_i^2, relative to x_{i+1}^2. For the
  // OGM sequence the plain recursion only covers indices up to N-1.
  const int recursion_top = ogm ? n - 1 : n;
  for (int i = 0; i + 1 <= recursion_top; ++i) {
    const double a = seq[i], b = seq[i + 1];
    const double res = std::fabs(b * b - b - a * a) / (b * b);
    report.recursion_residual = std::max(report.recursion_residual, res);
  }

  // x_i^2 = sum_{k<=i} x_k; the OGM tail value does not satisfy it.
  const int sum_top = ogm ? n - 1 : n;
  long double acc = 0.0L;
  for (int i = 0; i <= sum_top; ++i) {
    acc += seq[i];
    const double x = seq[i];
    const double res =
        std::fabs(static_cast<double>(x * x - acc)) / (x * x);
    report.sum_residual = std::max(report.sum_residual, res);
  }

  if (ogm) {
    const double last = seq[n], prev = seq[n - 1];
    report.final_residual =
        std::fabs(last * last - last - 2.0 * prev * prev) / (last * last);
  }

  report.max_residual = std::max(
      {report.recursion_residual, report.sum_residual, report.final_residual});
  report.pass = report.max_residual <= tol;
  return report;
}

}  // namespace ogm
