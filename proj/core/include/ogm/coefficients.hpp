#pragma once

#include <string>
#include <vector>

#include "ogm/sequences.hpp"

namespace ogm {

struct DualCertificate;

/// Lower-triangular step-coefficient table.
///
/// Entry (i, k) is the weight of gradient f'(x_k) in the update that
/// produces iterate x_i, for 1 <= i <= N and 0 <= k < i. The first index is
/// always the target iterate and the second the gradient; this is fixed once
/// here and used everywhere to avoid mixed subscript orders.
class CoefficientTable {
 public:
  CoefficientTable(int n, std::vector<double> entries);

  int n() const { return n_; }
  double operator()(int target, int grad) const {
    return entries_[offset(target, grad)];
  }
  const std::vector<double>& raw() const { return entries_; }

  static std::size_t entry_count(int n) {
    return static_cast<std::size_t>(n) * (n + 1) / 2;
  }

 private:
  static std::size_t offset(int target, int grad) {
    return static_cast<std::size_t>(target) * (target - 1) / 2 +
           static_cast<std::size_t>(grad);
  }
  int n_;
  std::vector<double> entries_;  // row-major by target iterate, rows 1..N
};

/// Lower-triangular table of the SDP reformulation variables r_{i,k},
/// same shape and indexing as CoefficientTable.
struct RTable {
  int n = 0;
  std::vector<double> entries;

  double operator()(int target, int grad) const {
    return entries[static_cast<std::size_t>(target) * (target - 1) / 2 +
                   static_cast<std::size_t>(grad)];
  }
};

/// Step coefficients of FGM1 (momentum recursion form).
CoefficientTable build_h_fgm1(int n);

/// Step coefficients of FGM2 (gradient-sum form). Entrywise equal to FGM1.
CoefficientTable build_h_fgm2(int n);

/// OGM coefficients via the three-case momentum recursion.
CoefficientTable build_h_ogm_recursive(int n);

/// OGM coefficients via the doubled gradient-sum form. Entrywise equal to
/// the recursive form.
CoefficientTable build_h_ogm_direct(int n);

/// Recover h from the reformulation variables r and the multipliers:
/// h_{i,k} = (r_{i,k} - tau_i * sum_{j=k+1}^{i-1} h_{j,k}) / (lambda_i + tau_i),
/// or 0 for rows with lambda_i + tau_i = 0.
CoefficientTable h_from_r(const RTable& r, const DualCertificate& cert);

/// Residuals of the OGM coefficient-sum identity
///   sum_{j<=i} sum_k h_{j,k} = theta_i^2 - 1   (i < N)
///                            = (theta_N^2 - 1)/2  (i = N),
/// relative to max(1, |target value|).
struct HSumReport {
  double max_residual = 0.0;
  bool pass = false;
};

HSumReport check_h_sum_property(const CoefficientTable& h,
                                const StepParamSequence& theta, double tol);

/// CSV dump, one line "i,k,h" per stored entry.
std::string to_csv(const CoefficientTable& h);

}  // namespace ogm
