#include "ogm/coefficients.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ogm/certificates.hpp"

namespace ogm {

namespace {

void require_horizon(int n) {
  if (n < 1) throw std::invalid_argument("coefficient table requires N >= 1");
}

// Shared three-case recursion of FGM1 / recursive OGM. The only differences
// are the parameter sequence and the diagonal numerator (t_i - 1 for FGM,
// 2 theta_i - 1 for OGM).
CoefficientTable build_recursive(const StepParamSequence& seq,
                                 double diag_scale) {
  const int n = seq.n();
  std::vector<double> entries(CoefficientTable::entry_count(n));
  std::vector<double> prev_row;  // row i, entries k = 0..i-1
  std::size_t pos = 0;
  for (int i = 0; i < n; ++i) {
    const double momentum = (seq[i] - 1.0) / seq[i + 1];
    std::vector<double> row(static_cast<std::size_t>(i) + 1);
    for (int k = 0; k <= i - 2; ++k) row[k] = momentum * prev_row[k];
    if (i >= 1) row[i - 1] = momentum * (prev_row[i - 1] - 1.0);
    row[i] = 1.0 + (diag_scale * seq[i] - 1.0) / seq[i + 1];
    for (double v : row) entries[pos++] = v;
    prev_row = std::move(row);
  }
  return CoefficientTable(n, std::move(entries));
}

// Shared gradient-sum form of FGM2 / direct OGM:
// h_{i+1,k} = (w * seq_k - colsum_k) / seq_{i+1} off the diagonal, with
// column sums memoized so construction stays O(N^2).
CoefficientTable build_direct(const StepParamSequence& seq, double weight,
                              double diag_scale) {
  const int n = seq.n();
  std::vector<double> entries(CoefficientTable::entry_count(n));
  std::vector<double> colsum(static_cast<std::size_t>(n), 0.0);
  std::size_t pos = 0;
  for (int i = 0; i < n; ++i) {
    const std::size_t row_start = pos;
    for (int k = 0; k <= i - 1; ++k)
      entries[pos++] = (weight * seq[k] - colsum[k]) / seq[i + 1];
    entries[pos++] = 1.0 + (diag_scale * seq[i] - 1.0) / seq[i + 1];
    for (int k = 0; k <= i; ++k) colsum[k] += entries[row_start + k];
  }
  return CoefficientTable(n, std::move(entries));
}

}  // namespace

CoefficientTable::CoefficientTable(int n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  require_horizon(n);
  if (entries_.size() != entry_count(n))
    throw std::invalid_argument("coefficient table has wrong entry count");
  for (double v : entries_)
    if (!std::isfinite(v))
      throw std::invalid_argument("coefficient table entry is not finite");
}

CoefficientTable build_h_fgm1(int n) {
  require_horizon(n);
  return build_recursive(fgm_t_sequence(n), 1.0);
}

CoefficientTable build_h_fgm2(int n) {
  require_horizon(n);
  return build_direct(fgm_t_sequence(n), 1.0, 1.0);
}

CoefficientTable build_h_ogm_recursive(int n) {
  require_horizon(n);
  return build_recursive(ogm_theta_sequence(n), 2.0);
}

CoefficientTable build_h_ogm_direct(int n) {
  require_horizon(n);
  return build_direct(ogm_theta_sequence(n), 2.0, 2.0);
}

CoefficientTable h_from_r(const RTable& r, const DualCertificate& cert) {
  const int n = r.n;
  if (n != cert.n)
    throw std::invalid_argument("r-table and certificate horizons differ");
  std::vector<double> entries(CoefficientTable::entry_count(n));
  std::vector<double> colsum(static_cast<std::size_t>(n), 0.0);
  std::size_t pos = 0;
  for (int i = 1; i <= n; ++i) {
    const double denom = cert.lam(i) + cert.tau_at(i);
    const std::size_t row_start = pos;
    for (int k = 0; k <= i - 1; ++k) {
      entries[pos++] =
          denom != 0.0
              ? (r(i, k) - cert.tau_at(i) * colsum[k]) / denom
              : 0.0;
    }
    for (int k = 0; k <= i - 1; ++k) colsum[k] += entries[row_start + k];
  }
  return CoefficientTable(n, std::move(entries));
}

HSumReport check_h_sum_property(const CoefficientTable& h,
                                const StepParamSequence& theta, double tol) {
  const int n = h.n();
  if (theta.n() != n)
    throw std::invalid_argument("table and sequence horizons differ");
  HSumReport report;
  long double total = 0.0L;  // extended precision so the check has headroom
  for (int i = 1; i <= n; ++i) {
    for (int k = 0; k < i; ++k) total += h(i, k);
    const double th = theta[i];
    const double target =
        i < n ? th * th - 1.0 : (th * th - 1.0) / 2.0;
    const double res = std::fabs(static_cast<double>(total - target)) /
                       std::max(1.0, std::fabs(target));
    report.max_residual = std::max(report.max_residual, res);
  }
  report.pass = report.max_residual <= tol;
  return report;
}

std::string to_csv(const CoefficientTable& h) {
  std::ostringstream out;
  out.precision(17);
  out << "i,k,h\n";
  for (int i = 1; i <= h.n(); ++i)
    for (int k = 0; k < i; ++k) out << i << ',' << k << ',' << h(i, k) << '\n';
  return out.str();
}

}  // namespace ogm
