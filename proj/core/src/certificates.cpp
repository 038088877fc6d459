#include "ogm/certificates.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace ogm {

namespace {

void require_horizon(int n) {
  if (n < 1) throw std::invalid_argument("certificate requires N >= 1");
}

double max_abs(const Eigen::MatrixXd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// Q and q of the reduced feasibility system, assembled from the terms of
// their defining sums. Q is N x N over indices 0..N-1, q is length N.
void build_q_matrices(const RTable& r, const DualCertificate& cert,
                      Eigen::MatrixXd& q_mat, Eigen::VectorXd& q_vec) {
  const int n = cert.n;
  q_mat = Eigen::MatrixXd::Zero(n, n);
  q_vec = Eigen::VectorXd::Zero(n);

  for (int i = 1; i <= n - 1; ++i) {
    const double l = cert.lam(i);
    q_mat(i - 1, i - 1) += 0.5 * l;
    q_mat(i, i) += 0.5 * l;
    q_mat(i - 1, i) -= 0.5 * l;
    q_mat(i, i - 1) -= 0.5 * l;
  }
  q_mat(n - 1, n - 1) += 0.5 * cert.lam(n);
  for (int i = 0; i <= n - 1; ++i) q_mat(i, i) += 0.5 * cert.tau_at(i);
  for (int i = 1; i <= n - 1; ++i)
    for (int k = 0; k <= i - 1; ++k) {
      q_mat(i, k) += 0.5 * r(i, k);
      q_mat(k, i) += 0.5 * r(i, k);
    }

  for (int k = 0; k <= n - 2; ++k) q_vec(k) = 0.5 * r(n, k);
  q_vec(n - 1) = 0.5 * (r(n, n - 1) - cert.lam(n));
}

}  // namespace

double lambda_set_residual(const DualCertificate& cert) {
  const int n = cert.n;
  double res = std::fabs(cert.tau_at(0) - cert.lam(1));
  res = std::max(res, std::fabs(cert.lam(n) + cert.tau_at(n) - 1.0));
  for (int i = 1; i <= n - 1; ++i)
    res = std::max(res,
                   std::fabs(cert.lam(i) - cert.lam(i + 1) + cert.tau_at(i)));
  for (double v : cert.lambda)
    if (v < -1e-14) res = std::max(res, -v);
  for (double v : cert.tau)
    if (v < -1e-14) res = std::max(res, -v);
  return res;
}

DualCertificate fgm_dual_point(int n) {
  require_horizon(n);
  const StepParamSequence t = fgm_t_sequence(n);
  const double tn2 = t[n] * t[n];
  DualCertificate cert;
  cert.n = n;
  cert.lambda.resize(static_cast<std::size_t>(n));
  cert.tau.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) cert.lambda[i - 1] = t[i - 1] * t[i - 1] / tn2;
  for (int i = 0; i <= n; ++i) cert.tau[i] = t[i] / tn2;
  cert.gamma = 1.0 / tn2;
  return cert;
}

OgmDualPoint ogm_dual_point(int n) {
  require_horizon(n);
  const StepParamSequence theta = ogm_theta_sequence(n);
  const double thn = theta[n];
  const double thn2 = thn * thn;

  DualCertificate cert;
  cert.n = n;
  cert.lambda.resize(static_cast<std::size_t>(n));
  cert.tau.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i)
    cert.lambda[i - 1] = 2.0 * theta[i - 1] * theta[i - 1] / thn2;
  for (int i = 0; i <= n - 1; ++i) cert.tau[i] = 2.0 * theta[i] / thn2;
  cert.tau[static_cast<std::size_t>(n)] = 1.0 / thn;
  cert.gamma = 1.0 / thn2;

  RTable r;
  r.n = n;
  r.entries.resize(CoefficientTable::entry_count(n));
  std::size_t pos = 0;
  for (int i = 1; i <= n; ++i)
    for (int k = 0; k <= i - 1; ++k) {
      double v;
      if (i <= n - 1) {
        v = 4.0 * theta[i] * theta[k] / thn2;
        if (k == i - 1) v += 2.0 * theta[i - 1] * theta[i - 1] / thn2;
      } else {
        v = 2.0 * theta[k] / thn;
        if (k == i - 1) v += 2.0 * theta[n - 1] * theta[n - 1] / thn2;
      }
      r.entries[pos++] = v;
    }
  return OgmDualPoint{std::move(cert), std::move(r)};
}

CertificateMatrices build_S(const CoefficientTable& h,
                            const DualCertificate& cert) {
  const int n = h.n();
  if (cert.n != n)
    throw std::invalid_argument("table and certificate horizons differ");
  if (lambda_set_residual(cert) > 1e-6)
    throw std::invalid_argument("certificate is not a multiplier-set member");

  // colsum[k] tracks sum_{j=k+1}^{i-1} h_{j,k} as the row index i advances,
  // keeping assembly O(N^2).
  Eigen::MatrixXd s(n + 1, n + 1);
  std::vector<double> colsum(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i <= n - 1; ++i) s(i, i) = cert.lam(i + 1);
  s(n, n) = 0.5;
  for (int i = 1; i <= n; ++i) {
    const double li = cert.lam(i), ti = cert.tau_at(i);
    for (int k = 0; k <= i - 2; ++k) {
      const double v = 0.5 * ((li + ti) * h(i, k) + ti * colsum[k]);
      s(i, k) = v;
      s(k, i) = v;
    }
    const double v = 0.5 * ((li + ti) * h(i, i - 1) - li);
    s(i, i - 1) = v;
    s(i - 1, i) = v;
    for (int k = 0; k <= i - 1; ++k) colsum[k] += h(i, k);
  }

  Eigen::MatrixXd bordered(n + 2, n + 2);
  bordered.topLeftCorner(n + 1, n + 1) = s;
  for (int i = 0; i <= n; ++i) {
    bordered(i, n + 1) = 0.5 * cert.tau_at(i);
    bordered(n + 1, i) = 0.5 * cert.tau_at(i);
  }
  bordered(n + 1, n + 1) = 0.5 * cert.gamma;
  return CertificateMatrices{std::move(s), std::move(bordered)};
}

Rank1Report check_rank1_decomposition_fgm(int n, double tol) {
  require_horizon(n);
  return check_rank1_decomposition_fgm(build_h_fgm2(n), tol);
}

Rank1Report check_rank1_decomposition_fgm(const CoefficientTable& h,
                                          double tol) {
  const int n = h.n();
  const StepParamSequence t = fgm_t_sequence(n);
  const DualCertificate cert = fgm_dual_point(n);
  const CertificateMatrices mats = build_S(h, cert);

  const double scale = 1.0 / (2.0 * t[n] * t[n]);
  Eigen::VectorXd tv(n + 1);
  for (int i = 0; i <= n; ++i) tv(i) = t[i];
  Eigen::MatrixXd expected = scale * (tv * tv.transpose());
  for (int i = 0; i <= n - 1; ++i) expected(i, i) += scale * t[i] * t[i];

  Eigen::VectorXd tv1(n + 2);
  tv1.head(n + 1) = tv;
  tv1(n + 1) = 1.0;
  Eigen::MatrixXd expected_bordered = scale * (tv1 * tv1.transpose());
  for (int i = 0; i <= n - 1; ++i) expected_bordered(i, i) += scale * t[i] * t[i];

  Rank1Report report;
  report.s_residual = max_abs(mats.S - expected);
  report.bordered_residual = max_abs(mats.bordered - expected_bordered);
  report.min_eigenvalue =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(mats.bordered)
          .eigenvalues()
          .minCoeff();
  report.pass = report.s_residual <= tol && report.bordered_residual <= tol;
  return report;
}

FeasibilityReport check_feasibility_system(const RTable& r,
                                           const DualCertificate& cert,
                                           double tol) {
  if (r.n != cert.n)
    throw std::invalid_argument("r-table and certificate horizons differ");
  const int n = cert.n;

  Eigen::MatrixXd q_mat;
  Eigen::VectorXd q_vec;
  build_q_matrices(r, cert, q_mat, q_vec);

  FeasibilityReport report;
  report.q_residual =
      max_abs(q_mat - 2.0 * (q_vec * q_vec.transpose()));
  const double tau_n = cert.tau_at(n);
  double tau_res = 0.0;
  for (int i = 0; i <= n - 1; ++i)
    tau_res = std::max(tau_res,
                       std::fabs(cert.tau_at(i) - 2.0 * q_vec(i) * tau_n));
  report.tau_residual = tau_res;
  report.gamma_residual = std::fabs(cert.gamma - tau_n * tau_n);
  report.lambda_set = lambda_set_residual(cert);
  report.max_residual =
      std::max({report.q_residual, report.tau_residual, report.gamma_residual,
                report.lambda_set});
  report.pass = report.max_residual <= tol;
  return report;
}

RecursionReport check_appendix_recursion(const DualCertificate& cert,
                                         double tol) {
  const int n = cert.n;
  RecursionReport report;
  const double one_minus = 1.0 - cert.lam(n);
  report.first_residual =
      std::fabs(cert.lam(1) - 2.0 * one_minus * one_minus);
  for (int i = 2; i <= n; ++i) {
    const double d = cert.lam(i) - cert.lam(i - 1);
    report.step_residual = std::max(
        report.step_residual, std::fabs(d * d - cert.lam(1) * cert.lam(i)));
  }
  report.max_residual = std::max(report.first_residual, report.step_residual);
  report.pass = report.max_residual <= tol;
  return report;
}

PsdReport psd_check(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("psd_check requires a square matrix");
  const double asym = max_abs(m - m.transpose());
  const double inf_norm = max_abs(m);
  if (asym > 1e-12 * std::max(1.0, inf_norm))
    throw std::invalid_argument("psd_check input is not symmetric");

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  PsdReport report;
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.norm = solver.eigenvalues().cwiseAbs().maxCoeff();
  report.pass = report.min_eigenvalue >= -tol * report.norm;
  return report;
}

double certified_bound(const DualCertificate& cert, double lipschitz,
                       double r) {
  if (!(lipschitz > 0.0) || !(r > 0.0))
    throw std::invalid_argument("certified_bound requires L > 0 and R > 0");
  return 0.5 * lipschitz * r * r * cert.gamma;
}

CertificationReport run_full_certification(CertFamily family, int n,
                                           double tol) {
  require_horizon(n);
  CertificationReport report;
  report.family = family;
  report.n = n;
  report.tol = tol;

  if (family == CertFamily::Fgm) {
    const DualCertificate cert = fgm_dual_point(n);
    report.lambda_set = lambda_set_residual(cert);
    const Rank1Report rank1 = check_rank1_decomposition_fgm(n, tol);
    report.rank1 = std::max(rank1.s_residual, rank1.bordered_residual);
    const CertificateMatrices mats = build_S(build_h_fgm1(n), cert);
    const PsdReport psd = psd_check(mats.bordered, 1e-10);
    report.min_eigenvalue = psd.min_eigenvalue;
    report.matrix_norm = psd.norm;
    report.bound = certified_bound(cert, 1.0, 1.0);
    report.pass =
        report.lambda_set <= tol && report.rank1 <= tol && psd.pass;
  } else {
    const OgmDualPoint point = ogm_dual_point(n);
    report.lambda_set = lambda_set_residual(point.cert);
    report.feas_system =
        check_feasibility_system(point.r, point.cert, tol).max_residual;
    report.recursion = check_appendix_recursion(point.cert, tol).max_residual;
    const CertificateMatrices mats =
        build_S(build_h_ogm_direct(n), point.cert);
    const PsdReport psd = psd_check(mats.bordered, 1e-10);
    report.min_eigenvalue = psd.min_eigenvalue;
    report.matrix_norm = psd.norm;
    report.bound = certified_bound(point.cert, 1.0, 1.0);
    report.pass = report.lambda_set <= tol && report.feas_system <= tol &&
                  report.recursion <= tol && psd.pass;
  }
  return report;
}

std::string certification_report_to_json(const CertificationReport& report) {
  nlohmann::json j;
  j["family"] = report.family == CertFamily::Fgm ? "fgm" : "ogm";
  j["N"] = report.n;
  j["tol"] = report.tol;
  nlohmann::json residuals;
  residuals["lambda_set"] = report.lambda_set;
  if (report.family == CertFamily::Ogm) {
    residuals["feas_system"] = report.feas_system;
    residuals["recursion"] = report.recursion;
  } else {
    residuals["rank1"] = report.rank1;
  }
  j["residuals"] = std::move(residuals);
  j["min_eig"] = report.min_eigenvalue;
  j["matrix_norm"] = report.matrix_norm;
  j["bound"] = report.bound;
  j["bound_kind"] = "relaxed-PEP certified";
  j["pass"] = report.pass;
  return j.dump(2);
}

}  // namespace ogm
