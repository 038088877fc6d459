#pragma once

#include <Eigen/Core>
#include <string>

#include "ogm/coefficients.hpp"
#include "ogm/sequences.hpp"

namespace ogm {

/// Dual multipliers certifying a worst-case bound 0.5 L R^2 gamma.
///
/// lambda[i-1] stores lambda_i (i = 1..N), tau[i] stores tau_i (i = 0..N).
/// Membership in the multiplier set requires tau_0 = lambda_1,
/// lambda_N + tau_N = 1 and lambda_i - lambda_{i+1} + tau_i = 0 for
/// i = 1..N-1, all multipliers nonnegative.
struct DualCertificate {
  int n = 0;
  std::vector<double> lambda;  // lambda_1..lambda_N
  std::vector<double> tau;     // tau_0..tau_N
  double gamma = 0.0;

  double lam(int i) const { return lambda[static_cast<std::size_t>(i) - 1]; }
  double tau_at(int i) const { return tau[static_cast<std::size_t>(i)]; }
};

/// Max-abs residual of the linear multiplier-set relations plus any
/// negativity below -1e-14.
double lambda_set_residual(const DualCertificate& cert);

/// The (N+1)x(N+1) certificate matrix S and the bordered (N+2)x(N+2)
/// matrix [[S, tau/2], [tau'/2, gamma/2]] whose positive semidefiniteness
/// certifies the bound. Both are exactly symmetric by construction and
/// S(N, N) = 1/2 for every multiplier-set member.
struct CertificateMatrices {
  Eigen::MatrixXd S;
  Eigen::MatrixXd bordered;
};

/// Dual feasible point for the FGM coefficient tables:
/// lambda_i = t_{i-1}^2 / t_N^2, tau_i = t_i / t_N^2, gamma = 1 / t_N^2.
DualCertificate fgm_dual_point(int n);

/// Dual feasible (and optimal) point for the OGM tables, together with the
/// reformulation variables r it was derived from:
/// lambda_i = 2 theta_{i-1}^2 / theta_N^2, tau_N = 1/theta_N,
/// gamma = 1 / theta_N^2.
struct OgmDualPoint {
  DualCertificate cert;
  RTable r;
};

OgmDualPoint ogm_dual_point(int n);

/// Assemble S entrywise from the four-case closed form (never by summing
/// outer products), plus the bordered matrix. Requires cert close to the
/// multiplier set; residuals beyond 1e-6 are rejected as malformed input.
CertificateMatrices build_S(const CoefficientTable& h,
                            const DualCertificate& cert);

/// Verifies the FGM certificate identity
///   S = (1/(2 t_N^2)) (t t' + diag(t_0^2..t_{N-1}^2, 0))
/// and the matching rank-1-plus-diagonal form of the bordered matrix.
struct Rank1Report {
  double s_residual = 0.0;         // max-abs S deviation
  double bordered_residual = 0.0;  // max-abs bordered deviation
  double min_eigenvalue = 0.0;     // of the bordered matrix
  bool pass = false;
};

Rank1Report check_rank1_decomposition_fgm(int n, double tol);

/// Same identity checked against a caller-supplied table (for detecting
/// tables that are not the FGM one).
Rank1Report check_rank1_decomposition_fgm(const CoefficientTable& h,
                                          double tol);

/// Residuals of the sufficient feasibility system
///   Q = 2 q q',  tau_head = 2 q tau_N,  gamma = tau_N^2,  (lambda,tau) in Lambda,
/// with Q and q assembled from (r, lambda, tau).
struct FeasibilityReport {
  double q_residual = 0.0;       // max-abs of Q - 2 q q'
  double tau_residual = 0.0;     // max-abs of tau_head - 2 q tau_N
  double gamma_residual = 0.0;   // |gamma - tau_N^2|
  double lambda_set = 0.0;       // multiplier-set residual
  double max_residual = 0.0;
  bool pass = false;
};

FeasibilityReport check_feasibility_system(const RTable& r,
                                           const DualCertificate& cert,
                                           double tol);

/// Residuals of the lambda recursion the OGM point uniquely solves:
///   lambda_1 = 2 (1 - lambda_N)^2,
///   (lambda_i - lambda_{i-1})^2 - lambda_1 lambda_i = 0,  i = 2..N.
struct RecursionReport {
  double first_residual = 0.0;
  double step_residual = 0.0;  // max over i = 2..N
  double max_residual = 0.0;
  bool pass = false;
};

RecursionReport check_appendix_recursion(const DualCertificate& cert,
                                         double tol);

/// PSD test via a symmetric eigendecomposition (backward-stable Eigen
/// SelfAdjointEigenSolver). Passes iff min eigenvalue >= -tol * ||M||_2,
/// with ||M||_2 taken from the same decomposition; the relative threshold
/// keeps exactly-singular certificates from flaking. Throws on input that
/// is non-symmetric beyond 1e-12 * ||M||_inf.
struct PsdReport {
  double min_eigenvalue = 0.0;
  double norm = 0.0;  // spectral norm
  bool pass = false;
};

PsdReport psd_check(const Eigen::MatrixXd& m, double tol = 1e-10);

/// The certified worst-case bound 0.5 * L * R^2 * gamma.
double certified_bound(const DualCertificate& cert, double lipschitz,
                       double r);

enum class CertFamily { Fgm, Ogm };

/// Everything the `certify` command reports for one family and horizon.
/// The bound is certified against the relaxed dual problem (valid in every
/// dimension), hence the fixed "relaxed-PEP certified" label.
struct CertificationReport {
  CertFamily family = CertFamily::Fgm;
  int n = 0;
  double tol = 0.0;
  double lambda_set = 0.0;
  double feas_system = 0.0;  // OGM only
  double recursion = 0.0;    // OGM only
  double rank1 = 0.0;        // FGM only
  double min_eigenvalue = 0.0;
  double matrix_norm = 0.0;
  double bound = 0.0;  // at L = R = 1
  bool pass = false;
};

CertificationReport run_full_certification(CertFamily family, int n,
                                           double tol);

std::string certification_report_to_json(const CertificationReport& report);

}  // namespace ogm
