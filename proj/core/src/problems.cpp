#include "ogm/problems.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace ogm {

SmoothProblem::SmoothProblem(int dim, double lipschitz, ValueFn value,
                             GradFn grad, std::optional<Optimum> optimum)
    : dim_(dim),
      lipschitz_(lipschitz),
      value_(std::move(value)),
      grad_(std::move(grad)),
      optimum_(std::move(optimum)),
      grad_calls_(std::make_shared<std::atomic<std::int64_t>>(0)),
      value_calls_(std::make_shared<std::atomic<std::int64_t>>(0)) {
  if (dim_ < 1) throw std::invalid_argument("problem dimension must be >= 1");
  if (!(lipschitz_ > 0.0))
    throw std::invalid_argument("Lipschitz constant must be positive");
}

double SmoothProblem::value(const Eigen::VectorXd& x) const {
  value_calls_->fetch_add(1, std::memory_order_relaxed);
  return value_(x);
}

Eigen::VectorXd SmoothProblem::gradient(const Eigen::VectorXd& x) const {
  grad_calls_->fetch_add(1, std::memory_order_relaxed);
  return grad_(x);
}

void SmoothProblem::reset_counters() const {
  grad_calls_->store(0);
  value_calls_->store(0);
}

SmoothProblem make_quadratic(int dim, const std::vector<double>& eigenvalues,
                             unsigned seed) {
  if (dim < 1) throw std::invalid_argument("quadratic dimension must be >= 1");
  if (static_cast<int>(eigenvalues.size()) != dim)
    throw std::invalid_argument("need one eigenvalue per dimension");
  double lmax = 0.0;
  for (double ev : eigenvalues) {
    if (ev < 0.0)
      throw std::invalid_argument("quadratic eigenvalues must be nonnegative");
    lmax = std::max(lmax, ev);
  }
  if (lmax == 0.0)
    throw std::invalid_argument("at least one eigenvalue must be positive");

  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = gauss(rng);
  const Eigen::MatrixXd q =
      Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ();
  Eigen::VectorXd d(dim);
  for (int i = 0; i < dim; ++i) d(i) = eigenvalues[static_cast<std::size_t>(i)];
  const Eigen::MatrixXd a = q * d.asDiagonal() * q.transpose();

  Eigen::VectorXd x_star(dim);
  for (int i = 0; i < dim; ++i) x_star(i) = gauss(rng);

  auto value = [a, x_star](const Eigen::VectorXd& x) {
    const Eigen::VectorXd dx = x - x_star;
    return 0.5 * dx.dot(a * dx);
  };
  auto grad = [a, x_star](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    return a * (x - x_star);
  };
  return SmoothProblem(dim, lmax, value, grad, Optimum{x_star, 0.0});
}

SmoothProblem make_huber(int dim, double delta,
                         const Eigen::VectorXd& target) {
  if (!(delta > 0.0)) throw std::invalid_argument("huber delta must be > 0");
  if (target.size() != dim)
    throw std::invalid_argument("huber target dimension mismatch");

  auto value = [delta, target](const Eigen::VectorXd& x) {
    double f = 0.0;
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      const double u = std::fabs(x(j) - target(j));
      f += u <= delta ? 0.5 * u * u : delta * u - 0.5 * delta * delta;
    }
    return f;
  };
  auto grad = [delta, target](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    Eigen::VectorXd g(x.size());
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      const double u = x(j) - target(j);
      g(j) = std::fabs(u) <= delta ? u : (u > 0 ? delta : -delta);
    }
    return g;
  };
  return SmoothProblem(dim, 1.0, value, grad, Optimum{target, 0.0});
}

namespace {

// log(1 + exp(-s)) without overflow for large |s|.
double log1p_exp_neg(double s) {
  return s >= 0.0 ? std::log1p(std::exp(-s)) : -s + std::log1p(std::exp(s));
}

}  // namespace

SmoothProblem make_logistic_smooth(const Eigen::MatrixXd& design,
                                   const Eigen::VectorXd& labels,
                                   double reg) {
  if (design.rows() != labels.size())
    throw std::invalid_argument("design rows and label count differ");
  if (design.cols() < 1)
    throw std::invalid_argument("design needs at least one column");
  if (!(reg > 0.0))
    throw std::invalid_argument("regularization must be positive");

  const int dim = static_cast<int>(design.cols());
  const double spectral =
      design.squaredNorm() == 0.0
          ? 0.0
          : Eigen::JacobiSVD<Eigen::MatrixXd>(design).singularValues()(0);
  const double lipschitz = spectral * spectral / 4.0 + reg;

  auto value = [design, labels, reg](const Eigen::VectorXd& w) {
    const Eigen::VectorXd margins = labels.cwiseProduct(design * w);
    double f = 0.0;
    for (Eigen::Index i = 0; i < margins.size(); ++i)
      f += log1p_exp_neg(margins(i));
    return f + 0.5 * reg * w.squaredNorm();
  };
  auto grad = [design, labels, reg](const Eigen::VectorXd& w) -> Eigen::VectorXd {
    const Eigen::VectorXd margins = labels.cwiseProduct(design * w);
    Eigen::VectorXd coeff(margins.size());
    for (Eigen::Index i = 0; i < margins.size(); ++i) {
      const double s = margins(i);
      const double sig = s >= 0.0 ? std::exp(-s) / (1.0 + std::exp(-s))
                                  : 1.0 / (1.0 + std::exp(s));
      coeff(i) = -labels(i) * sig;
    }
    return design.transpose() * coeff + reg * w;
  };

  // Reference optimum by plain 1/L gradient descent; the regularizer makes
  // the problem strongly convex, so this converges to machine precision
  // long before the iteration cap.
  Eigen::VectorXd w = Eigen::VectorXd::Zero(dim);
  for (int it = 0; it < 1000000; ++it) {
    const Eigen::VectorXd g = grad(w);
    if (g.norm() <= 1e-15 * std::max(1.0, std::fabs(value(w)))) break;
    w -= g / lipschitz;
  }
  const Optimum opt{w, value(w)};

  return SmoothProblem(dim, lipschitz, value, grad, opt);
}

SampledFunctionReport check_sampled_smooth_convex(const SmoothProblem& problem,
                                                  int pairs, unsigned seed,
                                                  double radius) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int dim = problem.dim();
  const double lipschitz = problem.lipschitz();
  SampledFunctionReport report;
  auto sample = [&] {
    Eigen::VectorXd v(dim);
    for (int j = 0; j < dim; ++j) v(j) = radius * gauss(rng);
    return v;
  };
  for (int p = 0; p < pairs; ++p) {
    const Eigen::VectorXd x = sample(), y = sample();
    const Eigen::VectorXd gx = problem.gradient(x), gy = problem.gradient(y);
    const double fx = problem.value(x), fy = problem.value(y);
    const double dx = (x - y).norm();
    if (dx > 0.0) {
      const double excess = (gx - gy).norm() / (lipschitz * dx) - 1.0;
      report.worst_smoothness_excess =
          std::max(report.worst_smoothness_excess, excess);
    }
    const double scale = std::max({1.0, std::fabs(fx), std::fabs(fy)});
    const double violation = (fx + gx.dot(y - x) - fy) / scale;
    report.worst_convexity_violation =
        std::max(report.worst_convexity_violation, violation);
  }
  report.pass = report.worst_smoothness_excess <= 1e-8 &&
                report.worst_convexity_violation <= 1e-8;
  return report;
}

LoadedProblem make_problem_from_spec_json(const std::string& json_text) {
  const nlohmann::json spec = nlohmann::json::parse(json_text);
  const std::string type = spec.at("type").get<std::string>();
  const int dim = spec.at("dim").get<int>();
  const unsigned seed = spec.value("seed", 0u);
  const nlohmann::json params =
      spec.contains("params") ? spec.at("params") : nlohmann::json::object();
  const double r = params.value("r", 1.0);

  std::mt19937 rng(seed + 0x9e3779b9u);  // direction stream, separate from the problem's
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto unit_direction = [&] {
    Eigen::VectorXd v(dim);
    do {
      for (int j = 0; j < dim; ++j) v(j) = gauss(rng);
    } while (v.norm() == 0.0);
    return Eigen::VectorXd(v / v.norm());
  };

  if (type == "quadratic") {
    std::vector<double> eigenvalues;
    if (params.contains("eigenvalues")) {
      eigenvalues = params.at("eigenvalues").get<std::vector<double>>();
    } else {
      const double lmax = params.value("lmax", 1.0);
      std::mt19937 ev_rng(seed + 1);
      std::uniform_real_distribution<double> uni(0.0, lmax);
      eigenvalues.resize(static_cast<std::size_t>(dim));
      for (auto& ev : eigenvalues) ev = uni(ev_rng);
      eigenvalues.front() = lmax;  // pin L exactly
    }
    SmoothProblem problem = make_quadratic(dim, eigenvalues, seed);
    const Eigen::VectorXd x0 = problem.optimum()->x_star + r * unit_direction();
    return LoadedProblem{std::move(problem), x0, r};
  }
  if (type == "huber") {
    const double delta = params.value("delta", 0.5);
    Eigen::VectorXd target(dim);
    for (int j = 0; j < dim; ++j) target(j) = gauss(rng);
    SmoothProblem problem = make_huber(dim, delta, target);
    const Eigen::VectorXd x0 = target + r * unit_direction();
    return LoadedProblem{std::move(problem), x0, r};
  }
  if (type == "logistic") {
    const int rows = params.value("rows", 4 * dim);
    const double reg = params.value("reg", 1e-3);
    std::mt19937 data_rng(seed + 2);
    std::normal_distribution<double> data_gauss(0.0, 1.0);
    Eigen::MatrixXd design(rows, dim);
    Eigen::VectorXd labels(rows);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < dim; ++j) design(i, j) = data_gauss(data_rng);
      labels(i) = data_gauss(data_rng) >= 0.0 ? 1.0 : -1.0;
    }
    SmoothProblem problem = make_logistic_smooth(design, labels, reg);
    const Eigen::VectorXd x0 = problem.optimum()->x_star + r * unit_direction();
    return LoadedProblem{std::move(problem), x0, r};
  }
  throw std::invalid_argument("unknown problem type: " + type);
}

}  // namespace ogm
