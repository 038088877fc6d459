#include <doctest.h>

#include <cmath>
#include <random>

#include "ogm/methods.hpp"
#include "ogm/problems.hpp"

using ogm::SmoothProblem;

TEST_CASE("one-dimensional quadratic: a 1/L step solves it") {
  const SmoothProblem p = ogm::make_quadratic(1, {1.0}, 7);
  const Eigen::VectorXd x_star = p.optimum()->x_star;
  Eigen::VectorXd x0(1);
  x0 << x_star(0) + 3.0;
  const Eigen::VectorXd x1 = x0 - p.gradient(x0) / p.lipschitz();
  CHECK((x1 - x_star).norm() <= 1e-14);
}

TEST_CASE("quadratic is deterministic per seed") {
  const SmoothProblem a = ogm::make_quadratic(8, std::vector<double>(8, 2.0), 42);
  const SmoothProblem b = ogm::make_quadratic(8, std::vector<double>(8, 2.0), 42);
  Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(8, -1.0, 1.0);
  CHECK(a.value(x) == b.value(x));
  CHECK((a.gradient(x) - b.gradient(x)).norm() == 0.0);
  CHECK((a.optimum()->x_star - b.optimum()->x_star).norm() == 0.0);
}

TEST_CASE("quadratic input validation") {
  CHECK_THROWS_AS(ogm::make_quadratic(2, {1.0, -0.5}, 1), std::invalid_argument);
  CHECK_THROWS_AS(ogm::make_quadratic(2, {1.0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(ogm::make_quadratic(2, {0.0, 0.0}, 1), std::invalid_argument);
}

TEST_CASE("huber basics") {
  const int dim = 5;
  const double delta = 0.5;
  Eigen::VectorXd target = Eigen::VectorXd::Constant(dim, 1.0);
  const SmoothProblem p = ogm::make_huber(dim, delta, target);
  CHECK(p.gradient(target).norm() == 0.0);
  CHECK(p.value(target) == 0.0);

  // Far from the target every coordinate saturates at delta.
  Eigen::VectorXd far = target + Eigen::VectorXd::Constant(dim, 100.0);
  CHECK(p.gradient(far).norm() ==
        doctest::Approx(delta * std::sqrt(double(dim))).epsilon(1e-14));

  CHECK_THROWS_AS(ogm::make_huber(dim, 0.0, target), std::invalid_argument);
}

TEST_CASE("sampled smoothness and convexity hold for the suite") {
  const SmoothProblem quad = ogm::make_quadratic(6, {0.3, 1.0, 2.0, 2.5, 0.1, 3.0}, 5);
  CHECK(ogm::check_sampled_smooth_convex(quad, 200, 11).pass);

  Eigen::VectorXd target = Eigen::VectorXd::Zero(4);
  const SmoothProblem hub = ogm::make_huber(4, 0.7, target);
  CHECK(ogm::check_sampled_smooth_convex(hub, 200, 12).pass);
}

TEST_CASE("logistic: zero design reduces to the regularizer") {
  Eigen::MatrixXd design = Eigen::MatrixXd::Zero(6, 3);
  Eigen::VectorXd labels = Eigen::VectorXd::Ones(6);
  const SmoothProblem p = ogm::make_logistic_smooth(design, labels, 0.5);
  CHECK(p.lipschitz() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p.optimum()->x_star.norm() <= 1e-12);
  // Loss at the optimum is the constant 6 * log 2 from the zero margins.
  CHECK(p.optimum()->f_star ==
        doctest::Approx(6.0 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("logistic: ogm gap stays under the certified bound") {
  std::mt19937 rng(3);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd design(10, 3);
  Eigen::VectorXd labels(10);
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 3; ++j) design(i, j) = gauss(rng);
    labels(i) = i % 2 == 0 ? 1.0 : -1.0;
  }
  const SmoothProblem p = ogm::make_logistic_smooth(design, labels, 1e-2);
  CHECK(ogm::check_sampled_smooth_convex(p, 100, 9, 2.0).pass);

  Eigen::VectorXd dir(3);
  dir << 1.0, -2.0, 0.5;
  dir.normalize();
  const double r = 2.0;
  const Eigen::VectorXd x0 = p.optimum()->x_star + r * dir;
  const int n = 12;
  const ogm::IterateTrace trace = ogm::run_ogm1(p, x0, n);
  const double theta_n = ogm::ogm_theta_last(n);
  const double bound = p.lipschitz() * r * r / (2.0 * theta_n * theta_n);
  CHECK(trace.f_gaps.back() <= bound * (1.0 + 1e-8));
}

TEST_CASE("gradient evaluations are counted exactly") {
  const SmoothProblem p = ogm::make_quadratic(4, {1.0, 1.0, 0.5, 0.2}, 21);
  p.reset_counters();
  Eigen::VectorXd x0 = p.optimum()->x_star + Eigen::VectorXd::Ones(4);
  const int n = 9;
  ogm::run_fgm1(p, x0, n);
  CHECK(p.eval_count() == n);
  p.reset_counters();
  ogm::run_ogm2(p, x0, n);
  CHECK(p.eval_count() == n);
}

TEST_CASE("problem spec json round-trips into a runnable problem") {
  const std::string spec = R"({
    "type": "quadratic", "dim": 4, "seed": 9,
    "params": {"lmax": 2.0, "r": 1.5}
  })";
  const ogm::LoadedProblem loaded = ogm::make_problem_from_spec_json(spec);
  CHECK(loaded.problem.dim() == 4);
  CHECK(loaded.problem.lipschitz() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK((loaded.x0 - loaded.problem.optimum()->x_star).norm() ==
        doctest::Approx(1.5).epsilon(1e-12));

  const std::string huber = R"({"type": "huber", "dim": 3, "seed": 1})";
  CHECK(ogm::make_problem_from_spec_json(huber).problem.lipschitz() == 1.0);

  CHECK_THROWS(ogm::make_problem_from_spec_json(R"({"type": "nope", "dim": 1})"));
}
