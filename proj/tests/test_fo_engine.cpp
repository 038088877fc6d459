#include <doctest.h>

#include <cmath>

#include "ogm/fo_engine.hpp"
#include "ogm/methods.hpp"
#include "ogm/worstcase.hpp"

using ogm::CoefficientTable;
using ogm::IterateTrace;
using ogm::SmoothProblem;

TEST_CASE("fo with the fgm1 table tracks run_fgm1") {
  const SmoothProblem p = ogm::make_quadratic(12, {2.0, 1.7, 1.1, 0.9, 0.6,
                                                   0.5, 0.4, 0.3, 0.2, 0.15,
                                                   0.1, 0.05}, 17);
  Eigen::VectorXd x0 = p.optimum()->x_star;
  x0(0) += 2.0;
  x0(3) -= 1.0;
  const int n = 15;
  const IterateTrace fo = ogm::run_fo(p, x0, ogm::build_h_fgm1(n));
  const IterateTrace fgm = ogm::run_fgm1(p, x0, n);
  for (int i = 0; i <= n; ++i)
    CHECK((fo.points[i] - fgm.points[i]).norm() <= 1e-10);
}

TEST_CASE("fixed point at the optimum") {
  const SmoothProblem p = ogm::make_quadratic(3, {1.0, 0.5, 0.25}, 2);
  const Eigen::VectorXd x0 = p.optimum()->x_star;
  const IterateTrace trace = ogm::run_fo(p, x0, ogm::build_h_ogm_direct(6));
  for (const auto& x : trace.points) CHECK((x - x0).norm() == 0.0);
  for (double gap : trace.f_gaps) CHECK(gap == 0.0);
}

TEST_CASE("fo with the ogm table lands on the predicted worst-case point") {
  const auto spec = ogm::WorstCaseSpec::make(4);
  const SmoothProblem p = ogm::worst_case_problem(spec);
  const Eigen::VectorXd x0 = spec.r * spec.nu;
  const IterateTrace trace = ogm::run_fo(p, x0, ogm::build_h_ogm_direct(4));
  const auto predicted = ogm::predicted_trace(spec);
  CHECK((trace.points.back() - predicted.back()).norm() <= 1e-13);
}

TEST_CASE("single unit step is a plain gradient step") {
  const SmoothProblem p = ogm::make_quadratic(5, {1.5, 1.0, 0.7, 0.2, 0.1}, 33);
  Eigen::VectorXd x0 = p.optimum()->x_star + Eigen::VectorXd::Ones(5);
  const CoefficientTable unit(1, {1.0});
  const IterateTrace trace = ogm::run_fo(p, x0, unit);
  const Eigen::VectorXd expected =
      x0 - (1.0 / p.lipschitz()) * p.gradient(x0);
  CHECK((trace.points[1] - expected).norm() == 0.0);
}

TEST_CASE("fo is deterministic") {
  const SmoothProblem p = ogm::make_quadratic(6, {1.0, 0.9, 0.8, 0.7, 0.6, 0.5}, 4);
  Eigen::VectorXd x0 = p.optimum()->x_star + Eigen::VectorXd::Ones(6);
  const CoefficientTable h = ogm::build_h_fgm2(10);
  const IterateTrace a = ogm::run_fo(p, x0, h);
  const IterateTrace b = ogm::run_fo(p, x0, h);
  for (int i = 0; i <= 10; ++i)
    CHECK((a.points[i] - b.points[i]).norm() == 0.0);
}

TEST_CASE("non-finite gradients raise an oracle failure with the iteration") {
  const SmoothProblem bad(
      2, 1.0, [](const Eigen::VectorXd&) { return 0.0; },
      [](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        Eigen::VectorXd g = x;
        if (x(0) < 0.9) g(0) = std::nan("");
        return g;
      });
  Eigen::VectorXd x0 = Eigen::VectorXd::Ones(2);
  try {
    ogm::run_fo(bad, x0, ogm::build_h_fgm1(8));
    FAIL("expected OracleFailure");
  } catch (const ogm::OracleFailure& e) {
    CHECK(e.iteration() > 0);
  }
}

TEST_CASE("dimension mismatch rejected") {
  const SmoothProblem p = ogm::make_quadratic(3, {1.0, 1.0, 1.0}, 5);
  Eigen::VectorXd x0 = Eigen::VectorXd::Ones(2);
  CHECK_THROWS_AS(ogm::run_fo(p, x0, ogm::build_h_fgm1(2)),
                  std::invalid_argument);
}

TEST_CASE("trace json has the documented fields") {
  const SmoothProblem p = ogm::make_quadratic(2, {1.0, 0.5}, 8);
  Eigen::VectorXd x0 = p.optimum()->x_star + Eigen::VectorXd::Ones(2);
  const IterateTrace trace = ogm::run_fgm1(p, x0, 3);
  ogm::TraceRunInfo info;
  info.method = "fgm1";
  info.n = 3;
  info.lipschitz = p.lipschitz();
  info.r = std::sqrt(2.0);
  info.bound_tight = 0.1;
  info.bound_relaxed = 0.2;
  const std::string json = ogm::trace_to_json(trace, info);
  for (const char* key : {"\"method\"", "\"N\"", "\"L\"", "\"R\"",
                          "\"f_gaps\"", "\"grad_norms\"", "\"bound_tight\"",
                          "\"bound_relaxed\""})
    CHECK(json.find(key) != std::string::npos);
  CHECK(json.find("\"points\"") == std::string::npos);

  info.include_points = true;
  CHECK(ogm::trace_to_json(trace, info).find("\"points\"") !=
        std::string::npos);
}
