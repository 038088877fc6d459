#include <doctest.h>

#include <cmath>
#include <cstring>

#include "ogm/sequences.hpp"
#include "oracles.hpp"

using ogm::SequenceKind;
using ogm::StepParamSequence;

TEST_CASE("fgm t-sequence base values") {
  const StepParamSequence t1 = ogm::fgm_t_sequence(1);
  CHECK(t1.values[0] == 1.0);
  CHECK(t1.values[1] == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0)
                            .epsilon(1e-15));

  // Frozen from the extended-precision recursion oracle.
  const StepParamSequence t2 = ogm::fgm_t_sequence(2);
  CHECK(t2.values[2] == doctest::Approx(2.1935270853310541).epsilon(1e-14));
}

TEST_CASE("fgm t-sequence matches extended-precision oracle") {
  const int n = 200;
  const StepParamSequence t = ogm::fgm_t_sequence(n);
  const std::vector<long double> ref = oracle::t_sequence_ext(n);
  for (int i = 0; i <= n; ++i) {
    const double rel =
        std::fabs(static_cast<double>(t.values[i] - ref[i])) / ref[i];
    CHECK(rel <= 1e-14);
  }
}

TEST_CASE("fgm t-sequence growth lower bound") {
  const StepParamSequence t = ogm::fgm_t_sequence(500);
  for (int i = 0; i <= 500; ++i) CHECK(t.values[i] >= (i + 2) / 2.0);
}

TEST_CASE("ogm theta-sequence base values") {
  const StepParamSequence th1 = ogm::ogm_theta_sequence(1);
  CHECK(th1.values[0] == 1.0);
  CHECK(th1.values[1] == 2.0);  // (1 + sqrt(9)) / 2 exactly

  // theta_1^2 - theta_1 - 2 theta_0^2 = 0 at N = 1.
  CHECK(th1.values[1] * th1.values[1] - th1.values[1] - 2.0 == 0.0);

  // Frozen from the extended-precision oracle.
  const StepParamSequence th2 = ogm::ogm_theta_sequence(2);
  CHECK(th2.values[2] == doctest::Approx(2.8422356793243053).epsilon(1e-14));
}

TEST_CASE("ogm theta matches t below the horizon") {
  const int n = 40;
  const StepParamSequence t = ogm::fgm_t_sequence(n);
  const StepParamSequence th = ogm::ogm_theta_sequence(n);
  for (int i = 0; i <= n - 1; ++i) CHECK(th.values[i] == t.values[i]);
  CHECK(th.values[n] > t.values[n]);
  CHECK(ogm::ogm_theta_last(n) == th.values[n]);
}

TEST_CASE("invalid horizons rejected") {
  CHECK_THROWS_AS(ogm::fgm_t_sequence(0), std::invalid_argument);
  CHECK_THROWS_AS(ogm::ogm_theta_sequence(-3), std::invalid_argument);
  const StepParamSequence t = ogm::fgm_t_sequence(3);
  CHECK_THROWS_AS(t.at(4), std::out_of_range);
  CHECK_THROWS_AS(t.at(-1), std::out_of_range);
  CHECK(t.at(3) == t.values[3]);
}

TEST_CASE("identity checks pass for built sequences") {
  const auto rep_t = ogm::check_sequence_identities(ogm::fgm_t_sequence(10), 1e-12);
  CHECK(rep_t.pass);
  CHECK(rep_t.final_residual == 0.0);

  const auto rep_th =
      ogm::check_sequence_identities(ogm::ogm_theta_sequence(5), 1e-12);
  CHECK(rep_th.pass);

  // Sum identity at the last plain index: sum_{k=0}^{4} theta_k = theta_4^2.
  const StepParamSequence th = ogm::ogm_theta_sequence(5);
  double sum = 0.0;
  for (int i = 0; i <= 4; ++i) sum += th.values[i];
  CHECK(std::fabs(sum - th.values[4] * th.values[4]) /
            (th.values[4] * th.values[4]) <=
        1e-12);
}

TEST_CASE("identity check detects tampering") {
  StepParamSequence t = ogm::fgm_t_sequence(6);
  t.values[3] += 1e-6;
  const auto rep = ogm::check_sequence_identities(t, 1e-12);
  CHECK_FALSE(rep.pass);
  CHECK(rep.max_residual > 1e-8);
  CHECK(rep.max_residual < 1e-4);
}

TEST_CASE("theta/t ratio grows toward two") {
  // theta_N^2 / t_N^2 increases with N and reaches 1.99 by N = 1000.
  double t = 1.0;
  double prev_ratio = 0.0;
  for (int n = 1; n <= 1000; ++n) {
    const double t_next = (1.0 + std::sqrt(1.0 + 4.0 * t * t)) / 2.0;
    const double theta_n = (1.0 + std::sqrt(1.0 + 8.0 * t * t)) / 2.0;
    const double ratio = theta_n * theta_n / (t_next * t_next);
    CHECK(ratio > prev_ratio);
    CHECK(ratio < 2.0);
    if (n == 1000) CHECK(ratio >= 1.99);
    prev_ratio = ratio;
    t = t_next;
  }
}

TEST_CASE("theta bracket between t-based bounds") {
  for (int n : {1, 2, 3, 7, 20, 100}) {
    const StepParamSequence t = ogm::fgm_t_sequence(n);
    const double theta_n = ogm::ogm_theta_last(n);
    const double tn1 = t.values[n - 1], tn = t.values[n];
    CHECK(theta_n * theta_n > 2.0 * tn1 * tn1);
    CHECK(theta_n * theta_n < 2.0 * tn * tn + 1.0);
  }
}

TEST_CASE("sequences are bit-identical across calls") {
  const StepParamSequence a = ogm::fgm_t_sequence(64);
  const StepParamSequence b = ogm::fgm_t_sequence(64);
  CHECK(std::memcmp(a.values.data(), b.values.data(),
                    a.values.size() * sizeof(double)) == 0);
  const StepParamSequence c = ogm::ogm_theta_sequence(64);
  const StepParamSequence d = ogm::ogm_theta_sequence(64);
  CHECK(std::memcmp(c.values.data(), d.values.data(),
                    c.values.size() * sizeof(double)) == 0);
}
