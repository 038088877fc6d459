#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "ogm/bounds.hpp"

TEST_CASE("bound values at small n") {
  CHECK(ogm::fgm_auxiliary_bound(1, 1.0, 1.0).tight == 0.5);  // t_0 = 1
  CHECK(ogm::fgm_auxiliary_bound(1, 1.0, 1.0).relaxed == 0.5);
  CHECK(ogm::fgm_auxiliary_bound(10, 1.0, 1.0).relaxed ==
        doctest::Approx(2.0 / 121.0).epsilon(1e-15));

  CHECK(ogm::fgm_primary_bound(1, 1.0, 1.0).tight ==
        doctest::Approx(0.1909830056250526).epsilon(1e-14));
  CHECK(ogm::fgm_primary_bound(1, 1.0, 1.0).relaxed ==
        doctest::Approx(2.0 / 9.0).epsilon(1e-15));

  CHECK(ogm::ogm_bound(1, 1.0, 1.0).tight == 0.125);
  CHECK(ogm::ogm_bound(1, 1.0, 1.0).relaxed ==
        doctest::Approx(1.0 / (2.0 * (2.0 + std::sqrt(2.0)))).epsilon(1e-15));

  CHECK(ogm::lower_bound(1, 1.0, 1.0) == doctest::Approx(3.0 / 128.0).epsilon(1e-15));
  CHECK(ogm::lower_bound(10, 1.0, 1.0) ==
        doctest::Approx(3.0 / (32.0 * 121.0)).epsilon(1e-15));
}

TEST_CASE("tight forms never exceed their relaxations") {
  for (int n = 1; n <= 1000; ++n) {
    CHECK(ogm::fgm_auxiliary_bound(n, 1.0, 1.0).tight <=
          ogm::fgm_auxiliary_bound(n, 1.0, 1.0).relaxed);
    CHECK(ogm::fgm_primary_bound(n, 1.0, 1.0).tight <=
          ogm::fgm_primary_bound(n, 1.0, 1.0).relaxed);
    CHECK(ogm::ogm_bound(n, 1.0, 1.0).tight <=
          ogm::ogm_bound(n, 1.0, 1.0).relaxed);
  }
}

TEST_CASE("bound chain lower <= ogm <= fgm primary <= fgm auxiliary") {
  for (int n = 1; n <= 1000; ++n) {
    const double lo = ogm::lower_bound(n, 1.0, 1.0);
    const double og = ogm::ogm_bound(n, 1.0, 1.0).tight;
    const double fp = ogm::fgm_primary_bound(n, 1.0, 1.0).tight;
    const double fa = ogm::fgm_auxiliary_bound(n, 1.0, 1.0).tight;
    CHECK(lo <= og);
    CHECK(og <= fp);
    CHECK(fp <= fa);
    // Shift consistency: the primary bound at n is the auxiliary one at n+1.
    CHECK(fp == ogm::fgm_auxiliary_bound(n + 1, 1.0, 1.0).tight);
  }
}

TEST_CASE("ogm/fgm bound ratio falls toward one half") {
  double prev = 1.0;
  for (int n = 1; n <= 500; ++n) {
    const double ratio = ogm::ogm_bound(n, 1.0, 1.0).tight /
                         ogm::fgm_primary_bound(n, 1.0, 1.0).tight;
    CHECK(ratio > 0.5);
    CHECK(ratio < 1.0);
    CHECK(ratio < prev);
    prev = ratio;
  }
  CHECK(ogm::ogm_bound(1000, 1.0, 1.0).tight /
            ogm::fgm_primary_bound(1000, 1.0, 1.0).tight <=
        0.5025);
}

TEST_CASE("bounds are homogeneous in L and R^2") {
  for (int n : {1, 7, 64}) {
    const double base = ogm::ogm_bound(n, 1.0, 1.0).tight;
    CHECK(ogm::ogm_bound(n, 3.5, 0.25).tight ==
          doctest::Approx(3.5 * 0.0625 * base).epsilon(1e-15));
    const double fgm_base = ogm::fgm_primary_bound(n, 1.0, 1.0).relaxed;
    CHECK(ogm::fgm_primary_bound(n, 2.0, 3.0).relaxed ==
          doctest::Approx(18.0 * fgm_base).epsilon(1e-15));
  }
}

TEST_CASE("iteration counts for a target accuracy") {
  CHECK(ogm::iterations_for_accuracy(1e-4, 1.0, 1.0, ogm::MethodFamily::Ogm) ==
        100);
  CHECK(ogm::iterations_for_accuracy(1e-4, 1.0, 1.0, ogm::MethodFamily::Fgm) ==
        142);
  CHECK(ogm::iterations_for_accuracy(1.0, 1.0, 1.0, ogm::MethodFamily::Ogm) ==
        1);  // eps = L R^2
  for (double eps : {1e-1, 1e-3, 1e-6})
    CHECK(ogm::iterations_for_accuracy(eps, 2.0, 1.5, ogm::MethodFamily::Ogm) <=
          ogm::iterations_for_accuracy(eps, 2.0, 1.5, ogm::MethodFamily::Fgm));
  CHECK_THROWS_AS(ogm::iterations_for_accuracy(0.0, 1.0, 1.0,
                                               ogm::MethodFamily::Ogm),
                  std::invalid_argument);
}

TEST_CASE("bound argument validation") {
  CHECK_THROWS_AS(ogm::ogm_bound(0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ogm::fgm_primary_bound(3, -1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ogm::lower_bound(3, 1.0, 0.0), std::invalid_argument);
}
