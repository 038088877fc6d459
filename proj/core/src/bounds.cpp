#include "ogm/bounds.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "ogm/sequences.hpp"

namespace ogm {

namespace {

// Shared, growing t-cache so repeated bound lookups stay O(1) amortized.
// The t-recursion is prefix-stable, so one vector serves every horizon.
class TCache {
 public:
  double t(int i) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<int>(values_.size()) <= i) {
      const double prev = values_.back();
      values_.push_back((1.0 + std::sqrt(1.0 + 4.0 * prev * prev)) / 2.0);
    }
    return values_[static_cast<std::size_t>(i)];
  }

  double theta_last(int n) {
    const double prev = t(n - 1);
    return (1.0 + std::sqrt(1.0 + 8.0 * prev * prev)) / 2.0;
  }

 private:
  std::mutex mutex_;
  std::vector<double> values_{1.0};
};

TCache& cache() {
  static TCache instance;
  return instance;
}

void require_bound_args(int n, double lipschitz, double r) {
  if (n < 1) throw std::invalid_argument("bound requires n >= 1");
  if (!(lipschitz > 0.0) || !(r > 0.0))
    throw std::invalid_argument("bound requires L > 0 and R > 0");
}

}  // namespace

BoundPair fgm_auxiliary_bound(int n, double lipschitz, double r) {
  require_bound_args(n, lipschitz, r);
  const double scale = lipschitz * r * r;
  const double t = cache().t(n - 1);
  return BoundPair{scale * (0.5 / (t * t)),
                   scale * (2.0 / ((n + 1.0) * (n + 1.0)))};
}

BoundPair fgm_primary_bound(int n, double lipschitz, double r) {
  require_bound_args(n, lipschitz, r);
  const double scale = lipschitz * r * r;
  const double t = cache().t(n);
  return BoundPair{scale * (0.5 / (t * t)),
                   scale * (2.0 / ((n + 2.0) * (n + 2.0)))};
}

BoundPair ogm_bound(int n, double lipschitz, double r) {
  require_bound_args(n, lipschitz, r);
  const double scale = lipschitz * r * r;
  const double theta = cache().theta_last(n);
  return BoundPair{scale * (0.5 / (theta * theta)),
                   scale * (1.0 / ((n + 1.0) * (n + 1.0 + std::sqrt(2.0))))};
}

double lower_bound(int n, double lipschitz, double r) {
  require_bound_args(n, lipschitz, r);
  return lipschitz * r * r * (3.0 / (32.0 * (n + 1.0) * (n + 1.0)));
}

int iterations_for_accuracy(double eps, double lipschitz, double r,
                            MethodFamily method) {
  if (!(eps > 0.0)) throw std::invalid_argument("accuracy eps must be > 0");
  if (!(lipschitz > 0.0) || !(r > 0.0))
    throw std::invalid_argument("requires L > 0 and R > 0");
  const double factor = method == MethodFamily::Ogm ? 1.0 : 2.0;
  const double raw = std::sqrt(factor * lipschitz / eps) * r;
  // Guard the ceiling against values a few ulps above an integer.
  const double floor_val = std::floor(raw);
  const int count =
      raw - floor_val <= 1e-9 * std::max(1.0, raw)
          ? static_cast<int>(floor_val)
          : static_cast<int>(floor_val) + 1;
  return std::max(count, 1);
}

}  // namespace ogm
