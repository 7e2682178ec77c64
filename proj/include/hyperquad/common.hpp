#ifndef HYPERQUAD_COMMON_HPP
#define HYPERQUAD_COMMON_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace hq {

/// Integration domain of the weight: positive half-line (Laguerre) or
/// the whole real line (Laplace).
enum class Domain { HalfLine, FullLine };

inline const char* to_string(Domain d) {
  return d == Domain::HalfLine ? "half" : "full";
}

/// Thrown when a grid or sweep would exceed the configured evaluation cap.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown on numerical failure: eigensolver non-convergence, recurrence
/// overflow, failed norm certification, non-convergent tail.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fixed-shape pairwise reduction. The tree depends only on the length,
/// so the result is bit-identical however the inputs were produced.
inline double pairwise_sum(const double* v, std::ptrdiff_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::ptrdiff_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

inline double pairwise_sum(std::span<const double> v) {
  return pairwise_sum(v.data(), static_cast<std::ptrdiff_t>(v.size()));
}

inline double pairwise_sum(const Eigen::VectorXd& v) {
  return pairwise_sum(v.data(), v.size());
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double c = 1.0;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

}  // namespace hq

#endif
