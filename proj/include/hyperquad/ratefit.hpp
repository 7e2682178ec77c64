#ifndef HYPERQUAD_RATEFIT_HPP
#define HYPERQUAD_RATEFIT_HPP

#include <optional>
#include <utility>
#include <vector>

namespace hq {

/// Least-squares fit of log(error) against log(n). Samples with error
/// below the floor are rounding-dominated and excluded; the first
/// `skip_head` samples are dropped as pre-asymptotic.
struct RateFit {
  std::vector<std::pair<double, double>> samples;  // (n, error) used in the fit
  double slope = 0.0;
  double intercept = 0.0;
  std::optional<double> log_correction_exponent;  // error divided by (log n)^kappa before fitting
};

RateFit fit_rate(const std::vector<std::pair<double, double>>& samples, int skip_head = 2,
                 double floor = 1e-13, std::optional<double> log_correction = std::nullopt);

}  // namespace hq

#endif
