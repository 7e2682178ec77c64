#include "hyperquad/panels.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "hyperquad/common.hpp"

namespace hq {

namespace {

// Newton iteration on the Legendre recurrence (the classic gauleg).
PanelRule make_gauss_legendre(int n) {
  PanelRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 1; i <= half; ++i) {
    double z = std::cos(M_PI * (i - 0.25) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    rule.nodes[i - 1] = -z;
    rule.nodes[n - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[i - 1] = w;
    rule.weights[n - i] = w;
  }
  return rule;
}

}  // namespace

const PanelRule& gauss_legendre(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("gauss_legendre: order must be in [1, 64]");
  static std::mutex mutex;
  static std::map<int, PanelRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
  return it->second;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int panels, int n) {
  const PanelRule& gl = gauss_legendre(n);
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(panels) * n);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    for (int q = 0; q < n; ++q) vals.push_back(half * gl.weights[q] * f(mid + half * gl.nodes[q]));
  }
  return pairwise_sum(vals);
}

double integrate_abs(const std::function<double(double)>& f, double a, double b,
                     int panels, int scan) {
  // locate sign changes on a scan grid, bisect each to ~1e-14 of the span
  std::vector<double> cuts{a};
  double prev_x = a + (b - a) * 0.5 / scan;
  double prev_v = f(prev_x);
  for (int i = 1; i < scan; ++i) {
    const double x = a + (b - a) * (i + 0.5) / scan;
    const double v = f(x);
    if (prev_v != 0.0 && v != 0.0 && std::signbit(prev_v) != std::signbit(v)) {
      double lo = prev_x, hi = x, flo = prev_v;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(flo)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      cuts.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev_v = v;
  }
  cuts.push_back(b);

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double len = cuts[i + 1] - cuts[i];
    if (len <= 0.0) continue;
    const int seg_panels = std::max(4, static_cast<int>(panels * len / (b - a)) + 1);
    total += std::abs(integrate_panels(f, cuts[i], cuts[i + 1], seg_panels, 16));
  }
  return total;
}

}  // namespace hq
