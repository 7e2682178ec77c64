#include "hyperquad/weight.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hyperquad/panels.hpp"

namespace hq {

void WeightParams::validate() const {
  if (!(alpha > -1.0)) throw std::invalid_argument("WeightParams: alpha must be > -1");
  if (!(a > 0.0)) throw std::invalid_argument("WeightParams: a must be > 0");
  if (r < 0) throw std::invalid_argument("WeightParams: r must be >= 0");
  if (d < 1) throw std::invalid_argument("WeightParams: d must be >= 1");
  if (!std::isfinite(b)) throw std::invalid_argument("WeightParams: b must be finite");
}

CanonicalMap canonical_map(const WeightParams& p) {
  p.validate();
  return {p.a, std::exp(p.b) / std::pow(p.a, p.alpha + 0.5 * p.r + 1.0)};
}

double eval_weight(const WeightParams& p, Eigen::Ref<const Eigen::VectorXd> x, bool use_r) {
  p.validate();
  if (x.size() != p.d) throw std::invalid_argument("eval_weight: point dimension mismatch");
  const double s = p.alpha + (use_r ? 0.5 * p.r : 0.0);
  double v = 1.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    if (p.domain == Domain::HalfLine && xi < 0.0)
      throw std::domain_error("eval_weight: negative coordinate on the half-line");
    const double ax = std::abs(xi);
    if (ax == 0.0 && s < 0.0)
      throw std::domain_error("eval_weight: pole at zero coordinate (alpha + s < 0)");
    v *= std::pow(ax, s) * std::exp(-p.a * ax + p.b);
  }
  return v;
}

double moment0(const WeightParams& p) {
  p.validate();
  const double half = std::exp(p.b) * std::tgamma(p.alpha + 1.0) / std::pow(p.a, p.alpha + 1.0);
  return p.domain == Domain::FullLine ? 2.0 * half : half;
}

namespace {

// Per-axis composite panel layout: `resolution` panels on [0, T], mirrored
// to [-T, 0] on the full line so no panel straddles the |x| kink.
struct AxisGrid {
  std::vector<double> pts;
  std::vector<double> wts;
  std::size_t shell_begin;  // points with |x| in the outermost panel start here after sorting by |x|
};

AxisGrid axis_grid(const WeightParams& p, double T, int resolution) {
  const PanelRule& gl = gauss_legendre(32);
  AxisGrid g;
  const double h = T / resolution;
  auto add_range = [&](double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int q = 0; q < gl.nodes.size(); ++q) {
      g.pts.push_back(mid + half * gl.nodes[q]);
      g.wts.push_back(half * gl.weights[q]);
    }
  };
  for (int i = 0; i < resolution; ++i) add_range(i * h, (i + 1) * h);
  if (p.domain == Domain::FullLine)
    for (int i = 0; i < resolution; ++i) add_range(-(i + 1) * h, -i * h);
  return g;
}

}  // namespace

double sobolev_norm_estimate(const Integrand& f, const WeightParams& p, int resolution) {
  p.validate();
  if (resolution < 1) throw std::invalid_argument("sobolev_norm_estimate: resolution must be >= 1");
  if (f.arity != p.d) throw std::invalid_argument("sobolev_norm_estimate: arity mismatch");
  if (f.deriv_order < p.r)
    throw std::invalid_argument("sobolev_norm_estimate: integrand lacks derivatives up to r");

  const double T = 4.0 * resolution + 50.0 * std::max(1.0, p.alpha);
  const AxisGrid axis = axis_grid(p, T, resolution);
  const std::size_t npts = axis.pts.size();
  const double shell_lo = T - T / resolution;

  // all multi-indices |k|_inf <= r
  std::vector<std::vector<int>> ks;
  {
    std::vector<int> k(p.d, 0);
    for (;;) {
      ks.push_back(k);
      int i = p.d - 1;
      while (i >= 0 && k[i] == p.r) k[i--] = 0;
      if (i < 0) break;
      ++k[i];
    }
  }

  WeightParams wr = p;
  Eigen::VectorXd x(p.d);
  std::vector<std::size_t> idx(p.d, 0);
  double total = 0.0, shell = 0.0;
  for (;;) {
    double wprod = 1.0;
    bool in_shell = false;
    for (int i = 0; i < p.d; ++i) {
      x[i] = axis.pts[idx[i]];
      wprod *= axis.wts[idx[i]];
      if (std::abs(x[i]) >= shell_lo) in_shell = true;
    }
    const double wr_val = eval_weight(wr, x, /*use_r=*/true);
    double point_sum = 0.0;
    for (const auto& k : ks) point_sum += std::abs(f.derivative(k, x));
    const double contrib = wprod * wr_val * point_sum;
    total += contrib;
    if (in_shell) shell += contrib;

    int i = p.d - 1;
    while (i >= 0 && idx[i] + 1 == npts) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }

  if (total > 0.0 && shell > 1e-6 * total)
    throw NumericalError("sobolev_norm_estimate: tail did not converge at this resolution");
  return total;
}

}  // namespace hq
