#ifndef HYPERQUAD_WEIGHT_HPP
#define HYPERQUAD_WEIGHT_HPP

#include <Eigen/Core>

#include "hyperquad/common.hpp"
#include "hyperquad/integrand.hpp"

namespace hq {

/// Parameters of the generalized Laguerre/Laplace weight family
///   w_r(x) = |x|^(alpha + r/2) exp(-a|x| + b)
/// tensorized over d coordinates.
struct WeightParams {
  double alpha = 0.0;  // exponent, > -1
  double a = 1.0;      // decay rate, > 0
  double b = 0.0;      // log-scale offset
  int r = 0;           // mixed smoothness order, >= 0
  Domain domain = Domain::HalfLine;
  int d = 1;

  void validate() const;  // throws std::invalid_argument on violated invariants
  bool canonical() const { return a == 1.0 && b == 0.0; }
};

/// Substitution t = a*x reducing (a, b) to the canonical (1, 0).
/// integral_factor is the per-coordinate Jacobian * e^b factor: a canonical
/// integral against w_r times integral_factor gives the general one.
struct CanonicalMap {
  double scale;            // = a
  double integral_factor;  // = e^b / a^(alpha + r/2 + 1)
};

CanonicalMap canonical_map(const WeightParams& p);

/// prod_i |x_i|^(alpha + s) exp(-a|x_i| + b) with s = r/2 if use_r else 0.
/// Throws std::domain_error on a negative coordinate (half-line) or a zero
/// coordinate when alpha + s < 0.
double eval_weight(const WeightParams& p, Eigen::Ref<const Eigen::VectorXd> x, bool use_r);

/// Total 1D mass of w = w_0: e^b Gamma(alpha+1)/a^(alpha+1) on the
/// half-line, doubled on the full line.
double moment0(const WeightParams& p);

/// Numerical estimate of the W^r_{1,w_r} norm
///   sum_{|k|_inf <= r} || D^k f ||_{L_{1,w_r}}
/// by composite 32-point Gauss-Legendre panels over [0, T]^d (reflected on
/// the full line), T = 4*resolution + 50*max(1, alpha), with `resolution`
/// panels per half-axis. Throws NumericalError when the outermost panel
/// shell still carries a non-negligible share of the total.
double sobolev_norm_estimate(const Integrand& f, const WeightParams& p, int resolution);

}  // namespace hq

#endif
