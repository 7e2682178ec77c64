#ifndef HYPERQUAD_INTEGRAND_HPP
#define HYPERQUAD_INTEGRAND_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hyperquad/common.hpp"

namespace hq {

/// A test function with analytic mixed partial derivatives and, where
/// known, an exact canonical-weight integral.
///
/// derivative(k, x) is the mixed partial D^k f and must be defined for
/// |k|_inf <= deriv_order; derivative(0, x) equals value(x).
struct Integrand {
  std::string name;
  int arity = 1;
  int smoothness = 0;   // largest r for which membership in W^r is claimed
  int deriv_order = 0;  // derivatives available for |k|_inf <= deriv_order
  Domain domain = Domain::HalfLine;
  std::function<double(Eigen::Ref<const Eigen::VectorXd>)> value;
  std::function<double(const std::vector<int>&, Eigen::Ref<const Eigen::VectorXd>)> derivative;
  std::optional<double> exact;  // integral of f * w over the domain, canonical (a=1, b=0) weight
  std::string exact_note;

  double operator()(Eigen::Ref<const Eigen::VectorXd> x) const { return value(x); }
};

/// One factor of a separable integrand.
struct Component1D {
  std::function<double(double)> value;
  std::function<double(int, double)> deriv;  // s-th derivative, s >= 0
};

/// Tensor product of d copies of a univariate component. Mixed partials
/// factorize: D^k f = prod_i c^{(k_i)}.
Integrand tensor_integrand(std::string name, int d, Component1D c, int smoothness,
                           int deriv_order, Domain domain, std::optional<double> exact_1d,
                           std::string exact_note);

}  // namespace hq

#endif
