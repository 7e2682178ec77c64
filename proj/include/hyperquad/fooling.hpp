#ifndef HYPERQUAD_FOOLING_HPP
#define HYPERQUAD_FOOLING_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "hyperquad/integrand.hpp"
#include "hyperquad/weight.hpp"

namespace hq {

/// The fixed mollifier phi(y) = exp(-1/(y(1-y))) on (0,1), zero outside.
/// Derivatives are closed-form for s <= 3 and Richardson finite
/// differences for s in {4, 5}.
double bump(double y);
double bump_derivative(int s, double y);

/// b_0 = int phi, b_s = int |phi^(s)|, s = 1..r.
Eigen::VectorXd bump_coeffs(int r);

/// s-th derivative of the algebraic reciprocal-weight factor x^(-alpha):
/// x^(-alpha-s) * prod_{j<s}(-alpha-j). The exponential factor of w^(-1)
/// is handled separately by the full Leibniz expansion.
double algebraic_inv_weight_deriv(double alpha, int s, double x);

/// Adversary construction data: the empty cell found among the candidate
/// set, the cell size delta, and (d >= 2) the Gamma_d(M) parameter M_n.
struct FoolingSpec {
  int n = 0;
  int r = 0;
  int d = 1;
  double delta = 0.0;
  std::vector<long long> cell;  // 1D: {i}; d >= 2: the multi-index s
  long long M = 0;              // d >= 2 only
  Eigen::VectorXd b_coeffs;
  std::uint64_t nodes_hash = 0;
};

/// A certified fooling function: nonnegative, supported in a node-free
/// cell, with certified W^r_{1,w_r} norm bound <= 1 and exact positive
/// integral (b_0 delta)^d / normalization.
struct FoolingCertificate {
  Integrand function;  // the normalized h-bar
  double norm_bound = 0.0;
  double integral = 0.0;
  bool vanish_checked = false;
  FoolingSpec spec;
  double raw_norm = 0.0;  // certified norm of the unnormalized h
};

/// Smallest s in Gamma_d(M) = {s in N^d : prod s_i <= 2M, s_i >= M^(1/d)}.
long long gamma_set_count(long long M, int d);

FoolingCertificate make_fooling_1d(const Eigen::VectorXd& nodes, int r,
                                   const WeightParams& weight);

/// d >= 2 analogue on the positive orthant: smallest M_n with
/// |Gamma_d(M_n)| >= n+1, delta = M_n^(-1/(2d)), first node-free cell K_s
/// in lexicographic order.
FoolingCertificate make_fooling_dd(const Eigen::MatrixXd& nodes, int r,
                                   const WeightParams& weight);

/// The certificate's integral: a lower bound on the worst-case error of
/// any quadrature using exactly those nodes.
double lower_bound_estimate(const Eigen::MatrixXd& nodes, int r,
                            const WeightParams& weight);

}  // namespace hq

#endif
