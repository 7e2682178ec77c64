#ifndef HYPERQUAD_ORTHOPOLY_HPP
#define HYPERQUAD_ORTHOPOLY_HPP

#include <limits>

#include <Eigen/Core>

#include "hyperquad/common.hpp"

namespace hq {

// Orders above this are rejected; covers Smolyak levels up to 2^13 nodes
// per axis with margin.
inline constexpr int kMaxOrder = 16384;

/// Symmetric tridiagonal Jacobi matrix of the generalized Laguerre family;
/// its eigenvalues are the zeros of the orthonormal polynomial p_m(w).
struct JacobiMatrix {
  int m = 0;
  double alpha = 0.0;
  Eigen::VectorXd diag;     // 2k + alpha + 1, k = 0..m-1
  Eigen::VectorXd offdiag;  // sqrt(k (k + alpha)), k = 1..m-1
};

enum class RuleKind { Full, Truncated, SymmetrizedTruncated };

/// One-dimensional quadrature rule: ordered nodes and positive Cotes
/// numbers. For SymmetrizedTruncated the nodes are {±x_{m,k}} stored
/// ascending (negatives first) and each ±pair carries the same weight.
struct Rule1D {
  int m = 0;  // order of the underlying Gauss rule
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  RuleKind kind = RuleKind::Full;
  double theta = std::numeric_limits<double>::quiet_NaN();  // set when kind != Full
  double alpha = 0.0;

  Eigen::Index size() const { return nodes.size(); }
};

JacobiMatrix jacobi_matrix(int m, double alpha);

/// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix (implicit
/// shift QL, first eigenvector components accumulated in the same sweep),
/// weights are Gamma(alpha+1) * q0^2, nodes then polished by Newton on the
/// orthonormal recurrence. Throws NumericalError if the eigensolver fails
/// to converge; never returns a partial rule.
Rule1D gauss_rule(int m, double alpha);

/// p_m(w)(x) by forward three-term recurrence. Far outside (0, 4m+2a+2)
/// at large m the recurrence grows beyond double range; throws
/// NumericalError then.
double eval_orthonormal(int m, double alpha, double x);

/// Number of zeros of p_m(w) that are < tau, by the Sturm sign count of
/// the LDL^T pivots of J - tau*I. O(m), no eigendecomposition.
int count_zeros_below(int m, double alpha, double tau);

}  // namespace hq

#endif
