#ifndef HYPERQUAD_QUAD1D_HPP
#define HYPERQUAD_QUAD1D_HPP

#include <functional>
#include <map>
#include <mutex>

#include "hyperquad/common.hpp"
#include "hyperquad/orthopoly.hpp"

namespace hq {

struct TruncationPolicy {
  double theta = 0.25;  // in (0.05, 0.95)
  void validate() const;
};

/// j(m): the largest j with x_{m,j} <= 4*theta*m; 0 if no zero qualifies.
/// Ties at the threshold count as inside.
int truncation_index(const Rule1D& full, double theta);
int truncation_index(int m, double alpha, double theta);

/// First j(m) node/weight pairs of gauss_rule(m, alpha).
/// Throws NumericalError if j(m) = 0.
Rule1D truncated_rule(int m, double alpha, double theta);

/// Nodes {±x_{m,k}}, k <= j(m), ascending; each pair reuses lambda_{m,k}.
Rule1D symmetrized_rule(int m, double alpha, double theta);

/// Rule application: f evaluated at nodes in ascending order, products
/// accumulated by fixed-shape pairwise summation. A symmetrized rule is
/// applied as the sum of the two half-line applications (positive nodes
/// ascending, then reflected nodes in the same order), so it equals
/// truncated(f(+x)) + truncated(f(-x)) bit-exactly and odd integrands give
/// exactly zero.
double integrate(const Rule1D& rule, const std::function<double(double)>& f);

/// The level-indexed family feeding the Smolyak construction: level k holds
/// the truncated (or symmetrized) rule of maximal order fitting the node
/// budget 2^k. On the full line the budget is max(2, 2^k) since a
/// symmetrized rule has an even node count; levels 0 and 1 then coincide
/// and their Smolyak difference vanishes identically.
class LevelFamily {
 public:
  LevelFamily(TruncationPolicy policy, double alpha, Domain domain);

  const Rule1D& level_rule(int k) const;
  int level_order(int k) const;                // m_k
  Eigen::Index level_size(int k) const;        // node count of the level-k rule
  long long level_budget(int k) const;

  double theta() const { return policy_.theta; }
  double alpha() const { return alpha_; }
  Domain domain() const { return domain_; }

 private:
  struct Level {
    int m;
    Rule1D rule;
  };
  const Level& level(int k) const;
  int find_max_order(long long half_budget) const;

  TruncationPolicy policy_;
  double alpha_;
  Domain domain_;
  mutable std::mutex mutex_;
  mutable std::map<int, Level> levels_;
};

}  // namespace hq

#endif
