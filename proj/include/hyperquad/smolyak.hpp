#ifndef HYPERQUAD_SMOLYAK_HPP
#define HYPERQUAD_SMOLYAK_HPP

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "hyperquad/common.hpp"
#include "hyperquad/quad1d.hpp"

namespace hq {

using MultiFn = std::function<double(Eigen::Ref<const Eigen::VectorXd>)>;

inline constexpr long long kDefaultEvalCap = 100'000'000;

/// Sparse quadrature Q_xi assembled from the level family by the difference
/// expansion
///    Q_xi = sum_{|k|_1 <= xi} (x)_i (Q_{2^{k_i}} - Q_{2^{k_i - 1}}),
/// realized through the index set G(xi) of triples (k, e, s).
///
/// Terms are merged by their node identity (the per-axis (level, index)
/// pairs): coefficients are accumulated in enumeration order, and entries
/// whose merged coefficient is exactly zero are dropped. eval_count keeps
/// the full G(xi) accounting (all subsets e, levels clamped at zero), which
/// counts every provenance entry with multiplicity; entries with k_i = 0
/// for some i outside e belong to the zero operator branch of the
/// difference expansion and contribute multiplicity but no coefficient.
struct SparseGrid {
  int d = 1;
  int xi = 0;
  Domain domain = Domain::HalfLine;
  double alpha = 0.0;
  double theta = 0.25;

  // merged terms in canonical key order (lexicographic per-axis (level, index))
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> nodes;
  Eigen::VectorXd coefficients;
  Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> levels;
  Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> indices;
  std::vector<long long> multiplicity;

  long long eval_count = 0;       // |G(xi)| with actual per-level node counts
  long long active_entries = 0;   // signed provenance entries forming the operator
  long long merged_dropped = 0;   // merged entries removed by exact cancellation

  Eigen::Index term_count() const { return coefficients.size(); }
};

/// k(e)_i = k_i for i in e, max(k_i - 1, 0) otherwise. Bit i of e selects
/// axis i. Idempotent when e covers all axes.
std::vector<int> k_of_e(std::span<const int> k, unsigned e);

SparseGrid build_grid(int xi, int d, const LevelFamily& family,
                      long long eval_cap = kDefaultEvalCap);

/// |G(xi)| with the family's actual per-level node counts; equals the
/// eval_count of the materialized grid without building it.
long long count_points(int xi, int d, const LevelFamily& family);

/// |G(xi)| with the idealized full budgets 2^k per level.
long long ideal_count(int xi, int d);

/// Largest integer xi with count_points(xi, d, family) <= n.
/// Throws BudgetExceeded when even xi = 0 does not fit.
int select_xi(long long n, int d, const LevelFamily& family);

/// sum coefficient * f(node) over merged terms in canonical order,
/// pairwise-summed. Node evaluations may be spread over `threads` threads;
/// the reduction shape is fixed, so the result is bit-identical for any
/// thread count.
double apply(const SparseGrid& grid, const MultiFn& f, int threads = 1);

}  // namespace hq

#endif
