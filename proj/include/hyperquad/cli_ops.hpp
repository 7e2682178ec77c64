#ifndef HYPERQUAD_CLI_OPS_HPP
#define HYPERQUAD_CLI_OPS_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "hyperquad/ratefit.hpp"
#include "hyperquad/smolyak.hpp"

namespace hq {

enum class OutputFormat { Csv, Json };

/// Floats are printed with 17 significant digits so output is stable and
/// round-trips to the same double.
std::string format_double(double v);

struct SweepConfig {
  int d = 1;
  int r = 1;
  double alpha = 0.0;
  double theta = 0.25;
  Domain domain = Domain::HalfLine;
  std::string integrand;
  int level_lo = 2;
  int level_hi = 8;
  OutputFormat format = OutputFormat::Csv;
  int fit_skip = 2;            // pre-asymptotic levels excluded from the fit
  bool log_correction = false; // also fit with (log n)^((r/2+1)(d-1)) divided out
  int threads = 1;
  long long eval_cap = kDefaultEvalCap;
  void validate() const;
};

void cmd_nodes(std::ostream& out, int m, double alpha, double theta, RuleKind kind,
               OutputFormat format);

void cmd_grid(std::ostream& out, int xi, int d, double alpha, double theta, Domain domain,
              OutputFormat format, long long eval_cap = kDefaultEvalCap);

void cmd_integrate(std::ostream& out, const std::string& integrand, int xi, int d,
                   double alpha, double theta, Domain domain, OutputFormat format,
                   int threads = 1, long long eval_cap = kDefaultEvalCap);

/// One row per level: xi (or the 1D level k), n, error; the fitted slope
/// is appended. Returns the uncorrected fit.
RateFit cmd_sweep(std::ostream& out, const SweepConfig& config);

/// Adversary nodes are taken from the artifact's own constructions: the
/// level-family truncated rule of maximal order with j(m) <= n for d = 1,
/// the sparse grid with select_xi(n) for d >= 2 (half-line only).
void cmd_fool(std::ostream& out, long long n, int r, int d, double alpha, double theta,
              OutputFormat format, long long eval_cap = kDefaultEvalCap);

/// Sweep mode: n doubling from n_lo to n_hi, rows (n, lower_bound), slope
/// appended.
RateFit cmd_fool_sweep(std::ostream& out, long long n_lo, long long n_hi, int r, int d,
                       double alpha, double theta, OutputFormat format,
                       long long eval_cap = kDefaultEvalCap);

}  // namespace hq

#endif
