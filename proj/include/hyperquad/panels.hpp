#ifndef HYPERQUAD_PANELS_HPP
#define HYPERQUAD_PANELS_HPP

#include <functional>

#include <Eigen/Core>

namespace hq {

/// Gauss-Legendre rule on [-1, 1], nodes ascending. n <= 64.
struct PanelRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

const PanelRule& gauss_legendre(int n);

/// Composite integration of f over [a, b] with `panels` equal panels of
/// n-point Gauss-Legendre each.
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int panels, int n = 32);

/// Integral of |f| over [a, b] for f smooth up to isolated sign changes:
/// sign changes are located by scanning `scan` samples and bisecting, then
/// each sign-constant piece is integrated with composite Gauss-Legendre and
/// the piece integrals are added in absolute value.
double integrate_abs(const std::function<double(double)>& f, double a, double b,
                     int panels = 64, int scan = 512);

}  // namespace hq

#endif
