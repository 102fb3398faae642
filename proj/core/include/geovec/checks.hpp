#ifndef GEOVEC_CHECKS_HPP
#define GEOVEC_CHECKS_HPP

#include <Eigen/Dense>

#include "geovec/metric.hpp"
#include "geovec/reductive.hpp"

namespace geovec {

/// Douglas-type test for homogeneous Randers/Kropina metrics:
/// X orthogonal to [m, m]_m.
bool douglas_check(const ReductiveSpace& s, const InnerProduct& ip,
                   const Eigen::VectorXd& x_m, double tol = 1e-10);

/// Hypotheses of the Riemannian-to-Finsler geodesic transfer at a single
/// candidate Y: <X, [Y, Z]_m> = 0 for all Z in m and phi''(r_m) <= 0 with
/// r_m = <X, Y_m>/|Y_m|. When both hold and Y is a Riemannian geodesic
/// vector, the Finsler residual is evaluated and recorded.
struct TransferReport {
  bool applies = false;
  bool orthogonality_holds = false;
  double max_orthogonality_violation = 0.0;
  bool phi_condition_holds = false;
  double r_m = 0.0;
  double phi_second = 0.0;  // NaN when undefined at r_m
  bool riemannian_geodesic = false;
  bool finsler_checked = false;
  double finsler_max_residual = 0.0;
  bool finsler_verified = false;  // residual <= 1e-6 when checked
};

TransferReport transfer_check(const ReductiveSpace& s, const MetricSpec& m,
                              const Eigen::VectorXd& y_alg, double tol = 1e-10);

/// Naturally reductive identity <X,[Z,Y]_m> + <[Z,X]_m,Y> = 0 over all
/// basis triples from m.
bool naturally_reductive_check(const ReductiveSpace& s, const InnerProduct& ip,
                               double tol = 1e-10);

}  // namespace geovec

#endif
