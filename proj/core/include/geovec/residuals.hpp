#ifndef GEOVEC_RESIDUALS_HPP
#define GEOVEC_RESIDUALS_HPP

#include <Eigen/Dense>
#include <string>

#include "geovec/metric.hpp"
#include "geovec/reductive.hpp"

namespace geovec {

/*
 * Geodesic-vector criteria. Candidates Y live in the full algebra g
 * (algebra coordinates); the test vectors Z range over the m basis, which
 * suffices by linearity.
 *
 *  - Riemannian:  <[Y, Z]_m, Y_m> = 0
 *  - Kropina:     <[Y, Z]_m, (2/F(Y_m)) Y_m - X> = 0  on <X, Y_m> > 0
 *  - Finsler:     g_{Y_m}([Y, Z]_m, Y_m) = 0  (fundamental-tensor path)
 */

Eigen::VectorXd riemannian_residual(const ReductiveSpace& s,
                                    const InnerProduct& ip,
                                    const Eigen::VectorXd& y_alg);

struct ResidualOutcome {
  Eigen::VectorXd residuals;
  EvalStatus status = EvalStatus::Ok;
  bool ok() const { return status == EvalStatus::Ok; }
  double max_abs() const {
    return residuals.size() ? residuals.cwiseAbs().maxCoeff() : 0.0;
  }
};

ResidualOutcome kropina_residual(const ReductiveSpace& s, const InnerProduct& ip,
                                 const Eigen::VectorXd& x_m,
                                 const Eigen::VectorXd& y_alg);

ResidualOutcome finsler_residual(const ReductiveSpace& s, const MetricSpec& m,
                                 const Eigen::VectorXd& y_alg);

enum class Verdict { Geodesic, NotGeodesic, OutsideDomain };

std::string verdict_name(Verdict v);

struct GeodesicReport {
  Eigen::VectorXd candidate;  // algebra coordinates
  MetricFamily family = MetricFamily::Riemannian;
  Eigen::VectorXd residuals;  // per m-basis direction
  double max_residual = 0.0;
  Verdict verdict = Verdict::NotGeodesic;
  EvalStatus status = EvalStatus::Ok;  // why a verdict is outside_domain
  double tol = 1e-9;
};

/// Residuals of Y under the instance's metric; the Kropina family uses the
/// closed-form criterion, Randers/alpha-beta the fundamental-tensor path.
GeodesicReport check_geodesic(const ReductiveSpace& s, const MetricSpec& m,
                              const Eigen::VectorXd& y_alg, double tol = 1e-9);

}  // namespace geovec

#endif
