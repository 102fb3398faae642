#ifndef GEOVEC_MILNOR3D_HPP
#define GEOVEC_MILNOR3D_HPP

#include <Eigen/Dense>

#include "geovec/axis_search.hpp"
#include "geovec/lie_algebra.hpp"
#include "geovec/metric.hpp"

namespace geovec {

/*
 * 3-dimensional non-unimodular Lie algebras in the Milnor basis: an
 * orthonormal basis {e1, e2, e3} with
 *   [e1, e2] = a e2 + b e3,  [e1, e3] = c e2 + d e3,  [e2, e3] = 0,
 * subject to a + d != 0 and a c + b d = 0. The discriminant
 * D = (b + c)^2 - 4 a d decides the homogeneous-geodesic count (1/2/3 for
 * D < 0 / D = 0 / D > 0) when the Ricci eigenvalues are distinct.
 *
 * The fields are named milnor_* to keep them apart from the metric symbols
 * alpha/beta.
 */
struct NonUnimodularParams {
  double milnor_alpha = 0.0;
  double milnor_beta = 0.0;
  double milnor_gamma = 0.0;
  double milnor_delta = 0.0;

  double discriminant() const {
    return (milnor_beta + milnor_gamma) * (milnor_beta + milnor_gamma) -
           4.0 * milnor_alpha * milnor_delta;
  }

  /// Throws ConstraintViolation naming the violated condition.
  void validate() const;
};

/// The Milnor-basis algebra plus the declared-orthonormal inner product.
struct MilnorBuild {
  LieAlgebra algebra;
  InnerProduct inner;
};

MilnorBuild build(const NonUnimodularParams& params);

struct AxisCountPrediction {
  int count = 0;           // 1, 2 or 3 by the sign of D
  double d = 0.0;
  bool ricci_distinct = false;  // precondition of the count theorem
  Eigen::Vector3d ricci = Eigen::Vector3d::Zero();
};

/// Prediction from the sign of D (thresholds at 1e-12); the Ricci
/// distinctness gate is evaluated and reported, not thrown.
AxisCountPrediction predicted_axis_count(const NonUnimodularParams& params);

struct ClassifyReport {
  NonUnimodularParams params;
  AxisCountPrediction predicted;
  AxisSet axes;
  int count = 0;
  bool match = false;  // asserted only when ricci_distinct
  Eigen::MatrixXd inner_products;  // pairwise <u,v> of the unit axes
  bool mutually_orthogonal = false;  // all pairs within 1e-8
  bool linearly_independent = false;
  bool has_nonorthogonal_pair = false;
};

/// Enumerates axes with find_geodesic_vectors and compares against the
/// prediction. The metric must be Riemannian or a Douglas-type Randers
/// metric (on the Milnor inner product).
ClassifyReport enumerate_and_verify(const NonUnimodularParams& params,
                                    const MetricSpec& metric,
                                    const SearchConfig& cfg = {});

/// Convenience wrapper building the Milnor metric in place; x may be empty
/// for the Riemannian family.
ClassifyReport classify3d(const NonUnimodularParams& params, MetricFamily family,
                          const Eigen::VectorXd& x, const SearchConfig& cfg = {});

}  // namespace geovec

#endif
