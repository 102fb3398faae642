#ifndef GEOVEC_AXIS_SEARCH_HPP
#define GEOVEC_AXIS_SEARCH_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "geovec/metric.hpp"
#include "geovec/reductive.hpp"

namespace geovec {

struct SearchConfig {
  int samples = 20000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  double dedup_angle = 1e-4;  // radians
};

/// One geodesic axis: a unit (for the inner product) direction in
/// m-coordinates plus the verified criterion residual.
struct Axis {
  Eigen::VectorXd direction;
  double max_residual = 0.0;
};

struct AxisSet {
  std::vector<Axis> axes;
  Eigen::MatrixXd pairwise_angles;
  bool manifold = false;   // > 5% of converged samples survive dedup
  int distinct_count = 0;  // including axes dropped by the manifold cap
  int converged = 0;
  int failed = 0;  // per-sample NoConvergence, not fatal
  int samples = 0;
  std::uint64_t seed = 0;
  bool plus_minus_identified = false;
};

/// Enumerates geodesic-vector directions on the unit sphere of m:
/// deterministic sphere sampling (Fibonacci lattice in dim 3, seeded
/// uniform otherwise) followed by a damped Newton polish of the criterion
/// residual restricted to the sphere. Riemannian and Douglas-Randers axes
/// are +/- identified; Kropina searches only the half-space <X, y> > 0.
/// Requires dim m <= 6.
AxisSet find_geodesic_vectors(const ReductiveSpace& s, const MetricSpec& m,
                              const SearchConfig& cfg = {});

}  // namespace geovec

#endif
