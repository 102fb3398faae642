#include "geovec/milnor3d.hpp"

#include <cmath>

#include "geovec/checks.hpp"
#include "geovec/curvature.hpp"
#include "geovec/errors.hpp"
#include "geovec/numeric.hpp"

namespace geovec {

void NonUnimodularParams::validate() const {
  if (std::abs(milnor_alpha + milnor_delta) <= 1e-12)
    fail(ErrorCode::ConstraintViolation,
         "non-unimodular constraint violated: alpha + delta = 0");
  if (std::abs(milnor_alpha * milnor_gamma + milnor_beta * milnor_delta) > 1e-12)
    fail(ErrorCode::ConstraintViolation,
         "Milnor basis constraint violated: alpha*gamma + beta*delta != 0");
}

MilnorBuild build(const NonUnimodularParams& params) {
  params.validate();
  std::vector<BracketEntry> entries;
  entries.push_back({0, 1, 1, params.milnor_alpha});
  entries.push_back({0, 1, 2, params.milnor_beta});
  entries.push_back({0, 2, 1, params.milnor_gamma});
  entries.push_back({0, 2, 2, params.milnor_delta});
  LieAlgebra algebra(3, {"e1", "e2", "e3"}, entries);
  const ValidationReport vr = validate(algebra);
  if (!vr.passed)
    fail(ErrorCode::NumericalFailure, "Milnor bracket table failed Jacobi");
  return MilnorBuild{std::move(algebra), InnerProduct::identity(3)};
}

AxisCountPrediction predicted_axis_count(const NonUnimodularParams& params) {
  MilnorBuild mb = build(params);
  const ReductiveSpace space = ReductiveSpace::lie_group(std::move(mb.algebra));

  AxisCountPrediction p;
  p.d = params.discriminant();
  const Eigen::VectorXd ricci = ricci_eigenvalues(space, mb.inner);
  p.ricci = ricci;
  p.ricci_distinct = (ricci(1) - ricci(0)) > 1e-8 && (ricci(2) - ricci(1)) > 1e-8;
  if (p.d < -1e-12)
    p.count = 1;
  else if (p.d > 1e-12)
    p.count = 3;
  else
    p.count = 2;
  return p;
}

ClassifyReport enumerate_and_verify(const NonUnimodularParams& params,
                                    const MetricSpec& metric,
                                    const SearchConfig& cfg) {
  MilnorBuild mb = build(params);
  const ReductiveSpace space = ReductiveSpace::lie_group(std::move(mb.algebra));

  if (metric.family() != MetricFamily::Riemannian) {
    if (metric.family() != MetricFamily::Randers)
      fail(ErrorCode::ConstraintViolation,
           "classification covers Riemannian and Douglas-Randers metrics");
    if (!douglas_check(space, metric.inner(), metric.x()))
      fail(ErrorCode::ConstraintViolation,
           "Randers metric is not of Douglas type (X not orthogonal to [m,m])");
  }

  ClassifyReport rep;
  rep.params = params;
  rep.predicted = predicted_axis_count(params);
  rep.axes = find_geodesic_vectors(space, metric, cfg);
  rep.count = static_cast<int>(rep.axes.axes.size());

  const int k = rep.count;
  rep.inner_products.resize(k, k);
  Eigen::MatrixXd dirs(3, k);
  for (int i = 0; i < k; ++i) dirs.col(i) = rep.axes.axes[i].direction;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      rep.inner_products(i, j) =
          metric.inner().dot(rep.axes.axes[i].direction, rep.axes.axes[j].direction);

  rep.mutually_orthogonal = true;
  rep.has_nonorthogonal_pair = false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const double v = std::abs(rep.inner_products(i, j));
      if (v > 1e-8) rep.mutually_orthogonal = false;
      if (v > 1e-6) rep.has_nonorthogonal_pair = true;
    }
  rep.linearly_independent = k > 0 && numeric_rank(dirs, 1e-8) == k;

  rep.match = !rep.axes.manifold && rep.count == rep.predicted.count;
  return rep;
}

ClassifyReport classify3d(const NonUnimodularParams& params, MetricFamily family,
                          const Eigen::VectorXd& x, const SearchConfig& cfg) {
  MilnorBuild mb = build(params);
  MetricSpec metric = [&]() {
    switch (family) {
      case MetricFamily::Riemannian:
        return MetricSpec::riemannian(mb.inner);
      case MetricFamily::Randers:
        return MetricSpec::randers(mb.inner, x);
      default:
        fail(ErrorCode::ConstraintViolation,
             "classify3d covers Riemannian and Randers metrics");
    }
  }();
  return enumerate_and_verify(params, metric, cfg);
}

}  // namespace geovec
