#include "geovec/residuals.hpp"

#include <cmath>

#include "geovec/errors.hpp"

namespace geovec {

namespace {

bool is_zero(const Eigen::VectorXd& v) {
  return v.size() == 0 || v.cwiseAbs().maxCoeff() == 0.0;
}

}  // namespace

Eigen::VectorXd riemannian_residual(const ReductiveSpace& s,
                                    const InnerProduct& ip,
                                    const Eigen::VectorXd& y_alg) {
  if (y_alg.size() != s.dim())
    fail(ErrorCode::DimensionMismatch, "riemannian_residual: Y length != dim g");
  if (is_zero(y_alg))
    fail(ErrorCode::ZeroVector, "riemannian_residual: Y must be nonzero");
  const Eigen::VectorXd ym = s.m_coords(y_alg);
  const Eigen::VectorXd aym = ip.matrix() * ym;
  Eigen::VectorXd r(s.dim_m());
  for (int j = 0; j < s.dim_m(); ++j)
    r(j) = s.bracket_with_basis_m(y_alg, j).dot(aym);
  return r;
}

ResidualOutcome kropina_residual(const ReductiveSpace& s, const InnerProduct& ip,
                                 const Eigen::VectorXd& x_m,
                                 const Eigen::VectorXd& y_alg) {
  ResidualOutcome out;
  if (y_alg.size() != s.dim() || x_m.size() != s.dim_m())
    fail(ErrorCode::DimensionMismatch, "kropina_residual: bad vector length");
  const Eigen::VectorXd ym = s.m_coords(y_alg);
  const double q = ip.dot(ym, ym);
  if (q <= 0.0) {
    out.status = EvalStatus::ZeroVector;
    return out;
  }
  const double d = ip.dot(x_m, ym);
  if (d <= 0.0) {
    out.status = EvalStatus::OutsideDomain;
    return out;
  }
  const double f = q / d;
  const Eigen::VectorXd w = ip.matrix() * ((2.0 / f) * ym - x_m);
  out.residuals.resize(s.dim_m());
  for (int j = 0; j < s.dim_m(); ++j)
    out.residuals(j) = s.bracket_with_basis_m(y_alg, j).dot(w);
  return out;
}

ResidualOutcome finsler_residual(const ReductiveSpace& s, const MetricSpec& m,
                                 const Eigen::VectorXd& y_alg) {
  ResidualOutcome out;
  if (y_alg.size() != s.dim())
    fail(ErrorCode::DimensionMismatch, "finsler_residual: Y length != dim g");
  const Eigen::VectorXd ym = s.m_coords(y_alg);
  const TensorResult t = fundamental_tensor_checked(m, ym);
  if (!t.ok()) {
    out.status = t.status;
    return out;
  }
  const Eigen::VectorXd gym = t.g * ym;
  out.residuals.resize(s.dim_m());
  for (int j = 0; j < s.dim_m(); ++j)
    out.residuals(j) = s.bracket_with_basis_m(y_alg, j).dot(gym);
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Geodesic: return "geodesic";
    case Verdict::NotGeodesic: return "not_geodesic";
    case Verdict::OutsideDomain: return "outside_domain";
  }
  return "?";
}

GeodesicReport check_geodesic(const ReductiveSpace& s, const MetricSpec& m,
                              const Eigen::VectorXd& y_alg, double tol) {
  GeodesicReport rep;
  rep.candidate = y_alg;
  rep.family = m.family();
  rep.tol = tol;

  ResidualOutcome out;
  switch (m.family()) {
    case MetricFamily::Riemannian: {
      if (is_zero(y_alg)) {
        rep.verdict = Verdict::OutsideDomain;
        rep.status = EvalStatus::ZeroVector;
        return rep;
      }
      out.residuals = riemannian_residual(s, m.inner(), y_alg);
      break;
    }
    case MetricFamily::Kropina:
      out = kropina_residual(s, m.inner(), m.x(), y_alg);
      break;
    case MetricFamily::Randers:
    case MetricFamily::AlphaBeta:
      out = finsler_residual(s, m, y_alg);
      break;
  }
  if (!out.ok()) {
    rep.verdict = Verdict::OutsideDomain;
    rep.status = out.status;
    return rep;
  }
  rep.residuals = out.residuals;
  rep.max_residual = out.max_abs();
  rep.verdict =
      rep.max_residual <= tol ? Verdict::Geodesic : Verdict::NotGeodesic;
  return rep;
}

}  // namespace geovec
