#include "geovec/checks.hpp"

#include <cmath>
#include <limits>

#include "geovec/errors.hpp"
#include "geovec/residuals.hpp"

namespace geovec {

bool douglas_check(const ReductiveSpace& s, const InnerProduct& ip,
                   const Eigen::VectorXd& x_m, double tol) {
  if (x_m.size() != s.dim_m())
    fail(ErrorCode::DimensionMismatch, "douglas_check: X length != dim m");
  const Eigen::VectorXd ax = ip.matrix() * x_m;
  for (int i = 0; i < s.dim_m(); ++i) {
    Eigen::VectorXd ei = Eigen::VectorXd::Zero(s.dim_m());
    ei(i) = 1.0;
    for (int j = i + 1; j < s.dim_m(); ++j) {
      const Eigen::VectorXd br = s.bracket_m_matrix(j) * ei;  // [z_i, z_j]_m
      if (std::abs(br.dot(ax)) > tol) return false;
    }
  }
  return true;
}

TransferReport transfer_check(const ReductiveSpace& s, const MetricSpec& m,
                              const Eigen::VectorXd& y_alg, double tol) {
  if (m.family() != MetricFamily::Randers && m.family() != MetricFamily::AlphaBeta)
    fail(ErrorCode::InvalidArgument,
         "transfer_check applies to Randers and alpha-beta metrics");
  if (y_alg.size() != s.dim())
    fail(ErrorCode::DimensionMismatch, "transfer_check: Y length != dim g");

  TransferReport rep;
  const InnerProduct& ip = m.inner();
  const Eigen::VectorXd ax = ip.matrix() * m.x();
  for (int j = 0; j < s.dim_m(); ++j) {
    const double v = std::abs(s.bracket_with_basis_m(y_alg, j).dot(ax));
    rep.max_orthogonality_violation =
        std::max(rep.max_orthogonality_violation, v);
  }
  rep.orthogonality_holds = rep.max_orthogonality_violation <= tol;

  const Eigen::VectorXd ym = s.m_coords(y_alg);
  const double nym = ip.norm(ym);
  if (nym == 0.0) {
    rep.phi_second = std::numeric_limits<double>::quiet_NaN();
    return rep;
  }
  rep.r_m = ip.dot(m.x(), ym) / nym;
  if (m.family() == MetricFamily::Randers) {
    rep.phi_second = 0.0;  // phi = 1 + s
    rep.phi_condition_holds = true;
  } else {
    const auto p2 = m.phi_d2().eval(rep.r_m);
    if (p2) {
      rep.phi_second = *p2;
      rep.phi_condition_holds = *p2 <= 0.0;
    } else {
      rep.phi_second = std::numeric_limits<double>::quiet_NaN();
      rep.phi_condition_holds = false;
    }
  }
  rep.applies = rep.orthogonality_holds && rep.phi_condition_holds;
  if (!rep.applies) return rep;

  const Eigen::VectorXd rr = riemannian_residual(s, ip, y_alg);
  rep.riemannian_geodesic = rr.cwiseAbs().maxCoeff() <= 1e-9;
  if (rep.riemannian_geodesic) {
    const ResidualOutcome fr = finsler_residual(s, m, y_alg);
    if (fr.ok()) {
      rep.finsler_checked = true;
      rep.finsler_max_residual = fr.max_abs();
      rep.finsler_verified = rep.finsler_max_residual <= 1e-6;
    }
  }
  return rep;
}

bool naturally_reductive_check(const ReductiveSpace& s, const InnerProduct& ip,
                               double tol) {
  const int dm = s.dim_m();
  const Eigen::MatrixXd& a = ip.matrix();
  for (int z = 0; z < dm; ++z) {
    Eigen::VectorXd ez = Eigen::VectorXd::Zero(dm);
    ez(z) = 1.0;
    for (int x = 0; x < dm; ++x) {
      Eigen::VectorXd ex = Eigen::VectorXd::Zero(dm);
      ex(x) = 1.0;
      const Eigen::VectorXd zx = s.bracket_m_matrix(x) * ez;  // [z_z, z_x]_m
      for (int y = 0; y < dm; ++y) {
        Eigen::VectorXd ey = Eigen::VectorXd::Zero(dm);
        ey(y) = 1.0;
        const Eigen::VectorXd zy = s.bracket_m_matrix(y) * ez;  // [z_z, z_y]_m
        const double v = ex.dot(a * zy) + zx.dot(a * ey);
        if (std::abs(v) > tol) return false;
      }
    }
  }
  return true;
}

}  // namespace geovec
