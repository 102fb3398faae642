#include "geovec/metric.hpp"

#include <cmath>

#include "geovec/errors.hpp"

namespace geovec {

std::string family_name(MetricFamily f) {
  switch (f) {
    case MetricFamily::Riemannian: return "riemannian";
    case MetricFamily::Randers: return "randers";
    case MetricFamily::Kropina: return "kropina";
    case MetricFamily::AlphaBeta: return "alphabeta";
  }
  return "?";
}

MetricSpec::MetricSpec(MetricFamily f, InnerProduct inner, Eigen::VectorXd x,
                       PhiExpr phi)
    : family_(f), inner_(std::move(inner)), x_(std::move(x)), phi_(std::move(phi)) {
  if (x_.size() == 0) x_ = Eigen::VectorXd::Zero(inner_.dim());
  if (x_.size() != inner_.dim())
    fail(ErrorCode::DimensionMismatch, "metric: X length != dim m");
  const double nx = inner_.norm(x_);
  switch (family_) {
    case MetricFamily::Riemannian:
      break;
    case MetricFamily::Randers:
      if (nx <= 1e-12)
        fail(ErrorCode::InvalidMetric, "Randers metric: X must be nonzero");
      if (nx >= 1.0)
        fail(ErrorCode::InvalidMetric,
             "Randers metric: ||X|| must be < 1 for F to stay positive");
      break;
    case MetricFamily::Kropina:
      if (nx <= 1e-12)
        fail(ErrorCode::InvalidMetric, "Kropina metric: X must be nonzero");
      break;
    case MetricFamily::AlphaBeta:
      if (phi_.empty())
        fail(ErrorCode::InvalidMetric, "alpha-beta metric: phi is required");
      break;
  }
  if (!phi_.empty()) {
    auto d = phi_derivatives(phi_);
    phi_d1_ = std::move(d.first);
    phi_d2_ = std::move(d.second);
  }
}

MetricSpec MetricSpec::riemannian(InnerProduct inner) {
  return MetricSpec(MetricFamily::Riemannian, std::move(inner), {}, {});
}
MetricSpec MetricSpec::randers(InnerProduct inner, Eigen::VectorXd x) {
  return MetricSpec(MetricFamily::Randers, std::move(inner), std::move(x), {});
}
MetricSpec MetricSpec::kropina(InnerProduct inner, Eigen::VectorXd x) {
  return MetricSpec(MetricFamily::Kropina, std::move(inner), std::move(x), {});
}
MetricSpec MetricSpec::alpha_beta(InnerProduct inner, Eigen::VectorXd x,
                                  PhiExpr phi) {
  return MetricSpec(MetricFamily::AlphaBeta, std::move(inner), std::move(x),
                    std::move(phi));
}

Evaluation F_eval_checked(const MetricSpec& m, const Eigen::VectorXd& y) {
  if (y.size() != m.dim())
    fail(ErrorCode::DimensionMismatch, "F_eval: Y length != dim m");
  const double q = m.inner().dot(y, y);
  if (q <= 0.0) return {0.0, EvalStatus::ZeroVector};
  switch (m.family()) {
    case MetricFamily::Riemannian:
      return {std::sqrt(q), EvalStatus::Ok};
    case MetricFamily::Randers:
      return {std::sqrt(q) + m.inner().dot(m.x(), y), EvalStatus::Ok};
    case MetricFamily::Kropina: {
      const double d = m.inner().dot(m.x(), y);
      if (d <= 0.0) return {0.0, EvalStatus::OutsideDomain};
      return {q / d, EvalStatus::Ok};
    }
    case MetricFamily::AlphaBeta: {
      const double alpha = std::sqrt(q);
      const double s = m.inner().dot(m.x(), y) / alpha;
      const auto v = m.phi().eval(s);
      if (!v) return {0.0, EvalStatus::OutsideDomain};
      const double f = alpha * *v;
      if (!(f > 0.0) || !std::isfinite(f)) return {0.0, EvalStatus::OutsideDomain};
      return {f, EvalStatus::Ok};
    }
  }
  return {0.0, EvalStatus::NumericalFailure};
}

double F_eval(const MetricSpec& m, const Eigen::VectorXd& y) {
  const Evaluation e = F_eval_checked(m, y);
  switch (e.status) {
    case EvalStatus::Ok:
      return e.value;
    case EvalStatus::ZeroVector:
      fail(ErrorCode::ZeroVector, "F_eval: Y must be nonzero");
    case EvalStatus::OutsideDomain:
      fail(ErrorCode::OutsideDomain, "F_eval: Y is outside the metric domain");
    default:
      fail(ErrorCode::NumericalFailure, "F_eval failed");
  }
}

namespace {

// 1/2 F^2; shares domain with F
bool half_f_squared(const MetricSpec& m, const Eigen::VectorXd& y, double* out) {
  const Evaluation e = F_eval_checked(m, y);
  if (!e.ok()) return false;
  *out = 0.5 * e.value * e.value;
  return true;
}

// central-difference gradient of 1/2 F^2 at z with step h
bool grad_half_f_squared(const MetricSpec& m, const Eigen::VectorXd& z, double h,
                         Eigen::VectorXd* out) {
  const int n = static_cast<int>(z.size());
  out->resize(n);
  Eigen::VectorXd p = z;
  for (int i = 0; i < n; ++i) {
    double gp, gm;
    p(i) = z(i) + h;
    if (!half_f_squared(m, p, &gp)) return false;
    p(i) = z(i) - h;
    if (!half_f_squared(m, p, &gm)) return false;
    p(i) = z(i);
    (*out)(i) = (gp - gm) / (2.0 * h);
  }
  return true;
}

// Hessian by differencing the gradient; not symmetric by construction,
// which makes the symmetry check meaningful.
bool hessian_step(const MetricSpec& m, const Eigen::VectorXd& y, double h,
                  Eigen::MatrixXd* out) {
  const int n = static_cast<int>(y.size());
  out->resize(n, n);
  Eigen::VectorXd z = y, gp(n), gm(n);
  for (int j = 0; j < n; ++j) {
    z(j) = y(j) + h;
    if (!grad_half_f_squared(m, z, h, &gp)) return false;
    z(j) = y(j) - h;
    if (!grad_half_f_squared(m, z, h, &gm)) return false;
    z(j) = y(j);
    out->col(j) = (gp - gm) / (2.0 * h);
  }
  return true;
}

}  // namespace

TensorResult fundamental_tensor_checked(const MetricSpec& m,
                                        const Eigen::VectorXd& y) {
  TensorResult r;
  if (m.family() == MetricFamily::Riemannian) {
    const Evaluation e = F_eval_checked(m, y);
    if (!e.ok()) {
      r.status = e.status;
      return r;
    }
    r.g = m.inner().matrix();
    return r;
  }
  const Evaluation e = F_eval_checked(m, y);
  if (!e.ok()) {
    r.status = e.status;
    return r;
  }

  // Step 4e-4*||Y|| instead of the tempting 1e-5: the second-difference
  // rounding floor eps*(||Y||/h)^2 must stay well below the 1e-6 relative
  // tolerances on the Euler and closed-form identities, and the Richardson
  // level keeps the larger step's truncation at (h/||Y||)^4.
  const double h = 4e-4 * y.norm();
  Eigen::MatrixXd d1, d2;
  if (!hessian_step(m, y, h, &d1) || !hessian_step(m, y, 0.5 * h, &d2)) {
    r.status = EvalStatus::OutsideDomain;
    return r;
  }
  Eigen::MatrixXd g = (4.0 * d2 - d1) / 3.0;

  const double scale = std::max(g.cwiseAbs().maxCoeff(), 1e-300);
  r.asymmetry = (g - g.transpose()).cwiseAbs().maxCoeff() / scale;
  if (!g.allFinite() || r.asymmetry > 1e-4) {
    r.status = EvalStatus::NumericalFailure;
    return r;
  }
  r.g = 0.5 * (g + g.transpose());
  return r;
}

Eigen::MatrixXd fundamental_tensor(const MetricSpec& m, const Eigen::VectorXd& y) {
  TensorResult r = fundamental_tensor_checked(m, y);
  switch (r.status) {
    case EvalStatus::Ok:
      return std::move(r.g);
    case EvalStatus::ZeroVector:
      fail(ErrorCode::ZeroVector, "fundamental_tensor: Y must be nonzero");
    case EvalStatus::OutsideDomain:
      fail(ErrorCode::OutsideDomain,
           "fundamental_tensor: Y is outside the metric domain");
    default:
      fail(ErrorCode::NumericalFailure,
           "fundamental_tensor: Hessian failed the symmetry check");
  }
}

double kropina_directional_identity(const MetricSpec& m, const Eigen::VectorXd& y,
                                    const Eigen::VectorXd& u) {
  if (m.family() != MetricFamily::Kropina)
    fail(ErrorCode::InvalidArgument,
         "kropina_directional_identity needs a Kropina metric");
  const double f = F_eval(m, y);
  const double q = m.inner().dot(y, y);
  const Eigen::VectorXd w = (2.0 / f) * y - m.x();
  return (f * f * f / q) * m.inner().dot(u, w);
}

MetricSpec kropina_from_navigation(const NavigationData& nav) {
  if (nav.w.size() != nav.h.dim())
    fail(ErrorCode::DimensionMismatch, "navigation: W length != dim h");
  const double nw = nav.h.norm(nav.w);
  if (std::abs(nw - 1.0) > 1e-9)
    fail(ErrorCode::NotUnitVector,
         "navigation: W must be a unit vector for h (Kropina case)");
  return MetricSpec::kropina(nav.h, 2.0 * nav.w);
}

}  // namespace geovec
