#include "geovec/axis_search.hpp"

#include <algorithm>
#include <cmath>

#include "geovec/checks.hpp"
#include "geovec/errors.hpp"
#include "geovec/numeric.hpp"

namespace geovec {

namespace {

constexpr double kNewtonTol = 1e-11;
constexpr double kJacobianStep = 1e-7;
constexpr int kMaxIterations = 50;
constexpr int kMaxHalvings = 30;

// Searchable interior of the Kropina cone: <X-hat, y-hat> above this keeps
// F bounded by ~1e6 F_min. Closer to the boundary the criterion value
// deflates below any fixed tolerance (F is unbounded), so zeros there are
// not resolvable and the open-cone search excludes the belt.
constexpr double kConeMargin = 1e-6;

struct Problem {
  const ReductiveSpace& s;
  const MetricSpec& m;
  Eigen::MatrixXd a;
  double x_norm = 0.0;

  bool kropina() const { return m.family() == MetricFamily::Kropina; }

  EvalStatus residual(const Eigen::VectorXd& y, Eigen::VectorXd& r) const {
    const int dm = s.dim_m();
    r.resize(dm);
    switch (m.family()) {
      case MetricFamily::Riemannian: {
        const Eigen::VectorXd ay = a * y;
        for (int j = 0; j < dm; ++j)
          r(j) = (s.bracket_m_matrix(j) * y).dot(ay);
        return EvalStatus::Ok;
      }
      case MetricFamily::Kropina: {
        const Eigen::VectorXd ay = a * y;
        const double q = y.dot(ay);
        const double d = m.x().dot(ay);
        if (q <= 0.0) return EvalStatus::ZeroVector;
        if (d <= 0.0) return EvalStatus::OutsideDomain;
        const Eigen::VectorXd w = a * ((2.0 * d / q) * y - m.x());
        for (int j = 0; j < dm; ++j)
          r(j) = (s.bracket_m_matrix(j) * y).dot(w);
        return EvalStatus::Ok;
      }
      case MetricFamily::Randers:
      case MetricFamily::AlphaBeta: {
        const TensorResult t = fundamental_tensor_checked(m, y);
        if (!t.ok()) return t.status;
        const Eigen::VectorXd gy = t.g * y;
        for (int j = 0; j < dm; ++j)
          r(j) = (s.bracket_m_matrix(j) * y).dot(gy);
        return EvalStatus::Ok;
      }
    }
    return EvalStatus::NumericalFailure;
  }

  // y is kept unit-norm, so the margin is an angular one
  bool in_domain(const Eigen::VectorXd& y) const {
    if (!kropina()) return true;
    return m.x().dot(a * y) > kConeMargin * x_norm;
  }

  /// Convergence test. For Kropina the residual also has to pass in the
  /// normalization <[y,z], y - (F/2)X>, which does not deflate when the
  /// iterate drifts toward the domain boundary (F unbounded there).
  bool converged(const Eigen::VectorXd& y, const Eigen::VectorXd& r) const {
    if (r.cwiseAbs().maxCoeff() > kNewtonTol) return false;
    if (!kropina()) return true;
    const Eigen::VectorXd ay = a * y;
    const double q = y.dot(ay);
    const double d = m.x().dot(ay);
    if (d <= 0.0) return false;
    const double f_half = 0.5 * q / d;
    return (f_half * r).cwiseAbs().maxCoeff() <= 1e-9;
  }
};

// A-orthonormal basis of the tangent space of the unit sphere at y.
Eigen::MatrixXd tangent_basis(const Eigen::MatrixXd& a, const Eigen::VectorXd& y) {
  const int n = static_cast<int>(y.size());
  std::vector<Eigen::VectorXd> basis;
  basis.push_back(y);  // A-unit by construction
  for (int i = 0; i < n && static_cast<int>(basis.size()) < n; ++i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    v(i) = 1.0;
    for (const Eigen::VectorXd& b : basis) v -= b.dot(a * v) * b;
    const double nv = std::sqrt(std::max(0.0, v.dot(a * v)));
    if (nv > 1e-8) basis.push_back(v / nv);
  }
  Eigen::MatrixXd t(n, static_cast<int>(basis.size()) - 1);
  for (int c = 0; c + 1 < static_cast<int>(basis.size()); ++c)
    t.col(c) = basis[static_cast<std::size_t>(c) + 1];
  return t;
}

Eigen::VectorXd normalize_a(const Eigen::MatrixXd& a, const Eigen::VectorXd& y) {
  const double n = std::sqrt(std::max(0.0, y.dot(a * y)));
  return y / n;
}

bool newton_polish(const Problem& p, Eigen::VectorXd& y) {
  const int n = static_cast<int>(y.size());
  Eigen::VectorXd r;
  if (p.residual(y, r) != EvalStatus::Ok) return false;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    if (p.converged(y, r)) return true;

    Eigen::MatrixXd jac(n, n);
    Eigen::VectorXd rp;
    for (int c = 0; c < n; ++c) {
      Eigen::VectorXd yp = y;
      yp(c) += kJacobianStep;
      if (p.residual(yp, rp) == EvalStatus::Ok) {
        jac.col(c) = (rp - r) / kJacobianStep;
        continue;
      }
      yp(c) = y(c) - kJacobianStep;
      if (p.residual(yp, rp) != EvalStatus::Ok) return false;
      jac.col(c) = (r - rp) / kJacobianStep;
    }

    const Eigen::MatrixXd tan = tangent_basis(p.a, y);
    if (tan.cols() == 0) return p.converged(y, r);
    const Eigen::MatrixXd jt = jac * tan;
    const Eigen::VectorXd delta = jt.colPivHouseholderQr().solve(-r);
    const Eigen::VectorXd step = tan * delta;
    if (!step.allFinite()) return false;

    const double r0 = r.cwiseAbs().maxCoeff();
    bool improved = false;
    double scale = 1.0;
    for (int k = 0; k <= kMaxHalvings; ++k, scale *= 0.5) {
      const Eigen::VectorXd cand = normalize_a(p.a, y + scale * step);
      if (!cand.allFinite() || !p.in_domain(cand)) continue;
      Eigen::VectorXd rc;
      if (p.residual(cand, rc) != EvalStatus::Ok) continue;
      if (rc.cwiseAbs().maxCoeff() < r0) {
        y = cand;
        r = rc;
        improved = true;
        break;
      }
    }
    if (!improved) return p.converged(y, r);
  }
  Eigen::VectorXd rf;
  return p.residual(y, rf) == EvalStatus::Ok && p.converged(y, rf);
}

std::vector<Eigen::VectorXd> sphere_samples(int dim, int count, std::uint64_t seed) {
  std::vector<Eigen::VectorXd> pts;
  pts.reserve(static_cast<std::size_t>(count));
  if (dim == 1) {
    Eigen::VectorXd e(1);
    e(0) = 1.0;
    pts.push_back(e);
    pts.push_back(-e);
    return pts;
  }
  if (dim == 2) {
    for (int k = 0; k < count; ++k) {
      const double th = 6.283185307179586 * k / count;
      Eigen::VectorXd v(2);
      v << std::cos(th), std::sin(th);
      pts.push_back(v);
    }
    return pts;
  }
  if (dim == 3) {
    const double ga = 3.141592653589793 * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < count; ++k) {
      const double z = 1.0 - 2.0 * (k + 0.5) / count;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      Eigen::VectorXd v(3);
      v << r * std::cos(ga * k), r * std::sin(ga * k), z;
      pts.push_back(v);
    }
    return pts;
  }
  Rng rng(seed);
  for (int k = 0; k < count; ++k) {
    Eigen::VectorXd v = rng.gaussian_vector(dim);
    const double n = v.norm();
    if (n == 0.0) continue;
    pts.push_back(v / n);
  }
  return pts;
}

void canonicalize(Eigen::VectorXd& y, bool plus_minus) {
  if (!plus_minus) return;
  for (int i = 0; i < y.size(); ++i) {
    if (std::abs(y(i)) > 1e-8) {
      if (y(i) < 0.0) y = -y;
      return;
    }
  }
}

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return false;
}

double axis_angle(const InnerProduct& ip, const Eigen::VectorXd& u,
                  const Eigen::VectorXd& v, bool plus_minus) {
  double c = ip.dot(u, v);
  if (plus_minus) c = std::abs(c);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace

AxisSet find_geodesic_vectors(const ReductiveSpace& s, const MetricSpec& m,
                              const SearchConfig& cfg) {
  const int dm = s.dim_m();
  if (dm == 0)
    fail(ErrorCode::InvalidArgument, "find_geodesic_vectors: dim m = 0");
  if (dm > 6)
    fail(ErrorCode::InvalidArgument,
         "find_geodesic_vectors: search budget covers dim m <= 6 only");
  if (m.dim() != dm)
    fail(ErrorCode::DimensionMismatch, "metric dimension != dim m");

  const Problem problem{s, m, m.inner().matrix(), m.inner().norm(m.x())};
  const bool plus_minus =
      m.family() == MetricFamily::Riemannian ||
      (m.family() == MetricFamily::Randers && douglas_check(s, m.inner(), m.x()));

  AxisSet set;
  set.samples = cfg.samples;
  set.seed = cfg.seed;
  set.plus_minus_identified = plus_minus;

  std::vector<Eigen::VectorXd> converged_pts;
  for (Eigen::VectorXd y : sphere_samples(dm, cfg.samples, cfg.seed)) {
    y = normalize_a(problem.a, y);
    if (problem.kropina()) {
      const double d = m.x().dot(problem.a * y);
      if (d < 0.0) y = -y;
      if (!problem.in_domain(y)) continue;
    }
    if (newton_polish(problem, y)) {
      canonicalize(y, plus_minus);
      converged_pts.push_back(y);
      ++set.converged;
    } else {
      ++set.failed;
    }
  }

  std::sort(converged_pts.begin(), converged_pts.end(), lex_less);

  std::vector<Axis> reps;
  for (const Eigen::VectorXd& y : converged_pts) {
    bool merged = false;
    for (Axis& rep : reps) {
      if (axis_angle(m.inner(), rep.direction, y, plus_minus) <= cfg.dedup_angle) {
        merged = true;
        Eigen::VectorXd r;
        if (problem.residual(y, r) == EvalStatus::Ok &&
            r.cwiseAbs().maxCoeff() < rep.max_residual) {
          rep.direction = y;
          rep.max_residual = r.cwiseAbs().maxCoeff();
        }
        break;
      }
    }
    if (!merged) {
      Eigen::VectorXd r;
      if (problem.residual(y, r) != EvalStatus::Ok) continue;
      const double mr = r.cwiseAbs().maxCoeff();
      if (mr > cfg.tol) continue;  // re-verification gate
      reps.push_back(Axis{y, mr});
    }
  }

  set.distinct_count = static_cast<int>(reps.size());
  set.manifold = set.converged > 0 &&
                 static_cast<double>(set.distinct_count) >
                     0.05 * static_cast<double>(set.converged);

  // keep reports bounded when a whole submanifold satisfies the criterion
  if (set.manifold && reps.size() > 16) reps.resize(16);

  std::sort(reps.begin(), reps.end(),
            [](const Axis& a, const Axis& b) { return lex_less(a.direction, b.direction); });
  set.axes = std::move(reps);

  const int k = static_cast<int>(set.axes.size());
  set.pairwise_angles.resize(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      set.pairwise_angles(i, j) =
          axis_angle(m.inner(), set.axes[i].direction, set.axes[j].direction,
                     plus_minus);
  return set;
}

}  // namespace geovec
