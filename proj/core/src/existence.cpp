#include "geovec/existence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "geovec/checks.hpp"
#include "geovec/errors.hpp"
#include "geovec/numeric.hpp"
#include "geovec/residuals.hpp"

namespace geovec {

namespace {

constexpr double kZeroEigenRel = 1e-8;
constexpr double kCertificateTol = 1e-9;
constexpr double kBisectionTol = 1e-12;
constexpr int kBisectionMax = 200;
constexpr int kScanGrid = 512;

double kropina_f(const InnerProduct& ip, const Eigen::VectorXd& x,
                 const Eigen::VectorXd& y) {
  return ip.dot(y, y) / ip.dot(x, y);
}

}  // namespace

std::string existence_case_name(ExistenceCase c) {
  switch (c) {
    case ExistenceCase::RadEqualsM: return "rad_equals_m";
    case ExistenceCase::EigenSplitXEqualsX0: return "eigensplit_x_equals_x0";
    case ExistenceCase::EigenSplitGeneral: return "eigensplit_general";
  }
  return "?";
}

ThetaSplit theta_eigensplit(const ReductiveSpace& s, const InnerProduct& ip,
                            const KillingData& killing) {
  const int dm = s.dim_m();
  if (ip.dim() != dm)
    fail(ErrorCode::DimensionMismatch, "theta_eigensplit: ip dimension != dim m");

  ThetaSplit split;
  split.k_m.resize(dm, dm);
  for (int a = 0; a < dm; ++a)
    for (int b = a; b < dm; ++b) {
      const double v = s.m_basis().col(a).dot(killing.K * s.m_basis().col(b));
      split.k_m(a, b) = v;
      split.k_m(b, a) = v;
    }

  // theta = A^{-1} K_m is selfadjoint for A; diagonalize the congruent
  // symmetric matrix A^{-1/2} K_m A^{-1/2} and pull the basis back.
  const Eigen::MatrixXd& is = ip.inv_sqrt_matrix();
  const SymmetricEigen eig = jacobi_eigen(is * split.k_m * is);
  split.theta = ip.matrix().partialPivLu().solve(split.k_m);

  const double amax = eig.values.cwiseAbs().maxCoeff();
  std::vector<int> order(dm);
  std::iota(order.begin(), order.end(), 0);
  auto zero = [&](int i) {
    return amax == 0.0 || std::abs(eig.values(i)) <= kZeroEigenRel * amax;
  };
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    const bool zi = zero(i), zj = zero(j);
    if (zi != zj) return !zi;  // nonzero first
    return std::abs(eig.values(i)) > std::abs(eig.values(j));
  });

  split.eigenvalues.resize(dm);
  split.eigenvectors.resize(dm, dm);
  split.nonzero_count = 0;
  for (int c = 0; c < dm; ++c) {
    split.eigenvalues(c) = eig.values(order[c]);
    split.eigenvectors.col(c) = is * eig.vectors.col(order[c]);
    if (!zero(order[c])) ++split.nonzero_count;
  }
  split.v0 = split.eigenvectors.rightCols(dm - split.nonzero_count);
  return split;
}

namespace {

// Y(t) = X + sum_i x_i * (t lambda_i / (1 - t lambda_i)) f_i.
// At t = 0 this reproduces X bit-exactly, so M(0) = F(X) - 2 = -1 exactly.
struct Case3Curve {
  const InnerProduct& ip;
  Eigen::VectorXd x;
  Eigen::VectorXd xi;       // x_i = <X, f_i>
  Eigen::MatrixXd f;        // nonzero eigenvectors
  Eigen::VectorXd lambdas;  // matching eigenvalues

  Eigen::VectorXd y(double t) const {
    Eigen::VectorXd out = x;
    for (int i = 0; i < xi.size(); ++i) {
      const double den = 1.0 - t * lambdas(i);
      out += xi(i) * (t * lambdas(i) / den) * f.col(i);
    }
    return out;
  }

  Eigen::VectorXd y_components(double t) const {
    Eigen::VectorXd out(xi.size());
    for (int i = 0; i < xi.size(); ++i) out(i) = xi(i) / (1.0 - t * lambdas(i));
    return out;
  }

  bool domain_ok(double t) const {
    const Eigen::VectorXd yt = y(t);
    return ip.dot(x, yt) > 0.0 && yt.allFinite();
  }

  double m_value(double t) const { return kropina_f(ip, x, y(t)) - 2.0; }
};

struct PoleScan {
  bool found = false;
  double lo = 0.0, hi = 0.0;  // M(lo) < 0 < M(hi)
  std::vector<ScanSample> trace;
};

// Scan from 0 toward the pole, stopping a margin short of it, and return
// the first grid bracket with a sign change of M.
PoleScan scan_toward_pole(const Case3Curve& curve, double pole) {
  PoleScan scan;
  const double margin = 1e-6 * std::max(1.0, std::abs(pole));
  double t_stop = pole - (pole > 0.0 ? margin : -margin);
  if ((pole > 0.0) != (t_stop > 0.0)) t_stop = pole * (1.0 - 1e-6);

  double prev_t = 0.0;
  double prev_m = curve.m_value(0.0);
  scan.trace.push_back({0.0, prev_m, curve.domain_ok(0.0)});
  for (int k = 1; k <= kScanGrid; ++k) {
    const double t = t_stop * static_cast<double>(k) / kScanGrid;
    const bool ok = curve.domain_ok(t);
    const double m = ok ? curve.m_value(t)
                        : std::numeric_limits<double>::quiet_NaN();
    scan.trace.push_back({t, m, ok});
    if (!ok) return scan;
    if (prev_m < 0.0 && m > 0.0) {
      scan.found = true;
      scan.lo = prev_t;
      scan.hi = t;
      return scan;
    }
    if (m == 0.0) {
      scan.found = true;
      scan.lo = scan.hi = t;
      return scan;
    }
    prev_t = t;
    prev_m = m;
  }
  // M -> +inf at the pole; close the remaining gap geometrically
  for (int j = 1; j <= 48; ++j) {
    const double t = pole - (pole - t_stop) * std::pow(0.5, j);
    if (!curve.domain_ok(t)) return scan;
    const double m = curve.m_value(t);
    scan.trace.push_back({t, m, true});
    if (prev_m < 0.0 && m > 0.0) {
      scan.found = true;
      scan.lo = prev_t;
      scan.hi = t;
      return scan;
    }
    prev_t = t;
    prev_m = m;
  }
  return scan;
}

void verify_certificate(const ReductiveSpace& s, const InnerProduct& ip,
                        const Eigen::VectorXd& x_m, ExistenceCertificate* cert) {
  const ResidualOutcome out =
      kropina_residual(s, ip, x_m, s.m_lift(cert->y_m));
  if (!out.ok())
    fail(ErrorCode::ResidualTooLarge,
         "existence certificate left the Kropina domain during verification");
  cert->residual = out.max_abs();
  cert->f_value = kropina_f(ip, x_m, cert->y_m);
  if (cert->residual > kCertificateTol)
    fail(ErrorCode::ResidualTooLarge,
         "existence certificate failed verification: residual " +
             std::to_string(cert->residual));
}

}  // namespace

ExistenceCertificate kropina_existence(const ReductiveSpace& s,
                                       const InnerProduct& ip,
                                       const Eigen::VectorXd& x_m) {
  if (x_m.size() != s.dim_m())
    fail(ErrorCode::DimensionMismatch, "kropina_existence: X length != dim m");
  if (ip.norm(x_m) <= 1e-12)
    fail(ErrorCode::ZeroVector, "kropina_existence: X must be nonzero");
  if (!check_invariant_vector(s, x_m))
    fail(ErrorCode::InvariantVectorViolation,
         "kropina_existence: X is not Ad(H)-invariant ([h, X] != 0)");

  const KillingData killing = killing_form(s.algebra());

  // the construction needs m = h^perp for the Killing form
  if (s.dim_h() > 0) {
    const double kscale = std::max(1.0, killing.K.cwiseAbs().maxCoeff());
    const Eigen::MatrixXd cross =
        s.m_basis().transpose() * killing.K * s.h_basis();
    if (cross.cwiseAbs().maxCoeff() > 1e-9 * kscale)
      fail(ErrorCode::ConstraintViolation,
           "kropina_existence: decomposition is not Killing-orthogonal");
  }

  ExistenceCertificate cert;
  cert.eigen = theta_eigensplit(s, ip, killing);
  const int r = cert.eigen.nonzero_count;
  const int dm = s.dim_m();

  if (r == 0) {
    // Case 1: rad K = m. Any unit Y orthogonal to [g,g]_m yields the
    // geodesic vector W = (|X| Y + X)/2.
    cert.case_tag = ExistenceCase::RadEqualsM;
    const int n = s.dim();
    Eigen::MatrixXd brackets(dm, n * (n - 1) / 2);
    int c = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        brackets.col(c++) = s.m_coords(s.algebra().basis_bracket(i, j));
    const Eigen::MatrixXd comm = column_space(brackets, 1e-9);

    // orthogonal complement of [g,g]_m inside m, for the inner product
    const Eigen::MatrixXd ortho =
        comm.cols() == 0 ? Eigen::MatrixXd::Identity(dm, dm)
                         : nullspace(comm.transpose() * ip.matrix(), 1e-9);
    if (ortho.cols() == 0)
      fail(ErrorCode::DomainExhausted,
           "Case 1: [g,g]_m spans m; no orthogonal direction exists "
           "(contradicts the solvable-case argument)");

    // prefer Y orthogonal to X as well
    Eigen::VectorXd y_dir;
    const Eigen::MatrixXd perp_x =
        nullspace(x_m.transpose() * ip.matrix() * ortho, 1e-9);
    if (perp_x.cols() > 0) {
      y_dir = ip.normalized(ortho * perp_x.col(0));
    } else {
      y_dir = ip.normalized(ortho.col(0));
      if (ip.dot(x_m, y_dir) < 0.0) y_dir = -y_dir;
    }
    cert.case1_direction = y_dir;
    cert.case1_path = "orthogonal-complement";
    cert.y_m = 0.5 * (ip.norm(x_m) * y_dir + x_m);

    const ResidualOutcome probe = kropina_residual(s, ip, x_m, s.m_lift(cert.y_m));
    if (!probe.ok() || probe.max_abs() > kCertificateTol) {
      // fallback: sweep unit directions of the orthogonal complement
      cert.case1_path = "fallback-search";
      Rng rng(0);
      bool found = false;
      for (int k = 0; k < 4096 && !found; ++k) {
        Eigen::VectorXd u = ortho * rng.gaussian_vector(static_cast<int>(ortho.cols()));
        const double nu = ip.norm(u);
        if (nu == 0.0) continue;
        u /= nu;
        const Eigen::VectorXd w = 0.5 * (ip.norm(x_m) * u + x_m);
        const ResidualOutcome res = kropina_residual(s, ip, x_m, s.m_lift(w));
        if (res.ok() && res.max_abs() <= kCertificateTol) {
          cert.case1_direction = u;
          cert.y_m = w;
          found = true;
        }
      }
      if (!found)
        fail(ErrorCode::DomainExhausted,
             "Case 1: no direction in X + span([g,g]_m^perp) verified");
    }
    verify_certificate(s, ip, x_m, &cert);
    return cert;
  }

  // eigen components of X on the nonzero part
  const Eigen::MatrixXd f = cert.eigen.eigenvectors.leftCols(r);
  Eigen::VectorXd xi(r);
  for (int i = 0; i < r; ++i) xi(i) = ip.dot(x_m, f.col(i));
  const Eigen::VectorXd x0 = x_m - f * xi;
  const double xnorm = ip.norm(x_m);

  if (xi.cwiseAbs().maxCoeff() <= kZeroEigenRel * xnorm) {
    // Case 2: X = X0 in V0; explicit solution with t = 1/lambda_1
    cert.case_tag = ExistenceCase::EigenSplitXEqualsX0;
    const double n0 = ip.norm(x0);
    cert.t0 = 1.0 / cert.eigen.eigenvalues(0);
    cert.y_components = Eigen::VectorXd::Zero(r);
    cert.y_components(0) = n0;
    cert.y_m = x0 + n0 * f.col(0);
    verify_certificate(s, ip, x_m, &cert);
    return cert;
  }

  // Case 3
  cert.case_tag = ExistenceCase::EigenSplitGeneral;
  Case3Curve curve{ip, x_m, xi, f, cert.eigen.eigenvalues.head(r)};

  // poles 1/lambda_i for components actually present in X, nearest first
  std::vector<double> poles;
  for (int i = 0; i < r; ++i)
    if (std::abs(xi(i)) > 1e-13 * xnorm)
      poles.push_back(1.0 / curve.lambdas(i));
  double nearest_pos = std::numeric_limits<double>::infinity();
  double nearest_neg = -std::numeric_limits<double>::infinity();
  for (double p : poles) {
    if (p > 0.0) nearest_pos = std::min(nearest_pos, p);
    if (p < 0.0) nearest_neg = std::max(nearest_neg, p);
  }
  std::vector<double> targets;
  if (std::isfinite(nearest_pos)) targets.push_back(nearest_pos);
  if (std::isfinite(nearest_neg)) targets.push_back(nearest_neg);
  std::sort(targets.begin(), targets.end(),
            [](double a, double b) { return std::abs(a) < std::abs(b); });
  if (targets.empty())
    fail(ErrorCode::NumericalFailure,
         "Case 3: no contributing pole despite X outside V0");

  PoleScan scan;
  for (double pole : targets) {
    scan = scan_toward_pole(curve, pole);
    if (scan.found) break;
  }
  cert.scan_trace = scan.trace;
  if (!scan.found) {
    std::string msg = "Case 3: no sign change of M found; scan trace has " +
                      std::to_string(scan.trace.size()) + " samples toward";
    for (double pole : targets) msg += " " + std::to_string(pole);
    fail(ErrorCode::DomainExhausted, msg);
  }

  cert.bracket_lo = scan.lo;
  cert.bracket_hi = scan.hi;
  double lo = scan.lo, hi = scan.hi;
  double t0 = 0.5 * (lo + hi);
  if (lo == hi) {
    t0 = lo;
  } else {
    for (int it = 0; it < kBisectionMax; ++it) {
      t0 = 0.5 * (lo + hi);
      const double mv = curve.m_value(t0);
      ++cert.bisection_iterations;
      if (std::abs(mv) <= kBisectionTol) break;
      if (mv < 0.0)
        lo = t0;
      else
        hi = t0;
    }
  }
  cert.t0 = t0;
  cert.y_components = curve.y_components(t0);
  cert.y_m = curve.y(t0);
  verify_certificate(s, ip, x_m, &cert);
  return cert;
}

std::vector<MCurveRow> m_curve(const ReductiveSpace& s, const InnerProduct& ip,
                               const Eigen::VectorXd& x_m,
                               const std::vector<double>& t_samples) {
  const KillingData killing = killing_form(s.algebra());
  const ThetaSplit split = theta_eigensplit(s, ip, killing);
  const int r = split.nonzero_count;
  if (r == 0)
    fail(ErrorCode::ConstraintViolation,
         "m_curve: rad K = m, not a Case-3 configuration");
  const Eigen::MatrixXd f = split.eigenvectors.leftCols(r);
  Eigen::VectorXd xi(r);
  for (int i = 0; i < r; ++i) xi(i) = ip.dot(x_m, f.col(i));
  if (xi.cwiseAbs().maxCoeff() <= kZeroEigenRel * ip.norm(x_m))
    fail(ErrorCode::ConstraintViolation,
         "m_curve: X lies in V0, not a Case-3 configuration");
  Case3Curve curve{ip, x_m, xi, f, split.eigenvalues.head(r)};

  std::vector<MCurveRow> rows;
  rows.reserve(t_samples.size());
  for (double t : t_samples) {
    MCurveRow row;
    row.t = t;
    bool at_pole = false;
    for (int i = 0; i < r; ++i) {
      if (std::abs(xi(i)) <= 1e-13 * ip.norm(x_m)) continue;
      if (std::abs(1.0 - t * curve.lambdas(i)) <=
          1e-12 * std::max(1.0, std::abs(t * curve.lambdas(i))))
        at_pole = true;
    }
    if (at_pole || !curve.domain_ok(t)) {
      row.domain_flag = true;
      row.m_value = std::numeric_limits<double>::quiet_NaN();
    } else {
      row.m_value = curve.m_value(t);
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> m_curve_default_grid(const ReductiveSpace& s,
                                         const InnerProduct& ip, int count) {
  const KillingData killing = killing_form(s.algebra());
  const ThetaSplit split = theta_eigensplit(s, ip, killing);
  if (split.nonzero_count == 0)
    fail(ErrorCode::ConstraintViolation, "m_curve: rad K = m");
  const double lmax = std::abs(split.eigenvalues(0));
  const double extent = 0.999 / lmax;
  std::vector<double> ts;
  ts.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k)
    ts.push_back(extent * (2.0 * k / (count - 1.0) - 1.0));
  return ts;
}

OrthogonalGeodesicsReport semisimple_orthogonal_geodesics(
    const ReductiveSpace& s, const InnerProduct& ip, const MetricSpec& m,
    double tol_riemannian, double tol_finsler) {
  if (!is_semisimple(s.algebra()))
    fail(ErrorCode::ConstraintViolation,
         "semisimple_orthogonal_geodesics: algebra is not semisimple");

  const KillingData killing = killing_form(s.algebra());
  const ThetaSplit split = theta_eigensplit(s, ip, killing);
  const int dm = s.dim_m();

  OrthogonalGeodesicsReport rep;

  if (m.family() != MetricFamily::Riemannian) {
    // if [f_i, m]_m spans m for every candidate basis, no nonzero X can
    // satisfy the orthogonality hypothesis at all
    Eigen::MatrixXd all(dm, dm * dm);
    int c = 0;
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dm; ++j)
        all.col(c++) = s.bracket_m_matrix(j) * split.eigenvectors.col(i);
    rep.hypotheses_unsatisfiable = numeric_rank(all, 1e-9) == dm;
  }

  for (int i = 0; i < dm; ++i) {
    const Eigen::VectorXd fi = split.eigenvectors.col(i);
    const Eigen::VectorXd fi_alg = s.m_lift(fi);
    if (m.family() != MetricFamily::Riemannian) {
      const TransferReport tr = transfer_check(s, m, fi_alg);
      if (!tr.applies) {
        rep.hypothesis_failed.push_back(i);
        continue;
      }
    }
    double res;
    if (m.family() == MetricFamily::Riemannian) {
      res = riemannian_residual(s, ip, fi_alg).cwiseAbs().maxCoeff();
      if (res > tol_riemannian) continue;
    } else {
      const ResidualOutcome out = finsler_residual(s, m, fi_alg);
      if (!out.ok()) continue;
      res = out.max_abs();
      if (res > tol_finsler) continue;
    }
    rep.axes.push_back(fi);
    rep.residuals.push_back(res);
  }

  const int k = static_cast<int>(rep.axes.size());
  rep.gram.resize(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      rep.gram(i, j) = ip.dot(rep.axes[i], rep.axes[j]);
      if (i != j)
        rep.max_offdiagonal = std::max(rep.max_offdiagonal,
                                       std::abs(rep.gram(i, j)));
    }
  return rep;
}

}  // namespace geovec
