#include "geovec/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "geovec/errors.hpp"

namespace geovec {

namespace {

double offdiag_norm(const Eigen::MatrixXd& a) {
  double s = 0.0;
  for (int p = 0; p < a.rows(); ++p)
    for (int q = p + 1; q < a.cols(); ++q) s += 2.0 * a(p, q) * a(p, q);
  return std::sqrt(s);
}

void canonicalize_sign(Eigen::MatrixXd& v) {
  for (int c = 0; c < v.cols(); ++c) {
    int imax = 0;
    double best = 0.0;
    for (int r = 0; r < v.rows(); ++r) {
      if (std::abs(v(r, c)) > best) {
        best = std::abs(v(r, c));
        imax = r;
      }
    }
    if (v.rows() > 0 && v(imax, c) < 0.0) v.col(c) = -v.col(c);
  }
}

}  // namespace

SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& symmetric) {
  if (symmetric.rows() != symmetric.cols())
    fail(ErrorCode::DimensionMismatch, "jacobi_eigen: matrix must be square");
  const int n = static_cast<int>(symmetric.rows());
  Eigen::MatrixXd a = 0.5 * (symmetric + symmetric.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

  const double fro = a.norm();
  const double stop = 1e-12 * fro;
  if (fro > 0.0) {
    for (int sweep = 0; sweep < 100 && offdiag_norm(a) > stop; ++sweep) {
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const double apq = a(p, q);
          if (apq == 0.0) continue;
          const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
          const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          for (int k = 0; k < n; ++k) {
            const double akp = a(k, p), akq = a(k, q);
            a(k, p) = c * akp - s * akq;
            a(k, q) = s * akp + c * akq;
          }
          for (int k = 0; k < n; ++k) {
            const double apk = a(p, k), aqk = a(q, k);
            a(p, k) = c * apk - s * aqk;
            a(q, k) = s * apk + c * aqk;
          }
          for (int k = 0; k < n; ++k) {
            const double vkp = v(k, p), vkq = v(k, q);
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) < a(j, j); });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    out.values(i) = a(order[i], order[i]);
    out.vectors.col(i) = v.col(order[i]);
  }
  canonicalize_sign(out.vectors);
  return out;
}

namespace {

// One-sided Jacobi SVD: M = U diag(sigma) V^T with sigma descending.
// Squaring M into a Gram matrix would cap the resolvable sigma ratio at
// sqrt(eps); the rank thresholds here go down to 1e-10, so the SVD has to
// work on the columns directly.
struct Svd {
  Eigen::MatrixXd u;  // rows(m) x cols(m), zero columns where sigma = 0
  Eigen::VectorXd sigma;
  Eigen::MatrixXd v;  // cols(m) x cols(m)
};

Svd one_sided_jacobi_svd(const Eigen::MatrixXd& m) {
  const int c = static_cast<int>(m.cols());
  Svd out;
  out.u = m;
  out.v = Eigen::MatrixXd::Identity(c, c);
  out.sigma = Eigen::VectorXd::Zero(c);
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < c - 1; ++p) {
      for (int q = p + 1; q < c; ++q) {
        const double app = out.u.col(p).squaredNorm();
        const double aqq = out.u.col(q).squaredNorm();
        const double apq = out.u.col(p).dot(out.u.col(q));
        if (app == 0.0 || aqq == 0.0) continue;
        if (std::abs(apq) <= 1e-15 * std::sqrt(app * aqq)) continue;
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * cs;
        const Eigen::VectorXd up = out.u.col(p);
        out.u.col(p) = cs * up - sn * out.u.col(q);
        out.u.col(q) = sn * up + cs * out.u.col(q);
        const Eigen::VectorXd vp = out.v.col(p);
        out.v.col(p) = cs * vp - sn * out.v.col(q);
        out.v.col(q) = sn * vp + cs * out.v.col(q);
        rotated = true;
      }
    }
    if (!rotated) break;
  }
  std::vector<int> order(c);
  std::iota(order.begin(), order.end(), 0);
  Eigen::VectorXd norms(c);
  for (int i = 0; i < c; ++i) norms(i) = out.u.col(i).norm();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return norms(a) > norms(b); });
  Eigen::MatrixXd u_sorted(m.rows(), c), v_sorted(c, c);
  for (int i = 0; i < c; ++i) {
    const int j = order[i];
    out.sigma(i) = norms(j);
    u_sorted.col(i) =
        norms(j) > 0.0 ? (out.u.col(j) / norms(j)).eval() : out.u.col(j);
    v_sorted.col(i) = out.v.col(j);
  }
  out.u = std::move(u_sorted);
  out.v = std::move(v_sorted);
  canonicalize_sign(out.u);
  canonicalize_sign(out.v);
  return out;
}

}  // namespace

Eigen::VectorXd singular_values(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return Eigen::VectorXd(0);
  return one_sided_jacobi_svd(m).sigma;
}

int numeric_rank(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  const Eigen::VectorXd sv = singular_values(m);
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = rel_tol * sv(0);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return r;
}

Eigen::MatrixXd column_space(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.size() == 0 || m.cols() == 0) return Eigen::MatrixXd(m.rows(), 0);
  const Svd svd = one_sided_jacobi_svd(m);
  if (svd.sigma(0) == 0.0) return Eigen::MatrixXd(m.rows(), 0);
  const double cut = rel_tol * svd.sigma(0);
  int r = 0;
  while (r < svd.sigma.size() && svd.sigma(r) > cut) ++r;
  return svd.u.leftCols(r);
}

Eigen::MatrixXd nullspace(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.cols() == 0) return Eigen::MatrixXd(0, 0);
  if (m.rows() == 0) return Eigen::MatrixXd::Identity(m.cols(), m.cols());
  const Svd svd = one_sided_jacobi_svd(m);
  if (svd.sigma(0) == 0.0) return svd.v;
  const double cut = rel_tol * svd.sigma(0);
  int r = 0;
  while (r < svd.sigma.size() && svd.sigma(r) > cut) ++r;
  return svd.v.rightCols(svd.sigma.size() - r);
}

Eigen::MatrixXd symmetric_nullspace(const Eigen::MatrixXd& s, double rel_tol) {
  SymmetricEigen eig = jacobi_eigen(s);
  const int n = static_cast<int>(eig.values.size());
  double amax = 0.0;
  for (int i = 0; i < n; ++i) amax = std::max(amax, std::abs(eig.values(i)));
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (amax == 0.0 || std::abs(eig.values(i)) <= rel_tol * amax)
      keep.push_back(i);
  Eigen::MatrixXd basis(n, static_cast<int>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k)
    basis.col(static_cast<int>(k)) = eig.vectors.col(keep[k]);
  return basis;
}

Eigen::MatrixXd spd_sqrt(const Eigen::MatrixXd& a) {
  SymmetricEigen eig = jacobi_eigen(a);
  if (eig.values.size() > 0 && eig.values(0) <= 0.0)
    fail(ErrorCode::InvalidArgument, "spd_sqrt: matrix is not positive definite");
  Eigen::VectorXd d = eig.values.array().sqrt();
  return eig.vectors * d.asDiagonal() * eig.vectors.transpose();
}

Eigen::MatrixXd spd_inv_sqrt(const Eigen::MatrixXd& a) {
  SymmetricEigen eig = jacobi_eigen(a);
  if (eig.values.size() > 0 && eig.values(0) <= 0.0)
    fail(ErrorCode::InvalidArgument,
         "spd_inv_sqrt: matrix is not positive definite");
  Eigen::VectorXd d = eig.values.array().sqrt().inverse();
  return eig.vectors * d.asDiagonal() * eig.vectors.transpose();
}

double subspace_residual(const Eigen::MatrixXd& basis, const Eigen::VectorXd& v) {
  if (basis.cols() == 0) return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
  const Eigen::VectorXd r = v - basis * (basis.transpose() * v);
  return r.cwiseAbs().maxCoeff();
}

bool subspace_contains(const Eigen::MatrixXd& basis, const Eigen::VectorXd& v,
                       double tol) {
  return subspace_residual(basis, v) <= tol;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 6.283185307179586476925286766559 * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Eigen::VectorXd Rng::gaussian_vector(int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = normal();
  return v;
}

}  // namespace geovec
