#include "geovec/reductive.hpp"

#include <cmath>

#include "geovec/errors.hpp"
#include "geovec/numeric.hpp"

namespace geovec {

namespace {

void check_subalgebra(const LieAlgebra& a, const Eigen::MatrixXd& h) {
  if (h.cols() == 0) return;
  const Eigen::MatrixXd span = column_space(h, 1e-10);
  for (int i = 0; i < h.cols(); ++i)
    for (int j = i + 1; j < h.cols(); ++j) {
      const Eigen::VectorXd w = a.bracket(h.col(i), h.col(j));
      if (subspace_residual(span, w) > 1e-10)
        fail(ErrorCode::NotSubalgebra, "h is not a subalgebra: [h,h] leaves h");
    }
}

}  // namespace

ReductiveSpace::ReductiveSpace(LieAlgebra algebra, Eigen::MatrixXd h,
                               Eigen::MatrixXd m)
    : algebra_(std::move(algebra)), h_(std::move(h)), m_(std::move(m)) {
  finalize();
}

void ReductiveSpace::finalize() {
  const int n = algebra_.dim();
  const int k = static_cast<int>(h_.cols());
  const int dm = static_cast<int>(m_.cols());
  if (k + dm != n)
    fail(ErrorCode::DimensionMismatch, "dim h + dim m != dim g");

  Eigen::MatrixXd combined(n, n);
  combined.leftCols(dm) = m_;
  if (k > 0) combined.rightCols(k) = h_;
  if (numeric_rank(combined, 1e-10) != n)
    fail(ErrorCode::ConstraintViolation,
         "h and m bases do not span g (combined basis is rank deficient)");

  const Eigen::MatrixXd inv = combined.partialPivLu().inverse();
  coords_m_ = inv.topRows(dm);
  proj_m_ = m_ * coords_m_;
  proj_h_ = Eigen::MatrixXd::Identity(n, n) - proj_m_;

  // [h, m] must stay in m
  const Eigen::MatrixXd m_span = column_space(m_, 1e-10);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < dm; ++j) {
      const Eigen::VectorXd w = algebra_.bracket(h_.col(i), m_.col(j));
      if (subspace_residual(m_span, w) > 1e-10)
        fail(ErrorCode::ConstraintViolation,
             "[h, m] is not contained in m: decomposition is not reductive");
    }

  bracket_alg_m_.clear();
  bracket_m_m_.clear();
  bracket_alg_m_.reserve(dm);
  bracket_m_m_.reserve(dm);
  for (int j = 0; j < dm; ++j) {
    Eigen::MatrixXd t(dm, n);
    Eigen::VectorXd ei = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
      ei(i) = 1.0;
      t.col(i) = coords_m_ * algebra_.bracket(ei, m_.col(j));
      ei(i) = 0.0;
    }
    bracket_alg_m_.push_back(t);
    bracket_m_m_.push_back(t * m_);
  }
}

ReductiveSpace ReductiveSpace::lie_group(LieAlgebra algebra) {
  const int n = algebra.dim();
  return ReductiveSpace(std::move(algebra), Eigen::MatrixXd(n, 0),
                        Eigen::MatrixXd::Identity(n, n));
}

ReductiveSpace ReductiveSpace::reductive_split(LieAlgebra algebra,
                                               const Eigen::MatrixXd& h_basis,
                                               const KillingData& killing) {
  const int n = algebra.dim();
  if (h_basis.cols() == 0) return lie_group(std::move(algebra));
  if (h_basis.rows() != n)
    fail(ErrorCode::DimensionMismatch, "h_basis rows != dim g");
  if (numeric_rank(h_basis, 1e-10) != h_basis.cols())
    fail(ErrorCode::ConstraintViolation, "h_basis is not linearly independent");

  check_subalgebra(algebra, h_basis);

  const Eigen::MatrixXd k_h = h_basis.transpose() * killing.K * h_basis;
  const Eigen::VectorXd sv = singular_values(k_h);
  if (sv.size() == 0 || sv(0) == 0.0 || sv(sv.size() - 1) <= 1e-9 * sv(0))
    fail(ErrorCode::DegenerateOnH,
         "Killing form is degenerate on h; the paper's split does not apply");

  // m = Killing-orthogonal complement of h
  const Eigen::MatrixXd m = nullspace(h_basis.transpose() * killing.K, 1e-9);
  if (m.cols() != n - h_basis.cols())
    fail(ErrorCode::NumericalFailure,
         "Killing-orthogonal complement has unexpected dimension");

  ReductiveSpace s(std::move(algebra), h_basis, m);

  // rad K lands inside m when K|h is nondegenerate
  const Eigen::MatrixXd m_span = column_space(s.m_basis(), 1e-10);
  for (int c = 0; c < killing.radical.cols(); ++c)
    if (subspace_residual(m_span, killing.radical.col(c)) > 1e-9)
      fail(ErrorCode::NumericalFailure, "rad K escaped m after the split");
  return s;
}

ReductiveSpace ReductiveSpace::from_bases(LieAlgebra algebra,
                                          const Eigen::MatrixXd& h_basis,
                                          const Eigen::MatrixXd& m_basis) {
  const int n = algebra.dim();
  if ((h_basis.cols() > 0 && h_basis.rows() != n) || m_basis.rows() != n)
    fail(ErrorCode::DimensionMismatch, "basis rows != dim g");
  check_subalgebra(algebra, h_basis);
  Eigen::MatrixXd h = h_basis.cols() > 0 ? h_basis : Eigen::MatrixXd(n, 0);
  return ReductiveSpace(std::move(algebra), h, m_basis);
}

bool check_invariant_vector(const ReductiveSpace& s, const Eigen::VectorXd& x_m,
                            double tol) {
  const Eigen::VectorXd x = s.m_lift(x_m);
  for (int i = 0; i < s.dim_h(); ++i) {
    const Eigen::VectorXd w = s.algebra().bracket(s.h_basis().col(i), x);
    if (w.cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

}  // namespace geovec
