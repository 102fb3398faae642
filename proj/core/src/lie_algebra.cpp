#include "geovec/lie_algebra.hpp"

#include <cmath>

#include "geovec/errors.hpp"
#include "geovec/numeric.hpp"

namespace geovec {

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> basis_names,
                       const std::vector<BracketEntry>& structure)
    : dim_(dim), names_(std::move(basis_names)), entries_(structure) {
  if (dim_ <= 0)
    fail(ErrorCode::InvalidArgument, "LieAlgebra: dimension must be positive");
  if (names_.empty()) {
    names_.reserve(dim_);
    for (int i = 0; i < dim_; ++i) names_.push_back("e" + std::to_string(i + 1));
  }
  if (static_cast<int>(names_.size()) != dim_)
    fail(ErrorCode::DimensionMismatch, "LieAlgebra: basis_names size != dim");

  zero_ = Eigen::VectorXd::Zero(dim_);
  table_.assign(static_cast<std::size_t>(dim_) * dim_, zero_);
  for (const BracketEntry& e : entries_) {
    if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= dim_ || e.j >= dim_ || e.k >= dim_)
      fail(ErrorCode::InvalidArgument, "LieAlgebra: structure index out of range");
    if (e.i >= e.j)
      fail(ErrorCode::InvalidArgument,
           "LieAlgebra: structure entries must satisfy i < j");
    table_[static_cast<std::size_t>(e.i) * dim_ + e.j](e.k) += e.c;
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      table_[static_cast<std::size_t>(j) * dim_ + i] =
          -table_[static_cast<std::size_t>(i) * dim_ + j];
}

LieAlgebra::LieAlgebra(int dim, const std::vector<BracketEntry>& structure)
    : LieAlgebra(dim, {}, structure) {}

const Eigen::VectorXd& LieAlgebra::basis_bracket(int i, int j) const {
  if (i == j) return zero_;
  return table_[static_cast<std::size_t>(i) * dim_ + j];
}

Eigen::VectorXd LieAlgebra::bracket(const Eigen::VectorXd& u,
                                    const Eigen::VectorXd& v) const {
  if (u.size() != dim_ || v.size() != dim_)
    fail(ErrorCode::DimensionMismatch, "bracket: vector length != dim");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      const double coeff = u(i) * v(j) - u(j) * v(i);
      if (coeff != 0.0) w += coeff * basis_bracket(i, j);
    }
  }
  return w;
}

Eigen::MatrixXd LieAlgebra::ad(const Eigen::VectorXd& u) const {
  Eigen::MatrixXd m(dim_, dim_);
  Eigen::VectorXd ej = Eigen::VectorXd::Zero(dim_);
  for (int j = 0; j < dim_; ++j) {
    ej(j) = 1.0;
    m.col(j) = bracket(u, ej);
    ej(j) = 0.0;
  }
  return m;
}

ValidationReport validate(const LieAlgebra& a) {
  ValidationReport report;
  const int n = a.dim();
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd ei = Eigen::VectorXd::Zero(n);
    ei(i) = 1.0;
    for (int j = i + 1; j < n; ++j) {
      Eigen::VectorXd ej = Eigen::VectorXd::Zero(n);
      ej(j) = 1.0;
      for (int k = j + 1; k < n; ++k) {
        Eigen::VectorXd ek = Eigen::VectorXd::Zero(n);
        ek(k) = 1.0;
        const Eigen::VectorXd cyc = a.bracket(ei, a.basis_bracket(j, k)) +
                                    a.bracket(ej, a.basis_bracket(k, i)) +
                                    a.bracket(ek, a.basis_bracket(i, j));
        const double viol = cyc.cwiseAbs().maxCoeff();
        if (viol > report.max_violation) {
          report.max_violation = viol;
          report.worst_triple = {i, j, k};
        }
      }
    }
  }
  report.passed = report.max_violation <= report.tol;
  return report;
}

KillingData killing_form(const LieAlgebra& a) {
  const int n = a.dim();
  std::vector<Eigen::MatrixXd> ads;
  ads.reserve(n);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd ei = Eigen::VectorXd::Zero(n);
    ei(i) = 1.0;
    ads.push_back(a.ad(ei));
  }
  KillingData kd;
  kd.K.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double tij = (ads[i] * ads[j]).trace();
      kd.K(i, j) = tij;
      kd.K(j, i) = tij;
    }
  kd.radical = symmetric_nullspace(kd.K, 1e-9);
  return kd;
}

std::vector<Eigen::MatrixXd> derived_series(const LieAlgebra& a) {
  const int n = a.dim();
  std::vector<Eigen::MatrixXd> chain;
  chain.push_back(Eigen::MatrixXd::Identity(n, n));
  for (;;) {
    const Eigen::MatrixXd& cur = chain.back();
    const int m = static_cast<int>(cur.cols());
    Eigen::MatrixXd brackets(n, m * (m - 1) / 2 > 0 ? m * (m - 1) / 2 : 0);
    int c = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        brackets.col(c++) = a.bracket(cur.col(i), cur.col(j));
    const Eigen::MatrixXd next = column_space(brackets, 1e-10);
    chain.push_back(next);
    if (next.cols() == cur.cols()) break;
    if (next.cols() == 0) {
      // one more step would repeat {0}; stop here with {0} as the last term
      break;
    }
  }
  return chain;
}

bool is_semisimple(const LieAlgebra& a) {
  const KillingData kd = killing_form(a);
  const SymmetricEigen eig = jacobi_eigen(kd.K);
  const int n = static_cast<int>(eig.values.size());
  double amin = 0.0, amax = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = std::abs(eig.values(i));
    amax = std::max(amax, v);
    amin = (i == 0) ? v : std::min(amin, v);
  }
  if (amax == 0.0) return false;
  return amin > 1e-9 * amax;
}

}  // namespace geovec
