#include "geovec/inner_product.hpp"

#include <cmath>

#include "geovec/errors.hpp"
#include "geovec/numeric.hpp"

namespace geovec {

InnerProduct::InnerProduct(Eigen::MatrixXd matrix) : a_(std::move(matrix)) {
  if (a_.rows() != a_.cols())
    fail(ErrorCode::DimensionMismatch, "inner product matrix must be square");
  const double scale = std::max(1.0, a_.cwiseAbs().maxCoeff());
  if ((a_ - a_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    fail(ErrorCode::InvalidMetric, "inner product matrix is not symmetric");
  a_ = 0.5 * (a_ + a_.transpose());
  const SymmetricEigen eig = jacobi_eigen(a_);
  const int n = dim();
  if (n == 0 || eig.values(0) <= 1e-12 * std::max(0.0, eig.values(n - 1)) ||
      eig.values(0) <= 0.0)
    fail(ErrorCode::InvalidMetric, "inner product matrix is not positive definite");
  Eigen::VectorXd r = eig.values.array().sqrt();
  sqrt_ = eig.vectors * r.asDiagonal() * eig.vectors.transpose();
  inv_sqrt_ = eig.vectors * r.asDiagonal().inverse() * eig.vectors.transpose();
}

InnerProduct InnerProduct::identity(int dim) {
  return InnerProduct(Eigen::MatrixXd::Identity(dim, dim));
}

double InnerProduct::norm(const Eigen::VectorXd& u) const {
  return std::sqrt(std::max(0.0, dot(u, u)));
}

Eigen::VectorXd InnerProduct::normalized(const Eigen::VectorXd& u) const {
  const double n = norm(u);
  if (n == 0.0) fail(ErrorCode::ZeroVector, "cannot normalize the zero vector");
  return u / n;
}

}  // namespace geovec
