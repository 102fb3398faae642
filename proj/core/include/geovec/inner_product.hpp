#ifndef GEOVEC_INNER_PRODUCT_HPP
#define GEOVEC_INNER_PRODUCT_HPP

#include <Eigen/Dense>

namespace geovec {

/// Symmetric positive-definite inner product on m, in m-basis coordinates.
class InnerProduct {
 public:
  explicit InnerProduct(Eigen::MatrixXd matrix);
  static InnerProduct identity(int dim);

  int dim() const { return static_cast<int>(a_.rows()); }
  const Eigen::MatrixXd& matrix() const { return a_; }
  const Eigen::MatrixXd& sqrt_matrix() const { return sqrt_; }
  const Eigen::MatrixXd& inv_sqrt_matrix() const { return inv_sqrt_; }

  double dot(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
    return u.dot(a_ * v);
  }
  double norm(const Eigen::VectorXd& u) const;

  /// u scaled to unit norm; throws ZeroVector on u = 0.
  Eigen::VectorXd normalized(const Eigen::VectorXd& u) const;

 private:
  Eigen::MatrixXd a_, sqrt_, inv_sqrt_;
};

}  // namespace geovec

#endif
