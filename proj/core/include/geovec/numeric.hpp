#ifndef GEOVEC_NUMERIC_HPP
#define GEOVEC_NUMERIC_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace geovec {

/// Eigendecomposition of a real symmetric matrix, eigenvalues ascending,
/// eigenvectors as orthonormal columns with a deterministic sign convention
/// (largest-magnitude component positive).
struct SymmetricEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

/// Cyclic Jacobi rotations; sweeps until the off-diagonal Frobenius norm
/// drops below 1e-12 relative to the matrix norm. Small dense inputs only.
SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& symmetric);

/// Singular values (descending) computed from the Jacobi eigendecomposition
/// of M^T M or M M^T, whichever is smaller.
Eigen::VectorXd singular_values(const Eigen::MatrixXd& m);

/// Rank with the threshold sigma > rel_tol * sigma_max.
int numeric_rank(const Eigen::MatrixXd& m, double rel_tol);

/// Orthonormal basis (columns) of the column space of m, at the same
/// singular-value threshold as numeric_rank.
Eigen::MatrixXd column_space(const Eigen::MatrixXd& m, double rel_tol);

/// Orthonormal basis (columns) of { v : m v = 0 }.
Eigen::MatrixXd nullspace(const Eigen::MatrixXd& m, double rel_tol);

/// Nullspace of a symmetric matrix straight from its eigendecomposition
/// (|lambda| <= rel_tol * max|lambda|); avoids squaring the conditioning.
Eigen::MatrixXd symmetric_nullspace(const Eigen::MatrixXd& s, double rel_tol);

Eigen::MatrixXd spd_sqrt(const Eigen::MatrixXd& a);
Eigen::MatrixXd spd_inv_sqrt(const Eigen::MatrixXd& a);

/// Max-norm of v - P v where P projects onto span(basis); basis columns
/// must be orthonormal.
double subspace_residual(const Eigen::MatrixXd& basis, const Eigen::VectorXd& v);

bool subspace_contains(const Eigen::MatrixXd& basis, const Eigen::VectorXd& v,
                       double tol);

/// Deterministic RNG. mt19937_64 is bit-reproducible across platforms; the
/// distribution mapping is done by hand because std::*_distribution is not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  double normal();
  Eigen::VectorXd gaussian_vector(int n);
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace geovec

#endif
