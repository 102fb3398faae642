#ifndef GEOVEC_REDUCTIVE_HPP
#define GEOVEC_REDUCTIVE_HPP

#include <Eigen/Dense>
#include <vector>

#include "geovec/lie_algebra.hpp"

namespace geovec {

/// A reductive decomposition g = h + m with projection maps and the bracket
/// tables the geodesic criteria need. h may be empty (Lie-group case).
///
/// Vectors "in algebra coordinates" have length dim(g); vectors "in m
/// coordinates" have length dim(m) and refer to the stored m basis.
class ReductiveSpace {
 public:
  /// h = 0, m = g with the identity basis.
  static ReductiveSpace lie_group(LieAlgebra algebra);

  /// The paper's split: m is the Killing-orthogonal complement of h.
  /// Requires h to be a subalgebra with K|h nondegenerate.
  static ReductiveSpace reductive_split(LieAlgebra algebra,
                                        const Eigen::MatrixXd& h_basis,
                                        const KillingData& killing);

  /// Explicit bases; validates the ReductiveSpace invariants
  /// (independence, subalgebra, [h, m] contained in m).
  static ReductiveSpace from_bases(LieAlgebra algebra,
                                   const Eigen::MatrixXd& h_basis,
                                   const Eigen::MatrixXd& m_basis);

  const LieAlgebra& algebra() const { return algebra_; }
  int dim() const { return algebra_.dim(); }
  int dim_h() const { return static_cast<int>(h_.cols()); }
  int dim_m() const { return static_cast<int>(m_.cols()); }
  const Eigen::MatrixXd& h_basis() const { return h_; }
  const Eigen::MatrixXd& m_basis() const { return m_; }
  const Eigen::MatrixXd& projection_m() const { return proj_m_; }
  const Eigen::MatrixXd& projection_h() const { return proj_h_; }

  /// m-coordinates of the m-projection of an algebra vector.
  Eigen::VectorXd m_coords(const Eigen::VectorXd& v) const {
    return coords_m_ * v;
  }
  /// Algebra vector for m-coordinates.
  Eigen::VectorXd m_lift(const Eigen::VectorXd& y) const { return m_ * y; }

  /// m-coordinates of [Y, m_j]_m for an algebra-coordinate Y.
  Eigen::VectorXd bracket_with_basis_m(const Eigen::VectorXd& y_alg, int j) const {
    return bracket_alg_m_[j] * y_alg;
  }
  /// Same map restricted to Y in m (m-coordinate input).
  const Eigen::MatrixXd& bracket_m_matrix(int j) const { return bracket_m_m_[j]; }

 private:
  ReductiveSpace(LieAlgebra algebra, Eigen::MatrixXd h, Eigen::MatrixXd m);
  void finalize();

  LieAlgebra algebra_;
  Eigen::MatrixXd h_, m_;          // columns: bases in algebra coordinates
  Eigen::MatrixXd proj_h_, proj_m_;  // n x n projections
  Eigen::MatrixXd coords_m_;         // dim_m x n
  std::vector<Eigen::MatrixXd> bracket_alg_m_;  // per j: dim_m x n
  std::vector<Eigen::MatrixXd> bracket_m_m_;    // per j: dim_m x dim_m
};

/// Infinitesimal Ad(H)-invariance of X in m: [h, X] = 0 for every basis
/// vector of h (equivalent to the group condition for connected H).
bool check_invariant_vector(const ReductiveSpace& s, const Eigen::VectorXd& x_m,
                            double tol = 1e-10);

}  // namespace geovec

#endif
