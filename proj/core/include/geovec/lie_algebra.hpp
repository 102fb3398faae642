#ifndef GEOVEC_LIE_ALGEBRA_HPP
#define GEOVEC_LIE_ALGEBRA_HPP

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

namespace geovec {

/// One sparse structure constant: [e_i, e_j] += c * e_k, stored once with
/// i < j; the bracket synthesizes antisymmetry.
struct BracketEntry {
  int i = 0;
  int j = 0;
  int k = 0;
  double c = 0.0;
};

/// A finite-dimensional real Lie algebra given by structure constants on a
/// fixed basis. Immutable after construction; safe to share across threads.
class LieAlgebra {
 public:
  LieAlgebra(int dim, std::vector<std::string> basis_names,
             const std::vector<BracketEntry>& structure);
  LieAlgebra(int dim, const std::vector<BracketEntry>& structure);

  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::vector<BracketEntry>& structure() const { return entries_; }

  /// [e_i, e_j] for basis indices (any order, antisymmetric).
  const Eigen::VectorXd& basis_bracket(int i, int j) const;

  /// Bilinear extension of the structure table.
  Eigen::VectorXd bracket(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;

  /// Matrix of ad(u) = [u, .] acting on basis coordinates.
  Eigen::MatrixXd ad(const Eigen::VectorXd& u) const;

 private:
  int dim_;
  std::vector<std::string> names_;
  std::vector<BracketEntry> entries_;
  // dense pair table, index i*dim+j, filled for all i != j
  std::vector<Eigen::VectorXd> table_;
  Eigen::VectorXd zero_;
};

struct ValidationReport {
  bool passed = true;
  double max_violation = 0.0;
  std::array<int, 3> worst_triple{0, 0, 0};
  double tol = 1e-10;
};

/// Jacobi-identity check over all basis triples.
ValidationReport validate(const LieAlgebra& a);

/// Killing form K(u,v) = trace(ad u . ad v) and its radical.
struct KillingData {
  Eigen::MatrixXd K;        // n x n symmetric
  Eigen::MatrixXd radical;  // orthonormal columns spanning rad K
};

KillingData killing_form(const LieAlgebra& a);

/// Derived series g = g^(0) >= g^(1) >= ... as orthonormal column bases;
/// stops after the first repeated rank (the repeated term appears once).
std::vector<Eigen::MatrixXd> derived_series(const LieAlgebra& a);

/// Cartan criterion at the spec tolerance: smallest singular value of K
/// above 1e-9 * ||K||.
bool is_semisimple(const LieAlgebra& a);

}  // namespace geovec

#endif
