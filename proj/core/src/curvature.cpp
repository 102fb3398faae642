#include "geovec/curvature.hpp"

#include <vector>

#include "geovec/errors.hpp"
#include "geovec/numeric.hpp"

namespace geovec {

RicciData levi_civita_ricci(const ReductiveSpace& s, const InnerProduct& ip) {
  if (s.dim_h() != 0)
    fail(ErrorCode::InvalidArgument,
         "levi_civita_ricci expects the Lie-group case (h = 0)");
  const int n = s.dim_m();
  if (ip.dim() != n)
    fail(ErrorCode::DimensionMismatch, "inner product dimension != dim m");

  // orthonormal frame b_a = E e_a, E = A^{-1/2}
  const Eigen::MatrixXd frame = ip.inv_sqrt_matrix();
  const Eigen::MatrixXd to_frame = ip.sqrt_matrix();

  // structure constants in the frame: [b_i, b_j] = sum_k C[i][j][k] b_k
  std::vector<Eigen::MatrixXd> c(n, Eigen::MatrixXd::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Eigen::VectorXd w =
          to_frame * s.algebra().bracket(frame.col(i), frame.col(j));
      for (int k = 0; k < n; ++k) c[i](j, k) = w(k);
    }

  // Gamma[i](j, k) = <nabla_{b_i} b_j, b_k> by Koszul with delta products
  std::vector<Eigen::MatrixXd> gamma(n, Eigen::MatrixXd::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        gamma[i](j, k) = 0.5 * (c[i](j, k) - c[j](k, i) + c[k](i, j));

  auto nabla = [&](int i, const Eigen::VectorXd& v) {
    // nabla_{b_i} (sum v_j b_j), frame coefficients
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
    for (int j = 0; j < n; ++j)
      if (v(j) != 0.0) out += v(j) * gamma[i].row(j).transpose();
    return out;
  };

  // R(b_i, b_j) b_k = nabla_i nabla_j b_k - nabla_j nabla_i b_k
  //                   - nabla_{[b_i, b_j]} b_k
  Eigen::MatrixXd ricci = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) {
        Eigen::VectorXd term = nabla(i, gamma[j].row(k).transpose()) -
                               nabla(j, gamma[i].row(k).transpose());
        for (int l = 0; l < n; ++l) {
          const double cl = c[i](j, l);
          if (cl != 0.0) term -= cl * gamma[l].row(k).transpose();
        }
        sum += term(i);
      }
      ricci(j, k) = sum;
    }
  ricci = 0.5 * (ricci + ricci.transpose());

  RicciData out;
  out.ricci = ricci;
  out.frame = frame;
  out.eigenvalues = jacobi_eigen(ricci).values;
  return out;
}

Eigen::VectorXd ricci_eigenvalues(const ReductiveSpace& s, const InnerProduct& ip) {
  return levi_civita_ricci(s, ip).eigenvalues;
}

}  // namespace geovec
