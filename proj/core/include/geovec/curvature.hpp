#ifndef GEOVEC_CURVATURE_HPP
#define GEOVEC_CURVATURE_HPP

#include <Eigen/Dense>

#include "geovec/inner_product.hpp"
#include "geovec/reductive.hpp"

namespace geovec {

/// Levi-Civita data of a left-invariant metric (h = 0 required): Ricci
/// tensor in an orthonormalized frame, plus the frame itself in algebra
/// coordinates. Connection via the Koszul formula
///   2<nabla_u v, w> = <[u,v],w> - <[v,w],u> + <[w,u],v>.
struct RicciData {
  Eigen::MatrixXd ricci;   // dim x dim, orthonormal frame
  Eigen::MatrixXd frame;   // columns: orthonormal basis in algebra coords
  Eigen::VectorXd eigenvalues;  // ascending
};

RicciData levi_civita_ricci(const ReductiveSpace& s, const InnerProduct& ip);

/// Sorted Ricci eigenvalues (ascending).
Eigen::VectorXd ricci_eigenvalues(const ReductiveSpace& s, const InnerProduct& ip);

}  // namespace geovec

#endif
