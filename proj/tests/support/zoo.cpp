#include "zoo.hpp"

#include <cmath>

namespace geovec::testsupport {

LieAlgebra abelian(int n) { return LieAlgebra(n, {}); }

LieAlgebra heisenberg3() { return LieAlgebra(3, {{0, 1, 2, 1.0}}); }

LieAlgebra filiform4() {
  return LieAlgebra(4, {{0, 1, 2, 1.0}, {0, 2, 3, 1.0}});
}

LieAlgebra so3() {
  return LieAlgebra(3, {{0, 1, 2, 1.0}, {1, 2, 0, 1.0}, {0, 2, 1, -1.0}});
}

LieAlgebra sl2() {
  return LieAlgebra(3, {{0, 1, 1, 2.0}, {0, 2, 2, -2.0}, {1, 2, 0, 1.0}});
}

LieAlgebra affine2() { return LieAlgebra(2, {{0, 1, 1, 1.0}}); }

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const int na = a.dim(), nb = b.dim();
  std::vector<BracketEntry> entries = a.structure();
  for (const BracketEntry& e : b.structure())
    entries.push_back({e.i + na, e.j + na, e.k + na, e.c});
  return LieAlgebra(na + nb, entries);
}

LieAlgebra change_basis(const LieAlgebra& a, const Eigen::MatrixXd& p) {
  const int n = a.dim();
  const Eigen::MatrixXd pinv = p.partialPivLu().inverse();
  std::vector<BracketEntry> entries;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Eigen::VectorXd w = pinv * a.bracket(p.col(i), p.col(j));
      for (int k = 0; k < n; ++k)
        if (w(k) != 0.0) entries.push_back({i, j, k, w(k)});
    }
  return LieAlgebra(n, entries);
}

Eigen::MatrixXd random_orthogonal(int n, Rng& rng) {
  Eigen::MatrixXd g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) = rng.normal();
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < n; ++c)
    if (r(c, c) < 0.0) q.col(c) = -q.col(c);
  return q;
}

Eigen::MatrixXd random_spd(int n, Rng& rng, double cond) {
  const Eigen::MatrixXd q = random_orthogonal(n, rng);
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) d(i) = rng.uniform(1.0, cond);
  return q * d.asDiagonal() * q.transpose();
}

Eigen::MatrixXd random_invertible(int n, Rng& rng) {
  Eigen::MatrixXd g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) = rng.normal();
  return Eigen::MatrixXd::Identity(n, n) + 0.3 * g;
}

LieAlgebra random_algebra(int dim, Rng& rng) {
  const int pick = static_cast<int>(rng.next_u64() % 5);
  LieAlgebra base = [&]() {
    switch (pick) {
      case 0: return abelian(dim);
      case 1: {
        LieAlgebra h = heisenberg3();
        return dim > 3 ? direct_sum(h, abelian(dim - 3)) : (dim == 3 ? h : affine2());
      }
      case 2: {
        LieAlgebra s = so3();
        return dim > 3 ? direct_sum(s, abelian(dim - 3)) : (dim == 3 ? s : affine2());
      }
      case 3: {
        LieAlgebra f = affine2();
        return dim > 2 ? direct_sum(f, abelian(dim - 2)) : f;
      }
      default: {
        LieAlgebra s = sl2();
        return dim > 3 ? direct_sum(s, abelian(dim - 3)) : (dim == 3 ? s : affine2());
      }
    }
  }();
  return change_basis(base, random_invertible(dim, rng));
}

Eigen::VectorXd random_admissible(const InnerProduct& ip, const Eigen::VectorXd& x,
                                  Rng& rng, double margin) {
  for (;;) {
    Eigen::VectorXd y = rng.gaussian_vector(static_cast<int>(x.size()));
    const double n = ip.norm(y);
    if (n == 0.0) continue;
    y /= n;
    const double d = ip.dot(x, y);
    if (d > margin * ip.norm(x)) return y;
    if (d < -margin * ip.norm(x)) return -y;
  }
}

}  // namespace geovec::testsupport
