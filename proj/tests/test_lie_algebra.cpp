#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include "geovec/errors.hpp"
#include "geovec/lie_algebra.hpp"
#include "geovec/numeric.hpp"
#include "geovec/reductive.hpp"
#include "support/zoo.hpp"

using namespace geovec;
namespace zoo = geovec::testsupport;

namespace {

Eigen::VectorXd ev(std::initializer_list<double> vals) {
  Eigen::VectorXd v(static_cast<int>(vals.size()));
  int i = 0;
  for (double x : vals) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("bracket on the abelian algebra vanishes") {
  const LieAlgebra a = zoo::abelian(4);
  Rng rng(7);
  const Eigen::VectorXd u = rng.gaussian_vector(4), v = rng.gaussian_vector(4);
  CHECK(a.bracket(u, v).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("bracket reads the Heisenberg table") {
  const LieAlgebra h = zoo::heisenberg3();
  const Eigen::VectorXd w = h.bracket(ev({1, 0, 0}), ev({0, 1, 0}));
  CHECK(w.isApprox(ev({0, 0, 1})));
}

TEST_CASE("bracket expands bilinearly on so(3)") {
  const LieAlgebra s = zoo::so3();
  // [e1+e2, e2+e3] = e3 - e2 + e1
  const Eigen::VectorXd w = s.bracket(ev({1, 1, 0}), ev({0, 1, 1}));
  CHECK(w.isApprox(ev({1, -1, 1})));
}

TEST_CASE("bracket is bilinear and antisymmetric on random input") {
  Rng rng(11);
  const LieAlgebra a = zoo::random_algebra(4, rng);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::VectorXd u = rng.gaussian_vector(4), w = rng.gaussian_vector(4),
                          v = rng.gaussian_vector(4);
    const double al = rng.uniform(-2, 2), be = rng.uniform(-2, 2);
    const Eigen::VectorXd lhs = a.bracket(al * u + be * w, v);
    const Eigen::VectorXd rhs = al * a.bracket(u, v) + be * a.bracket(w, v);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12 * (1 + rhs.cwiseAbs().maxCoeff()));
    CHECK((a.bracket(u, v) + a.bracket(v, u)).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("validate passes abelian and so(3), fails a broken table") {
  CHECK(validate(zoo::abelian(3)).passed);
  CHECK(validate(zoo::abelian(3)).max_violation == 0.0);
  CHECK(validate(zoo::so3()).passed);

  // [e1,e2]=e3, [e1,e3]=e3, [e2,e3]=e1 violates Jacobi on (e1,e2,e3)
  const LieAlgebra bad(3, {{0, 1, 2, 1.0}, {0, 2, 2, 1.0}, {1, 2, 0, 1.0}});
  const ValidationReport r = validate(bad);
  CHECK_FALSE(r.passed);
  CHECK(r.max_violation == doctest::Approx(1.0));
  CHECK(r.worst_triple == std::array<int, 3>{0, 1, 2});
}

TEST_CASE("Killing form of the classics") {
  SUBCASE("abelian: K = 0, radical is everything") {
    const KillingData kd = killing_form(zoo::abelian(3));
    CHECK(kd.K.cwiseAbs().maxCoeff() == 0.0);
    CHECK(kd.radical.cols() == 3);
  }
  SUBCASE("Heisenberg: nilpotent, K = 0") {
    const KillingData kd = killing_form(zoo::heisenberg3());
    CHECK(kd.K.cwiseAbs().maxCoeff() <= 1e-14);
    CHECK(kd.radical.cols() == 3);
  }
  SUBCASE("so(3): K = -2 I, trivial radical") {
    const KillingData kd = killing_form(zoo::so3());
    CHECK((kd.K + 2.0 * Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <=
          1e-14);
    CHECK(kd.radical.cols() == 0);
  }
}

TEST_CASE("Killing associativity K([u,v],w) + K(v,[u,w]) = 0") {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = 3 + static_cast<int>(rng.next_u64() % 3);
    const LieAlgebra a = zoo::random_algebra(dim, rng);
    const KillingData kd = killing_form(a);
    const double scale = std::max(1.0, kd.K.cwiseAbs().maxCoeff());
    const Eigen::VectorXd u = rng.gaussian_vector(dim), v = rng.gaussian_vector(dim),
                          w = rng.gaussian_vector(dim);
    const double lhs = a.bracket(u, v).dot(kd.K * w) + v.dot(kd.K * a.bracket(u, w));
    CHECK(std::abs(lhs) <= 1e-9 * scale * 30);
  }
}

TEST_CASE("rad K is an ideal") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 3 + static_cast<int>(rng.next_u64() % 3);
    const LieAlgebra a = zoo::random_algebra(dim, rng);
    const KillingData kd = killing_form(a);
    if (kd.radical.cols() == 0) continue;
    for (int i = 0; i < dim; ++i) {
      Eigen::VectorXd ei = Eigen::VectorXd::Zero(dim);
      ei(i) = 1.0;
      for (int c = 0; c < kd.radical.cols(); ++c) {
        const Eigen::VectorXd w = a.bracket(ei, kd.radical.col(c));
        CHECK(subspace_residual(kd.radical, w) <= 1e-9 * (1 + w.norm()));
      }
    }
  }
}

TEST_CASE("derived series of the examples") {
  SUBCASE("abelian: [g, 0]") {
    const auto chain = derived_series(zoo::abelian(3));
    REQUIRE(chain.size() == 2);
    CHECK(chain[0].cols() == 3);
    CHECK(chain[1].cols() == 0);
  }
  SUBCASE("Heisenberg: [g, span e3, 0]") {
    const auto chain = derived_series(zoo::heisenberg3());
    REQUIRE(chain.size() == 3);
    CHECK(chain[1].cols() == 1);
    CHECK(std::abs(std::abs(chain[1](2, 0)) - 1.0) < 1e-12);
    CHECK(chain[2].cols() == 0);
  }
  SUBCASE("so(3): stabilizes at g") {
    const auto chain = derived_series(zoo::so3());
    REQUIRE(chain.size() == 2);
    CHECK(chain[0].cols() == 3);
    CHECK(chain[1].cols() == 3);
  }
}

TEST_CASE("is_semisimple") {
  CHECK(is_semisimple(zoo::so3()));
  CHECK(is_semisimple(zoo::sl2()));
  CHECK_FALSE(is_semisimple(zoo::heisenberg3()));
  CHECK_FALSE(is_semisimple(zoo::abelian(2)));
}

TEST_CASE("reductive_split") {
  SUBCASE("h = 0 gives identity projections") {
    const ReductiveSpace s = ReductiveSpace::lie_group(zoo::so3());
    CHECK(s.dim_h() == 0);
    CHECK(s.projection_m().isApprox(Eigen::MatrixXd::Identity(3, 3)));
  }
  SUBCASE("so(3) with h = span e3: m = span{e1,e2}") {
    const LieAlgebra s3 = zoo::so3();
    Eigen::MatrixXd h(3, 1);
    h << 0, 0, 1;
    const ReductiveSpace s =
        ReductiveSpace::reductive_split(s3, h, killing_form(s3));
    CHECK(s.dim_m() == 2);
    for (int c = 0; c < 2; ++c) CHECK(std::abs(s.m_basis()(2, c)) <= 1e-12);
  }
  SUBCASE("Heisenberg with h = span e3: K = 0 is degenerate on h") {
    const LieAlgebra h3 = zoo::heisenberg3();
    Eigen::MatrixXd h(3, 1);
    h << 0, 0, 1;
    CHECK_THROWS_AS(ReductiveSpace::reductive_split(h3, h, killing_form(h3)),
                    Error);
    try {
      ReductiveSpace::reductive_split(h3, h, killing_form(h3));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegenerateOnH);
    }
  }
  SUBCASE("non-subalgebra h is rejected") {
    const LieAlgebra s3 = zoo::so3();
    Eigen::MatrixXd h(3, 2);
    h << 1, 0, 0, 1, 0, 0;  // span{e1,e2}: [e1,e2]=e3 leaves it
    CHECK_THROWS_AS(ReductiveSpace::reductive_split(s3, h, killing_form(s3)),
                    Error);
  }
}

TEST_CASE("projections satisfy Ph + Pm = I and Ph Pm = 0") {
  Rng rng(13);
  const LieAlgebra s3 = zoo::so3();
  Eigen::MatrixXd h(3, 1);
  h << 0, 0, 1;
  const ReductiveSpace s = ReductiveSpace::reductive_split(s3, h, killing_form(s3));
  const Eigen::MatrixXd sum = s.projection_h() + s.projection_m();
  CHECK((sum - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((s.projection_h() * s.projection_m()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("check_invariant_vector") {
  const LieAlgebra s3 = zoo::so3();
  Eigen::MatrixXd h(3, 1);
  h << 0, 0, 1;
  const ReductiveSpace split =
      ReductiveSpace::reductive_split(s3, h, killing_form(s3));

  SUBCASE("trivial h accepts everything") {
    const ReductiveSpace s = ReductiveSpace::lie_group(zoo::so3());
    CHECK(check_invariant_vector(s, ev({1, 2, 3})));
  }
  SUBCASE("[e3, e1] = e2 is an obstruction") {
    CHECK_FALSE(check_invariant_vector(split, ev({1, 0})));
  }
}
