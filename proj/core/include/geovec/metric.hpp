#ifndef GEOVEC_METRIC_HPP
#define GEOVEC_METRIC_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "geovec/inner_product.hpp"
#include "geovec/phi_expr.hpp"

namespace geovec {

enum class MetricFamily { Riemannian, Randers, Kropina, AlphaBeta };

std::string family_name(MetricFamily f);

enum class EvalStatus { Ok, OutsideDomain, ZeroVector, NumericalFailure };

struct Evaluation {
  double value = 0.0;
  EvalStatus status = EvalStatus::Ok;
  bool ok() const { return status == EvalStatus::Ok; }
};

/// An invariant metric on m: the inner product <,>, a family tag, the
/// defining vector X in m-coordinates, and phi for the general family.
/// Kropina F = <Y,Y>/<X,Y> on the open half-space <X,Y> > 0.
class MetricSpec {
 public:
  static MetricSpec riemannian(InnerProduct inner);
  static MetricSpec randers(InnerProduct inner, Eigen::VectorXd x);
  static MetricSpec kropina(InnerProduct inner, Eigen::VectorXd x);
  static MetricSpec alpha_beta(InnerProduct inner, Eigen::VectorXd x, PhiExpr phi);

  MetricFamily family() const { return family_; }
  const InnerProduct& inner() const { return inner_; }
  const Eigen::VectorXd& x() const { return x_; }
  const PhiExpr& phi() const { return phi_; }
  const PhiExpr& phi_d1() const { return phi_d1_; }
  const PhiExpr& phi_d2() const { return phi_d2_; }
  int dim() const { return inner_.dim(); }

 private:
  MetricSpec(MetricFamily f, InnerProduct inner, Eigen::VectorXd x, PhiExpr phi);

  MetricFamily family_;
  InnerProduct inner_;
  Eigen::VectorXd x_;
  PhiExpr phi_, phi_d1_, phi_d2_;
};

/// F(Y); status instead of a throw so samplers can probe the domain.
Evaluation F_eval_checked(const MetricSpec& m, const Eigen::VectorXd& y);

/// Throwing convenience wrapper.
double F_eval(const MetricSpec& m, const Eigen::VectorXd& y);

/// Fundamental tensor g_Y = 1/2 d^2 F^2 / dy^2 via central differences of
/// the gradient with one Richardson extrapolation level; exact inner-product
/// matrix for the Riemannian family.
struct TensorResult {
  Eigen::MatrixXd g;
  EvalStatus status = EvalStatus::Ok;
  double asymmetry = 0.0;  // relative, before symmetrization
  bool ok() const { return status == EvalStatus::Ok; }
};

TensorResult fundamental_tensor_checked(const MetricSpec& m,
                                        const Eigen::VectorXd& y);
Eigen::MatrixXd fundamental_tensor(const MetricSpec& m, const Eigen::VectorXd& y);

/// Closed form for g_Y(u, Y) of a Kropina metric:
/// (F^3(Y)/<Y,Y>) * <u, 2Y/F(Y) - X>.
double kropina_directional_identity(const MetricSpec& m, const Eigen::VectorXd& y,
                                    const Eigen::VectorXd& u);

/// Zermelo navigation data (h, W) with ||W||_h = 1.
struct NavigationData {
  InnerProduct h;
  Eigen::VectorXd w;
};

/// Kropina metric of the navigation data: inner = h, X = 2W. Throws
/// NotUnitVector unless ||W||_h = 1 within 1e-9.
MetricSpec kropina_from_navigation(const NavigationData& nav);

}  // namespace geovec

#endif
