#ifndef GEOVEC_EXISTENCE_HPP
#define GEOVEC_EXISTENCE_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "geovec/lie_algebra.hpp"
#include "geovec/metric.hpp"
#include "geovec/reductive.hpp"

namespace geovec {

/*
 * Constructive existence of a homogeneous geodesic for a homogeneous
 * Kropina space. The construction splits on the radical of the Killing
 * form inside m:
 *
 *  Case 1 (rad K = m): pick a unit Y orthogonal to [g,g]_m; then
 *    W = (sqrt(<X,X>) Y + X)/2 is a geodesic vector with F(W) = 1.
 *  Case 2 (rad K proper, X in V0): Y = X0 + sqrt(<X0,X0>) f1 solves the
 *    system {F(Y) = 2, Y0 = X0, (y_i - x_i)/lambda_i = t y_i} with
 *    t = 1/lambda_1.
 *  Case 3 (X not in V0): y_i(t) = x_i/(1 - t lambda_i) and the root of
 *    M(t) = F(Y(t)) - 2 on a pole-free interval, found by bisection
 *    (M(0) = -1 and M -> +inf toward the nearest contributing pole).
 */

/// Eigendecomposition of the endomorphism theta defined by
/// K(u, v) = <theta(u), v> on m. Eigenvectors are orthonormal for the
/// inner product; nonzero eigenvalues come first, sorted by |lambda|
/// descending; V0 (|lambda| <= 1e-8 * max|lambda|) spans rad K within m.
struct ThetaSplit {
  Eigen::MatrixXd k_m;           // K restricted to m, m-coordinates
  Eigen::MatrixXd theta;         // matrix of theta in m-coordinates
  Eigen::VectorXd eigenvalues;   // all dim_m values in the order described
  Eigen::MatrixXd eigenvectors;  // columns f_i, m-coordinates
  int nonzero_count = 0;
  Eigen::MatrixXd v0;            // columns spanning V0
};

ThetaSplit theta_eigensplit(const ReductiveSpace& s, const InnerProduct& ip,
                            const KillingData& killing);

enum class ExistenceCase { RadEqualsM, EigenSplitXEqualsX0, EigenSplitGeneral };

std::string existence_case_name(ExistenceCase c);

struct ScanSample {
  double t = 0.0;
  double m_value = 0.0;
  bool domain_ok = true;
};

struct ExistenceCertificate {
  ExistenceCase case_tag = ExistenceCase::RadEqualsM;
  ThetaSplit eigen;

  // Case 1
  Eigen::VectorXd case1_direction;  // the chosen unit Y
  std::string case1_path;           // "orthogonal-complement" | "fallback-search"

  // Cases 2-3
  double t0 = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  Eigen::VectorXd y_components;  // y_i on the nonzero eigenvectors
  std::vector<ScanSample> scan_trace;
  int bisection_iterations = 0;

  Eigen::VectorXd y_m;    // the geodesic vector, m-coordinates
  double residual = 0.0;  // verified Kropina criterion residual
  double f_value = 0.0;   // F at the certificate vector
};

/// Runs the Prop-3.5 construction for the Kropina metric (ip, X) and
/// verifies the resulting vector against the closed-form criterion at
/// 1e-9. Requires X nonzero, infinitesimally Ad(H)-invariant, and a
/// Killing-orthogonal decomposition (reductive_split output or h = 0).
ExistenceCertificate kropina_existence(const ReductiveSpace& s,
                                       const InnerProduct& ip,
                                       const Eigen::VectorXd& x_m);

struct MCurveRow {
  double t = 0.0;
  double m_value = 0.0;  // NaN when flagged
  bool domain_flag = false;
};

/// Samples M(t) = F(Y(t)) - 2 for a Case-3 configuration; flags poles
/// 1 - t lambda_i = 0 and points where Y(t) leaves the Kropina domain.
std::vector<MCurveRow> m_curve(const ReductiveSpace& s, const InnerProduct& ip,
                               const Eigen::VectorXd& x_m,
                               const std::vector<double>& t_samples);

/// Default symmetric sample grid for m_curve covering the interval
/// (-1/|lambda_1|, 1/|lambda_1|).
std::vector<double> m_curve_default_grid(const ReductiveSpace& s,
                                         const InnerProduct& ip, int count);

/// Checks each theta eigenvector against the metric's geodesic criterion
/// (semisimple algebras only). For non-Riemannian families the transfer
/// hypotheses are evaluated at each eigenvector first; eigenvectors where
/// they fail are reported, not returned.
struct OrthogonalGeodesicsReport {
  std::vector<Eigen::VectorXd> axes;  // passing eigenvectors, m-coordinates
  std::vector<double> residuals;
  std::vector<int> hypothesis_failed;  // eigenvector indices
  bool hypotheses_unsatisfiable = false;  // [m,m]_m spans m, so X != 0 never works
  Eigen::MatrixXd gram;  // <f_i, f_j> over returned axes
  double max_offdiagonal = 0.0;
};

OrthogonalGeodesicsReport semisimple_orthogonal_geodesics(
    const ReductiveSpace& s, const InnerProduct& ip, const MetricSpec& m,
    double tol_riemannian = 1e-9, double tol_finsler = 1e-6);

}  // namespace geovec

#endif
