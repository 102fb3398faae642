#ifndef GEOVEC_INSTANCE_HPP
#define GEOVEC_INSTANCE_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geovec/errors.hpp"
#include "geovec/lie_algebra.hpp"
#include "geovec/metric.hpp"
#include "geovec/reductive.hpp"

namespace geovec {

/*
 * Instance files are JSON:
 *
 * {
 *   "dim": 3,
 *   "basis": ["e1","e2","e3"],              // optional
 *   "brackets": [ {"i":1,"j":2,"coeffs":[0,0,1]} ],   // 1-based, i < j
 *   "h_basis": [[0,0,1]],                    // optional, rows are vectors
 *   "m_basis": [[1,0,0],[0,1,0]],            // optional explicit complement
 *   "inner_product": [[1,0],[0,1]],          // on m
 *   "metric": {"family":"kropina","X":[1,0],"phi":"1+s"},
 *   "navigation": {"h": [[...]], "W":[...]}  // optional, Kropina only
 * }
 */

class InstanceError : public Error {
 public:
  using Detail = std::pair<std::string, std::string>;  // key path, message
  InstanceError(std::vector<Detail> details, const std::string& msg)
      : Error(ErrorCode::ParseFailure, msg), details_(std::move(details)) {}
  const std::vector<Detail>& details() const { return details_; }

 private:
  std::vector<Detail> details_;
};

struct Instance {
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<BracketEntry> brackets;
  std::optional<Eigen::MatrixXd> h_basis;  // columns
  std::optional<Eigen::MatrixXd> m_basis;  // columns
  std::optional<Eigen::MatrixXd> inner;
  MetricFamily family = MetricFamily::Riemannian;
  Eigen::VectorXd x;
  std::string phi_text;
  std::optional<Eigen::MatrixXd> nav_h;
  std::optional<Eigen::VectorXd> nav_w;
};

/// Parses and shape-checks an instance document; throws InstanceError with
/// one (key path, message) entry per problem.
Instance parse_instance_text(const std::string& text);

struct BuiltInstance {
  ReductiveSpace space;
  InnerProduct ip;
  MetricSpec metric;
};

/// Constructs the module inputs. Throws typed errors (Jacobi violation,
/// degenerate splits, metric validation) on top of what parsing checks.
BuiltInstance build_instance(const Instance& inst);

}  // namespace geovec

#endif
