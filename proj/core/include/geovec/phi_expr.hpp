#ifndef GEOVEC_PHI_EXPR_HPP
#define GEOVEC_PHI_EXPR_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace geovec {

/*
 * Expression DSL for the (alpha,beta)-metric profile function phi(s).
 *
 * Grammar (whitespace insignificant):
 *   expr   := term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := base ('^' integer)?
 *   base   := number | 's' | '(' expr ')' | func '(' expr ')'
 *   func   := sqrt | exp | log
 */

struct PhiNode;
using PhiNodePtr = std::shared_ptr<const PhiNode>;

struct PhiNode {
  enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Pow, Sqrt, Exp, Log };
  Kind kind = Kind::Constant;
  double value = 0.0;      // Constant
  long long pow_num = 1;   // Pow: exponent pow_num / pow_den, pow_den > 0
  long long pow_den = 1;
  PhiNodePtr a, b;
};

class PhiExpr {
 public:
  PhiExpr() = default;
  explicit PhiExpr(PhiNodePtr root) : root_(std::move(root)) {}

  /// Parses per the grammar above; throws PhiParseError with the byte
  /// offset and expected-token set.
  static PhiExpr parse(std::string_view text);

  /// nullopt on domain errors (division by zero, log of a nonpositive
  /// value, sqrt of a negative value, nonfinite results).
  std::optional<double> eval(double s) const;

  /// Exact rule-based derivative tree.
  PhiExpr derivative() const;

  std::string to_string() const;
  bool empty() const { return root_ == nullptr; }
  const PhiNodePtr& root() const { return root_; }

 private:
  PhiNodePtr root_;
};

/// (phi', phi'')
std::pair<PhiExpr, PhiExpr> phi_derivatives(const PhiExpr& phi);

/// Samples the regularity condition phi - s phi' + (b^2 - s^2) phi'' on a
/// uniform 2001-point grid over [-b, b]; lists every s where the condition
/// fails or phi is undefined.
struct RegularityReport {
  bool regular = true;
  double b = 0.0;
  std::vector<double> singular_at;   // grid points that failed
  double min_value = 0.0;            // over defined grid points
  double min_at = 0.0;
};

RegularityReport regularity_check(const PhiExpr& phi, double b);

}  // namespace geovec

#endif
