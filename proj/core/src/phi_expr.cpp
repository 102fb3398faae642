#include "geovec/phi_expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "geovec/errors.hpp"

namespace geovec {

namespace {

using Kind = PhiNode::Kind;

PhiNodePtr make(Kind k, PhiNodePtr a = nullptr, PhiNodePtr b = nullptr) {
  auto n = std::make_shared<PhiNode>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

PhiNodePtr constant(double v) {
  auto n = std::make_shared<PhiNode>();
  n->kind = Kind::Constant;
  n->value = v;
  return n;
}

bool is_const(const PhiNodePtr& n, double v) {
  return n && n->kind == Kind::Constant && n->value == v;
}

// smart constructors: fold constants and drop neutral elements so the
// second-derivative trees stay small
PhiNodePtr add(PhiNodePtr a, PhiNodePtr b) {
  if (is_const(a, 0.0)) return b;
  if (is_const(b, 0.0)) return a;
  if (a->kind == Kind::Constant && b->kind == Kind::Constant)
    return constant(a->value + b->value);
  return make(Kind::Add, std::move(a), std::move(b));
}

PhiNodePtr sub(PhiNodePtr a, PhiNodePtr b) {
  if (is_const(b, 0.0)) return a;
  if (a->kind == Kind::Constant && b->kind == Kind::Constant)
    return constant(a->value - b->value);
  return make(Kind::Sub, std::move(a), std::move(b));
}

PhiNodePtr mul(PhiNodePtr a, PhiNodePtr b) {
  if (is_const(a, 0.0) || is_const(b, 0.0)) return constant(0.0);
  if (is_const(a, 1.0)) return b;
  if (is_const(b, 1.0)) return a;
  if (a->kind == Kind::Constant && b->kind == Kind::Constant)
    return constant(a->value * b->value);
  return make(Kind::Mul, std::move(a), std::move(b));
}

PhiNodePtr divide(PhiNodePtr a, PhiNodePtr b) {
  if (is_const(a, 0.0)) return constant(0.0);
  if (is_const(b, 1.0)) return a;
  return make(Kind::Div, std::move(a), std::move(b));
}

PhiNodePtr pow_rational(PhiNodePtr base, long long num, long long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) return constant(1.0);
  if (num == 1 && den == 1) return base;
  auto n = std::make_shared<PhiNode>();
  n->kind = Kind::Pow;
  n->pow_num = num;
  n->pow_den = den;
  n->a = std::move(base);
  return n;
}

std::optional<double> eval_node(const PhiNode& n, double s) {
  auto fin = [](double v) -> std::optional<double> {
    if (!std::isfinite(v)) return std::nullopt;
    return v;
  };
  switch (n.kind) {
    case Kind::Constant:
      return fin(n.value);
    case Kind::Variable:
      return fin(s);
    case Kind::Add: {
      auto a = eval_node(*n.a, s), b = eval_node(*n.b, s);
      if (!a || !b) return std::nullopt;
      return fin(*a + *b);
    }
    case Kind::Sub: {
      auto a = eval_node(*n.a, s), b = eval_node(*n.b, s);
      if (!a || !b) return std::nullopt;
      return fin(*a - *b);
    }
    case Kind::Mul: {
      auto a = eval_node(*n.a, s), b = eval_node(*n.b, s);
      if (!a || !b) return std::nullopt;
      return fin(*a * *b);
    }
    case Kind::Div: {
      auto a = eval_node(*n.a, s), b = eval_node(*n.b, s);
      if (!a || !b || *b == 0.0) return std::nullopt;
      return fin(*a / *b);
    }
    case Kind::Pow: {
      auto a = eval_node(*n.a, s);
      if (!a) return std::nullopt;
      const double base = *a;
      if (n.pow_den == 1) {
        if (base == 0.0 && n.pow_num < 0) return std::nullopt;
        double r = 1.0;
        long long e = n.pow_num < 0 ? -n.pow_num : n.pow_num;
        double acc = base;
        while (e > 0) {
          if (e & 1) r *= acc;
          acc *= acc;
          e >>= 1;
        }
        return fin(n.pow_num < 0 ? 1.0 / r : r);
      }
      if (base < 0.0) return std::nullopt;
      if (base == 0.0) {
        if (n.pow_num <= 0) return std::nullopt;
        return 0.0;
      }
      return fin(std::pow(base, static_cast<double>(n.pow_num) /
                                    static_cast<double>(n.pow_den)));
    }
    case Kind::Sqrt: {
      auto a = eval_node(*n.a, s);
      if (!a || *a < 0.0) return std::nullopt;
      return fin(std::sqrt(*a));
    }
    case Kind::Exp: {
      auto a = eval_node(*n.a, s);
      if (!a) return std::nullopt;
      return fin(std::exp(*a));
    }
    case Kind::Log: {
      auto a = eval_node(*n.a, s);
      if (!a || *a <= 0.0) return std::nullopt;
      return fin(std::log(*a));
    }
  }
  return std::nullopt;
}

PhiNodePtr diff_node(const PhiNodePtr& n) {
  switch (n->kind) {
    case Kind::Constant:
      return constant(0.0);
    case Kind::Variable:
      return constant(1.0);
    case Kind::Add:
      return add(diff_node(n->a), diff_node(n->b));
    case Kind::Sub:
      return sub(diff_node(n->a), diff_node(n->b));
    case Kind::Mul:
      return add(mul(diff_node(n->a), n->b), mul(n->a, diff_node(n->b)));
    case Kind::Div:
      return divide(sub(mul(diff_node(n->a), n->b), mul(n->a, diff_node(n->b))),
                    pow_rational(n->b, 2, 1));
    case Kind::Pow: {
      // d f^(p/q) = (p/q) f^((p-q)/q) f'
      const double c = static_cast<double>(n->pow_num) /
                       static_cast<double>(n->pow_den);
      return mul(constant(c),
                 mul(pow_rational(n->a, n->pow_num - n->pow_den, n->pow_den),
                     diff_node(n->a)));
    }
    case Kind::Sqrt:
      return divide(diff_node(n->a),
                    mul(constant(2.0), make(Kind::Sqrt, n->a)));
    case Kind::Exp:
      return mul(diff_node(n->a), make(Kind::Exp, n->a));
    case Kind::Log:
      return divide(diff_node(n->a), n->a);
  }
  return constant(0.0);
}

void print_node(const PhiNodePtr& n, std::ostringstream& out) {
  switch (n->kind) {
    case Kind::Constant: {
      out << n->value;
      return;
    }
    case Kind::Variable:
      out << 's';
      return;
    case Kind::Add:
      out << '(';
      print_node(n->a, out);
      out << " + ";
      print_node(n->b, out);
      out << ')';
      return;
    case Kind::Sub:
      out << '(';
      print_node(n->a, out);
      out << " - ";
      print_node(n->b, out);
      out << ')';
      return;
    case Kind::Mul:
      out << '(';
      print_node(n->a, out);
      out << " * ";
      print_node(n->b, out);
      out << ')';
      return;
    case Kind::Div:
      out << '(';
      print_node(n->a, out);
      out << " / ";
      print_node(n->b, out);
      out << ')';
      return;
    case Kind::Pow:
      print_node(n->a, out);
      out << '^';
      if (n->pow_den == 1) {
        out << n->pow_num;
      } else {
        out << '(' << n->pow_num << '/' << n->pow_den << ')';
      }
      return;
    case Kind::Sqrt:
      out << "sqrt(";
      print_node(n->a, out);
      out << ')';
      return;
    case Kind::Exp:
      out << "exp(";
      print_node(n->a, out);
      out << ')';
      return;
    case Kind::Log:
      out << "log(";
      print_node(n->a, out);
      out << ')';
      return;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PhiNodePtr run() {
    PhiNodePtr e = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw PhiParseError(pos_, {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"},
                          "unexpected trailing input at offset " +
                              std::to_string(pos_));
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (peek_is(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c))
      throw PhiParseError(pos_, {what},
                          std::string("expected ") + what + " at offset " +
                              std::to_string(pos_));
  }

  PhiNodePtr expr() {
    PhiNodePtr e = term();
    for (;;) {
      if (accept('+'))
        e = add(e, term());
      else if (accept('-'))
        e = sub(e, term());
      else
        return e;
    }
  }

  PhiNodePtr term() {
    PhiNodePtr e = factor();
    for (;;) {
      if (accept('*'))
        e = mul(e, factor());
      else if (accept('/'))
        e = divide(e, factor());
      else
        return e;
    }
  }

  PhiNodePtr factor() {
    PhiNodePtr b = base();
    if (accept('^')) return pow_rational(b, integer(), 1);
    return b;
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      ++digits;
    }
    if (digits == 0)
      throw PhiParseError(start, {"integer"},
                          "expected integer exponent at offset " +
                              std::to_string(start));
    return std::strtoll(std::string(text_.substr(start, pos_ - start)).c_str(),
                        nullptr, 10);
  }

  PhiNodePtr base() {
    skip_ws();
    if (pos_ >= text_.size())
      throw PhiParseError(pos_, expected_base(),
                          "unexpected end of input at offset " +
                              std::to_string(pos_));
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      PhiNodePtr e = expr();
      expect(')', "')'");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isalpha(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "s") return make(Kind::Variable);
      Kind k;
      if (word == "sqrt")
        k = Kind::Sqrt;
      else if (word == "exp")
        k = Kind::Exp;
      else if (word == "log")
        k = Kind::Log;
      else
        throw PhiParseError(start, {"'s'", "sqrt", "exp", "log"},
                            "unknown identifier '" + std::string(word) +
                                "' at offset " + std::to_string(start));
      expect('(', "'('");
      PhiNodePtr e = expr();
      expect(')', "')'");
      return make(k, e);
    }
    throw PhiParseError(pos_, expected_base(),
                        "unexpected character at offset " + std::to_string(pos_));
  }

  PhiNodePtr number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '.'))
      ++pos_;
    // exponent part of a float literal, e.g. 2.5e-3
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
      } else {
        pos_ = save;  // the 'e' belonged to something else
      }
    }
    const std::string lit(text_.substr(start, pos_ - start));
    char* end = nullptr;
    const double v = std::strtod(lit.c_str(), &end);
    if (end == lit.c_str() || *end != '\0')
      throw PhiParseError(start, {"number"},
                          "malformed number literal at offset " +
                              std::to_string(start));
    return constant(v);
  }

  static std::vector<std::string> expected_base() {
    return {"number", "'s'", "'('", "sqrt", "exp", "log"};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PhiExpr PhiExpr::parse(std::string_view text) {
  Parser p(text);
  return PhiExpr(p.run());
}

std::optional<double> PhiExpr::eval(double s) const {
  if (!root_) return std::nullopt;
  return eval_node(*root_, s);
}

PhiExpr PhiExpr::derivative() const {
  if (!root_) return PhiExpr(constant(0.0));
  return PhiExpr(diff_node(root_));
}

std::string PhiExpr::to_string() const {
  if (!root_) return "0";
  std::ostringstream out;
  out.precision(17);
  print_node(root_, out);
  return out.str();
}

std::pair<PhiExpr, PhiExpr> phi_derivatives(const PhiExpr& phi) {
  PhiExpr d1 = phi.derivative();
  PhiExpr d2 = d1.derivative();
  return {std::move(d1), std::move(d2)};
}

RegularityReport regularity_check(const PhiExpr& phi, double b) {
  if (!(b > 0.0))
    fail(ErrorCode::InvalidArgument, "regularity_check: b must be positive");
  RegularityReport report;
  report.b = b;
  auto [d1, d2] = phi_derivatives(phi);
  bool have_min = false;
  for (int k = 0; k <= 2000; ++k) {
    const double s = b * static_cast<double>(k - 1000) / 1000.0;
    const auto p0 = phi.eval(s);
    const auto p1 = d1.eval(s);
    const auto p2 = d2.eval(s);
    if (!p0 || !p1 || !p2) {
      report.singular_at.push_back(s);
      continue;
    }
    const double v = *p0 - s * *p1 + (b * b - s * s) * *p2;
    if (!have_min || v < report.min_value) {
      report.min_value = v;
      report.min_at = s;
      have_min = true;
    }
    if (v <= 0.0) report.singular_at.push_back(s);
  }
  report.regular = report.singular_at.empty();
  return report;
}

}  // namespace geovec
