#ifndef GEOVEC_ERRORS_HPP
#define GEOVEC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace geovec {

enum class ErrorCode {
  DimensionMismatch,
  NotSubalgebra,
  DegenerateOnH,
  NotUnitVector,
  InvalidMetric,
  ConstraintViolation,
  InvariantVectorViolation,
  OutsideDomain,
  ZeroVector,
  ZeroProjection,
  NumericalFailure,
  DomainExhausted,
  ResidualTooLarge,
  ParseFailure,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

/// Parse error for phi expressions: byte offset plus the token set that
/// would have been accepted at that position.
class PhiParseError : public Error {
 public:
  PhiParseError(std::size_t offset, std::vector<std::string> expected,
                const std::string& msg)
      : Error(ErrorCode::ParseFailure, msg),
        offset_(offset),
        expected_(std::move(expected)) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace geovec

#endif
