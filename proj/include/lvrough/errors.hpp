#pragma once

#include <stdexcept>
#include <string>

namespace lvrough {

/// Exit-code category used by the CLI: 2 = invalid input, 3 = budget exceeded,
/// 1 is reserved for check failures reported as data, not thrown.
enum class ErrorKind { invalid_input, budget_exceeded };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), kind_(kind), code_(std::move(code)) {}
  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorKind::invalid_input, "ParseError", w) {}
};
struct NotALattice : Error {
  explicit NotALattice(const std::string& w) : Error(ErrorKind::invalid_input, "NotALattice", w) {}
};
struct NotResiduated : Error {
  explicit NotResiduated(const std::string& w)
      : Error(ErrorKind::invalid_input, "NotResiduated", w) {}
};
struct BoundViolation : Error {
  explicit BoundViolation(const std::string& w)
      : Error(ErrorKind::invalid_input, "BoundViolation", w) {}
};
struct UniverseMismatch : Error {
  explicit UniverseMismatch(const std::string& w)
      : Error(ErrorKind::invalid_input, "UniverseMismatch", w) {}
};
struct UnknownPoint : Error {
  explicit UnknownPoint(const std::string& w)
      : Error(ErrorKind::invalid_input, "UnknownPoint", w) {}
};
struct DirectionMismatch : Error {
  explicit DirectionMismatch(const std::string& w)
      : Error(ErrorKind::invalid_input, "DirectionMismatch", w) {}
};
struct RequiresMV : Error {
  explicit RequiresMV(const std::string& w) : Error(ErrorKind::invalid_input, "RequiresMV", w) {}
};
struct RequiresConstantUniverse : Error {
  explicit RequiresConstantUniverse(const std::string& w)
      : Error(ErrorKind::invalid_input, "RequiresConstantUniverse", w) {}
};
struct H0Violated : Error {
  explicit H0Violated(const std::string& w) : Error(ErrorKind::invalid_input, "H0Violated", w) {}
};
struct PowersetTooLarge : Error {
  explicit PowersetTooLarge(const std::string& w)
      : Error(ErrorKind::budget_exceeded, "PowersetTooLarge", w) {}
};
struct RelationSpaceTooLarge : Error {
  explicit RelationSpaceTooLarge(const std::string& w)
      : Error(ErrorKind::budget_exceeded, "RelationSpaceTooLarge", w) {}
};
struct OperatorSpaceTooLarge : Error {
  explicit OperatorSpaceTooLarge(const std::string& w)
      : Error(ErrorKind::budget_exceeded, "OperatorSpaceTooLarge", w) {}
};

}  // namespace lvrough
