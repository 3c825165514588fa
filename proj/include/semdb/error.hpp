#ifndef SEMDB_ERROR_HPP
#define SEMDB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace semdb {

enum class ErrorCode {
  SyntaxError,
  DuplicateClass,
  DuplicateBase,
  DuplicateRule,
  AppropriatenessViolation,
  UnknownFeature,
  UnknownClass,
  UnknownSemClass,
  MissingRole,
  MissingPredName,
  TemplateArity,
  SlotArity,
  SlotShape,
  UnknownKind,
  CardinalityMismatch,
  IncompleteDefault,
  ConflictingDefault,
  IoError,
};

std::string_view error_code_name(ErrorCode code);

/// Carries a code plus, for input errors, the 1-based source position.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Error(ErrorCode code, std::string message, int line, int column)
      : std::runtime_error(format(message, line, column)),
        code_(code),
        line_(line),
        column_(column) {}

  ErrorCode code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  ErrorCode code_;
  int line_ = 0;
  int column_ = 0;
};

}  // namespace semdb

#endif  // SEMDB_ERROR_HPP
