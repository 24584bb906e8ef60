#pragma once

#include <stdexcept>
#include <string>

namespace tvprod {

enum class ErrorKind {
  invalid_argument,    // value outside its domain, malformed distribution
  dimension_mismatch,  // paired inputs of different lengths or support sizes
  budget_exceeded,     // exhaustive enumeration would exceed the configured budget
};

// Every failure raised by the library. The kind lets front ends map errors
// onto distinct exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void throw_invalid(const std::string& what);
[[noreturn]] void throw_mismatch(const std::string& what);
[[noreturn]] void throw_budget(const std::string& what);

}  // namespace tvprod
