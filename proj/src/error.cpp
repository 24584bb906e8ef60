#include "tvprod/error.hpp"

namespace tvprod {

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

void throw_invalid(const std::string& what) {
  throw Error(ErrorKind::invalid_argument, what);
}

void throw_mismatch(const std::string& what) {
  throw Error(ErrorKind::dimension_mismatch, what);
}

void throw_budget(const std::string& what) {
  throw Error(ErrorKind::budget_exceeded, what);
}

}  // namespace tvprod
