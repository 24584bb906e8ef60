#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tvprod/core.hpp"

namespace tvprod::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,   // bad flags
  kExitParse = 3,   // unreadable, malformed or invalid instance file
  kExitBudget = 4,  // exact enumeration refused
  kExitDomain = 5,  // numeric argument outside its domain
};

/// Instance file problem; the message names the line/column or the field.
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed instance file: either {"p": [...], "q": [...]} or
/// {"P": [[...], ...], "Q": [[...], ...]}, with an optional "label".
struct Instance {
  std::optional<std::string> label;
  std::optional<ProbVector> p;  // set for the Bernoulli shape
  std::optional<ProbVector> q;
  FiniteProductPair pair;

  bool is_bernoulli() const noexcept { return p.has_value(); }
};

Instance parse_instance(std::string_view text);

/// Shortest representation that round-trips, with ".0" on integral values.
std::string format_double(double v);

/// Runs one invocation. `args` excludes the program name. Instance files are
/// read from the path given, or from `in` when the path is "-" or omitted.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tvprod::cli
