#pragma once

#include <cstdint>
#include <vector>

#include "tvprod/core.hpp"

namespace tvprod {

/// Two Bernoulli pairs with the same l2 gap 1/sqrt(n) whose TVs differ by a
/// factor of order sqrt(n): (1/n, ..., 1/n) vs 0, and the symmetric pair
/// 1/2 +- 1/(2n).
struct GapInstance {
  std::uint64_t n = 1;
  ProbVector p;
  ProbVector q;
  ProbVector p_prime;
  ProbVector q_prime;
  double tv_pq = 1.0;              // 1 - (1 - 1/n)^n
  double tv_pq_prime_upper = 1.0;  // n^(-1/2), symmetric l2 bound
  double ratio_lower = 1.0;        // tv_pq / tv_pq_prime_upper
};

/// Throws invalid_argument when n < 1. The four vectors are materialized, so
/// n is expected to stay moderate; gap_ratio_exact needs no vectors.
GapInstance gap_instance(std::uint64_t n);

/// 1 - (1 - 1/n)^n.
double gap_tv_closed_form(std::uint64_t n);

/// Exact TV(p, q) / TV(p', q') for the gap construction, via the
/// equal-marginal binomial sum on both pairs.
double gap_ratio_exact(std::uint64_t n);

/// Two-point symmetric variables X_i = +-a_i with sum a_i^2 = 1, and the
/// test function f(t) = min{t, u}.
class RademacherInstance {
 public:
  /// Scales `weights` to unit l2 norm. Throws invalid_argument on an empty
  /// vector, a nonpositive weight or a nonpositive threshold.
  RademacherInstance(std::vector<double> weights, double threshold);

  const std::vector<double>& weights() const noexcept { return weights_; }
  double threshold() const noexcept { return threshold_; }

 private:
  std::vector<double> weights_;
  double threshold_;
};

inline constexpr std::size_t kMaxLowtherWeights = 20;

struct LowtherResult {
  double lhs = 0.0;    // E f(Z), Z = sqrt(sum a_i^2)
  double rhs = 0.0;    // E f(Y), Y = |sum eps_i a_i|, by enumeration of signs
  double ratio = 0.0;  // lhs / rhs
};

/// Throws budget_exceeded when more than kMaxLowtherWeights weights are given.
LowtherResult lowther_check(const RademacherInstance& instance, unsigned workers = 0);

}  // namespace tvprod
