#pragma once

// Domain types for pairs of product measures on finite spaces, and the exact
// and sampled total-variation oracles built on them.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tvprod {

/// Bernoulli parameters p in [0,1]^n describing Ber(p_1) x ... x Ber(p_n).
class ProbVector {
 public:
  /// Throws Error(invalid_argument) if empty or any entry is outside [0,1].
  explicit ProbVector(std::vector<double> params);

  static ProbVector constant(std::size_t n, double value);

  std::size_t size() const noexcept { return params_.size(); }
  double operator[](std::size_t i) const { return params_[i]; }
  std::span<const double> values() const noexcept { return params_; }
  auto begin() const noexcept { return params_.begin(); }
  auto end() const noexcept { return params_.end(); }

  friend bool operator==(const ProbVector&, const ProbVector&) = default;

 private:
  std::vector<double> params_;
};

/// Tolerance on |sum - 1| accepted when validating serialized distributions.
inline constexpr double kNormalizationTolerance = 1e-9;

/// A probability mass function over {0, ..., k-1}.
///
/// Construction accepts masses whose sum is within kNormalizationTolerance of
/// one and then divides by the sum, so downstream code sees a normalized pmf.
class FiniteDist {
 public:
  explicit FiniteDist(std::vector<double> masses);

  static FiniteDist bernoulli(double p);

  std::size_t support_size() const noexcept { return masses_.size(); }
  double operator[](std::size_t i) const { return masses_[i]; }
  std::span<const double> masses() const noexcept { return masses_; }

  friend bool operator==(const FiniteDist&, const FiniteDist&) = default;

 private:
  FiniteDist() = default;
  std::vector<double> masses_;
};

/// Two families (P_i), (Q_i) of marginals; coordinate i of both families
/// lives on the same finite support.
class FiniteProductPair {
 public:
  FiniteProductPair(std::vector<FiniteDist> p_side, std::vector<FiniteDist> q_side);

  /// The two-point pair with P_i = Ber(p_i), Q_i = Ber(q_i); outcome 1 is
  /// index 1 of each marginal.
  static FiniteProductPair from_bernoulli(const ProbVector& p, const ProbVector& q);

  std::size_t size() const noexcept { return p_side_.size(); }
  const std::vector<FiniteDist>& p_side() const noexcept { return p_side_; }
  const std::vector<FiniteDist>& q_side() const noexcept { return q_side_; }

  /// True when every coordinate has support size two.
  bool is_binary() const noexcept;

  /// Joint support size, saturating at UINT64_MAX.
  std::uint64_t joint_support_size() const noexcept;

 private:
  std::vector<FiniteDist> p_side_;
  std::vector<FiniteDist> q_side_;
};

/// The per-coordinate TV sequence delta_i = TV(P_i, Q_i).
class MarginalTV {
 public:
  explicit MarginalTV(std::vector<double> deltas);

  std::size_t size() const noexcept { return deltas_.size(); }
  double operator[](std::size_t i) const { return deltas_[i]; }
  std::span<const double> values() const noexcept { return deltas_; }

  double l1() const noexcept;
  double l2() const noexcept;
  double linf() const noexcept;

 private:
  std::vector<double> deltas_;
};

struct TVEstimate {
  double value = 0.0;
  double half_width = 0.0;  // Hoeffding half-width at `confidence`
  double confidence = 0.0;
  std::uint64_t samples = 0;

  double lower() const noexcept { return value - half_width < 0.0 ? 0.0 : value - half_width; }
  double upper() const noexcept { return value + half_width > 1.0 ? 1.0 : value + half_width; }
};

inline constexpr int kDefaultLog2Budget = 26;

struct EnumerationOptions {
  /// Enumeration is refused when the joint support exceeds 2^log2_budget.
  int log2_budget = kDefaultLog2Budget;
  /// Worker threads for enumeration and sampling; 0 picks hardware concurrency.
  /// Results never depend on this value.
  unsigned workers = 0;
};

/// Exact TV(Ber(p), Ber(q)) by enumeration of {0,1}^n.
/// Throws dimension_mismatch on unequal lengths, budget_exceeded when
/// n > options.log2_budget.
double exact_tv_bernoulli(const ProbVector& p, const ProbVector& q,
                          const EnumerationOptions& options = {});

/// Exact TV over the full joint support of a general pair.
double exact_tv_general(const FiniteProductPair& pair, const EnumerationOptions& options = {});

/// TV(Ber(p)^n, Ber(q)^n) through the binomial sum over the number of ones.
/// O(n), so n may be far beyond the enumeration budget.
double exact_tv_equal_marginals(std::uint64_t n, double p, double q);

/// Monte Carlo estimate from TV = E_{X~Ber(p)} max(0, 1 - Q(X)/P(X)).
/// Sample i depends only on (seed, i).
TVEstimate mc_tv_estimate(const ProbVector& p, const ProbVector& q, std::uint64_t samples,
                          double confidence, std::uint64_t seed, unsigned workers = 0);

/// Hoeffding half-width sqrt(ln(2/(1-confidence)) / (2 samples)).
double hoeffding_half_width(std::uint64_t samples, double confidence);

/// TV between two distributions on the same finite support.
double tv_distance(const FiniteDist& p, const FiniteDist& q);

MarginalTV marginal_tv(const FiniteProductPair& pair);

/// Euclidean norm of p - q, which for Bernoulli vectors is the l2 norm of the
/// marginal TV sequence.
double l2_distance(const ProbVector& p, const ProbVector& q);

}  // namespace tvprod
