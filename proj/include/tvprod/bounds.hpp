#pragma once

// Analytic brackets on TV(P_1 x ... x P_n, Q_1 x ... x Q_n).

#include <cmath>
#include <optional>

#include "tvprod/core.hpp"

namespace tvprod {

/// Constants of the l2 tensorization lower bound TV >= c_final min{1, |delta|_2}.
///
/// c_concave is the loss from replacing |sum of symmetric terms| by the root
/// of their sum of squares under a concave function, c_exp the constant in
/// 1 - exp(-x) >= c_exp min{x, 1/2}, c_chain their product (rounded down) as
/// it applies to symmetric pairs, and c_final = c_chain / 2 after the
/// factor-2 symmetrization loss.
struct TheoremOneConstants {
  static constexpr double c_final = 0.1798;
  static constexpr double c_chain = 0.3597;
  static constexpr double c_concave = 0.4571;
  static inline const double c_exp = 2.0 - 2.0 * std::exp(-0.5);
};

/// Worst-case ratio E f(sqrt(sum a_i^2)) / E f(|sum eps_i a_i|) for concave
/// increasing f, bounded by (1/sqrt(2) - 1/4)^-1.
inline const double kLowtherConstant = 1.0 / (1.0 / std::sqrt(2.0) - 0.25);

struct Bracket {
  double lower = 0.0;
  double upper = 1.0;
};

struct HellingerBracket {
  double squared_hellinger = 0.0;  // product-level H^2, in [0, 2]
  double lower = 0.0;              // H^2 / 2
  double upper = 0.0;              // H sqrt(1 - H^2/4)
};

struct KLBracket {
  double divergence = 0.0;  // KL(P || Q); +inf on support mismatch
  std::optional<double> lower;
  double upper = 1.0;  // min{1, sqrt(KL/2)}
};

struct BoundsReport {
  double lower_trivial = 0.0;
  double lower_l2 = 0.0;
  double lower_hellinger = 0.0;
  std::optional<double> lower_kl;
  double upper_trivial = 1.0;
  double upper_hellinger = 1.0;
  double upper_pinsker = 1.0;
  std::optional<double> upper_symmetric;
  std::optional<double> upper_affinity;
  double best_lower = 0.0;
  double best_upper = 1.0;
  std::optional<double> ratio;  // best_upper / best_lower when best_lower > 0

  // Context the bounds were computed from.
  double delta_l1 = 0.0;
  double delta_l2 = 0.0;
  double delta_linf = 0.0;
  double kl_divergence = 0.0;
  double squared_hellinger = 0.0;
};

/// max_i delta_i <= TV <= min{1, sum_i delta_i}.
Bracket trivial_bracket(const MarginalTV& delta);

/// 0.1798 min{1, |delta|_2}.
double l2_lower_bound(const MarginalTV& delta);

/// min{1, |2p - 1|_2}; valid as an upper bound on TV(Ber(p), Ber(1-p)).
double symmetric_l2_upper_bound(const ProbVector& p);

/// 1 - prod_i 2 sqrt(p_i (1-p_i)) exp(-1/2 sqrt(sum_i log^2(p_i/(1-p_i)))),
/// an upper bound on TV(Ber(p), Ber(1-p)). Returns 1 when some p_i is 0 or 1.
double symmetric_affinity_upper_bound(const ProbVector& p);

/// Hellinger bracket built from the product of per-coordinate Bhattacharyya
/// affinities 1 - H_i^2/2.
HellingerBracket hellinger_bracket(const FiniteProductPair& pair);

/// Pinsker upper bound and the reverse lower bound KL / (2 |log Q_min|),
/// Q_min = prod_i min_w Q_i(w). The lower bound is present only when
/// 0 < Q_min < 1/2 and KL is finite.
KLBracket kl_bracket(const FiniteProductPair& pair);

/// Tolerance on |q_i - (1 - p_i)| under which a reduced pair counts as symmetric.
inline constexpr double kSymmetryTolerance = 1e-12;

/// Every applicable bound, aggregated. Symmetric-case bounds are included
/// only for two-point inputs whose reduced pair satisfies q = 1 - p.
BoundsReport bounds_report(const FiniteProductPair& pair);

}  // namespace tvprod
