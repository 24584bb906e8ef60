#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tvprod/core.hpp"

namespace tvprod {

/// Row-stochastic binary channel. Row 0 is the output law for input 1, row 1
/// for input 0; column 0 is the probability of output 1, column 1 of output 0.
struct Channel2x2 {
  std::array<std::array<double, 2>, 2> rows{};

  /// Output law (P(out = 1), P(out = 0)) for an input with P(in = 1) = prob_one.
  std::pair<double, double> push(double prob_one) const noexcept;

  bool is_row_stochastic(double tolerance) const noexcept;
};

struct SymmetrizedPair {
  std::vector<double> gamma_hat;  // |p_i - q_i| / (1 + |p_i + q_i - 1|)
  ProbVector p_hat;               // 1/2 + gamma_hat / 2
  ProbVector q_hat;               // 1/2 - gamma_hat / 2
};

/// gamma = |p - q| / (1 + |p + q - 1|).
double symmetrization_gap(double p, double q);

SymmetrizedPair symmetrize(const ProbVector& p, const ProbVector& q);

/// Channel sending Ber(p) to Ber(1/2 + gamma/2) and Ber(q) to Ber(1/2 - gamma/2).
///
/// For p < q the inputs are relabeled (u -> 1 - u) before the matrix is
/// formed, and the returned channel includes that relabeling, i.e. it acts on
/// the original input. For p = q the ratio gamma / (p - q) is replaced by its
/// limit 1 / (1 + |p + q - 1|).
Channel2x2 channel_matrix(double p, double q);

struct ChannelProduct {
  SymmetrizedPair pair;
  std::vector<Channel2x2> channels;
};

/// Coordinate-wise application of channel_matrix, with the symmetrized pair
/// it produces.
ChannelProduct apply_channel_product(const ProbVector& p, const ProbVector& q);

}  // namespace tvprod
