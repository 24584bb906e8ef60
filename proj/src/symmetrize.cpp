#include "tvprod/symmetrize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tvprod/error.hpp"

namespace tvprod {

std::pair<double, double> Channel2x2::push(double prob_one) const noexcept {
  const double prob_zero = 1.0 - prob_one;
  return {prob_one * rows[0][0] + prob_zero * rows[1][0],
          prob_one * rows[0][1] + prob_zero * rows[1][1]};
}

bool Channel2x2::is_row_stochastic(double tolerance) const noexcept {
  for (const auto& row : rows) {
    for (double v : row) {
      if (!(v >= 0.0 && v <= 1.0)) return false;
    }
    if (std::abs(row[0] + row[1] - 1.0) > tolerance) return false;
  }
  return true;
}

double symmetrization_gap(double p, double q) {
  return std::abs(p - q) / (1.0 + std::abs(p + q - 1.0));
}

SymmetrizedPair symmetrize(const ProbVector& p, const ProbVector& q) {
  if (p.size() != q.size()) {
    throw_mismatch("p has " + std::to_string(p.size()) + " coordinates but q has " +
                   std::to_string(q.size()));
  }
  std::vector<double> gamma(p.size()), ph(p.size()), qh(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    gamma[i] = symmetrization_gap(p[i], q[i]);
    ph[i] = 0.5 + 0.5 * gamma[i];
    qh[i] = 0.5 - 0.5 * gamma[i];
  }
  return SymmetrizedPair{std::move(gamma), ProbVector(std::move(ph)), ProbVector(std::move(qh))};
}

Channel2x2 channel_matrix(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0)) {
    throw_invalid("channel parameters must lie in [0,1]");
  }
  const bool relabel = p < q;
  if (relabel) {
    p = 1.0 - p;
    q = 1.0 - q;
  }
  // gamma / (p - q), simplified so that p = q needs no special case.
  const double ratio = 1.0 / (1.0 + std::abs(p + q - 1.0));
  // Both offsets lie in [0, 1/2]; clamping absorbs rounding at the corners.
  const double a = std::clamp(0.5 * ratio * (2.0 - p - q), 0.0, 0.5);
  const double b = std::clamp(0.5 * ratio * (p + q), 0.0, 0.5);
  Channel2x2 m;
  m.rows[0] = {0.5 + a, 0.5 - a};
  m.rows[1] = {0.5 - b, 0.5 + b};
  if (relabel) std::swap(m.rows[0], m.rows[1]);
  return m;
}

ChannelProduct apply_channel_product(const ProbVector& p, const ProbVector& q) {
  ChannelProduct out{symmetrize(p, q), {}};
  out.channels.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.channels.push_back(channel_matrix(p[i], q[i]));
  return out;
}

}  // namespace tvprod
