#include "tvprod/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "tvprod/reduce.hpp"

namespace tvprod {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

// KL(P_i || Q_i) with 0 log(0/q) = 0 and p log(p/0) = +inf.
double kl_divergence(const FiniteDist& p, const FiniteDist& q) {
  double s = 0.0;
  for (std::size_t w = 0; w < p.support_size(); ++w) {
    if (p[w] == 0.0) continue;
    if (q[w] == 0.0) return kInf;
    s += p[w] * std::log(p[w] / q[w]);
  }
  return std::max(s, 0.0);
}

}  // namespace

Bracket trivial_bracket(const MarginalTV& delta) {
  return {delta.linf(), std::min(1.0, delta.l1())};
}

double l2_lower_bound(const MarginalTV& delta) {
  return TheoremOneConstants::c_final * std::min(1.0, delta.l2());
}

double symmetric_l2_upper_bound(const ProbVector& p) {
  double s = 0.0;
  for (double pi : p) s += (2.0 * pi - 1.0) * (2.0 * pi - 1.0);
  return std::min(1.0, std::sqrt(s));
}

double symmetric_affinity_upper_bound(const ProbVector& p) {
  double product = 1.0;
  double squared_logs = 0.0;
  for (double pi : p) {
    if (pi == 0.0 || pi == 1.0) return 1.0;
    product *= 2.0 * std::sqrt(pi * (1.0 - pi));
    const double l = std::log(pi) - std::log1p(-pi);
    squared_logs += l * l;
  }
  return clamp_unit(1.0 - product * std::exp(-0.5 * std::sqrt(squared_logs)));
}

HellingerBracket hellinger_bracket(const FiniteProductPair& pair) {
  double affinity = 1.0;
  for (std::size_t i = 0; i < pair.size(); ++i) {
    const FiniteDist& p = pair.p_side()[i];
    const FiniteDist& q = pair.q_side()[i];
    double h2 = 0.0;
    for (std::size_t w = 0; w < p.support_size(); ++w) {
      const double d = std::sqrt(p[w]) - std::sqrt(q[w]);
      h2 += d * d;
    }
    affinity *= std::clamp(1.0 - 0.5 * h2, 0.0, 1.0);
  }
  HellingerBracket b;
  b.squared_hellinger = 2.0 * (1.0 - affinity);
  b.lower = clamp_unit(0.5 * b.squared_hellinger);
  // H^2 (1 - H^2/4) = 1 - affinity^2.
  b.upper = clamp_unit(std::sqrt(b.squared_hellinger * (1.0 - 0.25 * b.squared_hellinger)));
  return b;
}

KLBracket kl_bracket(const FiniteProductPair& pair) {
  KLBracket b;
  // Identical coordinates change neither TV nor KL, so they are left out of
  // Q_min; otherwise padding with copies would weaken the bound.
  double log_q_min = 0.0;
  bool informative = false;
  for (std::size_t i = 0; i < pair.size(); ++i) {
    const FiniteDist& p = pair.p_side()[i];
    const FiniteDist& q = pair.q_side()[i];
    b.divergence += kl_divergence(p, q);
    if (p == q) continue;
    informative = true;
    const double m = *std::min_element(q.masses().begin(), q.masses().end());
    log_q_min += m > 0.0 ? std::log(m) : -kInf;
  }
  if (std::isinf(b.divergence)) {
    b.upper = 1.0;
    return b;
  }
  b.upper = std::min(1.0, std::sqrt(0.5 * b.divergence));
  if (!informative) {
    b.lower = 0.0;
  } else if (std::isfinite(log_q_min) && log_q_min < -std::log(2.0)) {
    b.lower = b.divergence / (2.0 * std::abs(log_q_min));
  }
  return b;
}

BoundsReport bounds_report(const FiniteProductPair& pair) {
  const ScheffeReduction red = scheffe_reduce(pair);

  std::vector<double> deltas(pair.size());
  for (std::size_t i = 0; i < pair.size(); ++i) deltas[i] = clamp_unit(red.p[i] - red.q[i]);
  const MarginalTV delta(std::move(deltas));

  BoundsReport r;
  r.delta_l1 = delta.l1();
  r.delta_l2 = delta.l2();
  r.delta_linf = delta.linf();

  const Bracket trivial = trivial_bracket(delta);
  r.lower_trivial = trivial.lower;
  r.upper_trivial = trivial.upper;
  r.lower_l2 = l2_lower_bound(delta);

  const HellingerBracket hel = hellinger_bracket(pair);
  r.lower_hellinger = hel.lower;
  r.upper_hellinger = hel.upper;
  r.squared_hellinger = hel.squared_hellinger;

  const KLBracket kl = kl_bracket(pair);
  r.lower_kl = kl.lower;
  r.upper_pinsker = kl.upper;
  r.kl_divergence = kl.divergence;

  // The reduced pair can have smaller TV than the input unless every
  // coordinate is two-point, so the symmetric bounds are restricted to that
  // case. Coordinates with p_i = q_i are inert (they reduce to p = q = 0).
  if (pair.is_binary()) {
    std::vector<double> active;
    bool symmetric = true;
    for (std::size_t i = 0; i < pair.size(); ++i) {
      if (red.p[i] == red.q[i]) continue;
      if (std::abs(red.q[i] - (1.0 - red.p[i])) > kSymmetryTolerance) {
        symmetric = false;
        break;
      }
      active.push_back(red.p[i]);
    }
    if (symmetric) {
      const ProbVector p = active.empty() ? ProbVector::constant(1, 0.5) : ProbVector(std::move(active));
      r.upper_symmetric = symmetric_l2_upper_bound(p);
      r.upper_affinity = symmetric_affinity_upper_bound(p);
    }
  }

  r.best_lower = std::max({r.lower_trivial, r.lower_l2, r.lower_hellinger, r.lower_kl.value_or(0.0)});
  r.best_upper = std::min({r.upper_trivial, r.upper_hellinger, r.upper_pinsker,
                           r.upper_symmetric.value_or(1.0), r.upper_affinity.value_or(1.0)});
  r.best_lower = clamp_unit(r.best_lower);
  r.best_upper = clamp_unit(r.best_upper);
  if (r.best_lower > 0.0) r.ratio = r.best_upper / r.best_lower;
  return r;
}

}  // namespace tvprod
