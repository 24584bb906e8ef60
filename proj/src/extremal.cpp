#include "tvprod/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tvprod/error.hpp"
#include "tvprod/summation.hpp"

namespace tvprod {
namespace {

void require_positive_n(std::uint64_t n) {
  if (n < 1) throw_invalid("n must be at least 1");
}

}  // namespace

double gap_tv_closed_form(std::uint64_t n) {
  require_positive_n(n);
  const double nd = static_cast<double>(n);
  return 1.0 - std::pow(1.0 - 1.0 / nd, nd);
}

GapInstance gap_instance(std::uint64_t n) {
  require_positive_n(n);
  const double nd = static_cast<double>(n);
  const double gamma = 1.0 / nd;
  const std::size_t len = static_cast<std::size_t>(n);
  GapInstance g{n,
                ProbVector::constant(len, gamma),
                ProbVector::constant(len, 0.0),
                ProbVector::constant(len, 0.5 + 0.5 * gamma),
                ProbVector::constant(len, 0.5 - 0.5 * gamma)};
  g.tv_pq = gap_tv_closed_form(n);
  g.tv_pq_prime_upper = 1.0 / std::sqrt(nd);
  g.ratio_lower = g.tv_pq / g.tv_pq_prime_upper;
  return g;
}

double gap_ratio_exact(std::uint64_t n) {
  require_positive_n(n);
  const double gamma = 1.0 / static_cast<double>(n);
  const double spread = exact_tv_equal_marginals(n, gamma, 0.0);
  const double symmetric = exact_tv_equal_marginals(n, 0.5 + 0.5 * gamma, 0.5 - 0.5 * gamma);
  return spread / symmetric;
}

RademacherInstance::RademacherInstance(std::vector<double> weights, double threshold)
    : weights_(std::move(weights)), threshold_(threshold) {
  if (weights_.empty()) throw_invalid("at least one weight is required");
  if (!(threshold_ > 0.0) || !std::isfinite(threshold_)) throw_invalid("threshold must be positive");
  double s = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw_invalid("weight[" + std::to_string(i) + "] must be positive and finite");
    }
    s += weights_[i] * weights_[i];
  }
  const double norm = std::sqrt(s);
  for (double& w : weights_) w /= norm;
}

LowtherResult lowther_check(const RademacherInstance& instance, unsigned workers) {
  const auto& a = instance.weights();
  const std::size_t n = a.size();
  if (n > kMaxLowtherWeights) {
    throw_budget(std::to_string(n) + " weights exceed the sign-enumeration limit of " +
                 std::to_string(kMaxLowtherWeights));
  }
  const double u = instance.threshold();

  double z2 = 0.0;
  for (double w : a) z2 += w * w;

  LowtherResult r;
  r.lhs = std::min(std::sqrt(z2), u);

  // |sum eps_i a_i| is invariant under a global sign flip, so eps_0 = +1 is
  // fixed and the remaining n - 1 signs are enumerated.
  const std::uint64_t patterns = std::uint64_t{1} << (n - 1);
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(end - begin));
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      double s = a[0];
      for (std::size_t i = 1; i < n; ++i) s += ((mask >> (i - 1)) & 1U) ? -a[i] : a[i];
      terms.push_back(std::min(std::abs(s), u));
    }
    return pairwise_sum(terms);
  };
  r.rhs = chunked_sum(patterns, chunk, workers) / static_cast<double>(patterns);
  r.ratio = r.lhs / r.rhs;
  return r;
}

}  // namespace tvprod
