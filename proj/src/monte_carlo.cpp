#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "tvprod/core.hpp"
#include "tvprod/error.hpp"
#include "tvprod/rng.hpp"
#include "tvprod/summation.hpp"

namespace tvprod {

TVEstimate mc_tv_estimate(const ProbVector& p, const ProbVector& q, std::uint64_t samples,
                          double confidence, std::uint64_t seed, unsigned workers) {
  if (p.size() != q.size()) {
    throw_mismatch("p has " + std::to_string(p.size()) + " coordinates but q has " +
                   std::to_string(q.size()));
  }
  const double half_width = hoeffding_half_width(samples, confidence);
  const std::size_t n = p.size();

  // Per-coordinate log(Q/P) for the outcome 1 and the outcome 0. An outcome
  // with P = 0 is never drawn, so only Q = 0 produces -inf.
  std::vector<double> log_ratio_one(n), log_ratio_zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    log_ratio_one[i] = p[i] > 0.0 ? std::log(q[i]) - std::log(p[i]) : 0.0;
    log_ratio_zero[i] = p[i] < 1.0 ? std::log1p(-q[i]) - std::log1p(-p[i]) : 0.0;
  }

  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(end - begin));
    for (std::uint64_t s = begin; s < end; ++s) {
      SplitMix64 rng = SplitMix64::stream(seed, s);
      double log_ratio = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const bool one = rng.uniform() < p[i];
        log_ratio += one ? log_ratio_one[i] : log_ratio_zero[i];
      }
      // max(0, 1 - Q/P); -expm1 keeps precision when the ratio is near 1.
      terms.push_back(log_ratio >= 0.0 ? 0.0 : -std::expm1(log_ratio));
    }
    return pairwise_sum(terms);
  };

  TVEstimate est;
  est.value = std::clamp(chunked_sum(samples, chunk, workers) / static_cast<double>(samples), 0.0, 1.0);
  est.half_width = half_width;
  est.confidence = confidence;
  est.samples = samples;
  return est;
}

}  // namespace tvprod
