#include "tvprod/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "enumerate.hpp"
#include "tvprod/error.hpp"
#include "tvprod/summation.hpp"

namespace tvprod {
namespace {

std::string describe(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void require_probability(double v, const std::string& where) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw_invalid(where + " = " + describe(v) + " is not a probability in [0,1]");
  }
}

void require_same_length(const ProbVector& p, const ProbVector& q) {
  if (p.size() != q.size()) {
    throw_mismatch("p has " + std::to_string(p.size()) + " coordinates but q has " +
                   std::to_string(q.size()));
  }
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

// log(C(n,k) p^k (1-p)^(n-k)) with the 0 log 0 = 0 convention.
double log_binomial_mass(std::uint64_t n, std::uint64_t k, double p) {
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double log_choose = std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0);
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (p == 0.0) return k == 0 ? 0.0 : kNegInf;
  if (p == 1.0) return k == n ? 0.0 : kNegInf;
  return log_choose + kd * std::log(p) + (nd - kd) * std::log1p(-p);
}

}  // namespace

ProbVector::ProbVector(std::vector<double> params) : params_(std::move(params)) {
  if (params_.empty()) throw_invalid("probability vector must have at least one coordinate");
  for (std::size_t i = 0; i < params_.size(); ++i) {
    require_probability(params_[i], "p[" + std::to_string(i) + "]");
  }
}

ProbVector ProbVector::constant(std::size_t n, double value) {
  return ProbVector(std::vector<double>(n, value));
}

FiniteDist::FiniteDist(std::vector<double> masses) : masses_(std::move(masses)) {
  if (masses_.empty()) throw_invalid("distribution has empty support");
  double sum = 0.0;
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    const double m = masses_[i];
    if (!(m >= 0.0) || !std::isfinite(m)) {
      throw_invalid("mass[" + std::to_string(i) + "] = " + describe(m) + " is negative or not finite");
    }
    sum += m;
  }
  if (!(std::abs(sum - 1.0) <= kNormalizationTolerance)) {
    throw_invalid("masses sum to " + describe(sum) + ", not 1");
  }
  if (sum != 1.0) {
    for (double& m : masses_) m /= sum;
  }
}

FiniteDist FiniteDist::bernoulli(double p) {
  require_probability(p, "Bernoulli parameter");
  FiniteDist d;
  d.masses_ = {1.0 - p, p};
  return d;
}

FiniteProductPair::FiniteProductPair(std::vector<FiniteDist> p_side, std::vector<FiniteDist> q_side)
    : p_side_(std::move(p_side)), q_side_(std::move(q_side)) {
  if (p_side_.empty()) throw_invalid("product pair must have at least one coordinate");
  if (p_side_.size() != q_side_.size()) {
    throw_mismatch("P has " + std::to_string(p_side_.size()) + " coordinates but Q has " +
                   std::to_string(q_side_.size()));
  }
  for (std::size_t i = 0; i < p_side_.size(); ++i) {
    if (p_side_[i].support_size() != q_side_[i].support_size()) {
      throw_mismatch("coordinate " + std::to_string(i) + ": P has support size " +
                     std::to_string(p_side_[i].support_size()) + " but Q has " +
                     std::to_string(q_side_[i].support_size()));
    }
  }
}

FiniteProductPair FiniteProductPair::from_bernoulli(const ProbVector& p, const ProbVector& q) {
  require_same_length(p, q);
  std::vector<FiniteDist> ps, qs;
  ps.reserve(p.size());
  qs.reserve(q.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    ps.push_back(FiniteDist::bernoulli(p[i]));
    qs.push_back(FiniteDist::bernoulli(q[i]));
  }
  return FiniteProductPair(std::move(ps), std::move(qs));
}

bool FiniteProductPair::is_binary() const noexcept {
  return std::all_of(p_side_.begin(), p_side_.end(),
                     [](const FiniteDist& d) { return d.support_size() == 2; });
}

std::uint64_t FiniteProductPair::joint_support_size() const noexcept {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (const auto& d : p_side_) {
    const std::uint64_t s = d.support_size();
    if (total > kMax / s) return kMax;
    total *= s;
  }
  return total;
}

MarginalTV::MarginalTV(std::vector<double> deltas) : deltas_(std::move(deltas)) {
  for (std::size_t i = 0; i < deltas_.size(); ++i) {
    require_probability(deltas_[i], "delta[" + std::to_string(i) + "]");
  }
}

double MarginalTV::l1() const noexcept {
  double s = 0.0;
  for (double d : deltas_) s += d;
  return s;
}

double MarginalTV::l2() const noexcept {
  double s = 0.0;
  for (double d : deltas_) s += d * d;
  return std::sqrt(s);
}

double MarginalTV::linf() const noexcept {
  double m = 0.0;
  for (double d : deltas_) m = std::max(m, d);
  return m;
}

double tv_distance(const FiniteDist& p, const FiniteDist& q) {
  if (p.support_size() != q.support_size()) {
    throw_mismatch("distributions have different support sizes");
  }
  double s = 0.0;
  for (std::size_t w = 0; w < p.support_size(); ++w) s += std::abs(p[w] - q[w]);
  return clamp_unit(0.5 * s);
}

MarginalTV marginal_tv(const FiniteProductPair& pair) {
  std::vector<double> deltas;
  deltas.reserve(pair.size());
  for (std::size_t i = 0; i < pair.size(); ++i) {
    deltas.push_back(tv_distance(pair.p_side()[i], pair.q_side()[i]));
  }
  return MarginalTV(std::move(deltas));
}

double l2_distance(const ProbVector& p, const ProbVector& q) {
  require_same_length(p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
  return std::sqrt(s);
}

double exact_tv_bernoulli(const ProbVector& p, const ProbVector& q, const EnumerationOptions& options) {
  require_same_length(p, q);
  const std::uint64_t budget = detail::checked_budget(options.log2_budget);
  if (p.size() >= 63 || (std::uint64_t{1} << p.size()) > budget) {
    throw_budget("n = " + std::to_string(p.size()) + " exceeds the enumeration budget of 2^" +
                 std::to_string(options.log2_budget) + " outcomes");
  }
  std::vector<double> storage(4 * p.size());
  std::vector<std::span<const double>> pt, qt;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double* cell = storage.data() + 4 * i;
    cell[0] = 1.0 - p[i];
    cell[1] = p[i];
    cell[2] = 1.0 - q[i];
    cell[3] = q[i];
    pt.emplace_back(cell, 2);
    qt.emplace_back(cell + 2, 2);
  }
  const std::uint64_t total = std::uint64_t{1} << p.size();
  return clamp_unit(0.5 * detail::enumerate_abs_difference(pt, qt, total, options.workers));
}

double exact_tv_general(const FiniteProductPair& pair, const EnumerationOptions& options) {
  const std::uint64_t budget = detail::checked_budget(options.log2_budget);
  const std::uint64_t total = pair.joint_support_size();
  if (total > budget) {
    throw_budget("joint support of " + (total == std::numeric_limits<std::uint64_t>::max()
                                            ? std::string("more than 2^64")
                                            : std::to_string(total)) +
                 " outcomes exceeds the enumeration budget of 2^" + std::to_string(options.log2_budget));
  }
  std::vector<std::span<const double>> pt, qt;
  for (std::size_t i = 0; i < pair.size(); ++i) {
    pt.push_back(pair.p_side()[i].masses());
    qt.push_back(pair.q_side()[i].masses());
  }
  return clamp_unit(0.5 * detail::enumerate_abs_difference(pt, qt, total, options.workers));
}

double exact_tv_equal_marginals(std::uint64_t n, double p, double q) {
  if (n < 1) throw_invalid("n must be at least 1");
  require_probability(p, "p");
  require_probability(q, "q");
  if (p == q) return 0.0;
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(n + 1));
  for (std::uint64_t k = 0; k <= n; ++k) {
    terms.push_back(std::abs(std::exp(log_binomial_mass(n, k, p)) - std::exp(log_binomial_mass(n, k, q))));
  }
  return clamp_unit(0.5 * pairwise_sum(terms));
}

double hoeffding_half_width(std::uint64_t samples, double confidence) {
  if (samples < 1) throw_invalid("samples must be at least 1");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw_invalid("confidence = " + describe(confidence) + " must lie in (0,1)");
  }
  return std::sqrt(std::log(2.0 / (1.0 - confidence)) / (2.0 * static_cast<double>(samples)));
}

}  // namespace tvprod
