#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "enumerate.hpp"
#include "tvprod/error.hpp"
#include "tvprod/summation.hpp"

namespace tvprod {

unsigned resolve_workers(unsigned requested) noexcept {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

double chunked_sum(std::uint64_t count,
                   const std::function<double(std::uint64_t, std::uint64_t)>& chunk_sum,
                   unsigned workers) {
  if (count == 0) return 0.0;
  const std::uint64_t chunks = (count + kChunkSize - 1) / kChunkSize;
  std::vector<double> totals(chunks, 0.0);

  auto run = [&](std::atomic<std::uint64_t>& next) {
    for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
      const std::uint64_t begin = c * kChunkSize;
      const std::uint64_t end = std::min(count, begin + kChunkSize);
      totals[c] = chunk_sum(begin, end);
    }
  };

  std::atomic<std::uint64_t> next{0};
  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), chunks));
  if (threads <= 1) {
    run(next);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back([&] { run(next); });
  }
  return pairwise_sum(totals);
}

namespace detail {

std::uint64_t checked_budget(int log2_budget) {
  if (log2_budget < 0 || log2_budget > 62) {
    throw_invalid("enumeration budget must be in [0, 62] (log2 outcomes), got " +
                  std::to_string(log2_budget));
  }
  return std::uint64_t{1} << log2_budget;
}

double enumerate_abs_difference(std::span<const std::span<const double>> p_tables,
                                std::span<const std::span<const double>> q_tables,
                                std::uint64_t total, unsigned workers) {
  const std::size_t n = p_tables.size();

  // Outcome index is mixed radix with the last coordinate varying fastest.
  // The probability of an outcome is always the left-to-right product of its
  // n factors; the prefix arrays only cache partial products of that fixed
  // order, so every outcome gets the same bits regardless of the chunk it
  // falls in.
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::size_t> digit(n, 0);
    std::uint64_t rest = begin;
    for (std::size_t k = n; k-- > 0;) {
      const std::size_t radix = p_tables[k].size();
      digit[k] = static_cast<std::size_t>(rest % radix);
      rest /= radix;
    }
    std::vector<double> pp(n + 1, 1.0), qq(n + 1, 1.0);
    auto refresh = [&](std::size_t from) {
      for (std::size_t k = from; k < n; ++k) {
        pp[k + 1] = pp[k] * p_tables[k][digit[k]];
        qq[k + 1] = qq[k] * q_tables[k][digit[k]];
      }
    };
    refresh(0);

    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(end - begin));
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      terms.push_back(std::abs(pp[n] - qq[n]));
      if (idx + 1 == end) break;
      std::size_t k = n - 1;
      while (digit[k] + 1 == p_tables[k].size()) {
        digit[k] = 0;
        --k;
      }
      ++digit[k];
      refresh(k);
    }
    return pairwise_sum(terms);
  };

  return chunked_sum(total, chunk, workers);
}

}  // namespace detail
}  // namespace tvprod
