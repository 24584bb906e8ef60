#pragma once

// Deterministic summation. Large sums are split into fixed-size chunks whose
// boundaries never depend on the worker count; each chunk is reduced
// pairwise and the chunk totals are reduced pairwise in index order. The
// result is therefore bit-identical for any number of threads.

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <thread>
#include <vector>

namespace tvprod {

inline double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kLeaf = 16;
  if (values.size() <= kLeaf) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

inline constexpr std::uint64_t kChunkSize = std::uint64_t{1} << 14;

unsigned resolve_workers(unsigned requested) noexcept;

/// Sums f(i) for i in [0, count). `chunk_sum(begin, end)` must return the
/// pairwise sum of its range; it is invoked once per fixed chunk, possibly
/// concurrently from several threads.
double chunked_sum(std::uint64_t count,
                   const std::function<double(std::uint64_t, std::uint64_t)>& chunk_sum,
                   unsigned workers);

}  // namespace tvprod
