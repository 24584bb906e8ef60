#pragma once

#include <cstddef>
#include <vector>

#include "tvprod/core.hpp"

namespace tvprod {

/// Collapse of each coordinate's support onto {A_i, complement of A_i}, where
/// A_i is the set of states strictly favored by P_i. The resulting Bernoulli
/// pair has the same marginal TV sequence as the original and, being a
/// pushforward under a Markov map, a joint TV no larger than the original.
struct ScheffeReduction {
  ProbVector p;  // p[i] = P_i(A_i)
  ProbVector q;  // q[i] = Q_i(A_i) <= p[i]
  std::vector<std::vector<std::size_t>> witness_sets;  // ascending state indices
};

ScheffeReduction scheffe_reduce(const FiniteProductPair& pair);

}  // namespace tvprod
