#include "tvprod/reduce.hpp"

namespace tvprod {

ScheffeReduction scheffe_reduce(const FiniteProductPair& pair) {
  std::vector<double> p, q;
  std::vector<std::vector<std::size_t>> witness;
  p.reserve(pair.size());
  q.reserve(pair.size());
  witness.reserve(pair.size());
  for (std::size_t i = 0; i < pair.size(); ++i) {
    const FiniteDist& pi = pair.p_side()[i];
    const FiniteDist& qi = pair.q_side()[i];
    std::vector<std::size_t> set;
    double pa = 0.0, qa = 0.0;
    for (std::size_t w = 0; w < pi.support_size(); ++w) {
      // Strict, no epsilon: ties contribute nothing to the marginal TV.
      if (pi[w] - qi[w] > 0.0) {
        set.push_back(w);
        pa += pi[w];
        qa += qi[w];
      }
    }
    p.push_back(pa > 1.0 ? 1.0 : pa);
    q.push_back(qa);
    witness.push_back(std::move(set));
  }
  return ScheffeReduction{ProbVector(std::move(p)), ProbVector(std::move(q)), std::move(witness)};
}

}  // namespace tvprod
