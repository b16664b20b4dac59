#include "glab/lie_index.hpp"

namespace glab {

IndexResult lie_index(const BracketTable& t, std::uint64_t seed, const SamplingOptions& opt) {
  IndexResult r;
  r.dim = t.size();
  r.search = sampled_max_rank(
      static_cast<std::size_t>(t.size()), [&](const QVector& g) { return poisson_tensor_at(t, g); }, seed, opt);
  r.index = r.dim - static_cast<int>(r.search.rank);
  return r;
}

IndexResult lie_index(const AlgebraPtr& q, std::uint64_t seed, const SamplingOptions& opt) {
  return lie_index(table_of(q), seed, opt);
}

BoundB bound_b(int dim, int ind, int n) {
  Rational b(dim + ind, 2);
  b.canonicalize();
  return {b, b * (n - 1) + ind};
}

}  // namespace glab
