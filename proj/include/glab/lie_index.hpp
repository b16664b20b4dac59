#pragma once

#include <cstdint>

#include "glab/bracket_table.hpp"
#include "glab/sampling.hpp"

namespace glab {

struct IndexResult {
  int index = 0;
  int dim = 0;
  RankSearch search;
};

IndexResult lie_index(const BracketTable& t, std::uint64_t seed, const SamplingOptions& opt = {});
IndexResult lie_index(const AlgebraPtr& q, std::uint64_t seed, const SamplingOptions& opt = {});

// b(q) = (dim + ind)/2 and b(q,n) = (n-1) b(q) + ind
struct BoundB {
  Rational b;
  Rational bn;
};
BoundB bound_b(int dim, int ind, int n);

}  // namespace glab
