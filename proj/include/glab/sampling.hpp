#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "glab/qmatrix.hpp"

namespace glab {

// Integer points with coordinates uniform in [-B, B]; reproducible for a given seed on every platform.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}
  QVector sample(std::size_t n, long bound);

 private:
  std::mt19937_64 rng_;
};

struct RankSearch {
  std::size_t rank = 0;
  QVector witness;
  long bound = 0;
  int rounds = 0;
};

struct SamplingOptions {
  int samples = 8;
  long bound = 1000;
  int max_rounds = 5;
};

// max rank of build(point) over sampled points; doubles the bound and resamples while samples disagree
RankSearch sampled_max_rank(std::size_t nvars, const std::function<QMatrix(const QVector&)>& build,
                            std::uint64_t seed, const SamplingOptions& opt = {});

}  // namespace glab
