#include "glab/sampling.hpp"

namespace glab {

QVector PointSampler::sample(std::size_t n, long bound) {
  QVector v(n);
  const std::uint64_t width = 2 * static_cast<std::uint64_t>(bound) + 1;
  for (auto& x : v) x = static_cast<long>(rng_() % width) - bound;
  return v;
}

RankSearch sampled_max_rank(std::size_t nvars, const std::function<QMatrix(const QVector&)>& build,
                            std::uint64_t seed, const SamplingOptions& opt) {
  PointSampler sampler(seed);
  RankSearch best;
  long bound = opt.bound;
  for (int round = 1; round <= opt.max_rounds; ++round) {
    best.rounds = round;
    bool agree = true;
    std::size_t first = 0;
    for (int s = 0; s < opt.samples; ++s) {
      QVector pt = sampler.sample(nvars, bound);
      std::size_t r = rank(build(pt));
      if (s == 0) first = r;
      if (r != first) agree = false;
      if (best.witness.empty() || r > best.rank) {
        best.rank = r;
        best.witness = pt;
        best.bound = bound;
      }
    }
    if (agree) break;
    bound *= 2;
  }
  return best;
}

}  // namespace glab
