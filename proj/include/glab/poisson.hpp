#pragma once

#include <cstdint>
#include <vector>

#include "glab/bracket_table.hpp"
#include "glab/mpoly.hpp"
#include "glab/sampling.hpp"

namespace glab {

// Variables x_i t^a with i < dim, a < n, flattened as a*dim + i.
struct Ambient {
  int dim = 0;
  int n = 1;
  int size() const { return dim * n; }
  Var var(int u) const { return var_of_flat(u, dim); }
  int index(Var v) const { return flat_index(v, dim); }
  bool contains(Var v) const { return var_base(v) < dim && var_tdeg(v) < n; }
};

// {F, G} extended from the linear bracket by the Leibniz rule
MPoly poisson_bracket(const MPoly& f, const MPoly& g, const LinearBracket& t);

// values of all ambient variables; gamma[u] is the value of amb.var(u)
QVector differential_at(const MPoly& f, const Ambient& amb, const QVector& gamma);
std::size_t jacobian_rank_at(const std::vector<MPoly>& fs, const Ambient& amb, const QVector& gamma);
Rational evaluate_at(const MPoly& f, const Ambient& amb, const QVector& gamma);
RankSearch trdeg_estimate(const std::vector<MPoly>& fs, const Ambient& amb, std::uint64_t seed,
                          const SamplingOptions& opt = {});

// x_i t^a -> x_i r(t)^a; throws if the result exceeds t-degree cutoff
MPoly substitute_t(const MPoly& f, const UniPoly& r, int cutoff);
// x t^k -> x (t^k mod p)
MPoly psi_p(const MPoly& f, const UniPoly& p);
// k-fold derivation x t^a -> a x t^{a+1}
MPoly tau_apply(const MPoly& f, int k);
// x t^a -> x t^{a-1}; requires every variable to have a >= 1
MPoly lower_t(const MPoly& f);
// x t^a -> x t^{a+s}
MPoly raise_t(const MPoly& f, int s);
// D_gamma F = sum_u gamma(x_u) dF/dx_u, gamma indexed by the base basis
MPoly directional_derivative(const MPoly& f, const QVector& gamma);

}  // namespace glab
