#pragma once

#include <vector>

#include "glab/invariants.hpp"
#include "glab/lie_algebra.hpp"
#include "glab/mpoly.hpp"

namespace glab {

using AlphaTuple = std::vector<int>;

// all tuples (a_0..a_M) of nonnegative integers with the given sum
std::vector<AlphaTuple> alpha_tuples(int sum, int m);

// F[alpha,i,j] in S^{d+1}(q[t]) for F in S^d(q); uses the stored invariant form
MPoly script_f(const LieAlgebra& q, const MPoly& f, const AlphaTuple& alpha, int i, int j);
// number of nonzero entries of alpha minus one
int m_tilde(const AlphaTuple& alpha);

// Y[k,t]: polarization without truncation
MPoly polarize_t(const MPoly& f, const KVec& k);

struct FFTerm {
  AlphaTuple alpha;
  int j = 0;
};
// the pairs (alpha, j) whose forms sum to -1/2 {H, Y[k,t]}
std::vector<FFTerm> ff_bracket_terms(const KVec& k);
struct FFCheck {
  std::vector<FFTerm> terms;
  MPoly lhs;  // 1/2 {Y[k,t], H}
  MPoly rhs;  // sum of Y[alpha,1,j]
  bool holds = false;
};
FFCheck ff_bracket_decomposition(const AlgebraPtr& q, const MPoly& y, const KVec& k);

// A_j (j >= 4) and A_{k,d} as printed; binomial identity 2 sum_{i=1}^{u-b} C(u-i,b) = 2 C(u,b+1)
QMatrix matrix_A(int j);
QMatrix matrix_A_kd(int k, int d);
bool binom_identity_check(int u, int b);

// (tn-c0)/(tn-c) formulas for p = t^3 - c t with c = alpha^2, zeta = -1
struct MinusTCheck {
  bool root_zero = false;
  bool other_roots = false;
};
MinusTCheck example_minus_t(const MPoly& f, const Rational& alpha);

}  // namespace glab
