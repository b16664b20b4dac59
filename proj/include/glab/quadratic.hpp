#pragma once

#include <vector>

#include "glab/bracket_table.hpp"
#include "glab/mpoly.hpp"

namespace glab {

// All families use the dual-basis realization: indices are raised with the inverse Gram matrix.

// sum G^{-1}_{ij} x_i x_j
MPoly casimir(const LieAlgebra& q);
// H[a,b] = sum G^{-1}_{ij} x_i t^a x_j t^b in S(q[t])
MPoly quad_H(const LieAlgebra& q, int a, int b);
// h[a,b] = psi_p(H[a,b])
MPoly quad_h(const LieAlgebra& q, int a, int b, const UniPoly& p);
// h[r, s] = sum G^{-1}_{ij} (x_i r)(x_j s), r and s taken modulo p
MPoly quad_h_res(const LieAlgebra& q, const UniPoly& r, const UniPoly& s, const UniPoly& p);
// X[a,b,c] = sum ([x^i, x^j], x^k) x_i t^a x_j t^b x_k t^c
MPoly quad_X(const LieAlgebra& q, int a, int b, int c);
// Y_xi[a,b] = sum (xi, [x^j, x^i]) x_j t^a x_i t^b
MPoly y_xi(const LieAlgebra& q, const SparseVec& xi, int a, int b);
// H~[j] = sum over a, b >= 0 with a + b = j of H[a,b]
MPoly quad_H_tilde(const LieAlgebra& q, int j);
// H^[j] = sum over a, b >= 1 with a + b = j of H[a,b]
MPoly quad_H_upper(const LieAlgebra& q, int j);

// kernel of c -> {sum c_k family_k, target}; returned as coefficient vectors
std::vector<QVector> centralizer(const MPoly& target, const std::vector<MPoly>& family, const LinearBracket& br);

// h[a,b] for 0 <= a <= b < n, ordered by (a, b)
std::vector<MPoly> quad_h_family(const LieAlgebra& q, const UniPoly& p);
// dim of the centralizer of h = h[1,1] in the span of h[a,b] under {,}_p
int centralizer_dim_h(const AlgebraPtr& q, const UniPoly& p);
// same for h[0,1]
int centralizer_dim_h01(const AlgebraPtr& q, const UniPoly& p);

// Gaudin Hamiltonians on q^{+n} (variables x_i^(k) = base k*dim + i)
std::vector<MPoly> gaudin_hamiltonians(const LieAlgebra& q, const QVector& z);
// x_i^(k) -> x_i r_k expanded modulo p
MPoly transport_to_quotient(const MPoly& f, int dim, const std::vector<UniPoly>& r, const UniPoly& p);

// X = c0 h[1,0] + c1/2 h - sum c_k X_k + X_n for p = t^n - sum c_k t^k, n >= 3
MPoly lemma_x_element(const LieAlgebra& q, const UniPoly& p);
// X_k = 1/2 sum over u + v = k + 1, u, v >= 2 of h[u,v]
MPoly lemma_x_k(const LieAlgebra& q, int k, const UniPoly& p);

// the elements of the P-H lemma: kernel of G -> {H[0,1], G} on H[a,b], a <= b, a + b <= jmax
struct PHCheck {
  int kernel_dim = 0;
  bool matches_tilde = false;
};
PHCheck lemma_ph_check(const AlgebraPtr& q, int jmax);

}  // namespace glab
