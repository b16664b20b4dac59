#pragma once

#include <string>
#include <vector>

#include "glab/bracket_table.hpp"
#include "glab/mpoly.hpp"

namespace glab {

struct InvariantBasis {
  int degree = 0;
  std::vector<MPoly> elements;
};

// basis of S^d(q)^q, echelon-normalized (nullspace convention)
InvariantBasis invariants_degree(const LieAlgebra& q, int d);
// all monomials of degree d in x_0..x_{dim-1} at t-degree 0, in monomial order
std::vector<Monomial> monomials_of_degree(int dim, int d);
// true iff {f, x_i} = 0 for every basis element
bool is_invariant(const MPoly& f, const LieAlgebra& q);

// coefficients of the characteristic polynomial of the generic element of sl_n, degrees 2..n
std::vector<MPoly> charpoly_invariants(const LieAlgebra& q);
// homogeneous generators of S(q)^q found degree by degree (for sl_n: charpoly_invariants)
std::vector<MPoly> basic_invariants(const LieAlgebra& q, int max_degree = 0);

using KVec = std::vector<int>;
// weakly increasing tuples of length d with entries in [0, n-1], lexicographic
std::vector<KVec> polarization_indices(int d, int n);
MPoly polarize(const MPoly& f, const KVec& k, int n);
struct PolEntry {
  KVec k;
  MPoly poly;
};
std::vector<PolEntry> pol_space(const MPoly& f, int n);
// F^[j] = sum over |k| = j of F[k]
MPoly f_bracket_j(const MPoly& f, int j, int n);

struct Recipe {
  enum class Kind { Crt, Takiff, Polar, Tau, LemmaX };
  Kind kind = Kind::Polar;
  Rational root;         // Crt, Takiff
  int j = 0;             // Takiff: component index; Tau: k
  KVec k;                // Polar: single polarization index
  QVector coeffs;        // Polar: coefficients over pol_space order, used when k is empty
  std::string str() const;
};

struct Generator {
  MPoly poly;
  int source = 0;  // index of the basic invariant
  Recipe recipe;
};

struct GeneratorSet {
  std::vector<Generator> entries;
  std::vector<MPoly> polys() const;
  std::vector<MPoly> polys_of(int source) const;
};

// F_i^[j] with (n-1) d_i - n < j <= (n-1) d_i
GeneratorSet takiff_generators(const LieAlgebra& q, const std::vector<MPoly>& fs, int n);
// generators of the Poisson centre of (W, [,]_p) for p with rational roots
GeneratorSet crt_generators(const LieAlgebra& q, const std::vector<MPoly>& fs, const UniPoly& p, const RootData& rd);
// x t^a -> x (r^a mod p) for a >= 1 and x -> x r0
MPoly phi_map(const MPoly& f, const UniPoly& r0, const UniPoly& r1, const UniPoly& p);
// F with x -> x r(t) expanded modulo p
MPoly substitute_residue(const MPoly& f, const UniPoly& r, const UniPoly& p);

// {G, x t^a} = 0 for every basis variable of the table
bool is_central(const MPoly& g, const BracketTable& t, std::string* witness = nullptr);

}  // namespace glab
