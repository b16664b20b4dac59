#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glab/bracket_table.hpp"
#include "glab/invariants.hpp"
#include "glab/mpoly.hpp"
#include "glab/sampling.hpp"

namespace glab {

// L(p1, p2): p1, p2 monic of degree n, p1 != p2, deg(p2 - p1) <= 1
struct Pencil {
  AlgebraPtr base;
  UniPoly p1, p2;
  int n() const { return p1.degree(); }
};
Pencil make_pencil(const AlgebraPtr& q, const UniPoly& p1, const UniPoly& p2);

// p2 - p1 = scale * l(t + shift) with l = t or l = 1
struct PencilNormal {
  std::string l;  // "t" or "1"
  Rational scale;
  Rational shift;
};
PencilNormal normalize_pencil(const Pencil& pen);

struct PencilPoint {
  Rational a, b;
};
// a [,]_{p1} + b [,]_{p2}
BracketTable pencil_member(const Pencil& pen, const PencilPoint& pt);
bool is_regular_point(const Pencil& pen, const PencilPoint& pt, std::uint64_t seed, const SamplingOptions& opt = {});

// Pol(F) intersected with the Poisson centre of (W, [,]_p), in pol_space coordinates
std::vector<QVector> pol_centre(const MPoly& f, const AlgebraPtr& q, const UniPoly& p);

struct ZSample {
  Rational a;      // member a p1 + (1 - a) p2
  std::string route;  // "crt" or "linear"
};

struct ZBlock {
  int source = 0;
  int degree = 0;
  int expected = 0;  // d (n - 1) + 1
  std::vector<QVector> coords;  // echelon basis in pol_space coordinates
};

struct ZAlgebra {
  Pencil pencil;
  std::vector<MPoly> invariants;
  GeneratorSet gens;
  std::vector<ZBlock> blocks;
  std::vector<ZSample> samples;
  int ind = 0;         // measured ind q
  Rational bound;      // b(q, n)
  bool complete = false;  // every block reached its expected dimension
};

// sample_count <= 0 selects d_max n + 3
ZAlgebra build_Z(const Pencil& pen, const std::vector<MPoly>& fs, int sample_count = 0, std::uint64_t seed = 0);
// the generator described by a POLAR recipe
MPoly regenerate(const Generator& g, const std::vector<MPoly>& fs, int n);

struct CommuteReport {
  bool ok = true;
  std::size_t pairs = 0;
  std::vector<std::string> failures;
};
CommuteReport verify_Z_commutes(const ZAlgebra& z);
CommuteReport verify_commutes(const std::vector<MPoly>& gens, const Pencil& pen);

// the independent images psi_p(tau^k(F[t])), k = 0..kmax
std::vector<MPoly> tilde_V_span(const MPoly& f, const UniPoly& p, int kmax);
// F[t]: x -> x t
MPoly f_at_t(const MPoly& f);

struct SovpReport {
  bool ok = true;
  std::vector<int> tilde_dims;
  std::vector<int> z_dims;
};
// psi_p(Z(q^, t)) against Z(p, p + t), invariant by invariant
SovpReport check_sovp(const AlgebraPtr& q, const std::vector<MPoly>& fs, const UniPoly& p);

struct GzuElement {
  int k = 0;
  QVector c;    // coefficients of tau^u(F[t]), u < k
  MPoly lowest; // lowest t-component, of t-degree k
};
// lowest components of Psi(tau^k F[t] - sum c_u tau^u F[t]), Psi: x t^a -> x (t + 1)^a
std::vector<GzuElement> gzu_lowest(const MPoly& f, int kmax);
std::vector<MPoly> gzu_lowest_span(const MPoly& f, const UniPoly& p, int kmax);
// psi_p of the gzu elements against Z(p, p + 1), invariant by invariant
SovpReport check_gzu(const AlgebraPtr& q, const std::vector<MPoly>& fs, const UniPoly& p);

struct MFReport {
  bool contains_mf = false;   // span of images contains F, D F, D^2 F, ...
  bool mf_commutes = false;   // the D^j F_i pairwise commute in S(q)
  std::size_t image_rank = 0;
};
// rho_gamma(x + y t) = x + gamma(y) on a Z built for n = 2
MFReport mf_image(const ZAlgebra& z, const QVector& gamma);

}  // namespace glab
