#include "glab/pencil.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "glab/lie_index.hpp"
#include "glab/poisson.hpp"
#include "glab/polyspan.hpp"

namespace glab {

namespace {

std::vector<MPoly> pol_polys(const MPoly& f, int n) {
  std::vector<MPoly> out;
  for (auto& e : pol_space(f, n)) out.push_back(std::move(e.poly));
  return out;
}

// member parameters: 1, 0, then small rationals of growing height
std::vector<Rational> member_parameters(int count) {
  std::vector<Rational> out{1, 0};
  for (long h = 2; static_cast<int>(out.size()) < count; ++h)
    for (long den = 1; den < h && static_cast<int>(out.size()) < count; ++den) {
      const long num = h - den;
      for (long s : {1L, -1L}) {
        Rational a = frac(s * num, den);
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
      }
    }
  out.resize(static_cast<std::size_t>(count));
  return out;
}

std::vector<QVector> echelon_rows(const std::vector<QVector>& rows, std::size_t width) {
  if (rows.empty()) return {};
  QMatrix m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  std::vector<std::size_t> piv;
  QMatrix r = rref(m, &piv);
  std::vector<QVector> out;
  for (std::size_t i = 0; i < piv.size(); ++i) out.push_back(r.row(i));
  return out;
}

SovpReport compare_blocks(const ZAlgebra& z, const std::vector<std::vector<MPoly>>& other) {
  SovpReport rep;
  for (std::size_t i = 0; i < other.size(); ++i) {
    const auto zs = z.gens.polys_of(static_cast<int>(i));
    rep.tilde_dims.push_back(static_cast<int>(span_rank(other[i])));
    rep.z_dims.push_back(static_cast<int>(span_rank(zs)));
    if (!same_span(other[i], zs)) rep.ok = false;
  }
  return rep;
}

}  // namespace

Pencil make_pencil(const AlgebraPtr& q, const UniPoly& p1, const UniPoly& p2) {
  if (!p1.is_monic() || !p2.is_monic()) throw std::invalid_argument("pencil: polynomials must be monic");
  if (p1.degree() < 1 || p1.degree() != p2.degree()) throw std::invalid_argument("pencil: degrees must agree and be positive");
  if (p1 == p2) throw std::invalid_argument("pencil: p1 = p2");
  if ((p2 - p1).degree() > 1) throw std::invalid_argument("pencil: deg(p2 - p1) must be at most 1");
  return Pencil{q, p1, p2};
}

PencilNormal normalize_pencil(const Pencil& pen) {
  const UniPoly l = pen.p2 - pen.p1;
  if (l.degree() == 1) return {"t", l.coeff(1), l.coeff(0) / l.coeff(1)};
  return {"1", l.coeff(0), 0};
}

BracketTable pencil_member(const Pencil& pen, const PencilPoint& pt) {
  return combine(pt.a, make_quotient(pen.base, pen.p1), pt.b, make_quotient(pen.base, pen.p2));
}

bool is_regular_point(const Pencil& pen, const PencilPoint& pt, std::uint64_t seed, const SamplingOptions& opt) {
  if (pt.a == 0 && pt.b == 0) throw std::invalid_argument("pencil point (0,0)");
  const BracketTable t = pencil_member(pen, pt);
  const int ind_q = lie_index(pen.base, seed, opt).index;
  const int rank = t.size() - lie_index(t, seed, opt).index;
  return rank == pen.n() * (pen.base->dim() - ind_q);
}

std::vector<QVector> pol_centre(const MPoly& f, const AlgebraPtr& q, const UniPoly& p) {
  const int n = p.degree();
  const auto pol = pol_polys(f, n);
  const BracketTable t = make_quotient(q, p);
  std::map<std::pair<int, Monomial>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(pol.size());
  for (std::size_t k = 0; k < pol.size(); ++k)
    for (int u = 0; u < t.size(); ++u) {
      const MPoly b = poisson_bracket(pol[k], MPoly::var(t.var(u)), t);
      for (const auto& [m, c] : b.terms()) {
        auto it = row_of.try_emplace({u, m}, row_of.size()).first;
        cols[k].emplace_back(it->second, c);
      }
    }
  QMatrix a(row_of.size(), pol.size());
  for (std::size_t k = 0; k < pol.size(); ++k)
    for (const auto& [r, c] : cols[k]) a(r, k) = c;
  if (row_of.empty()) return nullspace(QMatrix(1, pol.size()));
  return nullspace(a);
}

ZAlgebra build_Z(const Pencil& pen, const std::vector<MPoly>& fs, int sample_count, std::uint64_t seed) {
  const int n = pen.n();
  const LieAlgebra& q = *pen.base;
  ZAlgebra z;
  z.pencil = pen;
  z.invariants = fs;
  z.ind = lie_index(pen.base, seed).index;
  z.bound = bound_b(q.dim(), z.ind, n).bn;

  int dmax = 0;
  std::vector<std::vector<MPoly>> pols;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const int d = fs[i].homogeneous_degree();
    if (d < 1) throw std::invalid_argument("build_Z: invariants must be homogeneous of positive degree");
    dmax = std::max(dmax, d);
    pols.push_back(pol_polys(fs[i], n));
    ZBlock b;
    b.source = static_cast<int>(i);
    b.degree = d;
    b.expected = d * (n - 1) + 1;
    z.blocks.push_back(b);
  }
  if (sample_count <= 0) sample_count = dmax * n + 3;

  std::vector<std::vector<QVector>> found(fs.size());
  for (const Rational& a : member_parameters(sample_count)) {
    const UniPoly pm = pen.p1 * a + pen.p2 * (1 - a);
    const auto rd = rational_roots(pm);
    if (rd) {
      for (const auto& g : crt_generators(q, fs, pm, *rd).entries) {
        auto c = coordinates(g.poly, pols[static_cast<std::size_t>(g.source)]);
        if (!c) throw std::logic_error("build_Z: CRT generator outside Pol(F)");
        found[static_cast<std::size_t>(g.source)].push_back(std::move(*c));
      }
    } else {
      for (std::size_t i = 0; i < fs.size(); ++i)
        for (auto& v : pol_centre(fs[i], pen.base, pm)) found[i].push_back(std::move(v));
    }
    z.samples.push_back({a, rd ? "crt" : "linear"});
  }

  z.complete = true;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    auto& b = z.blocks[i];
    b.coords = echelon_rows(found[i], pols[i].size());
    if (static_cast<int>(b.coords.size()) != b.expected) z.complete = false;
    for (const auto& c : b.coords) {
      Generator g;
      g.poly = combination(pols[i], c);
      g.source = b.source;
      g.recipe.kind = Recipe::Kind::Polar;
      g.recipe.coeffs = c;
      z.gens.entries.push_back(std::move(g));
    }
  }
  return z;
}

MPoly regenerate(const Generator& g, const std::vector<MPoly>& fs, int n) {
  const MPoly& f = fs.at(static_cast<std::size_t>(g.source));
  switch (g.recipe.kind) {
    case Recipe::Kind::Polar:
      if (!g.recipe.k.empty()) return polarize(f, g.recipe.k, n);
      return combination(pol_polys(f, n), g.recipe.coeffs);
    case Recipe::Kind::Takiff:
      if (g.recipe.root == 0) return f_bracket_j(f, g.recipe.j, n);
      break;
    default:
      break;
  }
  throw std::invalid_argument("regenerate: recipe needs more context");
}

CommuteReport verify_commutes(const std::vector<MPoly>& gens, const Pencil& pen) {
  CommuteReport rep;
  const BracketTable t1 = make_quotient(pen.base, pen.p1), t2 = make_quotient(pen.base, pen.p2);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (int u = 0; u < pen.base->dim(); ++u)
      if (!poisson_bracket(gens[i], MPoly::var(make_var(u, 0)), t1).is_zero()) {
        rep.ok = false;
        rep.failures.push_back("{G" + std::to_string(i) + ", " + t1.label(u) + "}_p1 != 0");
      }
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      ++rep.pairs;
      for (const auto* t : {&t1, &t2})
        if (!poisson_bracket(gens[i], gens[j], *t).is_zero()) {
          rep.ok = false;
          rep.failures.push_back("{G" + std::to_string(i) + ", G" + std::to_string(j) + "}_" + (t == &t1 ? "p1" : "p2") +
                                 " != 0");
        }
    }
  }
  return rep;
}

CommuteReport verify_Z_commutes(const ZAlgebra& z) { return verify_commutes(z.gens.polys(), z.pencil); }

MPoly f_at_t(const MPoly& f) { return raise_t(f, 1); }

std::vector<MPoly> tilde_V_span(const MPoly& f, const UniPoly& p, int kmax) {
  std::vector<MPoly> images;
  MPoly g = f_at_t(f);
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) g = tau_apply(g, 1);
    images.push_back(psi_p(g, p));
  }
  std::vector<MPoly> out;
  for (std::size_t i : independent_subset(images)) out.push_back(images[i]);
  return out;
}

SovpReport check_sovp(const AlgebraPtr& q, const std::vector<MPoly>& fs, const UniPoly& p) {
  if (p.coeff(0) == 0) throw std::invalid_argument("check_sovp: requires p(0) != 0");
  const int n = p.degree();
  const ZAlgebra z = build_Z(make_pencil(q, p, p + UniPoly::t()), fs);
  std::vector<std::vector<MPoly>> tilde;
  for (const auto& f : fs) tilde.push_back(tilde_V_span(f, p, f.homogeneous_degree() * (n - 1) + n));
  SovpReport rep = compare_blocks(z, tilde);
  if (!z.complete) rep.ok = false;
  return rep;
}

std::vector<GzuElement> gzu_lowest(const MPoly& f, int kmax) {
  const int d = f.homogeneous_degree();
  if (d < 1) throw std::invalid_argument("gzu_lowest: F must be homogeneous of positive degree");
  const int cutoff = d + kmax;
  const UniPoly shift = UniPoly::t() + UniPoly(1);
  std::vector<MPoly> psi;
  MPoly g = f_at_t(f);
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) g = tau_apply(g, 1);
    psi.push_back(substitute_t(g, shift, cutoff));
  }
  auto below = [](const MPoly& h, int k) {
    MPoly out;
    for (const auto& [m, c] : h.terms())
      if (mono_tdeg(m) < k) out.add_term(m, c);
    return out;
  };
  std::vector<GzuElement> out;
  for (int k = 0; k <= kmax; ++k) {
    std::vector<MPoly> basis;
    for (int u = 0; u < k; ++u) basis.push_back(below(psi[static_cast<std::size_t>(u)], k));
    auto c = coordinates(below(psi[static_cast<std::size_t>(k)], k), basis);
    if (!c) throw std::runtime_error("gzu_lowest: singular system at k = " + std::to_string(k));
    MPoly r = psi[static_cast<std::size_t>(k)];
    for (int u = 0; u < k; ++u) r -= psi[static_cast<std::size_t>(u)] * (*c)[static_cast<std::size_t>(u)];
    out.push_back({k, *c, t_component(r, k)});
  }
  return out;
}

std::vector<MPoly> gzu_lowest_span(const MPoly& f, const UniPoly& p, int kmax) {
  std::vector<MPoly> images;
  for (const auto& e : gzu_lowest(f, kmax)) images.push_back(psi_p(e.lowest, p));
  std::vector<MPoly> out;
  for (std::size_t i : independent_subset(images)) out.push_back(images[i]);
  return out;
}

SovpReport check_gzu(const AlgebraPtr& q, const std::vector<MPoly>& fs, const UniPoly& p) {
  const int n = p.degree();
  const ZAlgebra z = build_Z(make_pencil(q, p, p + UniPoly(1)), fs);
  std::vector<std::vector<MPoly>> spans;
  for (const auto& f : fs) spans.push_back(gzu_lowest_span(f, p, f.homogeneous_degree() * (n - 1) + n));
  SovpReport rep = compare_blocks(z, spans);
  if (!z.complete) rep.ok = false;
  return rep;
}

MFReport mf_image(const ZAlgebra& z, const QVector& gamma) {
  if (z.pencil.n() != 2) throw std::invalid_argument("mf_image: requires n = 2");
  const AlgebraPtr& q = z.pencil.base;
  if (static_cast<int>(gamma.size()) != q->dim()) throw std::invalid_argument("mf_image: gamma has wrong length");
  std::vector<MPoly> images;
  for (const auto& g : z.gens.entries)
    images.push_back(substitute(g.poly, [&](Var v) {
      if (var_tdeg(v) == 0) return MPoly::var(v);
      return MPoly::constant(gamma[static_cast<std::size_t>(var_base(v))]);
    }));
  MFReport rep;
  rep.image_rank = span_rank(images);
  std::vector<MPoly> chain;
  for (const auto& f : z.invariants) {
    MPoly g = f;
    while (!g.is_zero()) {
      chain.push_back(g);
      g = directional_derivative(g, gamma);
    }
  }
  rep.contains_mf = std::all_of(chain.begin(), chain.end(), [&](const MPoly& c) { return in_span(c, images); });
  const BracketTable t = table_of(q);
  rep.mf_commutes = true;
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j)
      if (!poisson_bracket(chain[i], chain[j], t).is_zero()) rep.mf_commutes = false;
  return rep;
}

}  // namespace glab
