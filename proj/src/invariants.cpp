#include "glab/invariants.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

#include "glab/lie_index.hpp"
#include "glab/poisson.hpp"
#include "glab/polyspan.hpp"

namespace glab {

namespace {

void monomials_rec(int dim, int d, int start, Monomial& cur, std::vector<Monomial>& out) {
  if (static_cast<int>(cur.size()) == d) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < dim; ++i) {
    cur.push_back(make_var(i, 0));
    monomials_rec(dim, d, i, cur, out);
    cur.pop_back();
  }
}

AlgebraPtr share(const LieAlgebra& q) { return std::make_shared<LieAlgebra>(q); }

using PolyMatrix = std::vector<std::vector<MPoly>>;

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size();
  PolyMatrix c(n, std::vector<MPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

void products_rec(const std::vector<MPoly>& gens, const std::vector<int>& degs, std::size_t start, int remaining,
                  const MPoly& acc, std::vector<MPoly>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i < gens.size(); ++i)
    if (degs[i] <= remaining) products_rec(gens, degs, i, remaining - degs[i], acc * gens[i], out);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int dim, int d) {
  std::vector<Monomial> out;
  Monomial cur;
  monomials_rec(dim, d, 0, cur, out);
  return out;
}

InvariantBasis invariants_degree(const LieAlgebra& q, int d) {
  if (d < 0) throw std::invalid_argument("invariants_degree: negative degree");
  InvariantBasis res;
  res.degree = d;
  const auto monos = monomials_of_degree(q.dim(), d);
  if (d == 0) {
    res.elements.push_back(MPoly::constant(1));
    return res;
  }
  const BracketTable t = table_of(share(q));
  std::map<std::pair<int, Monomial>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(monos.size());
  for (std::size_t c = 0; c < monos.size(); ++c) {
    MPoly m;
    m.add_term(monos[c], 1);
    for (int i = 0; i < q.dim(); ++i) {
      MPoly b = poisson_bracket(m, MPoly::var(make_var(i, 0)), t);
      for (const auto& [mono, coef] : b.terms()) {
        auto [it, fresh] = row_of.try_emplace({i, mono}, row_of.size());
        cols[c].emplace_back(it->second, coef);
      }
    }
  }
  QMatrix a(row_of.size(), monos.size());
  for (std::size_t c = 0; c < monos.size(); ++c)
    for (const auto& [r, v] : cols[c]) a(r, c) = v;
  for (const auto& v : nullspace(a)) {
    MPoly f;
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (v[c] != 0) f.add_term(monos[c], v[c]);
    res.elements.push_back(std::move(f));
  }
  return res;
}

bool is_invariant(const MPoly& f, const LieAlgebra& q) {
  const BracketTable t = table_of(share(q));
  for (int i = 0; i < q.dim(); ++i)
    if (!poisson_bracket(f, MPoly::var(make_var(i, 0)), t).is_zero()) return false;
  return true;
}

std::vector<MPoly> charpoly_invariants(const LieAlgebra& q) {
  const int n = q.sl_rank();
  if (n < 2) throw std::invalid_argument("charpoly_invariants: not a builtin sl_n");
  const auto basis = sl_basis_matrices(n);
  const QMatrix& ginv = q.form_inverse();
  const std::size_t nn = static_cast<std::size_t>(n);
  PolyMatrix x(nn, std::vector<MPoly>(nn));
  for (int i = 0; i < q.dim(); ++i)
    for (int j = 0; j < q.dim(); ++j) {
      const Rational& g = ginv(i, j);
      if (g == 0) continue;
      for (std::size_t r = 0; r < nn; ++r)
        for (std::size_t c = 0; c < nn; ++c)
          if (basis[j](r, c) != 0) x[r][c] += MPoly::var(make_var(i, 0), g * basis[j](r, c));
    }
  std::vector<MPoly> power_sums(nn + 1);
  PolyMatrix pw = x;
  for (std::size_t k = 1; k <= nn; ++k) {
    if (k > 1) pw = matmul(pw, x);
    for (std::size_t r = 0; r < nn; ++r) power_sums[k] += pw[r][r];
  }
  std::vector<MPoly> e(nn + 1);
  e[0] = MPoly::constant(1);
  for (std::size_t k = 1; k <= nn; ++k) {
    MPoly acc;
    for (std::size_t i = 1; i <= k; ++i) {
      MPoly term = e[k - i] * power_sums[i];
      if (i % 2 == 0) term *= Rational(-1);
      acc += term;
    }
    e[k] = acc * Rational(1, static_cast<long>(k));
  }
  std::vector<MPoly> out;
  for (std::size_t k = 2; k <= nn; ++k) out.push_back(k % 2 ? -e[k] : e[k]);
  return out;
}

std::vector<MPoly> basic_invariants(const LieAlgebra& q, int max_degree) {
  if (q.sl_rank() >= 2) {
    auto fs = charpoly_invariants(q);
    for (const auto& f : fs)
      if (!is_invariant(f, q)) throw std::logic_error("basic_invariants: charpoly coefficient not invariant");
    return fs;
  }
  const int ind = lie_index(share(q), 0).index;
  if (max_degree <= 0) max_degree = q.dim();
  std::vector<MPoly> found;
  std::vector<int> degs;
  for (int d = 1; d <= max_degree && static_cast<int>(found.size()) < ind; ++d) {
    std::vector<MPoly> span;
    products_rec(found, degs, 0, d, MPoly::constant(1), span);
    for (const auto& f : invariants_degree(q, d).elements) {
      if (in_span(f, span)) continue;
      span.push_back(f);
      found.push_back(f);
      degs.push_back(d);
    }
  }
  return found;
}

std::vector<KVec> polarization_indices(int d, int n) {
  std::vector<KVec> out;
  KVec cur(static_cast<std::size_t>(d), 0);
  if (d == 0) return {cur};
  for (;;) {
    out.push_back(cur);
    int i = d - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - 1) --i;
    if (i < 0) break;
    const int v = cur[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < d; ++j) cur[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

MPoly polarize(const MPoly& f, const KVec& k, int n) {
  const int d = f.homogeneous_degree();
  if (f.is_zero()) return {};
  if (d < 0) throw std::invalid_argument("polarize: polynomial is not homogeneous");
  if (static_cast<int>(k.size()) != d) throw std::invalid_argument("polarize: index length differs from degree");
  if (!std::is_sorted(k.begin(), k.end()) || (d > 0 && (k.front() < 0 || k.back() > n - 1)))
    throw std::invalid_argument("polarize: index must be weakly increasing in [0, n-1]");
  MPoly out;
  for (const auto& [mono, c] : f.terms()) {
    for (Var v : mono)
      if (var_tdeg(v) != 0) throw std::invalid_argument("polarize: variables must lie in q");
    KVec perm = k;
    do {
      Monomial m(mono.size());
      for (std::size_t i = 0; i < mono.size(); ++i) m[i] = make_var(var_base(mono[i]), perm[i]);
      std::sort(m.begin(), m.end());
      out.add_term(m, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::vector<PolEntry> pol_space(const MPoly& f, int n) {
  const int d = f.homogeneous_degree();
  if (d < 0) throw std::invalid_argument("pol_space: polynomial is not homogeneous");
  std::vector<PolEntry> out;
  for (auto& k : polarization_indices(d, n)) out.push_back({k, polarize(f, k, n)});
  return out;
}

MPoly f_bracket_j(const MPoly& f, int j, int n) {
  const int d = f.homogeneous_degree();
  if (d < 0) throw std::invalid_argument("f_bracket_j: polynomial is not homogeneous");
  if (j < 0 || j > d * (n - 1)) throw std::invalid_argument("f_bracket_j: j out of range");
  MPoly out;
  for (const auto& k : polarization_indices(d, n)) {
    int s = 0;
    for (int x : k) s += x;
    if (s == j) out += polarize(f, k, n);
  }
  return out;
}

std::string Recipe::str() const {
  switch (kind) {
    case Kind::Crt:
      return "CRT(" + to_string(root) + ")";
    case Kind::Takiff:
      return "TAKIFF(" + to_string(root) + "," + std::to_string(j) + ")";
    case Kind::Polar: {
      std::string s = "POLAR(";
      if (!k.empty()) {
        for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
        return s + ")";
      }
      s = "POLAR[";
      for (std::size_t i = 0; i < coeffs.size(); ++i) s += (i ? "," : "") + to_string(coeffs[i]);
      return s + "]";
    }
    case Kind::Tau:
      return "TAU(" + std::to_string(j) + ")";
    case Kind::LemmaX:
      return "LEMMA-X";
  }
  return "";
}

std::vector<MPoly> GeneratorSet::polys() const {
  std::vector<MPoly> out;
  for (const auto& g : entries) out.push_back(g.poly);
  return out;
}

std::vector<MPoly> GeneratorSet::polys_of(int source) const {
  std::vector<MPoly> out;
  for (const auto& g : entries)
    if (g.source == source) out.push_back(g.poly);
  return out;
}

GeneratorSet takiff_generators(const LieAlgebra&, const std::vector<MPoly>& fs, int n) {
  GeneratorSet out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const int d = fs[i].homogeneous_degree();
    if (d < 0) throw std::invalid_argument("takiff_generators: invariant is not homogeneous");
    const int top = (n - 1) * d;
    for (int j = std::max(0, top - n + 1); j <= top; ++j) {
      Generator g;
      g.poly = f_bracket_j(fs[i], j, n);
      g.source = static_cast<int>(i);
      g.recipe.kind = Recipe::Kind::Takiff;
      g.recipe.j = j;
      out.entries.push_back(std::move(g));
    }
  }
  return out;
}

MPoly substitute_residue(const MPoly& f, const UniPoly& r, const UniPoly& p) {
  const UniPoly red = poly_rem(r, p);
  return substitute(f, [&](Var v) {
    MPoly img;
    for (int c = 0; c <= red.degree(); ++c)
      if (red.coeff(c) != 0) img += MPoly::var(make_var(var_base(v), c), red.coeff(c));
    return img;
  });
}

MPoly phi_map(const MPoly& f, const UniPoly& r0, const UniPoly& r1, const UniPoly& p) {
  std::map<int, UniPoly> powers;
  auto image_poly = [&](int a) -> const UniPoly& {
    auto it = powers.find(a);
    if (it != powers.end()) return it->second;
    UniPoly v = a == 0 ? poly_rem(r0, p) : poly_rem(r1.pow(a), p);
    return powers.emplace(a, std::move(v)).first->second;
  };
  return substitute(f, [&](Var v) {
    const UniPoly& r = image_poly(var_tdeg(v));
    MPoly img;
    for (int c = 0; c <= r.degree(); ++c)
      if (r.coeff(c) != 0) img += MPoly::var(make_var(var_base(v), c), r.coeff(c));
    return img;
  });
}

GeneratorSet crt_generators(const LieAlgebra& q, const std::vector<MPoly>& fs, const UniPoly& p, const RootData& rd) {
  validate_roots(p, rd);
  GeneratorSet out;
  for (const auto& pp : crt_primary(p, rd)) {
    const GeneratorSet local = takiff_generators(q, fs, pp.multiplicity);
    for (const auto& g : local.entries) {
      Generator h;
      h.poly = phi_map(g.poly, pp.r0, pp.r1, p);
      h.source = g.source;
      h.recipe.root = pp.root;
      if (pp.multiplicity == 1) {
        h.recipe.kind = Recipe::Kind::Crt;
      } else {
        h.recipe.kind = Recipe::Kind::Takiff;
        h.recipe.j = g.recipe.j;
      }
      out.entries.push_back(std::move(h));
    }
  }
  return out;
}

bool is_central(const MPoly& g, const BracketTable& t, std::string* witness) {
  for (int u = 0; u < t.size(); ++u)
    if (!poisson_bracket(g, MPoly::var(t.var(u)), t).is_zero()) {
      if (witness) *witness = "{G, " + t.label(u) + "} != 0";
      return false;
    }
  return true;
}

}  // namespace glab
