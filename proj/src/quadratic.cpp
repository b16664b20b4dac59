#include "glab/quadratic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "glab/poisson.hpp"
#include "glab/polyspan.hpp"

namespace glab {

namespace {

MPoly quadratic_form(const LieAlgebra& q, const std::function<MPoly(int)>& left, const std::function<MPoly(int)>& right) {
  const QMatrix& g = q.form_inverse();
  MPoly out;
  for (int i = 0; i < q.dim(); ++i) {
    MPoly li;
    for (int j = 0; j < q.dim(); ++j)
      if (g(i, j) != 0) li += right(j) * g(i, j);
    if (!li.is_zero()) out += left(i) * li;
  }
  return out;
}

MPoly residue_var(int base, const UniPoly& r) {
  MPoly img;
  for (int c = 0; c <= r.degree(); ++c)
    if (r.coeff(c) != 0) img += MPoly::var(make_var(base, c), r.coeff(c));
  return img;
}

// T[i][j] = structure constants with two indices raised: ([x^i, x^j], x_k) summed into coefficient of x^k
std::vector<SparseVec> raised_brackets(const LieAlgebra& q) {
  const QMatrix& g = q.form_inverse();
  const int n = q.dim();
  std::vector<SparseVec> out(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SparseVec acc;
      for (int l = 0; l < n; ++l) {
        if (g(i, l) == 0) continue;
        for (int m = 0; m < n; ++m)
          if (g(j, m) != 0) sparse_add(acc, q.bracket(l, m), g(i, l) * g(j, m));
      }
      out[static_cast<std::size_t>(i * n + j)] = std::move(acc);
    }
  return out;
}

}  // namespace

MPoly casimir(const LieAlgebra& q) { return quad_H(q, 0, 0); }

MPoly quad_H(const LieAlgebra& q, int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("quad_H: negative t-degree");
  return quadratic_form(
      q, [&](int i) { return MPoly::var(make_var(i, a)); }, [&](int j) { return MPoly::var(make_var(j, b)); });
}

MPoly quad_h(const LieAlgebra& q, int a, int b, const UniPoly& p) { return psi_p(quad_H(q, a, b), p); }

MPoly quad_h_res(const LieAlgebra& q, const UniPoly& r, const UniPoly& s, const UniPoly& p) {
  const UniPoly rr = poly_rem(r, p), ss = poly_rem(s, p);
  return quadratic_form(
      q, [&](int i) { return residue_var(i, rr); }, [&](int j) { return residue_var(j, ss); });
}

MPoly quad_X(const LieAlgebra& q, int a, int b, int c) {
  const auto t = raised_brackets(q);
  const int n = q.dim();
  MPoly out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, coef] : t[static_cast<std::size_t>(i * n + j)]) {
        Monomial m{make_var(i, a), make_var(j, b), make_var(k, c)};
        std::sort(m.begin(), m.end());
        out.add_term(m, coef);
      }
  return out;
}

MPoly y_xi(const LieAlgebra& q, const SparseVec& xi, int a, int b) {
  const auto t = raised_brackets(q);
  const int n = q.dim();
  MPoly out;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const Rational c = q.pair(xi, t[static_cast<std::size_t>(j * n + i)]);
      if (c == 0) continue;
      Monomial m{make_var(j, a), make_var(i, b)};
      std::sort(m.begin(), m.end());
      out.add_term(m, c);
    }
  return out;
}

MPoly quad_H_tilde(const LieAlgebra& q, int j) {
  MPoly out;
  for (int a = 0; a <= j; ++a) out += quad_H(q, a, j - a);
  return out;
}

MPoly quad_H_upper(const LieAlgebra& q, int j) {
  MPoly out;
  for (int a = 1; a < j; ++a) out += quad_H(q, a, j - a);
  return out;
}

std::vector<QVector> centralizer(const MPoly& target, const std::vector<MPoly>& family, const LinearBracket& br) {
  std::vector<MPoly> images;
  for (const auto& g : family) images.push_back(poisson_bracket(g, target, br));
  return linear_relations(images);
}

std::vector<MPoly> quad_h_family(const LieAlgebra& q, const UniPoly& p) {
  std::vector<MPoly> out;
  const int n = p.degree();
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) out.push_back(quad_h(q, a, b, p));
  return out;
}

int centralizer_dim_h(const AlgebraPtr& q, const UniPoly& p) {
  const BracketTable t = make_quotient(q, p);
  return static_cast<int>(centralizer(quad_h(*q, 1, 1, p), quad_h_family(*q, p), t).size());
}

int centralizer_dim_h01(const AlgebraPtr& q, const UniPoly& p) {
  const BracketTable t = make_quotient(q, p);
  return static_cast<int>(centralizer(quad_h(*q, 0, 1, p), quad_h_family(*q, p), t).size());
}

std::vector<MPoly> gaudin_hamiltonians(const LieAlgebra& q, const QVector& z) {
  const int n = static_cast<int>(z.size());
  for (int k = 0; k < n; ++k)
    for (int j = k + 1; j < n; ++j)
      if (z[static_cast<std::size_t>(k)] == z[static_cast<std::size_t>(j)])
        throw std::invalid_argument("gaudin_hamiltonians: repeated spectral parameter");
  const int dim = q.dim();
  std::vector<MPoly> out;
  for (int k = 0; k < n; ++k) {
    MPoly hk;
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      MPoly cross = quadratic_form(
          q, [&](int i) { return MPoly::var(make_var(k * dim + i, 0)); },
          [&](int l) { return MPoly::var(make_var(j * dim + l, 0)); });
      hk += cross * (1 / Rational(z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]));
    }
    out.push_back(std::move(hk));
  }
  return out;
}

MPoly transport_to_quotient(const MPoly& f, int dim, const std::vector<UniPoly>& r, const UniPoly& p) {
  std::vector<UniPoly> red;
  for (const auto& x : r) red.push_back(poly_rem(x, p));
  return substitute(f, [&](Var v) {
    const int b = var_base(v);
    return residue_var(b % dim, red.at(static_cast<std::size_t>(b / dim)));
  });
}

MPoly lemma_x_k(const LieAlgebra& q, int k, const UniPoly& p) {
  MPoly out;
  for (int u = 2; u <= k - 1; ++u) out += quad_h(q, u, k + 1 - u, p);
  return out * Rational(1, 2);
}

MPoly lemma_x_element(const LieAlgebra& q, const UniPoly& p) {
  const int n = p.degree();
  if (n < 3) throw std::invalid_argument("lemma_x_element: requires deg p >= 3");
  if (!p.is_monic()) throw std::invalid_argument("lemma_x_element: p must be monic");
  auto c = [&](int k) -> Rational { return -p.coeff(k); };
  MPoly x = quad_h(q, 1, 0, p) * c(0) + quad_h(q, 1, 1, p) * (c(1) / 2);
  for (int k = 3; k <= n - 1; ++k) x -= lemma_x_k(q, k, p) * c(k);
  x += lemma_x_k(q, n, p);
  return x;
}

PHCheck lemma_ph_check(const AlgebraPtr& q, int jmax) {
  std::vector<MPoly> family;
  for (int a = 0; 2 * a <= jmax; ++a)
    for (int b = a; a + b <= jmax; ++b) family.push_back(quad_H(*q, a, b));
  const CurrentBracket br(q);
  const auto ker = centralizer(quad_H(*q, 0, 1), family, br);
  PHCheck res;
  res.kernel_dim = static_cast<int>(ker.size());
  std::vector<MPoly> kernel_polys, tilde;
  for (const auto& v : ker) kernel_polys.push_back(combination(family, v));
  for (int j = 0; j <= jmax; ++j) tilde.push_back(quad_H_tilde(*q, j));
  res.matches_tilde = same_span(kernel_polys, tilde);
  return res;
}

}  // namespace glab
