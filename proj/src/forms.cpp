#include "glab/forms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "glab/poisson.hpp"
#include "glab/quadratic.hpp"

namespace glab {

namespace {

void alpha_rec(int remaining, std::size_t pos, AlphaTuple& cur, std::vector<AlphaTuple>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    cur[pos] = a;
    alpha_rec(remaining - a, pos + 1, cur, out);
  }
}

// linear change of variables x_j t^a -> sum_i m(j,i) x_i t^a
MPoly change_vars(const MPoly& f, const QMatrix& m) {
  return substitute(f, [&](Var v) {
    MPoly img;
    const auto j = static_cast<std::size_t>(var_base(v));
    for (std::size_t i = 0; i < m.cols(); ++i)
      if (m(j, i) != 0) img += MPoly::var(make_var(static_cast<int>(i), var_tdeg(v)), m(j, i));
    return img;
  });
}

// (M, M) for a monomial in an orthogonal basis with norms
Rational self_pairing(const Monomial& m, const QVector& norms) {
  Rational out = 1;
  std::size_t i = 0;
  while (i < m.size()) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    const auto gamma = j - i;
    out *= Rational(factorial(gamma));
    for (std::size_t r = 0; r < gamma; ++r) out *= norms[static_cast<std::size_t>(var_base(m[i]))];
    i = j;
  }
  return out;
}

}  // namespace

std::vector<AlphaTuple> alpha_tuples(int sum, int m) {
  std::vector<AlphaTuple> out;
  AlphaTuple cur(static_cast<std::size_t>(m + 1), 0);
  alpha_rec(sum, 0, cur, out);
  return out;
}

int m_tilde(const AlphaTuple& alpha) {
  return static_cast<int>(std::count_if(alpha.begin(), alpha.end(), [](int a) { return a != 0; })) - 1;
}

MPoly script_f(const LieAlgebra& q, const MPoly& f, const AlphaTuple& alpha, int i, int j) {
  const int d = f.homogeneous_degree();
  if (f.is_zero()) return {};
  if (d < 0) throw std::invalid_argument("script_f: F is not homogeneous");
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("script_f: negative alpha entry");
  int total = 0;
  for (int a : alpha) total += a;
  if (total != d + 1) throw std::invalid_argument("script_f: alpha must sum to deg F + 1");
  const int m = static_cast<int>(alpha.size()) - 1;
  if (i < 0 || j < 0 || i > m || j > m) throw std::invalid_argument("script_f: level out of range");
  const auto ai = static_cast<std::size_t>(i), aj = static_cast<std::size_t>(j);
  if (i == j || alpha[ai] == 0 || alpha[aj] == 0) return {};

  const QMatrix p = orthogonal_basis(*q.form());
  std::vector<std::string> labels;
  for (int r = 0; r < q.dim(); ++r) labels.push_back("y" + std::to_string(r));
  const LieAlgebra qo = change_basis(q, p, labels);
  QVector norms;
  for (int r = 0; r < q.dim(); ++r) norms.push_back((*qo.form())(static_cast<std::size_t>(r), static_cast<std::size_t>(r)));
  const MPoly fo = change_vars(f, inverse(p));

  // blocks of B(alpha): one list of monomials per level
  std::vector<std::vector<Monomial>> blocks;
  for (int l = 0; l <= m; ++l) {
    auto ms = monomials_of_degree(q.dim(), alpha[static_cast<std::size_t>(l)]);
    for (auto& mono : ms)
      for (auto& v : mono) v = make_var(var_base(v), l);
    blocks.push_back(std::move(ms));
  }

  MPoly out;
  std::vector<std::size_t> idx(blocks.size(), 0);
  for (;;) {
    Monomial vi = blocks[ai][idx[ai]], vj = blocks[aj][idx[aj]];
    Monomial rest;
    Monomial full;
    for (std::size_t l = 0; l < blocks.size(); ++l) {
      const auto& mono = blocks[l][idx[l]];
      full.insert(full.end(), mono.begin(), mono.end());
      if (l != ai && l != aj) rest.insert(rest.end(), mono.begin(), mono.end());
    }
    std::sort(full.begin(), full.end());
    Rational phi = 0;
    for (std::size_t k = 0; k < vi.size(); ++k)
      for (std::size_t s = 0; s < vj.size(); ++s) {
        Monomial base;
        for (std::size_t u = 0; u < vi.size(); ++u)
          if (u != k) base.push_back(make_var(var_base(vi[u]), 0));
        for (std::size_t u = 0; u < vj.size(); ++u)
          if (u != s) base.push_back(make_var(var_base(vj[u]), 0));
        for (Var v : rest) base.push_back(make_var(var_base(v), 0));
        for (const auto& [r, c] : qo.bracket(var_base(vi[k]), var_base(vj[s]))) {
          Monomial w = base;
          w.push_back(make_var(r, 0));
          std::sort(w.begin(), w.end());
          const Rational fc = fo.coeff(w);
          if (fc != 0) phi += c * fc * self_pairing(w, norms);
        }
      }
    if (phi != 0) out.add_term(full, phi / self_pairing(full, norms));

    std::size_t l = 0;
    while (l < blocks.size() && ++idx[l] == blocks[l].size()) idx[l++] = 0;
    if (l == blocks.size()) break;
  }
  return change_vars(out, p);
}

MPoly polarize_t(const MPoly& f, const KVec& k) {
  int top = 0;
  for (int x : k) top = std::max(top, x);
  return polarize(f, k, top + 1);
}

std::vector<FFTerm> ff_bracket_terms(const KVec& k) {
  int top = 1;
  for (int x : k) top = std::max(top, x);
  std::vector<int> kappa(static_cast<std::size_t>(top + 2), 0);
  ++kappa[1];
  for (int x : k) ++kappa[static_cast<std::size_t>(x)];
  std::vector<FFTerm> out;
  for (int j = 2; j <= top + 1; ++j) {
    if (kappa[static_cast<std::size_t>(j - 1)] == 0) continue;
    AlphaTuple a = kappa;
    --a[static_cast<std::size_t>(j - 1)];
    ++a[static_cast<std::size_t>(j)];
    while (static_cast<int>(a.size()) > j + 1 && a.back() == 0) a.pop_back();
    out.push_back({a, j});
  }
  return out;
}

FFCheck ff_bracket_decomposition(const AlgebraPtr& q, const MPoly& y, const KVec& k) {
  FFCheck res;
  res.terms = ff_bracket_terms(k);
  const CurrentBracket br(q);
  res.lhs = poisson_bracket(polarize_t(y, k), quad_H(*q, 1, 1), br) * Rational(1, 2);
  for (const auto& t : res.terms) res.rhs += script_f(*q, y, t.alpha, 1, t.j);
  res.holds = res.lhs == res.rhs;
  return res;
}

QMatrix matrix_A(int j) {
  if (j < 4) throw std::invalid_argument("matrix_A: requires j >= 4");
  const auto n = static_cast<std::size_t>(j - 1);
  QMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const long top = j - static_cast<long>(r);
    for (std::size_t c = 0; c + 1 < n; ++c) a(r, c) = binomial(top, j - 1 - static_cast<long>(c));
    a(r, n - 1) = top - 1;
  }
  return a;
}

QMatrix matrix_A_kd(int k, int d) {
  if (k < 1 || d < 1) throw std::invalid_argument("matrix_A_kd: requires k, d >= 1");
  const auto n = static_cast<std::size_t>(k + 1);
  QMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const long row = static_cast<long>(r);
    for (std::size_t c = 0; c + 1 < n; ++c) {
      const long low = static_cast<long>(c) - row + 1;
      a(r, c) = low < 0 ? Rational(0) : binomial(k + d - row, low);
    }
    a(r, n - 1) = binomial(k + d - row - 1, k - row);
  }
  return a;
}

bool binom_identity_check(int u, int b) {
  if (!(u > b && b > 0)) throw std::invalid_argument("binom_identity_check: requires u > b > 0");
  Rational lhs = 0;
  for (int i = 1; i <= u - b; ++i) lhs += binomial(u - i, b);
  return 2 * lhs == 2 * binomial(u, b + 1);
}

MinusTCheck example_minus_t(const MPoly& f, const Rational& alpha) {
  const int d = f.homogeneous_degree();
  if (d < 1) throw std::invalid_argument("example_minus_t: F must be homogeneous of positive degree");
  if (alpha == 0) throw std::invalid_argument("example_minus_t: alpha must be nonzero");
  const int n = 3;
  const Rational c = alpha * alpha;
  const UniPoly t = UniPoly::t();
  const UniPoly p = t.pow(3) - t * c;
  MinusTCheck res;

  auto cpow = [](const Rational& x, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
  };

  const UniPoly r1 = (t.pow(2) - UniPoly(c)) * (-1 / c);
  MPoly lhs0 = substitute_residue(f, r1, p) * cpow(-c, d);
  MPoly rhs0 = polarize(f, KVec(static_cast<std::size_t>(d), n - 1), n);
  for (int k = 1; k <= d; ++k) {
    KVec kv(static_cast<std::size_t>(k), 0);
    kv.resize(static_cast<std::size_t>(d), n - 1);
    rhs0 += polarize(f, kv, n) * cpow(-c, k);
  }
  res.root_zero = lhs0 == rhs0;

  res.other_roots = true;
  for (int i = 2; i <= 3; ++i) {
    const Rational az = i % 2 == 0 ? alpha : Rational(-alpha);
    const UniPoly ri = t * (t + UniPoly(az)) * (1 / (c * (n - 1)));
    MPoly lhs = substitute_residue(f, ri, p) * (cpow(c, d) * cpow(Rational(n - 1), d));
    MPoly rhs;
    for (const auto& kv : polarization_indices(d, n)) {
      if (kv.front() < 1) continue;
      int s = 0;
      for (int x : kv) s += x;
      rhs += polarize(f, kv, n) * cpow(az, d * (n - 1) - s);
    }
    if (!(lhs == rhs)) res.other_roots = false;
  }
  return res;
}

}  // namespace glab
