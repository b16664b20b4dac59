#include "glab/bracket_table.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace glab {

void lin_add(LinComb& acc, const LinComb& v, const Rational& scale) {
  if (scale == 0 || v.empty()) return;
  LinComb out;
  out.reserve(acc.size() + v.size());
  std::size_t i = 0, j = 0;
  while (i < acc.size() || j < v.size()) {
    if (j == v.size() || (i < acc.size() && acc[i].first < v[j].first)) {
      out.push_back(std::move(acc[i++]));
    } else if (i == acc.size() || v[j].first < acc[i].first) {
      out.emplace_back(v[j].first, v[j].second * scale);
      ++j;
    } else {
      Rational c = acc[i].second + v[j].second * scale;
      if (c != 0) out.emplace_back(acc[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  acc = std::move(out);
}

namespace {

// sum over k of c_k x t^k for the base bracket vector br, multiplied by the polynomial r
LinComb spread(const SparseVec& br, const UniPoly& r) {
  LinComb out;
  for (const auto& [k, c] : br)
    for (int e = 0; e <= r.degree(); ++e) {
      const Rational& rc = r.coeffs()[static_cast<std::size_t>(e)];
      if (rc != 0) out.emplace_back(make_var(k, e), c * rc);
    }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace

BracketTable::BracketTable(AlgebraPtr base, int n, std::optional<UniPoly> p, std::vector<LinComb> table)
    : base_(std::move(base)), n_(n), p_(std::move(p)), table_(std::move(table)) {
  if (n_ < 1) throw std::invalid_argument("BracketTable: n >= 1 required");
  if (table_.size() != static_cast<std::size_t>(size() * size()))
    throw std::invalid_argument("BracketTable: table has wrong size");
}

LinComb BracketTable::bracket(Var u, Var v) const {
  if (!in_range(u) || !in_range(v)) throw std::out_of_range("variable out of range for bracket table");
  return entry(flat(u), flat(v));
}

bool BracketTable::in_range(Var u) const { return var_base(u) < base_->dim() && var_tdeg(u) < n_; }

std::string BracketTable::label(int u) const {
  Var v = var(u);
  std::string s = base_->label(var_base(v));
  int a = var_tdeg(v);
  if (a == 1) s += " t";
  if (a >= 2) s += " t^" + std::to_string(a);
  return s;
}

LieAlgebra BracketTable::to_algebra(const std::string& name) const {
  std::vector<std::string> labels;
  for (int u = 0; u < size(); ++u) labels.push_back(label(u));
  LieAlgebra q(name, std::move(labels));
  for (int u = 0; u < size(); ++u)
    for (int v = u + 1; v < size(); ++v) {
      SparseVec s;
      for (const auto& [w, c] : entry(u, v)) s.emplace_back(flat(w), c);
      std::sort(s.begin(), s.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
      q.set_bracket(u, v, std::move(s));
    }
  return q;
}

LinComb CurrentBracket::bracket(Var u, Var v) const {
  if (!in_range(u) || !in_range(v)) throw std::out_of_range("variable out of range for current algebra");
  const int s = var_tdeg(u) + var_tdeg(v);
  LinComb out;
  for (const auto& [k, c] : base_->bracket(var_base(u), var_base(v))) out.emplace_back(make_var(k, s), c);
  return out;
}

BracketTable make_quotient(const AlgebraPtr& q, const UniPoly& p) {
  if (!p.is_monic() || p.degree() < 1) throw std::invalid_argument("make_quotient: p must be monic of degree >= 1");
  const int n = p.degree();
  const int d = q->dim();
  std::vector<UniPoly> rem;
  for (int s = 0; s <= 2 * n - 2; ++s) rem.push_back(poly_rem(UniPoly::monomial(s), p));
  const int N = n * d;
  std::vector<LinComb> table(static_cast<std::size_t>(N * N));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          const SparseVec& br = q->bracket(i, j);
          if (br.empty()) continue;
          table[static_cast<std::size_t>((a * d + i) * N + (b * d + j))] = spread(br, rem[static_cast<std::size_t>(a + b)]);
        }
  return BracketTable(q, n, p, std::move(table));
}

BracketTable table_of(const AlgebraPtr& q) { return make_quotient(q, UniPoly::t()); }

BracketTable combine(const Rational& a, const BracketTable& t1, const Rational& b, const BracketTable& t2) {
  if (t1.base_ptr() != t2.base_ptr() && t1.base().labels() != t2.base().labels())
    throw std::invalid_argument("combine: tables over different algebras");
  if (t1.n() != t2.n()) throw std::invalid_argument("combine: tables of different n");
  const int N = t1.size();
  std::vector<LinComb> table(static_cast<std::size_t>(N * N));
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) {
      LinComb& e = table[static_cast<std::size_t>(u * N + v)];
      lin_add(e, t1.entry(u, v), a);
      lin_add(e, t2.entry(u, v), b);
    }
  std::optional<UniPoly> p;
  if (t1.p() && t2.p() && a + b == 1) p = a * *t1.p() + b * *t2.p();
  return BracketTable(t1.base_ptr(), t1.n(), std::move(p), std::move(table));
}

BracketTable make_difference_bracket(const AlgebraPtr& q, const UniPoly& p1, const UniPoly& p2) {
  if (p1.degree() != p2.degree()) throw std::invalid_argument("difference bracket: deg p1 != deg p2");
  if (p1 == p2) throw std::invalid_argument("difference bracket: p1 = p2");
  if ((p1 - p2).degree() > 1) throw std::invalid_argument("difference bracket: deg(p1 - p2) > 1");
  return combine(1, make_quotient(q, p1), -1, make_quotient(q, p2));
}

bool same_entries(const BracketTable& a, const BracketTable& b, std::string* witness) {
  if (a.size() != b.size()) {
    if (witness) *witness = "different sizes";
    return false;
  }
  for (int u = 0; u < a.size(); ++u)
    for (int v = 0; v < a.size(); ++v)
      if (a.entry(u, v) != b.entry(u, v)) {
        if (witness) *witness = "[" + a.label(u) + ", " + a.label(v) + "]";
        return false;
      }
  return true;
}

BracketTable contract_phi_s(const BracketTable& t, const Rational& s) {
  if (s == 0) throw std::invalid_argument("contract_phi_s: s = 0");
  const int N = t.size();
  std::vector<LinComb> table(static_cast<std::size_t>(N * N));
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) {
      const int ab = var_tdeg(t.var(u)) + var_tdeg(t.var(v));
      LinComb e;
      for (const auto& [w, c] : t.entry(u, v)) {
        Rational f = 1;
        int ex = ab - var_tdeg(w);
        Rational base = ex >= 0 ? s : Rational(1) / s;
        for (int k = 0; k < std::abs(ex); ++k) f *= base;
        e.emplace_back(w, c * f);
      }
      table[static_cast<std::size_t>(u * N + v)] = std::move(e);
    }
  std::optional<UniPoly> p;
  if (t.p()) {
    // p_s(t) = s^n p(t / s)
    const int n = t.p()->degree();
    QVector c(static_cast<std::size_t>(n) + 1);
    Rational sk = 1;
    for (int k = n; k >= 0; --k) {
      c[static_cast<std::size_t>(k)] = t.p()->coeff(k) * sk;
      sk *= s;
    }
    p = UniPoly(std::move(c));
  }
  return BracketTable(t.base_ptr(), t.n(), std::move(p), std::move(table));
}

BracketTable contraction_limit(const BracketTable& t) {
  const int N = t.size();
  std::vector<LinComb> table(static_cast<std::size_t>(N * N));
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) {
      const int ab = var_tdeg(t.var(u)) + var_tdeg(t.var(v));
      LinComb e;
      for (const auto& [w, c] : t.entry(u, v)) {
        if (var_tdeg(w) > ab) throw std::domain_error("contraction_limit: bracket raises t-degree, no limit");
        if (var_tdeg(w) == ab) e.emplace_back(w, c);
      }
      table[static_cast<std::size_t>(u * N + v)] = std::move(e);
    }
  return BracketTable(t.base_ptr(), t.n(), UniPoly::monomial(t.n()), std::move(table));
}

LieCheck check_antisymmetry(const BracketTable& t) {
  for (int u = 0; u < t.size(); ++u)
    for (int v = u; v < t.size(); ++v) {
      LinComb s = t.entry(u, v);
      lin_add(s, t.entry(v, u));
      if (!s.empty()) return {false, "[" + t.label(u) + ", " + t.label(v) + "] not antisymmetric"};
    }
  return {};
}

LieCheck check_jacobi(const BracketTable& t) {
  const int N = t.size();
  auto br = [&](const LinComb& x, int w) {
    LinComb out;
    for (const auto& [v, c] : x) lin_add(out, t.entry(t.flat(v), w), c);
    return out;
  };
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      for (int k = j + 1; k < N; ++k) {
        LinComb s = br(t.entry(i, j), k);
        lin_add(s, br(t.entry(j, k), i));
        lin_add(s, br(t.entry(k, i), j));
        if (!s.empty())
          return {false, "Jacobi fails on (" + t.label(i) + ", " + t.label(j) + ", " + t.label(k) + ")"};
      }
  return {};
}

QMatrix poisson_tensor_at(const BracketTable& t, const QVector& gamma) {
  const int N = t.size();
  if (gamma.size() != static_cast<std::size_t>(N)) throw std::invalid_argument("point has wrong dimension");
  QMatrix m(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) {
      Rational s = 0;
      for (const auto& [w, c] : t.entry(u, v)) s += c * gamma[static_cast<std::size_t>(t.flat(w))];
      m(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = s;
    }
  return m;
}

}  // namespace glab

namespace glab {

LieCheck check_crt_isomorphism(const AlgebraPtr& q, const UniPoly& p, const RootData& rd) {
  const auto r = crt_idempotents(p, rd);
  const BracketTable t = make_quotient(q, p);
  const int dim = q->dim();
  const int n = p.degree();
  auto image = [&](int k, int i) {
    LinComb out;
    const UniPoly& rk = r[static_cast<std::size_t>(k)];
    for (int c = 0; c <= rk.degree(); ++c)
      if (rk.coeff(c) != 0) out.emplace_back(make_var(i, c), rk.coeff(c));
    return out;
  };
  auto bracket = [&](const LinComb& a, const LinComb& b) {
    LinComb out;
    for (const auto& [u, cu] : a)
      for (const auto& [v, cv] : b) lin_add(out, t.bracket(u, v), cu * cv);
    return out;
  };
  LieCheck res;
  QMatrix m(static_cast<std::size_t>(n * dim), static_cast<std::size_t>(t.size()));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < dim; ++i)
      for (const auto& [v, c] : image(k, i)) m(static_cast<std::size_t>(k * dim + i), static_cast<std::size_t>(t.flat(v))) = c;
  if (rank(m) != static_cast<std::size_t>(t.size())) return {false, "images are not a basis"};
  for (int k = 0; k < n; ++k)
    for (int s = 0; s < n; ++s)
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
          LinComb expect;
          if (k == s)
            for (const auto& [l, c] : q->bracket(i, j)) lin_add(expect, image(k, l), c);
          if (bracket(image(k, i), image(s, j)) != expect)
            return {false, "[" + q->label(i) + "^(" + std::to_string(k) + "), " + q->label(j) + "^(" + std::to_string(s) +
                               ")] mismatch"};
        }
  return res;
}

}  // namespace glab
