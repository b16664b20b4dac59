#include "glab/lie_algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace glab {

void sparse_add(SparseVec& acc, const SparseVec& v, const Rational& scale) {
  if (scale == 0 || v.empty()) return;
  SparseVec out;
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

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)),
      dim_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      sc_(static_cast<std::size_t>(dim_ * dim_)) {}

int LieAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::invalid_argument("unknown basis label " + label);
  return static_cast<int>(it - labels_.begin());
}

void LieAlgebra::set_bracket(int i, int j, SparseVec v) {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw std::out_of_range("basis index");
  std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  SparseVec clean;
  for (auto& t : v) {
    if (!clean.empty() && clean.back().first == t.first)
      clean.back().second += t.second;
    else
      clean.push_back(t);
  }
  std::erase_if(clean, [](const Term& t) { return t.second == 0; });
  if (i == j) {
    if (!clean.empty()) throw std::invalid_argument("[x,x] must vanish");
    return;
  }
  SparseVec neg = clean;
  for (auto& t : neg) t.second = -t.second;
  sc_[static_cast<std::size_t>(i * dim_ + j)] = std::move(clean);
  sc_[static_cast<std::size_t>(j * dim_ + i)] = std::move(neg);
}

SparseVec LieAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) sparse_add(out, bracket(i, j), a * b);
  return out;
}

void LieAlgebra::set_form(QMatrix g) {
  if (g.rows() != static_cast<std::size_t>(dim_) || g.cols() != static_cast<std::size_t>(dim_))
    throw std::invalid_argument("form has wrong size");
  if (!g.is_symmetric()) throw std::invalid_argument("form must be symmetric");
  form_inv_ = inverse(g);
  form_ = std::move(g);
}

const QMatrix& LieAlgebra::form_inverse() const {
  if (!form_inv_) throw std::invalid_argument("algebra " + name_ + " carries no invariant form");
  return *form_inv_;
}

Rational LieAlgebra::pair(const SparseVec& x, const SparseVec& y) const {
  if (!form_) throw std::invalid_argument("algebra " + name_ + " carries no invariant form");
  Rational s = 0;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) s += a * b * (*form_)(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return s;
}

namespace {


QMatrix unit(int n, int i, int j) {
  QMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
  return m;
}

}  // namespace

std::vector<QMatrix> sl_basis_matrices(int n) {
  std::vector<QMatrix> mats;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) mats.push_back(unit(n, i, j));
  for (int i = 0; i + 1 < n; ++i) {
    QMatrix h(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    h(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
    h(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(i + 1)) = -1;
    mats.push_back(h);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) mats.push_back(unit(n, i, j));
  return mats;
}

namespace {

// coordinates of a traceless matrix in the sl_n basis
SparseVec sl_coords(const QMatrix& m, int n) {
  SparseVec v;
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++idx)
      if (m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != 0)
        v.emplace_back(idx, m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  Rational c = 0;
  for (int i = 0; i + 1 < n; ++i, ++idx) {
    c += m(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
    if (c != 0) v.emplace_back(idx, c);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j, ++idx)
      if (m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != 0)
        v.emplace_back(idx, m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  return v;
}

Rational trace(const QMatrix& m) {
  Rational s = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

LieAlgebra matrix_algebra(const std::string& name, std::vector<std::string> labels, const std::vector<QMatrix>& mats,
                          const std::function<SparseVec(const QMatrix&)>& coords) {
  LieAlgebra q(name, std::move(labels));
  const int d = q.dim();
  QMatrix g(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const QMatrix& a = mats[static_cast<std::size_t>(i)];
      const QMatrix& b = mats[static_cast<std::size_t>(j)];
      g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = trace(a * b);
      if (j > i) {
        QMatrix c = a * b;
        QMatrix ba = b * a;
        for (std::size_t r = 0; r < c.rows(); ++r)
          for (std::size_t s = 0; s < c.cols(); ++s) c(r, s) -= ba(r, s);
        q.set_bracket(i, j, coords(c));
      }
    }
  q.set_form(std::move(g));
  return q;
}

}  // namespace

LieAlgebra make_sl(int n) {
  if (n < 2) throw std::invalid_argument("make_sl: n >= 2 required");
  std::vector<std::string> labels;
  if (n == 2) {
    labels = {"e", "h", "f"};
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    for (int i = 0; i + 1 < n; ++i) labels.push_back("H" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  }
  LieAlgebra q = matrix_algebra("sl" + std::to_string(n), std::move(labels), sl_basis_matrices(n),
                                [n](const QMatrix& m) { return sl_coords(m, n); });
  q.set_sl_rank(n);
  return q;
}

LieAlgebra make_gl(int n) {
  if (n < 1) throw std::invalid_argument("make_gl: n >= 1 required");
  std::vector<std::string> labels;
  std::vector<QMatrix> mats;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      mats.push_back(unit(n, i, j));
    }
  auto coords = [n](const QMatrix& m) {
    SparseVec v;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != 0)
          v.emplace_back(i * n + j, m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    return v;
  };
  return matrix_algebra("gl" + std::to_string(n), std::move(labels), mats, coords);
}

LieAlgebra make_abelian(int k) {
  if (k < 1) throw std::invalid_argument("make_abelian: k >= 1 required");
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back("a" + std::to_string(i + 1));
  LieAlgebra q("abelian:" + std::to_string(k), std::move(labels));
  q.set_form(QMatrix::identity(static_cast<std::size_t>(k)));
  return q;
}

LieAlgebra make_direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> labels = a.labels();
  const int da = a.dim();
  for (const auto& l : b.labels()) {
    std::string lab = l;
    // keep labels unique
    if (std::find(a.labels().begin(), a.labels().end(), l) != a.labels().end()) lab = l + "'";
    labels.push_back(lab);
  }
  LieAlgebra q("sum:" + a.name() + "," + b.name(), std::move(labels));
  for (int i = 0; i < da; ++i)
    for (int j = i + 1; j < da; ++j) q.set_bracket(i, j, a.bracket(i, j));
  for (int i = 0; i < b.dim(); ++i)
    for (int j = i + 1; j < b.dim(); ++j) {
      SparseVec v = b.bracket(i, j);
      for (auto& t : v) t.first += da;
      q.set_bracket(da + i, da + j, std::move(v));
    }
  if (a.has_form() && b.has_form()) {
    const auto d = static_cast<std::size_t>(q.dim());
    QMatrix g(d, d);
    for (std::size_t i = 0; i < static_cast<std::size_t>(da); ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(da); ++j) g(i, j) = (*a.form())(i, j);
    for (std::size_t i = 0; i < static_cast<std::size_t>(b.dim()); ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(b.dim()); ++j)
        g(static_cast<std::size_t>(da) + i, static_cast<std::size_t>(da) + j) = (*b.form())(i, j);
    q.set_form(std::move(g));
  }
  return q;
}

LieAlgebra make_direct_power(const LieAlgebra& q, int n) {
  if (n < 1) throw std::invalid_argument("make_direct_power: n >= 1 required");
  std::vector<std::string> labels;
  const int d = q.dim();
  for (int k = 0; k < n; ++k)
    for (const auto& l : q.labels()) labels.push_back(l + "^(" + std::to_string(k + 1) + ")");
  LieAlgebra s(q.name() + "^" + std::to_string(n), std::move(labels));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        SparseVec v = q.bracket(i, j);
        for (auto& t : v) t.first += k * d;
        s.set_bracket(k * d + i, k * d + j, std::move(v));
      }
  if (q.has_form()) {
    const auto dd = static_cast<std::size_t>(d);
    QMatrix g(dd * static_cast<std::size_t>(n), dd * static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k)
      for (std::size_t i = 0; i < dd; ++i)
        for (std::size_t j = 0; j < dd; ++j) g(k * dd + i, k * dd + j) = (*q.form())(i, j);
    s.set_form(std::move(g));
  }
  return s;
}

LieAlgebra make_takiff(const LieAlgebra& q, int k) {
  if (k < 1) throw std::invalid_argument("make_takiff: k >= 1 required");
  const int d = q.dim();
  std::vector<std::string> labels;
  for (int a = 0; a < k; ++a)
    for (const auto& l : q.labels()) labels.push_back(k == 1 ? l : l + ".t" + std::to_string(a));
  LieAlgebra w("takiff:" + q.name() + ":" + std::to_string(k), std::move(labels));
  for (int a = 0; a < k; ++a)
    for (int b = 0; a + b < k; ++b)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          int u = a * d + i, v = b * d + j;
          if (u >= v) continue;
          SparseVec br = q.bracket(i, j);
          for (auto& t : br) t.first += (a + b) * d;
          w.set_bracket(u, v, std::move(br));
        }
  if (q.has_form()) {
    const auto n = static_cast<std::size_t>(k * d);
    QMatrix g(n, n);
    for (int a = 0; a < k; ++a) {
      int b = k - 1 - a;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          g(static_cast<std::size_t>(a * d + i), static_cast<std::size_t>(b * d + j)) =
              (*q.form())(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
    w.set_form(std::move(g));
  }
  if (k == 1) w.set_sl_rank(q.sl_rank());
  return w;
}

LieAlgebra change_basis(const LieAlgebra& q, const QMatrix& p, std::vector<std::string> labels) {
  const int d = q.dim();
  if (p.rows() != static_cast<std::size_t>(d) || p.cols() != static_cast<std::size_t>(d))
    throw std::invalid_argument("change_basis: wrong size");
  QMatrix pinv = inverse(p);
  auto row = [&](const QMatrix& m, int i) {
    SparseVec v;
    for (int j = 0; j < d; ++j)
      if (m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != 0)
        v.emplace_back(j, m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    return v;
  };
  LieAlgebra out(q.name() + "'", std::move(labels));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      SparseVec x = q.bracket(row(p, i), row(p, j));
      SparseVec y;
      for (const auto& [k, c] : x) sparse_add(y, row(pinv, k), c);
      out.set_bracket(i, j, std::move(y));
    }
  if (q.has_form()) out.set_form(p * (*q.form()) * p.transpose());
  return out;
}

QMatrix orthogonal_basis(const QMatrix& gram) {
  const std::size_t n = gram.rows();
  auto bil = [&](const QVector& u, const QVector& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (v[j] != 0) s += u[i] * gram(i, j) * v[j];
    }
    return s;
  };
  std::vector<QVector> pool;
  for (std::size_t i = 0; i < n; ++i) {
    QVector e(n);
    e[i] = 1;
    pool.push_back(e);
  }
  std::vector<QVector> out;
  while (!pool.empty()) {
    std::size_t pick = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (bil(pool[i], pool[i]) != 0) {
        pick = i;
        break;
      }
    if (pick == pool.size()) {
      for (std::size_t i = 0; i < pool.size() && pick == pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j)
          if (bil(pool[i], pool[j]) != 0) {
            for (std::size_t k = 0; k < n; ++k) pool[i][k] += pool[j][k];
            pick = i;
            break;
          }
      if (pick == pool.size()) throw std::domain_error("orthogonal_basis: degenerate form");
    }
    QVector v = pool[pick];
    pool.erase(pool.begin() + static_cast<long>(pick));
    Rational nv = bil(v, v);
    for (auto& w : pool) {
      Rational c = bil(w, v) / nv;
      if (c != 0)
        for (std::size_t k = 0; k < n; ++k) w[k] -= c * v[k];
    }
    out.push_back(std::move(v));
  }
  return QMatrix::from_rows(out);
}

LieCheck check_antisymmetry(const LieAlgebra& q) {
  for (int i = 0; i < q.dim(); ++i) {
    if (!q.bracket(i, i).empty()) return {false, "[" + q.label(i) + "," + q.label(i) + "] != 0"};
    for (int j = i + 1; j < q.dim(); ++j) {
      SparseVec s = q.bracket(i, j);
      sparse_add(s, q.bracket(j, i));
      if (!s.empty()) return {false, "[" + q.label(i) + "," + q.label(j) + "] not antisymmetric"};
    }
  }
  return {};
}

LieCheck check_jacobi(const LieAlgebra& q) {
  const int d = q.dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        SparseVec s;
        for (const auto& [m, c] : q.bracket(i, j)) sparse_add(s, q.bracket(m, k), c);
        for (const auto& [m, c] : q.bracket(j, k)) sparse_add(s, q.bracket(m, i), c);
        for (const auto& [m, c] : q.bracket(k, i)) sparse_add(s, q.bracket(m, j), c);
        if (!s.empty()) return {false, "Jacobi fails on (" + q.label(i) + "," + q.label(j) + "," + q.label(k) + ")"};
      }
  return {};
}

LieCheck check_form_invariant(const LieAlgebra& q) {
  if (!q.has_form()) return {false, "no form"};
  const int d = q.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        // ([x_i,x_j],x_k) + (x_j,[x_i,x_k]) = 0
        Rational s = q.pair(q.bracket(i, j), {{k, 1}}) + q.pair({{j, 1}}, q.bracket(i, k));
        if (s != 0) return {false, "form not invariant at (" + q.label(i) + "," + q.label(j) + "," + q.label(k) + ")"};
      }
  return {};
}

}  // namespace glab
