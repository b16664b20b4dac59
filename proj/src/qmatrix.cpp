#include "glab/qmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace glab {

namespace {

struct IntMatrix {
  std::size_t r = 0, c = 0;
  std::vector<Integer> a;
  Integer& at(std::size_t i, std::size_t j) { return a[i * c + j]; }
};

// scale each row by the lcm of its denominators; scale[i] is that factor
IntMatrix to_integer(const QMatrix& m, std::vector<Integer>* scale = nullptr) {
  IntMatrix out{m.rows(), m.cols(), std::vector<Integer>(m.rows() * m.cols())};
  if (scale) scale->assign(m.rows(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer& d = m(i, j).get_den();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      if (q == 0) continue;
      out.at(i, j) = q.get_num() * (l / q.get_den());
    }
    if (scale) (*scale)[i] = l;
  }
  return out;
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < m.c; ++j) std::swap(m.at(i, j), m.at(k, j));
}

// Bareiss. jordan = true also clears above the pivots (fraction-free Gauss-Jordan);
// afterwards every pivot equals the returned divisor.
std::vector<std::size_t> bareiss(IntMatrix& m, bool jordan, Integer& last, int* sign = nullptr) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t k = 0;
  Integer tmp;
  for (std::size_t col = 0; col < m.c && k < m.r; ++col) {
    std::size_t piv = k;
    while (piv < m.r && m.at(piv, col) == 0) ++piv;
    if (piv == m.r) continue;
    if (piv != k) {
      swap_rows(m, piv, k);
      if (sign) *sign = -*sign;
    }
    const Integer p = m.at(k, col);
    for (std::size_t i = 0; i < m.r; ++i) {
      if (i == k || (!jordan && i < k)) continue;
      const Integer f = m.at(i, col);
      std::size_t j0 = (i < k) ? 0 : col + 1;
      for (std::size_t j = j0; j < m.c; ++j) {
        if (j == col) continue;
        tmp = p * m.at(i, j);
        if (f != 0) tmp -= f * m.at(k, j);
        if (prev != 1) mpz_divexact(tmp.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = tmp;
      }
      m.at(i, col) = 0;
    }
    prev = p;
    pivots.push_back(col);
    ++k;
  }
  last = prev;
  return pivots;
}

}  // namespace

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  if (rows.empty()) return {};
  QMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_));
}

QVector QMatrix::col(std::size_t j) const {
  QVector v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool QMatrix::is_symmetric() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = i + 1; j < c_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool QMatrix::is_antisymmetric() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = i; j < c_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
  QMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

QVector operator*(const QMatrix& a, const QVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("dimension mismatch");
  QVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (v[j] != 0) out[i] += a(i, j) * v[j];
  return out;
}

std::size_t rank(const QMatrix& m) {
  if (m.empty()) return 0;
  // eliminate along the shorter side
  IntMatrix im = m.rows() < m.cols() ? to_integer(m.transpose()) : to_integer(m);
  Integer last;
  return bareiss(im, false, last).size();
}

Rational det(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  if (m.rows() == 0) return 1;
  std::vector<Integer> scale;
  IntMatrix im = to_integer(m, &scale);
  Integer last;
  int sign = 1;
  auto piv = bareiss(im, false, last, &sign);
  if (piv.size() < m.rows()) return 0;
  Rational d(last * sign);
  for (const auto& s : scale) d /= s;
  d.canonicalize();
  return d;
}

QMatrix rref(const QMatrix& m, std::vector<std::size_t>* pivots) {
  IntMatrix im = to_integer(m);
  Integer last;
  auto piv = bareiss(im, true, last);
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (im.at(i, j) == 0) continue;
      Rational q(im.at(i, j), last);
      q.canonicalize();
      out(i, j) = q;
    }
  if (pivots) *pivots = std::move(piv);
  return out;
}

std::vector<QVector> nullspace(const QMatrix& m) {
  std::vector<std::size_t> piv;
  QMatrix r = rref(m, &piv);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> piv;
  QMatrix r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  QVector x(a.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, a.cols());
  return x;
}

QMatrix inverse(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  QMatrix r = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

}  // namespace glab
