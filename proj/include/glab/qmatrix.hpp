#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "glab/rational.hpp"

namespace glab {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  QVector row(std::size_t i) const;
  QVector col(std::size_t j) const;
  QMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator*(const QMatrix& a, const QVector& v);

// fraction-free elimination throughout
std::size_t rank(const QMatrix& m);
Rational det(const QMatrix& m);
QMatrix rref(const QMatrix& m, std::vector<std::size_t>* pivots = nullptr);
// kernel basis; each vector has a 1 at its free column and 0 at the other free columns
std::vector<QVector> nullspace(const QMatrix& m);
std::optional<QVector> solve(const QMatrix& a, const QVector& b);
QMatrix inverse(const QMatrix& m);

}  // namespace glab
