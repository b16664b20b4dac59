#pragma once

// Straightforward rational Gauss-Jordan used as an independent reference in tests.

#include <random>
#include <utility>
#include <vector>

#include "glab/qmatrix.hpp"

namespace oracle {

using glab::QMatrix;
using glab::Rational;

inline QMatrix naive_rref(QMatrix m, std::size_t* rank_out = nullptr, Rational* det_out = nullptr) {
  std::size_t r = 0;
  Rational det = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) {
      det = 0;
      continue;
    }
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      det = -det;
    }
    Rational inv = 1 / m(r, c);
    det *= m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  if (r < m.rows()) det = 0;
  if (rank_out) *rank_out = r;
  if (det_out) *det_out = det;
  return m;
}

inline QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range, int sparsity = 0) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (sparsity > 0 && rng() % static_cast<unsigned>(sparsity + 1) != 0) continue;
      long num = static_cast<long>(rng() % static_cast<unsigned>(2 * range + 1)) - range;
      long den = 1 + static_cast<long>(rng() % 3);
      Rational q(num, den);
      q.canonicalize();
      m(i, j) = q;
    }
  return m;
}

}  // namespace oracle
