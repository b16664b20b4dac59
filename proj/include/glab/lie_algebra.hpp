#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glab/qmatrix.hpp"

namespace glab {

using Term = std::pair<int, Rational>;  // (basis index, coefficient)
using SparseVec = std::vector<Term>;    // sorted by index, no zeros

void sparse_add(SparseVec& acc, const SparseVec& v, const Rational& scale = 1);

// Finite-dimensional Lie algebra given by structure constants.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, std::vector<std::string> labels);

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  int index_of(const std::string& label) const;

  // [x_i, x_j]
  const SparseVec& bracket(int i, int j) const { return sc_[static_cast<std::size_t>(i * dim_ + j)]; }
  // sets [x_i,x_j] = v and [x_j,x_i] = -v
  void set_bracket(int i, int j, SparseVec v);
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

  const std::optional<QMatrix>& form() const { return form_; }
  void set_form(QMatrix g);
  const QMatrix& form_inverse() const;  // throws without form
  bool has_form() const { return form_.has_value(); }
  Rational pair(const SparseVec& x, const SparseVec& y) const;

  // rank-n tag for sl_n builtins, 0 otherwise
  int sl_rank() const { return sl_rank_; }
  void set_sl_rank(int n) { sl_rank_ = n; }

 private:
  std::string name_;
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVec> sc_;
  std::optional<QMatrix> form_;
  std::optional<QMatrix> form_inv_;
  int sl_rank_ = 0;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

LieAlgebra make_sl(int n);
LieAlgebra make_gl(int n);
LieAlgebra make_abelian(int k);
LieAlgebra make_direct_sum(const LieAlgebra& a, const LieAlgebra& b);
LieAlgebra make_direct_power(const LieAlgebra& q, int n);
LieAlgebra make_takiff(const LieAlgebra& q, int k);
// new basis y_i = sum_j P(i,j) x_j
LieAlgebra change_basis(const LieAlgebra& q, const QMatrix& p, std::vector<std::string> labels);
// rows of the returned matrix are a basis orthogonal for the form
QMatrix orthogonal_basis(const QMatrix& gram);

struct LieCheck {
  bool ok = true;
  std::string witness;
};
LieCheck check_antisymmetry(const LieAlgebra& q);
LieCheck check_jacobi(const LieAlgebra& q);
LieCheck check_form_invariant(const LieAlgebra& q);

// matrix units: basis matrices for sl_n in the builtin order
std::vector<QMatrix> sl_basis_matrices(int n);

}  // namespace glab
