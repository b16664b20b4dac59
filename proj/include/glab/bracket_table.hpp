#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glab/lie_algebra.hpp"
#include "glab/unipoly.hpp"
#include "glab/var.hpp"

namespace glab {

// A bilinear bracket on linear forms in graded variables.
class LinearBracket {
 public:
  virtual ~LinearBracket() = default;
  virtual LinComb bracket(Var u, Var v) const = 0;
  virtual bool in_range(Var u) const = 0;
};

// Bracket on W = q t^0 + ... + q t^{n-1}, tabulated on basis pairs.
class BracketTable : public LinearBracket {
 public:
  BracketTable(AlgebraPtr base, int n, std::optional<UniPoly> p, std::vector<LinComb> table);

  const LieAlgebra& base() const { return *base_; }
  const AlgebraPtr& base_ptr() const { return base_; }
  int n() const { return n_; }
  int size() const { return n_ * base_->dim(); }
  // defined when the table is [.,.]_p for this p
  const std::optional<UniPoly>& p() const { return p_; }

  const LinComb& entry(int u, int v) const { return table_[static_cast<std::size_t>(u * size() + v)]; }
  LinComb bracket(Var u, Var v) const override;
  bool in_range(Var u) const override;
  Var var(int u) const { return var_of_flat(u, base_->dim()); }
  int flat(Var v) const { return flat_index(v, base_->dim()); }
  std::string label(int u) const;

  LieAlgebra to_algebra(const std::string& name) const;

 private:
  AlgebraPtr base_;
  int n_;
  std::optional<UniPoly> p_;
  std::vector<LinComb> table_;
};

// Current algebra q[t] with [x t^a, y t^b] = [x,y] t^{a+b}, no truncation.
class CurrentBracket : public LinearBracket {
 public:
  explicit CurrentBracket(AlgebraPtr base) : base_(std::move(base)) {}
  LinComb bracket(Var u, Var v) const override;
  bool in_range(Var u) const override { return var_base(u) < base_->dim(); }
  const LieAlgebra& base() const { return *base_; }

 private:
  AlgebraPtr base_;
};

BracketTable make_quotient(const AlgebraPtr& q, const UniPoly& p);
// the algebra itself as a table with n = 1
BracketTable table_of(const AlgebraPtr& q);
BracketTable make_difference_bracket(const AlgebraPtr& q, const UniPoly& p1, const UniPoly& p2);
// a T1 + b T2; p is set to a p1 + b p2 when both carry p and a + b = 1
BracketTable combine(const Rational& a, const BracketTable& t1, const Rational& b, const BracketTable& t2);
bool same_entries(const BracketTable& a, const BracketTable& b, std::string* witness = nullptr);

// conjugation by x t^k -> s^k x t^k
BracketTable contract_phi_s(const BracketTable& t, const Rational& s);
// entrywise limit s -> 0 of contract_phi_s
BracketTable contraction_limit(const BracketTable& t);

LieCheck check_antisymmetry(const BracketTable& t);
LieCheck check_jacobi(const BracketTable& t);

// x^(k) -> x r_k is a Lie isomorphism from q^{+n} onto (W, [,]_p) for distinct rational roots
LieCheck check_crt_isomorphism(const AlgebraPtr& q, const UniPoly& p, const RootData& rd);

// Poisson tensor at a point: entry (u,v) = gamma([x_u, x_v])
QMatrix poisson_tensor_at(const BracketTable& t, const QVector& gamma);

}  // namespace glab
