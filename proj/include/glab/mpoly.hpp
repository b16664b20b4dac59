#pragma once

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "glab/var.hpp"

namespace glab {

// Sorted multiset of variables; x^2 y is {x, x, y}.
using Monomial = std::vector<Var>;

// graded lexicographic: total degree first, then lexicographic on (base, t-degree)
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
int mono_tdeg(const Monomial& m);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Global cap on the number of terms produced by a single expansion.
// Defaults to 2'000'000, or GLAB_BUDGET_TERMS when set.
std::size_t term_budget();
void set_term_budget(std::size_t terms);

class MPoly {
 public:
  using Map = std::map<Monomial, Rational, MonomialLess>;

  MPoly() = default;
  static MPoly constant(const Rational& c);
  static MPoly var(Var v, const Rational& c = 1);
  static MPoly from_lin(const LinComb& l);

  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  int degree() const;  // -1 for zero
  // d if homogeneous of degree d, -1 otherwise (or zero polynomial)
  int homogeneous_degree() const;
  int min_tdeg() const;
  int max_tdeg() const;
  std::set<Var> variables() const;
  Rational coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) { return a *= Rational(-1); }
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }

  MPoly derivative(Var v) const;
  Rational eval(const std::function<Rational(Var)>& value) const;

 private:
  Map t_;
};

MPoly pow(const MPoly& f, int k);

// homogeneous component of total t-degree j
MPoly t_component(const MPoly& f, int j);
MPoly lowest_t_component(const MPoly& f);
// component of maximal weight, weight of a monomial being the sum of weight(var)
MPoly bullet_component(const MPoly& f, const std::function<int(Var)>& weight);
MPoly bullet_component(const MPoly& f);  // t-weight

// ring homomorphism determined by the images of variables
MPoly substitute(const MPoly& f, const std::function<MPoly(Var)>& image);
// derivation determined by the images of variables
MPoly apply_derivation(const MPoly& f, const std::function<MPoly(Var)>& image);

}  // namespace glab
