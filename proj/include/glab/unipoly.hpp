#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glab/rational.hpp"

namespace glab {

// Univariate polynomial in t over Q, lowest degree first, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(QVector coeffs);
  UniPoly(const Rational& c);  // NOLINT: constants convert implicitly
  UniPoly(int c) : UniPoly(Rational(c)) {}  // NOLINT

  static UniPoly t();
  static UniPoly monomial(int deg, const Rational& c = 1);
  // (t - a_1)^{m_1} ... (t - a_r)^{m_r}
  static UniPoly from_roots(const std::vector<std::pair<Rational, int>>& roots);

  const QVector& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Rational coeff(int k) const;
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly pow(int k) const;

  std::string str(const std::string& var = "t") const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  QVector c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g);
UniPoly poly_rem(const UniPoly& f, const UniPoly& p);
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);  // monic
// returns (g, s, u) with s*a + u*b = g monic
struct ExtGcd {
  UniPoly g, s, u;
};
ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b);
// inverse of a modulo m; throws if not coprime
UniPoly inverse_mod(const UniPoly& a, const UniPoly& m);

bool has_distinct_roots(const UniPoly& p);

struct RootData {
  std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity)
  int total_multiplicity() const;
  bool simple() const;
};

// full rational factorization of a monic p; nullopt if some factor is not linear over Q
std::optional<RootData> rational_roots(const UniPoly& p);
// checks the RootData invariants against p
void validate_roots(const UniPoly& p, const RootData& rd);

// CRT idempotents r_i for distinct rational roots
std::vector<UniPoly> crt_idempotents(const UniPoly& p, const RootData& rd);

struct PrimaryPair {
  Rational root;
  int multiplicity;
  UniPoly r0;  // idempotent of the primary component
  UniPoly r1;  // (t - root) r0 mod p, nilpotent of order `multiplicity`
};
std::vector<PrimaryPair> crt_primary(const UniPoly& p, const RootData& rd);

// parses "t^3-t+1", "2t^2 - 1/2", "(coefficient-free) t"
UniPoly parse_unipoly(const std::string& s);

}  // namespace glab
