#include "glab/unipoly.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace glab {

UniPoly::UniPoly(QVector coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

UniPoly UniPoly::t() { return monomial(1); }

UniPoly UniPoly::monomial(int deg, const Rational& c) {
  if (deg < 0) throw std::invalid_argument("negative degree");
  QVector v(static_cast<std::size_t>(deg) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(const std::vector<std::pair<Rational, int>>& roots) {
  UniPoly p(1);
  for (const auto& [a, m] : roots)
    for (int i = 0; i < m; ++i) p = p * UniPoly(QVector{-a, 1});
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Rational UniPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  QVector d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return {};
  Rational l = c_.back();
  UniPoly r = *this;
  r *= Rational(1) / l;
  return r;
}

UniPoly UniPoly::pow(int k) const {
  UniPoly r(1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string UniPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0 || c != 1) os << c.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  QVector r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  QVector r = f.coeffs();
  const int dg = g.degree();
  if (f.degree() < dg) return {UniPoly(), f};
  QVector q(static_cast<std::size_t>(f.degree() - dg) + 1);
  const Rational inv = Rational(1) / g.lead();
  for (int k = f.degree(); k >= dg; --k) {
    Rational c = r[static_cast<std::size_t>(k)] * inv;
    if (c == 0) continue;
    q[static_cast<std::size_t>(k - dg)] = c;
    for (int i = 0; i <= dg; ++i) r[static_cast<std::size_t>(k - dg + i)] -= c * g.coeffs()[static_cast<std::size_t>(i)];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly poly_rem(const UniPoly& f, const UniPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("poly_rem: modulus must have degree >= 1");
  return divmod(f, p).second;
}

ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b, s0(1), s1, u0, u1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    UniPoly u2 = u0 - q * u1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.is_zero()) return {r0, s0, u0};
  Rational l = Rational(1) / r0.lead();
  return {r0 * l, s0 * l, u0 * l};
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) { return ext_gcd(a, b).g; }

UniPoly inverse_mod(const UniPoly& a, const UniPoly& m) {
  auto e = ext_gcd(a, m);
  if (e.g.degree() != 0) throw std::domain_error("inverse_mod: not coprime");
  return poly_rem(e.s, m);
}

bool has_distinct_roots(const UniPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("has_distinct_roots: degree must be >= 1");
  return poly_gcd(p, p.derivative()).degree() == 0;
}

int RootData::total_multiplicity() const {
  int s = 0;
  for (const auto& r : roots) s += r.second;
  return s;
}

bool RootData::simple() const {
  for (const auto& r : roots)
    if (r.second != 1) return false;
  return true;
}

namespace {

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::optional<Rational> find_rational_root(const UniPoly& p) {
  if (p.coeff(0) == 0) return Rational(0);
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  Integer a0 = Rational(p.coeff(0) * l).get_num();
  Integer an = Rational(p.lead() * l).get_num();
  for (const auto& num : divisors(a0))
    for (const auto& den : divisors(an))
      for (int s : {1, -1}) {
        Rational r(num * s, den);
        r.canonicalize();
        if (p.eval(r) == 0) return r;
      }
  return std::nullopt;
}

}  // namespace

std::optional<RootData> rational_roots(const UniPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("rational_roots: degree must be >= 1");
  UniPoly rest = p;
  std::map<Rational, int> mult;
  while (rest.degree() >= 1) {
    auto r = find_rational_root(rest);
    if (!r) return std::nullopt;
    rest = divmod(rest, UniPoly(QVector{-*r, 1})).first;
    ++mult[*r];
  }
  RootData rd;
  for (const auto& [a, m] : mult) rd.roots.emplace_back(a, m);
  return rd;
}

void validate_roots(const UniPoly& p, const RootData& rd) {
  std::map<Rational, int> seen;
  for (const auto& [a, m] : rd.roots) {
    if (m < 1) throw std::invalid_argument("root multiplicity must be positive");
    if (seen.count(a)) throw std::invalid_argument("roots must be pairwise distinct");
    seen[a] = m;
  }
  if (!p.is_monic()) throw std::invalid_argument("polynomial must be monic");
  if (UniPoly::from_roots(rd.roots) != p) throw std::invalid_argument("root data does not reproduce p");
}

std::vector<UniPoly> crt_idempotents(const UniPoly& p, const RootData& rd) {
  validate_roots(p, rd);
  if (!rd.simple()) throw std::invalid_argument("crt_idempotents: repeated root, use crt_primary");
  std::vector<UniPoly> out;
  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    const Rational& ai = rd.roots[i].first;
    UniPoly q = divmod(p, UniPoly(QVector{-ai, 1})).first;
    Rational c = 1;
    for (std::size_t j = 0; j < rd.roots.size(); ++j)
      if (j != i) c *= ai - rd.roots[j].first;
    out.push_back(q * (Rational(1) / c));
  }
  return out;
}

std::vector<PrimaryPair> crt_primary(const UniPoly& p, const RootData& rd) {
  validate_roots(p, rd);
  std::vector<PrimaryPair> out;
  for (const auto& [a, m] : rd.roots) {
    UniPoly lin(QVector{-a, 1});
    UniPoly block = lin.pow(m);
    UniPoly cof = divmod(p, block).first;
    UniPoly r0 = cof.degree() == 0 ? UniPoly(1) : poly_rem(cof * inverse_mod(cof, block), p);
    UniPoly r1 = poly_rem(lin * r0, p);
    out.push_back({a, m, r0, r1});
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  UniPoly parse() {
    UniPoly r = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(i_) + ": " + what + " in '" + s_ + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  UniPoly expr() {
    skip();
    bool neg = false;
    if (peek('-') || peek('+')) neg = s_[i_++] == '-';
    UniPoly r = term();
    if (neg) r = -r;
    while (peek('+') || peek('-')) {
      bool minus = s_[i_++] == '-';
      UniPoly t = term();
      r = minus ? r - t : r + t;
    }
    return r;
  }
  UniPoly term() {
    UniPoly r = factor();
    for (;;) {
      skip();
      if (i_ >= s_.size()) break;
      char c = s_[i_];
      if (c == '*') {
        ++i_;
        r = r * factor();
      } else if (c == '(' || c == 't' || std::isdigit(static_cast<unsigned char>(c))) {
        r = r * factor();
      } else {
        break;
      }
    }
    return r;
  }
  UniPoly factor() {
    UniPoly a = atom();
    if (peek('^')) {
      ++i_;
      skip();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected exponent");
      a = a.pow(std::stoi(s_.substr(start, i_ - start)));
    }
    return a;
  }
  UniPoly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      UniPoly r = expr();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return r;
    }
    if (c == 't') {
      ++i_;
      return UniPoly::t();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      }
      return UniPoly(parse_rational(s_.substr(start, i_ - start)));
    }
    fail("unexpected character");
  }

  std::string s_;
  std::size_t i_ = 0;
};

}  // namespace

UniPoly parse_unipoly(const std::string& s) { return PolyParser(s).parse(); }

}  // namespace glab
