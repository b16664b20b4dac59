#include "glab/mpoly.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>

namespace glab {

namespace {

std::size_t initial_budget() {
  if (const char* env = std::getenv("GLAB_BUDGET_TERMS")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return 2'000'000;
}

std::atomic<std::size_t>& budget_slot() {
  static std::atomic<std::size_t> b{initial_budget()};
  return b;
}

void check_budget(std::size_t n) {
  if (n > term_budget())
    throw BudgetExceeded("term budget exceeded: more than " + std::to_string(term_budget()) + " terms");
}

}  // namespace

std::size_t term_budget() { return budget_slot().load(); }
void set_term_budget(std::size_t terms) { budget_slot().store(terms); }

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
  return m;
}

int mono_tdeg(const Monomial& m) {
  int s = 0;
  for (Var v : m) s += var_tdeg(v);
  return s;
}

MPoly MPoly::constant(const Rational& c) {
  MPoly p;
  if (c != 0) p.t_.emplace(Monomial{}, c);
  return p;
}

MPoly MPoly::var(Var v, const Rational& c) {
  MPoly p;
  if (c != 0) p.t_.emplace(Monomial{v}, c);
  return p;
}

MPoly MPoly::from_lin(const LinComb& l) {
  MPoly p;
  for (const auto& [v, c] : l) p.add_term({v}, c);
  return p;
}

int MPoly::degree() const {
  if (t_.empty()) return -1;
  return static_cast<int>(t_.rbegin()->first.size());
}

int MPoly::homogeneous_degree() const {
  if (t_.empty()) return -1;
  std::size_t d = t_.begin()->first.size();
  return t_.rbegin()->first.size() == d ? static_cast<int>(d) : -1;
}

int MPoly::min_tdeg() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [mono, c] : t_) m = std::min(m, mono_tdeg(mono));
  return t_.empty() ? -1 : m;
}

int MPoly::max_tdeg() const {
  int m = -1;
  for (const auto& [mono, c] : t_) m = std::max(m, mono_tdeg(mono));
  return m;
}

std::set<Var> MPoly::variables() const {
  std::set<Var> s;
  for (const auto& [mono, c] : t_) s.insert(mono.begin(), mono.end());
  return s;
}

Rational MPoly::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [m, x] : t_) x *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      r.add_term(mono_mul(ma, mb), ca * cb);
      check_budget(r.t_.size());
    }
  return r;
}

MPoly MPoly::derivative(Var v) const {
  MPoly r;
  for (const auto& [m, c] : t_) {
    auto lo = std::lower_bound(m.begin(), m.end(), v);
    auto hi = std::upper_bound(m.begin(), m.end(), v);
    long e = hi - lo;
    if (e == 0) continue;
    Monomial rest(m.begin(), lo);
    rest.insert(rest.end(), lo + 1, m.end());
    r.add_term(rest, c * e);
  }
  return r;
}

Rational MPoly::eval(const std::function<Rational(Var)>& value) const {
  Rational s = 0;
  for (const auto& [m, c] : t_) {
    Rational p = c;
    for (Var v : m) {
      p *= value(v);
      if (p == 0) break;
    }
    s += p;
  }
  return s;
}

MPoly pow(const MPoly& f, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  MPoly r = MPoly::constant(1);
  for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

MPoly t_component(const MPoly& f, int j) {
  MPoly r;
  for (const auto& [m, c] : f.terms())
    if (mono_tdeg(m) == j) r.add_term(m, c);
  return r;
}

MPoly lowest_t_component(const MPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("lowest_t_component: zero input");
  return t_component(f, f.min_tdeg());
}

MPoly bullet_component(const MPoly& f, const std::function<int(Var)>& weight) {
  if (f.is_zero()) return f;
  auto w = [&](const Monomial& m) {
    int s = 0;
    for (Var v : m) s += weight(v);
    return s;
  };
  int top = std::numeric_limits<int>::min();
  for (const auto& [m, c] : f.terms()) top = std::max(top, w(m));
  MPoly r;
  for (const auto& [m, c] : f.terms())
    if (w(m) == top) r.add_term(m, c);
  return r;
}

MPoly bullet_component(const MPoly& f) { return bullet_component(f, [](Var v) { return var_tdeg(v); }); }

MPoly substitute(const MPoly& f, const std::function<MPoly(Var)>& image) {
  std::map<Var, std::vector<MPoly>> powers;  // powers[v][k] = image(v)^k
  auto power = [&](Var v, std::size_t k) -> const MPoly& {
    auto& pw = powers[v];
    if (pw.empty()) {
      pw.push_back(MPoly::constant(1));
      pw.push_back(image(v));
    }
    while (pw.size() <= k) pw.push_back(pw.back() * pw[1]);
    return pw[k];
  };
  MPoly r;
  for (const auto& [m, c] : f.terms()) {
    MPoly term = MPoly::constant(c);
    std::size_t i = 0;
    while (i < m.size()) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      term = term * power(m[i], j - i);
      if (term.is_zero()) break;
      i = j;
    }
    r += term;
    check_budget(r.size());
  }
  return r;
}

MPoly apply_derivation(const MPoly& f, const std::function<MPoly(Var)>& image) {
  std::map<Var, MPoly> cache;
  MPoly r;
  for (const auto& [m, c] : f.terms()) {
    std::size_t i = 0;
    while (i < m.size()) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      auto it = cache.find(m[i]);
      if (it == cache.end()) it = cache.emplace(m[i], image(m[i])).first;
      if (!it->second.is_zero()) {
        Monomial rest(m.begin(), m.begin() + static_cast<long>(i));
        rest.insert(rest.end(), m.begin() + static_cast<long>(i) + 1, m.end());
        const Rational k = c * static_cast<long>(j - i);
        for (const auto& [mi, ci] : it->second.terms()) r.add_term(mono_mul(rest, mi), k * ci);
        check_budget(r.size());
      }
      i = j;
    }
  }
  return r;
}

}  // namespace glab
