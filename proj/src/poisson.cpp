#include "glab/poisson.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace glab {

namespace {

// distinct variables with exponents
std::vector<std::pair<Var, long>> runs(const Monomial& m) {
  std::vector<std::pair<Var, long>> r;
  for (Var v : m) {
    if (!r.empty() && r.back().first == v)
      ++r.back().second;
    else
      r.emplace_back(v, 1);
  }
  return r;
}

Monomial drop_one(const Monomial& m, Var v) {
  Monomial r;
  r.reserve(m.size());
  bool dropped = false;
  for (Var w : m) {
    if (!dropped && w == v) {
      dropped = true;
      continue;
    }
    r.push_back(w);
  }
  return r;
}

}  // namespace

MPoly poisson_bracket(const MPoly& f, const MPoly& g, const LinearBracket& t) {
  for (const MPoly* p : {&f, &g})
    for (Var v : p->variables())
      if (!t.in_range(v))
        throw std::out_of_range("poisson_bracket: variable x" + std::to_string(var_base(v)) + " t^" +
                                std::to_string(var_tdeg(v)) + " out of range");
  std::map<std::pair<Var, Var>, LinComb> cache;
  auto br = [&](Var u, Var v) -> const LinComb& {
    auto key = std::make_pair(u, v);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, t.bracket(u, v)).first;
    return it->second;
  };
  struct Prepared {
    const Monomial* m;
    const Rational* c;
    std::vector<std::pair<Var, long>> r;
  };
  auto prepare = [](const MPoly& p) {
    std::vector<Prepared> out;
    for (const auto& [m, c] : p.terms()) out.push_back({&m, &c, runs(m)});
    return out;
  };
  auto pf = prepare(f), pg = prepare(g);
  MPoly r;
  for (const auto& a : pf)
    for (const auto& b : pg)
      for (const auto& [u, eu] : a.r)
        for (const auto& [v, ev] : b.r) {
          const LinComb& l = br(u, v);
          if (l.empty()) continue;
          Monomial rest = mono_mul(drop_one(*a.m, u), drop_one(*b.m, v));
          Rational k = (*a.c) * (*b.c) * (eu * ev);
          for (const auto& [w, c] : l) {
            Monomial m = rest;
            m.insert(std::upper_bound(m.begin(), m.end(), w), w);
            r.add_term(m, k * c);
          }
          if (r.size() > term_budget()) throw BudgetExceeded("term budget exceeded in Poisson bracket");
        }
  return r;
}

Rational evaluate_at(const MPoly& f, const Ambient& amb, const QVector& gamma) {
  return f.eval([&](Var v) -> Rational {
    if (!amb.contains(v)) throw std::out_of_range("evaluate_at: variable outside ambient space");
    return gamma[static_cast<std::size_t>(amb.index(v))];
  });
}

QVector differential_at(const MPoly& f, const Ambient& amb, const QVector& gamma) {
  if (gamma.size() != static_cast<std::size_t>(amb.size())) throw std::invalid_argument("point has wrong dimension");
  QVector g(static_cast<std::size_t>(amb.size()));
  for (Var v : f.variables()) {
    if (!amb.contains(v)) throw std::out_of_range("differential_at: variable outside ambient space");
    g[static_cast<std::size_t>(amb.index(v))] = evaluate_at(f.derivative(v), amb, gamma);
  }
  return g;
}

std::size_t jacobian_rank_at(const std::vector<MPoly>& fs, const Ambient& amb, const QVector& gamma) {
  std::vector<QVector> rows;
  for (const auto& f : fs) rows.push_back(differential_at(f, amb, gamma));
  if (rows.empty()) return 0;
  return rank(QMatrix::from_rows(rows));
}

RankSearch trdeg_estimate(const std::vector<MPoly>& fs, const Ambient& amb, std::uint64_t seed,
                          const SamplingOptions& opt) {
  // derivatives once, evaluation per point
  std::vector<std::vector<std::pair<int, MPoly>>> grads;
  for (const auto& f : fs) {
    std::vector<std::pair<int, MPoly>> g;
    for (Var v : f.variables()) {
      if (!amb.contains(v)) throw std::out_of_range("trdeg_estimate: variable outside ambient space");
      g.emplace_back(amb.index(v), f.derivative(v));
    }
    grads.push_back(std::move(g));
  }
  auto build = [&](const QVector& pt) {
    QMatrix m(fs.size(), static_cast<std::size_t>(amb.size()));
    for (std::size_t i = 0; i < grads.size(); ++i)
      for (const auto& [u, d] : grads[i]) m(i, static_cast<std::size_t>(u)) = evaluate_at(d, amb, pt);
    return m;
  };
  if (fs.empty()) return {};
  return sampled_max_rank(static_cast<std::size_t>(amb.size()), build, seed, opt);
}

MPoly substitute_t(const MPoly& f, const UniPoly& r, int cutoff) {
  MPoly out = substitute(f, [&](Var v) {
    UniPoly ra = r.pow(var_tdeg(v));
    MPoly img;
    for (int c = 0; c <= ra.degree(); ++c) img.add_term({make_var(var_base(v), c)}, ra.coeff(c));
    return img;
  });
  if (out.max_tdeg() > cutoff)
    throw std::overflow_error("substitute_t: result t-degree " + std::to_string(out.max_tdeg()) + " exceeds cutoff " +
                              std::to_string(cutoff));
  return out;
}

MPoly psi_p(const MPoly& f, const UniPoly& p) {
  if (!p.is_monic() || p.degree() < 1) throw std::invalid_argument("psi_p: p must be monic of degree >= 1");
  std::map<int, UniPoly> rem;
  return substitute(f, [&](Var v) {
    int k = var_tdeg(v);
    auto it = rem.find(k);
    if (it == rem.end()) it = rem.emplace(k, poly_rem(UniPoly::monomial(k), p)).first;
    MPoly img;
    for (int c = 0; c <= it->second.degree(); ++c) img.add_term({make_var(var_base(v), c)}, it->second.coeff(c));
    return img;
  });
}

MPoly tau_apply(const MPoly& f, int k) {
  MPoly r = f;
  for (int i = 0; i < k; ++i)
    r = apply_derivation(r, [](Var v) {
      int a = var_tdeg(v);
      return MPoly::var(make_var(var_base(v), a + 1), a);
    });
  return r;
}

MPoly lower_t(const MPoly& f) {
  return substitute(f, [](Var v) {
    if (var_tdeg(v) < 1) throw std::invalid_argument("lower_t: variable of t-degree 0");
    return MPoly::var(make_var(var_base(v), var_tdeg(v) - 1));
  });
}

MPoly raise_t(const MPoly& f, int s) {
  return substitute(f, [s](Var v) { return MPoly::var(make_var(var_base(v), var_tdeg(v) + s)); });
}

MPoly directional_derivative(const MPoly& f, const QVector& gamma) {
  return apply_derivation(f, [&](Var v) {
    if (var_tdeg(v) != 0 || static_cast<std::size_t>(var_base(v)) >= gamma.size())
      throw std::out_of_range("directional_derivative: variable outside S(q)");
    return MPoly::constant(gamma[static_cast<std::size_t>(var_base(v))]);
  });
}

}  // namespace glab
