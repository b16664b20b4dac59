#include "glab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <set>
#include <sstream>

#include "glab/forms.hpp"
#include "glab/lie_index.hpp"
#include "glab/pencil.hpp"
#include "glab/poisson.hpp"
#include "glab/quadratic.hpp"

namespace glab {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  Json witness;
};

AlgebraPtr share(LieAlgebra q) { return std::make_shared<const LieAlgebra>(std::move(q)); }

std::string compact(const UniPoly& p) {
  std::string s = p.str();
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

std::string join(const QVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

Json vector_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

int expected_count(const std::vector<MPoly>& fs, int n) {
  int s = 0;
  for (const auto& f : fs) s += f.homogeneous_degree() * (n - 1) + 1;
  return s;
}

class Ctx {
 public:
  Ctx(const SuiteInfo& info, const SuiteSpec& spec, const RunOptions& opt, Report& rep)
      : info_(info), spec_(spec), opt_(opt), rep_(rep) {
    for (const auto& [k, v] : spec.params) {
      const bool known = std::any_of(info.params.begin(), info.params.end(), [&](const ParamInfo& p) { return p.key == k; });
      if (!known) {
        std::string keys;
        for (const auto& p : info.params) keys += (keys.empty() ? "" : ", ") + p.key;
        throw InputError("suite " + info.name + " has no parameter '" + k + "' (accepted: " +
                         (keys.empty() ? "none" : keys) + ")");
      }
    }
    for (const auto& p : info.params) {
      const auto it = spec.params.find(p.key);
      const std::string v = it == spec.params.end() ? p.fallback : it->second;
      if (!v.empty()) rep.params[p.key] = v;
    }
  }

  std::uint64_t seed() const { return spec_.seed; }
  bool has_algebra() const { return !spec_.algebra.empty(); }
  bool given(const std::string& key) const { return spec_.params.count(key) > 0; }

  std::string get(const std::string& key) const {
    const auto it = rep_.params.find(key);
    return it == rep_.params.end() ? std::string() : it->second;
  }

  int get_int(const std::string& key, int lo, int hi) const {
    const std::string v = get(key);
    try {
      std::size_t pos = 0;
      const int x = std::stoi(v, &pos);
      if (pos == v.size() && x >= lo && x <= hi) return x;
    } catch (const std::exception&) {
    }
    throw InputError("parameter " + key + " must be an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                     "], got '" + v + "'");
  }

  std::vector<int> get_ints(const std::string& key, int lo, int hi) const {
    std::vector<int> out;
    for (const auto& s : split(get(key), ',')) {
      try {
        std::size_t pos = 0;
        const int x = std::stoi(s, &pos);
        if (pos == s.size() && x >= lo && x <= hi) {
          out.push_back(x);
          continue;
        }
      } catch (const std::exception&) {
      }
      throw InputError("parameter " + key + " must list integers in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    if (out.empty()) throw InputError("parameter " + key + " is empty");
    return out;
  }

  std::vector<PolyInput> get_polys(const std::string& key) const { return polys_of(get(key), key); }

  static std::vector<PolyInput> polys_of(const std::string& v, const std::string& key) {
    std::vector<PolyInput> out;
    for (const auto& s : split(v, ';')) out.push_back(parse_poly_input(s));
    if (out.empty()) throw InputError("parameter " + key + " is empty");
    return out;
  }

  std::vector<std::pair<UniPoly, UniPoly>> get_pencils(const std::string& key) const {
    return pencils_of(get(key), key);
  }

  static std::vector<std::pair<UniPoly, UniPoly>> pencils_of(const std::string& v, const std::string& key) {
    std::vector<std::pair<UniPoly, UniPoly>> out;
    for (const auto& s : split(v, ';')) {
      const auto parts = split(s, ',');
      if (parts.size() != 2) throw InputError("parameter " + key + " expects p1,p2;p1,p2;...");
      out.emplace_back(parse_poly_input(parts[0]).p, parse_poly_input(parts[1]).p);
    }
    if (out.empty()) throw InputError("parameter " + key + " is empty");
    return out;
  }

  QVector get_rationals(const std::string& key) const { return parse_rational_list(get(key)); }

  std::vector<std::string> algebras(const std::vector<std::string>& defaults) const {
    return has_algebra() ? std::vector<std::string>{spec_.algebra} : defaults;
  }

  AlgebraPtr algebra(const std::string& name) {
    auto it = cache_.find(name);
    if (it == cache_.end()) it = cache_.emplace(name, share(parse_algebra(name))).first;
    return it->second;
  }

  const std::vector<MPoly>& invariants(const std::string& name) {
    auto it = inv_.find(name);
    if (it == inv_.end()) {
      auto q = algebra(name);
      auto fs = basic_invariants(*q);
      if (fs.empty()) throw InputError("algebra " + name + " has no basic invariants within the search range");
      it = inv_.emplace(name, std::move(fs)).first;
    }
    return it->second;
  }

  int index_of(const std::string& name) {
    auto it = ind_.find(name);
    if (it == ind_.end()) it = ind_.emplace(name, lie_index(algebra(name), seed()).index).first;
    return it->second;
  }

  Pencil pencil(const std::string& name, const UniPoly& p1, const UniPoly& p2) {
    try {
      return make_pencil(algebra(name), p1, p2);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }

  void check(const std::string& name, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = body();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (opt_.time_cap > 0 && secs > opt_.time_cap)
      throw TimeCapExceeded("check " + name + " exceeded the time cap of " + std::to_string(opt_.time_cap) + " s");
    Check c;
    c.name = name;
    c.pass = o.pass;
    c.detail = std::move(o.detail);
    c.witness = o.pass ? Json() : std::move(o.witness);
    c.seconds = secs;
    rep_.checks.push_back(std::move(c));
  }

 private:
  const SuiteInfo& info_;
  const SuiteSpec& spec_;
  const RunOptions& opt_;
  Report& rep_;
  std::map<std::string, AlgebraPtr> cache_;
  std::map<std::string, std::vector<MPoly>> inv_;
  std::map<std::string, int> ind_;
};

const std::vector<std::string> kCriterionAlgebras{"sl2", "sl3", "abelian:3", "takiff:sl2:2"};
const char* const kCriterionPolys = "t^2;t^2-1;t^2-t;t^3;t^3-t;t^3+t+1";

void require_form(Ctx& ctx, const std::string& name) {
  if (!ctx.algebra(name)->has_form()) throw InputError("algebra " + name + " has no invariant form");
}

// criterion 1
void suite_jacobi(Ctx& ctx) {
  const auto ps = ctx.get_polys("p");
  if (ctx.given("n")) {
    const int n = ctx.get_int("n", 1, 64);
    for (const auto& p : ps)
      if (p.p.degree() != n) throw InputError("p = " + compact(p.p) + " does not have degree n = " + std::to_string(n));
  }
  for (const auto& name : ctx.algebras(kCriterionAlgebras))
    for (const auto& p : ps) {
      auto q = ctx.algebra(name);
      ctx.check("jacobi/" + name + "/" + compact(p.p), [&] {
        const BracketTable t = make_quotient(q, p.p);
        const LieCheck a = check_antisymmetry(t), j = check_jacobi(t);
        Outcome o;
        o.pass = a.ok && j.ok;
        o.detail = "dim W = " + std::to_string(t.size()) + ", all basis pairs and triples";
        if (!a.ok) o.witness = "antisymmetry: " + a.witness;
        else if (!j.ok) o.witness = "jacobi: " + j.witness;
        return o;
      });
    }
}

// criterion 2
void suite_pencil_closure(Ctx& ctx) {
  const auto pens = ctx.get_pencils("pencils");
  const int count = ctx.get_int("pairs", 1, 1000);
  PointSampler sampler(ctx.seed());
  std::vector<std::pair<Rational, Rational>> pairs;
  while (static_cast<int>(pairs.size()) < count) {
    const QVector v = sampler.sample(4, 12);
    const Rational a = v[0] / (abs(v[1]) + 1), b = v[2] / (abs(v[3]) + 1);
    if (a + b == 0) continue;
    pairs.emplace_back(a, b);
  }
  std::string listed;
  for (const auto& [a, b] : pairs) listed += (listed.empty() ? "" : " ") + ("(" + to_string(a) + "," + to_string(b) + ")");
  for (const auto& name : ctx.algebras({"sl2", "sl3"}))
    for (const auto& [p1, p2] : pens) {
      const Pencil pen = ctx.pencil(name, p1, p2);
      const std::string label = name + "/" + compact(p1) + "," + compact(p2);
      const BracketTable t1 = make_quotient(pen.base, p1), t2 = make_quotient(pen.base, p2);
      ctx.check("jacobi/" + label, [&] {
        Outcome o{true, std::to_string(pairs.size()) + " pairs " + listed, Json()};
        for (const auto& [a, b] : pairs) {
          const LieCheck c = check_jacobi(combine(a, t1, b, t2));
          if (!c.ok) return Outcome{false, o.detail, "a=" + to_string(a) + " b=" + to_string(b) + ": " + c.witness};
        }
        return o;
      });
      ctx.check("affine/" + label, [&] {
        Outcome o{true, "same pairs rescaled to a + b = 1", Json()};
        for (const auto& [a0, b0] : pairs) {
          const Rational a = a0 / (a0 + b0), b = b0 / (a0 + b0);
          std::string w;
          if (!same_entries(combine(a, t1, b, t2), make_quotient(pen.base, a * p1 + b * p2), &w))
            return Outcome{false, o.detail, "a=" + to_string(a) + " b=" + to_string(b) + ": " + w};
        }
        return o;
      });
    }
}

// criterion 3
void suite_index(Ctx& ctx) {
  const auto ps = ctx.get_polys("p");
  const auto diffs = ctx.get_pencils("diff");
  const int s = ctx.get_int("contract", 2, 1000);
  for (const auto& name : ctx.algebras(kCriterionAlgebras)) {
    auto q = ctx.algebra(name);
    const int ind = ctx.index_of(name);
    for (const auto& p : ps) {
      const int n = p.p.degree();
      const BracketTable t = make_quotient(q, p.p);
      ctx.check("quotient/" + name + "/" + compact(p.p), [&] {
        const IndexResult r = lie_index(t, ctx.seed());
        return Outcome{r.index == n * ind,
                       "ind W = " + std::to_string(r.index) + ", n ind q = " + std::to_string(n * ind),
                       {{"point", vector_json(r.search.witness)}, {"rank", r.search.rank}}};
      });
      ctx.check("contraction/" + name + "/" + compact(p.p), [&] {
        const BracketTable c = contract_phi_s(t, s);
        const LieCheck j = check_jacobi(c);
        const int a = lie_index(c, ctx.seed()).index, b = lie_index(t, ctx.seed()).index;
        return Outcome{j.ok && a == b, "s = " + std::to_string(s) + ", ind " + std::to_string(a) + " vs " + std::to_string(b),
                       j.witness};
      });
    }
  }
  for (const auto& name : ctx.algebras({"sl2"})) {
    auto q = ctx.algebra(name);
    const int ind = ctx.index_of(name);
    for (const auto& [p1, p2] : diffs) {
      ctx.check("difference/" + name + "/" + compact(p1) + "," + compact(p2), [&] {
        BracketTable d = [&] {
          try {
            return make_difference_bracket(q, p1, p2);
          } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
          }
        }();
        const int n = p1.degree();
        const IndexResult r = lie_index(d, ctx.seed());
        const int want = q->dim() + (n - 1) * ind;
        return Outcome{r.index == want, "ind = " + std::to_string(r.index) + ", dim q + (n-1) ind q = " + std::to_string(want),
                       {{"point", vector_json(r.search.witness)}, {"rank", r.search.rank}}};
      });
    }
  }
}

RootData split_roots(const PolyInput& p) {
  if (p.roots) return *p.roots;
  auto rd = rational_roots(p.p);
  if (!rd) throw InputError("p = " + compact(p.p) + " does not split over Q");
  return *rd;
}

// criterion 4
void suite_crt(Ctx& ctx) {
  const auto ps = ctx.get_polys("p");
  const QVector alphas = ctx.get_rationals("alpha");
  for (const auto& p : ps) {
    const RootData rd = split_roots(p);
    if (!rd.simple()) throw InputError("p = " + compact(p.p) + " has a repeated root");
    ctx.check("idempotents/" + compact(p.p), [&] {
      const auto r = crt_idempotents(p.p, rd);
      UniPoly sum;
      for (std::size_t i = 0; i < r.size(); ++i) {
        sum += r[i];
        for (std::size_t j = 0; j < r.size(); ++j)
          if (poly_rem(r[i] * r[j], p.p) != (i == j ? r[i] : UniPoly()))
            return Outcome{false, "", "r_" + std::to_string(i) + " r_" + std::to_string(j)};
      }
      const bool one = poly_rem(sum, p.p) == UniPoly(1);
      return Outcome{one, std::to_string(r.size()) + " idempotents", one ? Json() : Json("sum of r_i")};
    });
  }
  for (const auto& name : ctx.algebras({"sl2", "sl3"})) {
    auto q = ctx.algebra(name);
    for (const auto& p : ps) {
      const RootData rd = split_roots(p);
      ctx.check("iso/" + name + "/" + compact(p.p), [&] {
        const LieCheck c = check_crt_isomorphism(q, p.p, rd);
        return Outcome{c.ok, "cross brackets vanish, diagonal brackets match", c.witness};
      });
      const auto& fs = ctx.invariants(name);
      ctx.check("centre/" + name + "/" + compact(p.p), [&] {
        const GeneratorSet g = crt_generators(*q, fs, p.p, rd);
        const BracketTable t = make_quotient(q, p.p);
        const std::size_t want = fs.size() * static_cast<std::size_t>(p.p.degree());
        Outcome o{g.entries.size() == want,
                  std::to_string(g.entries.size()) + " generators, expected " + std::to_string(want), Json()};
        for (const auto& e : g.entries) {
          std::string w;
          if (!is_central(e.poly, t, &w)) {
            o.pass = false;
            o.witness = {{"recipe", e.recipe.str()}, {"poly", poly_json(e.poly, *q)}, {"bracket", w}};
            break;
          }
        }
        return o;
      });
    }
    if (q->sl_rank() >= 2 && q->sl_rank() <= 3)
      for (const auto& a : alphas) {
        if (a == 0) throw InputError("alpha must be nonzero");
        ctx.check("minus-t/" + name + "/alpha=" + to_string(a), [&] {
          const MinusTCheck r = example_minus_t(ctx.invariants(name).back(), a);
          return Outcome{r.root_zero && r.other_roots, "p = t^3 - alpha^2 t",
                         Json{{"root_zero", r.root_zero}, {"other_roots", r.other_roots}}};
        });
      }
  }
}

// criterion 5
void suite_takiff(Ctx& ctx) {
  std::vector<std::pair<std::string, std::vector<int>>> cases;
  if (ctx.has_algebra() || ctx.given("n"))
    for (const auto& name : ctx.algebras({"sl2", "sl3"})) cases.emplace_back(name, ctx.get_ints("n", 1, 8));
  else
    cases = {{"sl2", {2, 3}}, {"sl3", {2}}};
  for (const auto& [name, ns] : cases) {
    auto q = ctx.algebra(name);
    const auto& fs = ctx.invariants(name);
    for (const int n : ns) {
      const GeneratorSet g = takiff_generators(*q, fs, n);
      const std::size_t want = fs.size() * static_cast<std::size_t>(n);
      const std::string label = name + "/n=" + std::to_string(n);
      ctx.check("central/" + label, [&] {
        const BracketTable t = make_quotient(q, UniPoly::monomial(n));
        Outcome o{g.entries.size() == want, std::to_string(g.entries.size()) + " generators, n m = " + std::to_string(want),
                  Json()};
        for (const auto& e : g.entries) {
          std::string w;
          if (!is_central(e.poly, t, &w)) {
            o.pass = false;
            o.witness = {{"recipe", e.recipe.str()}, {"poly", poly_json(e.poly, *q)}, {"bracket", w}};
            break;
          }
        }
        return o;
      });
      ctx.check("rank/" + label, [&] {
        const RankSearch r = trdeg_estimate(g.polys(), Ambient{q->dim(), n}, ctx.seed());
        return Outcome{r.rank == want, "Jacobian rank " + std::to_string(r.rank) + " of " + std::to_string(want),
                       {{"point", vector_json(r.witness)}, {"rank", r.rank}}};
      });
    }
  }
}

std::vector<std::pair<std::string, std::pair<UniPoly, UniPoly>>> z_cases(Ctx& ctx) {
  std::vector<std::pair<std::string, std::pair<UniPoly, UniPoly>>> out;
  if (ctx.has_algebra() || ctx.given("pencils")) {
    for (const auto& name : ctx.algebras({"sl2"}))
      for (const auto& pen : ctx.get_pencils("pencils")) out.emplace_back(name, pen);
  } else {
    for (const auto& pen : Ctx::pencils_of("t^2,t^2+t;t^2,t^2+1;t^3,t^3+t", "pencils")) out.emplace_back("sl2", pen);
    out.emplace_back("sl3", Ctx::pencils_of("t^2,t^2+t", "pencils")[0]);
  }
  return out;
}

// a basis pair with a nonzero bracket, second index as large as possible
std::optional<std::pair<int, int>> noncommuting_pair(const LieAlgebra& q) {
  for (int i = 0; i < q.dim(); ++i)
    for (int j = q.dim() - 1; j > i; --j)
      if (!q.bracket(i, j).empty()) return std::make_pair(i, j);
  return std::nullopt;
}

// criterion 6
void suite_zassembly(Ctx& ctx) {
  const int samples = ctx.get_int("samples", 0, 1000);
  for (const auto& [name, pp] : z_cases(ctx)) {
    const Pencil pen = ctx.pencil(name, pp.first, pp.second);
    auto q = pen.base;
    const auto& fs = ctx.invariants(name);
    const int n = pen.n();
    const std::string label = name + "/" + compact(pp.first) + "," + compact(pp.second);
    const ZAlgebra z = build_Z(pen, fs, samples, ctx.seed());
    const int ind = ctx.index_of(name);
    ctx.check("count/" + label, [&] {
      const int got = static_cast<int>(z.gens.entries.size());
      const int sum = expected_count(fs, n);
      const Rational alt = (n - 1) * bound_b(q->dim(), ind, n).b + static_cast<long>(fs.size());
      return Outcome{got == sum && alt == sum,
                     std::to_string(got) + " generators, sum d_i(n-1)+1 = " + std::to_string(sum) + ", (n-1)b(q)+m = " +
                         to_string(alt),
                     Json()};
    });
    ctx.check("blocks/" + label, [&] {
      std::vector<int> got, want;
      for (const auto& b : z.blocks) {
        got.push_back(static_cast<int>(b.coords.size()));
        want.push_back(b.expected);
      }
      return Outcome{z.complete, "block dims " + join_ints(got) + ", expected " + join_ints(want), Json()};
    });
    ctx.check("commute/" + label, [&] {
      const CommuteReport r = verify_Z_commutes(z);
      return Outcome{r.ok, std::to_string(r.pairs) + " pairs under both end brackets", r.failures};
    });
    ctx.check("trdeg/" + label, [&] {
      const RankSearch r = trdeg_estimate(z.gens.polys(), Ambient{q->dim(), n}, ctx.seed());
      return Outcome{Rational(static_cast<long>(r.rank)) == z.bound,
                     "trdeg " + std::to_string(r.rank) + ", b(q,n) = " + to_string(z.bound),
                     {{"point", vector_json(r.witness)}, {"rank", r.rank}}};
    });
    ctx.check("recipes/" + label, [&] {
      for (const auto& g : z.gens.entries)
        if (regenerate(g, fs, n) != g.poly)
          return Outcome{false, "", {{"recipe", g.recipe.str()}, {"poly", poly_json(g.poly, *q)}}};
      return Outcome{true, "every generator re-derived from its recipe", Json()};
    });
    if (const auto pr = noncommuting_pair(*q)) {
      ctx.check("negative-control/" + label, [&] {
        auto gens = z.gens.polys();
        gens.back() = MPoly::var(make_var(pr->first, 0)) * MPoly::var(make_var(pr->second, 1));
        const CommuteReport r = verify_commutes(gens, pen);
        return Outcome{!r.ok, "last generator replaced by " + poly_str(gens.back(), *q) + ": bracket detected", Json()};
      });
    }
    if (n == 2) {
      ctx.check("mf/" + label, [&] {
        PointSampler s(ctx.seed());
        const QVector gamma = s.sample(static_cast<std::size_t>(q->dim()), 5);
        const MFReport r = mf_image(z, gamma);
        return Outcome{r.contains_mf && r.mf_commutes,
                       "gamma = (" + join(gamma) + "), image rank " + std::to_string(r.image_rank),
                       {{"contains_mf", r.contains_mf}, {"mf_commutes", r.mf_commutes}}};
      });
    }
  }
}

// criterion 7
void suite_gaudin(Ctx& ctx) {
  std::vector<std::pair<std::string, QVector>> cases;
  if (ctx.has_algebra() || ctx.given("z"))
    for (const auto& name : ctx.algebras({"sl2"})) cases.emplace_back(name, ctx.get_rationals("z"));
  else
    cases = {{"sl2", {1, 2, 5}}, {"sl3", {1, 2}}};
  for (const auto& [name, z] : cases) {
    require_form(ctx, name);
    auto q = ctx.algebra(name);
    if (std::set<Rational>(z.begin(), z.end()).size() != z.size()) throw InputError("z must be distinct");
    const auto hs = gaudin_hamiltonians(*q, z);
    const std::string label = name + "/z=" + join(z);
    ctx.check("sum/" + label, [&] {
      MPoly sum;
      for (const auto& h : hs) sum += h;
      return Outcome{sum.is_zero(), std::to_string(hs.size()) + " Hamiltonians", poly_json(sum, *q)};
    });
    ctx.check("commute/" + label, [&] {
      const auto power = share(make_direct_power(*q, static_cast<int>(z.size())));
      const BracketTable t = table_of(power);
      for (std::size_t k = 0; k < hs.size(); ++k)
        for (std::size_t s = k + 1; s < hs.size(); ++s) {
          const MPoly b = poisson_bracket(hs[k], hs[s], t);
          if (!b.is_zero())
            return Outcome{false, "", {{"k", k}, {"s", s}, {"bracket", poly_json(b, *power)}}};
        }
      return Outcome{true, "all pairs", Json()};
    });
  }
  const QVector a = ctx.get_rationals("bhgo");
  for (const auto& name : ctx.algebras({"sl2"})) {
    require_form(ctx, name);
    auto q = ctx.algebra(name);
    if (std::set<Rational>(a.begin(), a.end()).size() != a.size()) throw InputError("bhgo roots must be distinct");
    if (std::count(a.begin(), a.end(), Rational(0))) throw InputError("bhgo roots must be nonzero");
    std::vector<std::pair<Rational, int>> roots;
    QVector z;
    for (const auto& r : a) {
      roots.emplace_back(r, 1);
      z.push_back(1 / r);
    }
    const UniPoly p = UniPoly::from_roots(roots);
    ctx.check("bhGo/" + name + "/" + compact(p), [&] {
      const RootData rd{roots};
      const auto r = crt_idempotents(p, rd);
      const auto hs = gaudin_hamiltonians(*q, z);
      MPoly rhs;
      for (std::size_t k = 0; k < a.size(); ++k) {
        rhs -= transport_to_quotient(hs[k], q->dim(), r, p) * (2 * a[k]);
        rhs += quad_h_res(*q, r[k], r[k], p) * (a[k] * a[k]);
      }
      const MPoly diff = quad_h(*q, 1, 1, p) - rhs;
      return Outcome{diff.is_zero(), "h = sum a_k^2 h[r_k,r_k] - 2 sum a_k H_k(1/a)", poly_json(diff, *q)};
    });
  }
}

// criterion 8
void suite_quadratic(Ctx& ctx) {
  const int m = ctx.get_int("cx_max", 0, 6);
  const auto claim_n = ctx.get_ints("claim_n", 1, 8);
  const auto claim2 = ctx.get_polys("claim2_p");
  const auto qh11 = ctx.get_polys("qh11_p");
  const auto ph = ctx.get_ints("ph_n", 1, 6);
  for (const auto& p : qh11)
    if (p.p.degree() < 3) throw InputError("qh11_p needs degree >= 3");
  for (const auto& name : ctx.algebras({"sl2"})) {
    require_form(ctx, name);
    auto q = ctx.algebra(name);
    ctx.check("cX/" + name + "/max=" + std::to_string(m), [&] {
      const CurrentBracket br(q);
      int count = 0;
      for (int a = 0; a <= m; ++a)
        for (int b = 0; b <= m; ++b)
          for (int c = 0; c <= m; ++c)
            for (int d = 0; d <= m; ++d) {
              const MPoly lhs = poisson_bracket(quad_H(*q, a, b), quad_H(*q, c, d), br);
              const MPoly rhs = quad_X(*q, b, d, a + c) + quad_X(*q, b, c, a + d) + quad_X(*q, a, d, b + c) +
                                quad_X(*q, a, c, b + d);
              ++count;
              if (lhs != rhs) return Outcome{false, "", {{"abcd", {a, b, c, d}}, {"difference", poly_json(lhs - rhs, *q)}}};
            }
      return Outcome{true, std::to_string(count) + " quadruples", Json()};
    });
    for (const int n : claim_n)
      ctx.check("claim/" + name + "/t^" + std::to_string(n), [&] {
        const int d = centralizer_dim_h(q, UniPoly::monomial(n));
        return Outcome{d == 2 * n - 1, "dim = " + std::to_string(d) + ", 2n-1 = " + std::to_string(2 * n - 1), Json()};
      });
    for (const auto& p : claim2) {
      const int n = p.p.degree();
      ctx.check("claim2/" + name + "/" + compact(p.p), [&] {
        const int d = centralizer_dim_h01(q, p.p), dh = centralizer_dim_h(q, p.p);
        return Outcome{d == 2 * n - 1 && dh <= 2 * n - 1,
                       "dim P_h[0,1] = " + std::to_string(d) + ", dim P_h = " + std::to_string(dh) + ", 2n-1 = " +
                           std::to_string(2 * n - 1),
                       Json()};
      });
    }
    for (const auto& p : qh11)
      ctx.check("prop-qh11/" + name + "/" + compact(p.p), [&] {
        const MPoly xe = lemma_x_element(*q, p.p);
        std::string w1, w2;
        const bool a = is_central(xe, make_quotient(q, p.p), &w1);
        const bool b =
            is_central(xe - quad_h(*q, 1, 1, p.p) * Rational(1, 2), make_quotient(q, p.p + UniPoly::t()), &w2);
        Outcome o{a && b, "X central for p, X - h/2 central for p + t", Json()};
        if (!o.pass) o.witness = {{"X", poly_json(xe, *q)}, {"p", w1}, {"p+t", w2}};
        return o;
      });
    for (const int n : ph)
      ctx.check("P-H/" + name + "/n=" + std::to_string(n), [&] {
        const PHCheck r = lemma_ph_check(q, 2 * n);
        return Outcome{r.kernel_dim == 2 * n + 1 && r.matches_tilde,
                       "kernel dim " + std::to_string(r.kernel_dim) + ", expected " + std::to_string(2 * n + 1) +
                           (r.matches_tilde ? ", spanned by H~[j]" : ", not spanned by H~[j]"),
                       Json()};
      });
  }
}

// criterion 9
void suite_psi_tau(Ctx& ctx) {
  const auto ps = ctx.get_polys("p");
  for (const auto& name : ctx.algebras({"sl2"})) {
    const auto& fs = ctx.invariants(name);
    auto q = ctx.algebra(name);
    for (const auto& p : ps) {
      const int n = p.p.degree();
      for (std::size_t i = 0; i < fs.size(); ++i) {
        const int d = fs[i].homogeneous_degree();
        ctx.check("dimY2/" + name + "/" + compact(p.p) + "/F" + std::to_string(i), [&] {
          const int got = static_cast<int>(tilde_V_span(fs[i], p.p, d * (n - 1) + n).size());
          const int want = d * (n - 1) + 1;
          return Outcome{got == want, "deg F = " + std::to_string(d) + ", dim " + std::to_string(got) + ", d(n-1)+1 = " +
                                          std::to_string(want),
                         Json()};
        });
      }
    }
  }
  for (const auto& [name, pp] : z_cases(ctx)) {
    const Pencil pen = ctx.pencil(name, pp.first, pp.second);
    const ZAlgebra z = build_Z(pen, ctx.invariants(name), 0, ctx.seed());
    ctx.check("bound-dim/" + name + "/" + compact(pp.first) + "," + compact(pp.second), [&] {
      std::vector<int> got, want;
      bool ok = true;
      for (const auto& b : z.blocks) {
        got.push_back(static_cast<int>(b.coords.size()));
        want.push_back(b.degree * (pen.n() - 1) + 1);
        ok = ok && got.back() >= want.back();
      }
      return Outcome{ok, "block dims " + join_ints(got) + " >= " + join_ints(want), Json()};
    });
  }
}

// criterion 10
void suite_sovp(Ctx& ctx) {
  std::vector<std::pair<std::string, PolyInput>> cases;
  if (ctx.has_algebra() || ctx.given("p")) {
    for (const auto& name : ctx.algebras({"sl2"}))
      for (const auto& p : ctx.get_polys("p")) cases.emplace_back(name, p);
  } else {
    for (const auto& p : Ctx::polys_of("t^2-1;t^3+t+1", "p")) cases.emplace_back("sl2", p);
    cases.emplace_back("sl3", Ctx::polys_of("t^2-1", "p")[0]);
  }
  for (const auto& [name, p] : cases) {
    if (p.p.coeff(0) == 0) throw InputError("sovp needs p(0) != 0");
    auto q = ctx.algebra(name);
    const auto& fs = ctx.invariants(name);
    const std::string label = name + "/" + compact(p.p);
    ctx.check("sovp/" + label, [&] {
      const SovpReport r = check_sovp(q, fs, p.p);
      return Outcome{r.ok, "psi_p(Z(q^,t)) dims " + join_ints(r.tilde_dims) + ", Z(p,p+t) dims " + join_ints(r.z_dims),
                     Json()};
    });
    ctx.check("gzu/" + label, [&] {
      const SovpReport r = check_gzu(q, fs, p.p);
      return Outcome{r.ok, "lowest components dims " + join_ints(r.tilde_dims) + ", Z(p,p+1) dims " + join_ints(r.z_dims),
                     Json()};
    });
  }
}

// criterion 11
void suite_det_a(Ctx& ctx) {
  if (ctx.has_algebra()) throw InputError("det-A takes no algebra");
  const int jmax = ctx.get_int("jmax", 4, 40);
  const int kd = ctx.get_int("kdmax", 1, 20);
  const int umax = ctx.get_int("umax", 2, 200);
  for (int j = 4; j <= jmax; ++j)
    ctx.check("A_j/j=" + std::to_string(j), [&] {
      const Rational d = det(matrix_A(j));
      return Outcome{d == 1, "det = " + to_string(d), Json()};
    });
  for (int k = 1; k <= kd; ++k)
    for (int d = 1; d <= kd; ++d)
      ctx.check("A_kd/k=" + std::to_string(k) + ",d=" + std::to_string(d), [&] {
        const Rational v = det(matrix_A_kd(k, d));
        return Outcome{v == 1, "det = " + to_string(v), Json()};
      });
  ctx.check("binomial/u<=" + std::to_string(umax), [&] {
    int count = 0;
    for (int u = 2; u <= umax; ++u)
      for (int b = 1; b < u; ++b, ++count)
        if (!binom_identity_check(u, b)) return Outcome{false, "", {{"u", u}, {"b", b}}};
    return Outcome{true, std::to_string(count) + " pairs (u, b)", Json()};
  });
}

KVec parse_kvec(const std::string& s) {
  KVec k;
  for (const auto& x : split(s, ',')) {
    try {
      k.push_back(std::stoi(x));
    } catch (const std::exception&) {
      throw InputError("bad k vector '" + s + "'");
    }
    if (k.back() < 0) throw InputError("k entries must be nonnegative");
  }
  if (k.empty() || !std::is_sorted(k.begin(), k.end())) throw InputError("k must be a nonempty weakly increasing list");
  return k;
}

// criterion 12
void suite_forms(Ctx& ctx) {
  const int mmax = ctx.get_int("mmax", 0, 5);
  std::vector<KVec> ks;
  for (const auto& s : split(ctx.get("k"), ';')) ks.push_back(parse_kvec(s));
  if (ks.empty()) throw InputError("parameter k is empty");
  for (const auto& name : ctx.algebras({"sl2"})) {
    require_form(ctx, name);
    auto q = ctx.algebra(name);
    const auto& fs = ctx.invariants(name);
    for (std::size_t fi = 0; fi < fs.size(); ++fi) {
      const int d = fs[fi].homogeneous_degree();
      for (int m = 0; m <= mmax; ++m)
        ctx.check("univ/" + name + "/F" + std::to_string(fi) + "/M=" + std::to_string(m), [&] {
          int count = 0;
          for (const auto& alpha : alpha_tuples(d + 1, m))
            for (int i = 0; i <= m; ++i) {
              if (alpha[static_cast<std::size_t>(i)] == 0) continue;
              MPoly sum;
              for (int j = 0; j <= m; ++j)
                if (j != i) sum += script_f(*q, fs[fi], alpha, i, j);
              ++count;
              if (!sum.is_zero())
                return Outcome{false, "", {{"alpha", alpha}, {"i", i}, {"sum", poly_json(sum, *q)}}};
            }
          return Outcome{true, std::to_string(count) + " pairs (alpha, i) with d+1 = " + std::to_string(d + 1), Json()};
        });
    }
    for (const auto& k : ks) {
      std::string kl = "(";
      for (std::size_t i = 0; i < k.size(); ++i) kl += (i ? "," : "") + std::to_string(k[i]);
      kl += ")";
      ctx.check("ff-br/" + name + "/k=" + kl, [&] {
        const auto monos = monomials_of_degree(q->dim(), static_cast<int>(k.size()));
        for (const auto& mono : monos) {
          MPoly y;
          y.add_term(mono, 1);
          const FFCheck r = ff_bracket_decomposition(q, y, k);
          if (!r.holds)
            return Outcome{false, "", {{"Y", poly_str(y, *q)}, {"difference", poly_json(r.lhs - r.rhs, *q)}}};
        }
        return Outcome{true, std::to_string(monos.size()) + " monomials Y of degree " + std::to_string(k.size()), Json()};
      });
    }
  }
}

using SuiteFn = void (*)(Ctx&);

struct Entry {
  SuiteInfo info;
  SuiteFn fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all{
      {{"jacobi", "antisymmetry and Jacobi for W(q,n)", {{"p", kCriterionPolys, "';'-separated polynomials"}, {"n", "", "required degree"}}},
       suite_jacobi},
      {{"pencil-closure",
        "a[,]_p1 + b[,]_p2 is a Lie bracket, equal to [,]_{a p1 + b p2} when a + b = 1",
        {{"pencils", "t^2,t^2+t;t^3,t^3+1;t^2-1,t^2+t", "p1,p2;..."}, {"pairs", "10", "random (a, b) pairs"}}},
       suite_pencil_closure},
      {{"index",
        "ind W(q,n) = n ind q; ind of the difference bracket; contraction invariance",
        {{"p", kCriterionPolys, "';'-separated polynomials"},
         {"diff", "t^2,t^2+t;t^2,t^2+1;t^3,t^3+t;t^3,t^3+1", "p1,p2;... for difference brackets"},
         {"contract", "3", "contraction parameter s"}}},
       suite_index},
      {{"crt",
        "CRT idempotents, the isomorphism onto q^n, central generators, the t^3 - alpha^2 t example",
        {{"p", "t^2-1;t^2-t;t^3-t", "polynomials with distinct rational roots"}, {"alpha", "2,-3,1/2", "alpha values"}}},
       suite_crt},
      {{"takiff", "Takiff generators are central with full Jacobian rank", {{"n", "2,3", "orders n"}}}, suite_takiff},
      {{"zassembly",
        "Z(p1,p2): count, commutativity, transcendence degree, recipes, negative control, Mishchenko-Fomenko image",
        {{"pencils", "t^2,t^2+t;t^2,t^2+1;t^3,t^3+t", "p1,p2;..."}, {"samples", "0", "sampled members, 0 for default"}}},
       suite_zassembly},
      {{"gaudin-commute",
        "Gaudin Hamiltonians sum to zero and commute; h through the CRT identification",
        {{"z", "1,2,5", "spectral parameters"}, {"bhgo", "1,2,3", "roots a_k of p"}}},
       suite_gaudin},
      {{"quadratic",
        "brackets of H[a,b], Poisson centralisers of h and h[0,1], the element X, the P-H kernel",
        {{"cx_max", "2", "max index in the H[a,b] bracket formula"},
         {"claim_n", "2,3,4", "n for p = t^n"},
         {"claim2_p", "t^2-1;t^3+t+1;t^3-1;t^4-2t+3", "polynomials for the h[0,1] bound"},
         {"qh11_p", "t^3;t^3-1;t^3+t+1", "polynomials of degree >= 3"},
         {"ph_n", "2,3", "n for the P-H kernel"}}},
       suite_quadratic},
      {{"psi-tau",
        "dim psi_p(tau^k F[t]) = d(n-1)+1; the assembled Z meets the lower bound",
        {{"p", "t^2-1;t^3-1;t^3+t+1", "polynomials"}, {"pencils", "t^2,t^2+t;t^2,t^2+1;t^3,t^3+t", "p1,p2;..."}}},
       suite_psi_tau},
      {{"sovp", "psi_p(Z(q^,t)) = Z(p,p+t) and the gzu analogue for Z(p,p+1)", {{"p", "t^2-1", "polynomials with p(0) != 0"}}},
       suite_sovp},
      {{"det-A",
        "det A_j = 1, det A_{k,d} = 1, binomial identity",
        {{"jmax", "12", ""}, {"kdmax", "8", ""}, {"umax", "20", ""}}},
       suite_det_a},
      {{"forms", "sum rule for F[alpha,i,j] and the bracket decomposition", {{"mmax", "3", ""}, {"k", "0,1;1,1;1,2", "k vectors"}}},
       suite_forms},
  };
  return all;
}

}  // namespace

const std::vector<SuiteInfo>& registered_suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

Report run_suite(const SuiteSpec& spec, const RunOptions& opt) {
  const auto& all = entries();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Entry& e) { return e.info.name == spec.name; });
  if (it == all.end()) throw InputError("unknown suite: " + spec.name);
  Report rep;
  rep.suite = spec.name;
  rep.algebra = spec.algebra.empty() ? "default" : spec.algebra;
  rep.seed = spec.seed;
  rep.version = GLAB_VERSION;
  Ctx ctx(it->info, spec, opt, rep);
  if (!spec.algebra.empty() && spec.name != "det-A") ctx.algebra(spec.algebra);
  it->fn(ctx);
  std::stable_sort(rep.checks.begin(), rep.checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  return rep;
}

Json report_json(const Report& r, bool timing) {
  Json checks = Json::array();
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    Json j = {{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}};
    if (!c.pass && !c.witness.is_null()) j["witness"] = c.witness;
    if (timing) j["seconds"] = c.seconds;
    checks.push_back(j);
    passed += c.pass ? 1 : 0;
  }
  return {{"suite", r.suite},
          {"algebra", r.algebra},
          {"params", r.params},
          {"seed", r.seed},
          {"version", r.version},
          {"status", r.pass() ? "pass" : "fail"},
          {"summary", {{"checks", r.checks.size()}, {"passed", passed}}},
          {"checks", checks}};
}

std::string emit_report(const Report& r, const std::string& format, bool timing) {
  if (format == "json") return report_json(r, timing).dump(2) + "\n";
  if (format != "md" && format != "markdown") throw InputError("unknown format: " + format);
  std::ostringstream os;
  os << "# Suite " << r.suite << "\n\n";
  os << "- status: " << (r.pass() ? "pass" : "fail") << "\n";
  os << "- algebra: " << r.algebra << "\n";
  os << "- seed: " << r.seed << "\n";
  os << "- version: " << r.version << "\n";
  for (const auto& [k, v] : r.params) os << "- " << k << ": `" << v << "`\n";
  os << "\n| check | status | detail |" << (timing ? " seconds |" : "") << "\n";
  os << "|---|---|---|" << (timing ? "---|" : "") << "\n";
  auto cell = [](std::string s) {
    std::string out;
    for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
    return out;
  };
  for (const auto& c : r.checks) {
    os << "| " << cell(c.name) << " | " << (c.pass ? "pass" : "FAIL") << " | " << cell(c.detail) << " |";
    if (timing) os << " " << c.seconds << " |";
    os << "\n";
  }
  bool header = false;
  for (const auto& c : r.checks) {
    if (c.pass || c.witness.is_null()) continue;
    if (!header) os << "\n## Witnesses\n";
    header = true;
    os << "\n### " << c.name << "\n\n```json\n" << c.witness.dump(2) << "\n```\n";
  }
  return os.str();
}

}  // namespace glab
