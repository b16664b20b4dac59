#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>

#include "CLI11.hpp"
#include "glab/harness.hpp"
#include "glab/lie_index.hpp"
#include "glab/pencil.hpp"
#include "glab/poisson.hpp"
#include "glab/quadratic.hpp"

using namespace glab;

namespace {

enum Exit { kOk = 0, kFail = 1, kInput = 2, kBudget = 3 };

AlgebraPtr load(const std::string& name) { return std::make_shared<const LieAlgebra>(parse_algebra(name)); }

std::string show(const UniPoly& p) { return p.str(); }

void write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

int cmd_info(const std::string& alg, bool json, std::uint64_t seed) {
  const auto q = load(alg);
  if (json) {
    std::cout << algebra_json(*q).dump(2) << "\n";
    return kOk;
  }
  const int ind = lie_index(q, seed).index;
  std::cout << "algebra: " << q->name() << "\n";
  std::cout << "dim: " << q->dim() << "\n";
  std::cout << "basis:";
  for (const auto& l : q->labels()) std::cout << " " << l;
  std::cout << "\nindex: " << ind << "\n";
  std::cout << "b(q): " << to_string(bound_b(q->dim(), ind, 1).b) << "\n";
  std::cout << "invariant form: " << (q->has_form() ? "yes" : "no") << "\n";
  std::cout << "brackets:\n";
  for (int i = 0; i < q->dim(); ++i)
    for (int j = i + 1; j < q->dim(); ++j) {
      const SparseVec& v = q->bracket(i, j);
      if (v.empty()) continue;
      MPoly f;
      for (const auto& [k, c] : v) f += MPoly::var(make_var(k, 0), c);
      std::cout << "  [" << q->label(i) << ", " << q->label(j) << "] = " << poly_str(f, *q) << "\n";
    }
  const auto fs = basic_invariants(*q);
  std::cout << "basic invariants:";
  if (fs.empty()) std::cout << " none found";
  std::cout << "\n";
  for (const auto& f : fs) std::cout << "  deg " << f.homogeneous_degree() << ": " << poly_str(f, *q) << "\n";
  return kOk;
}

int cmd_jacobi(const std::string& alg, const std::string& ps) {
  const auto q = load(alg);
  const UniPoly p = parse_poly_input(ps).p;
  const BracketTable t = make_quotient(q, p);
  const LieCheck a = check_antisymmetry(t), j = check_jacobi(t);
  std::cout << "W(" << q->name() << ", " << show(p) << "): dim " << t.size() << "\n";
  std::cout << "antisymmetry: " << (a.ok ? "pass" : "FAIL " + a.witness) << "\n";
  std::cout << "jacobi: " << (j.ok ? "pass" : "FAIL " + j.witness) << "\n";
  return a.ok && j.ok ? kOk : kFail;
}

int cmd_index(const std::string& alg, const std::string& ps, const std::vector<std::string>& diff, std::uint64_t seed) {
  const auto q = load(alg);
  const IndexResult base = lie_index(q, seed);
  std::cout << "ind " << q->name() << " = " << base.index << "\n";
  int rc = kOk;
  if (!ps.empty()) {
    const UniPoly p = parse_poly_input(ps).p;
    const IndexResult r = lie_index(make_quotient(q, p), seed);
    const int want = p.degree() * base.index;
    std::cout << "ind W(" << show(p) << ") = " << r.index << " (n ind q = " << want << ")\n";
    if (r.index != want) rc = kFail;
  }
  if (!diff.empty()) {
    const UniPoly p1 = parse_poly_input(diff[0]).p, p2 = parse_poly_input(diff[1]).p;
    BracketTable d = [&] {
      try {
        return make_difference_bracket(q, p1, p2);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    }();
    const IndexResult r = lie_index(d, seed);
    const int want = q->dim() + (p1.degree() - 1) * base.index;
    std::cout << "ind [,]_{" << show(p1) << "} - [,]_{" << show(p2) << "} = " << r.index
              << " (dim q + (n-1) ind q = " << want << ")\n";
    if (r.index != want) rc = kFail;
  }
  return rc;
}

int cmd_crt(const std::string& ps, const std::string& alg) {
  const PolyInput in = parse_poly_input(ps);
  RootData rd;
  if (in.roots) {
    rd = *in.roots;
  } else {
    const auto r = rational_roots(in.p);
    if (!r) throw InputError("p does not split over Q; give it in factored form {\"roots\": [[a, m], ...]}");
    rd = *r;
  }
  if (!rd.simple()) throw InputError("CRT idempotents need distinct roots");
  const auto r = crt_idempotents(in.p, rd);
  bool ok = true;
  UniPoly sum;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::cout << "r" << i << " (root " << to_string(rd.roots[i].first) << ") = " << show(r[i]) << "\n";
    sum += r[i];
    for (std::size_t j = 0; j < r.size(); ++j) ok = ok && poly_rem(r[i] * r[j], in.p) == (i == j ? r[i] : UniPoly());
  }
  ok = ok && poly_rem(sum, in.p) == UniPoly(1);
  std::cout << "r_i r_j = delta_ij r_i, sum r_i = 1: " << (ok ? "pass" : "FAIL") << "\n";
  if (!alg.empty()) {
    const LieCheck c = check_crt_isomorphism(load(alg), in.p, rd);
    std::cout << "isomorphism onto " << alg << "^" << r.size() << ": " << (c.ok ? "pass" : "FAIL " + c.witness) << "\n";
    ok = ok && c.ok;
  }
  return ok ? kOk : kFail;
}

Json z_json(const ZAlgebra& z, const std::string& alg) {
  Json inv = Json::array();
  for (const auto& f : z.invariants) inv.push_back(poly_json(f, *z.pencil.base));
  Json samples = Json::array();
  for (const auto& s : z.samples) samples.push_back({{"a", rational_json(s.a)}, {"route", s.route}});
  return {{"algebra", alg},
          {"p1", unipoly_json(z.pencil.p1)},
          {"p2", unipoly_json(z.pencil.p2)},
          {"ind", z.ind},
          {"bound", rational_json(z.bound)},
          {"complete", z.complete},
          {"samples", samples},
          {"invariants", inv},
          {"generators", generators_json(z.gens, *z.pencil.base)}};
}

int verify_z(const Pencil& pen, const std::vector<MPoly>& fs, const GeneratorSet& gens, std::uint64_t seed) {
  const int n = pen.n();
  bool ok = true;
  for (std::size_t i = 0; i < gens.entries.size(); ++i)
    if (regenerate(gens.entries[i], fs, n) != gens.entries[i].poly) {
      std::cout << "generator " << i << " does not match its recipe " << gens.entries[i].recipe.str() << "\n";
      ok = false;
    }
  int want = 0;
  for (const auto& f : fs) want += f.homogeneous_degree() * (n - 1) + 1;
  const bool count = static_cast<int>(gens.entries.size()) == want;
  std::cout << "generators: " << gens.entries.size() << " (expected " << want << ")" << (count ? "" : " FAIL") << "\n";
  const CommuteReport c = verify_commutes(gens.polys(), pen);
  std::cout << "commute (" << c.pairs << " pairs): " << (c.ok ? "pass" : "FAIL") << "\n";
  for (const auto& f : c.failures) std::cout << "  " << f << "\n";
  const int ind = lie_index(pen.base, seed).index;
  const Rational bound = bound_b(pen.base->dim(), ind, n).bn;
  const RankSearch r = trdeg_estimate(gens.polys(), Ambient{pen.base->dim(), n}, seed);
  const bool tr = Rational(static_cast<long>(r.rank)) == bound;
  std::cout << "trdeg: " << r.rank << " (b(q,n) = " << to_string(bound) << ")" << (tr ? "" : " FAIL") << "\n";
  return ok && count && c.ok && tr ? kOk : kFail;
}

int cmd_zz(const std::string& mode, const std::string& alg, const std::string& p1s, const std::string& p2s,
           const std::string& in_path, const std::string& out_path, int samples, std::uint64_t seed) {
  const auto q = load(alg);
  const UniPoly p1 = parse_poly_input(p1s).p, p2 = parse_poly_input(p2s).p;
  Pencil pen;
  try {
    pen = make_pencil(q, p1, p2);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (mode == "build") {
    const ZAlgebra z = build_Z(pen, basic_invariants(*q), samples, seed);
    write_out(z_json(z, alg).dump(2) + "\n", out_path);
    if (!out_path.empty())
      std::cout << "wrote " << z.gens.entries.size() << " generators to " << out_path << "\n";
    return z.complete ? kOk : kFail;
  }
  if (in_path.empty()) {
    const ZAlgebra z = build_Z(pen, basic_invariants(*q), samples, seed);
    return verify_z(pen, z.invariants, z.gens, seed);
  }
  std::ifstream in(in_path);
  if (!in) throw InputError("cannot read " + in_path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad JSON in ") + in_path + ": " + e.what());
  }
  std::vector<MPoly> fs;
  for (const auto& f : j.at("invariants")) fs.push_back(poly_from_json(f, *q));
  for (const auto& f : fs)
    if (!is_invariant(f, *q)) throw InputError("stored invariant is not invariant");
  if (!j.contains("p1") || unipoly_from_json(j["p1"]).p != p1 || unipoly_from_json(j["p2"]).p != p2)
    throw InputError("stored pencil differs from --p1/--p2");
  return verify_z(pen, fs, generators_from_json(j.at("generators"), *q), seed);
}

int cmd_gaudin(const std::string& alg, const std::string& zs) {
  const auto q = load(alg);
  const QVector z = parse_rational_list(zs);
  std::vector<MPoly> hs;
  try {
    hs = gaudin_hamiltonians(*q, z);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const auto power = std::make_shared<const LieAlgebra>(make_direct_power(*q, static_cast<int>(z.size())));
  MPoly sum;
  for (std::size_t k = 0; k < hs.size(); ++k) {
    std::cout << "H" << k << " = " << poly_str(hs[k], *power) << "\n";
    sum += hs[k];
  }
  const bool zero = sum.is_zero();
  std::cout << "sum H_k = 0: " << (zero ? "pass" : "FAIL") << "\n";
  const BracketTable t = table_of(power);
  bool comm = true;
  for (std::size_t k = 0; k < hs.size(); ++k)
    for (std::size_t s = k + 1; s < hs.size(); ++s) comm = comm && poisson_bracket(hs[k], hs[s], t).is_zero();
  std::cout << "{H_k, H_s} = 0: " << (comm ? "pass" : "FAIL") << "\n";
  return zero && comm ? kOk : kFail;
}

int cmd_suite_list() {
  for (const auto& s : registered_suites()) {
    std::cout << s.name << ": " << s.summary << "\n";
    for (const auto& p : s.params)
      std::cout << "    " << p.key << " (default \"" << p.fallback << "\")" << (p.help.empty() ? "" : ": " + p.help) << "\n";
  }
  return kOk;
}

int cmd_suite_run(const std::string& name, const std::string& alg, const std::vector<std::string>& params,
                  std::uint64_t seed, const std::string& format, bool timing, double time_cap, const std::string& out,
                  const std::string& golden) {
  SuiteSpec spec;
  spec.name = name;
  spec.algebra = alg;
  spec.seed = seed;
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--param expects key=value, got '" + kv + "'");
    spec.params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  if (format != "json" && format != "md") throw InputError("--format must be json or md");
  RunOptions opt;
  opt.time_cap = time_cap;
  const Report r = run_suite(spec, opt);
  const std::string text = emit_report(r, format, timing);
  write_out(text, out);
  if (!golden.empty()) {
    std::ifstream in(golden, std::ios::binary);
    if (!in) throw InputError("cannot read " + golden);
    const std::string want((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (want != text) {
      std::cerr << "report differs from " << golden << "\n";
      return kFail;
    }
  }
  return r.pass() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"glab: quotient current algebras, compatible Poisson pencils and their commutative subalgebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(GLAB_VERSION));
  long long budget = 0;
  double time_cap = 600;
  std::uint64_t seed = 0;
  app.add_option("--budget-terms", budget, "cap on terms produced by one expansion (overrides GLAB_BUDGET_TERMS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--time-cap", time_cap, "seconds allowed per suite check, 0 for none")
      ->capture_default_str()->check(CLI::NonNegativeNumber);

  std::string alg, ps, p1, p2, zs, in_path, out_path, format = "json", suite_name, mode;
  std::vector<std::string> diff, params;
  bool json = false, timing = false;
  int samples = 0;

  auto* info = app.add_subcommand("info", "describe an algebra");
  info->add_option("algebra", alg, "builtin name or spec file")->required();
  info->add_flag("--json", json, "print the algebra spec JSON");
  info->add_option("--seed", seed, "seed for index sampling");

  auto* jac = app.add_subcommand("jacobi", "antisymmetry and Jacobi for W(q,n)");
  jac->add_option("algebra", alg)->required();
  jac->add_option("--p", ps, "polynomial")->required();

  auto* idx = app.add_subcommand("index", "index of q, W(q,n) or a difference bracket");
  idx->add_option("algebra", alg)->required();
  idx->add_option("--p", ps, "polynomial");
  idx->add_option("--diff", diff, "p1 p2")->expected(2);
  idx->add_option("--seed", seed, "sampling seed");

  auto* crt = app.add_subcommand("crt", "CRT idempotents of a split polynomial");
  crt->add_option("--p", ps, "polynomial, preferably {\"roots\": [[a, m], ...]}")->required();
  crt->add_option("--algebra", alg, "also check the isomorphism onto q^n");

  auto* zz = app.add_subcommand("zz", "assemble or verify Z(p1,p2)");
  zz->add_option("mode", mode, "build or verify")->required()->check(CLI::IsMember({"build", "verify"}));
  zz->add_option("algebra", alg)->required();
  zz->add_option("--p1", p1)->required();
  zz->add_option("--p2", p2)->required();
  zz->add_option("--samples", samples, "sampled pencil members, 0 for default")->check(CLI::NonNegativeNumber);
  zz->add_option("--seed", seed, "sampling seed");
  zz->add_option("--in", in_path, "verify: generators written by build");
  zz->add_option("--out", out_path, "build: output file");

  auto* gd = app.add_subcommand("gaudin", "Gaudin Hamiltonians");
  gd->add_option("algebra", alg)->required();
  gd->add_option("--z", zs, "a,b,c")->required();

  auto* suite = app.add_subcommand("suite", "verification suites");
  suite->require_subcommand(1);
  auto* run = suite->add_subcommand("run", "run a suite");
  run->add_option("name", suite_name)->required();
  run->add_option("--seed", seed, "seed");
  run->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
  run->add_option("--algebra", alg, "restrict to one algebra");
  run->add_option("--param", params, "key=value, repeatable");
  run->add_flag("--timing", timing, "include per-check timing");
  run->add_option("--out", out_path, "write the report to a file");
  std::string golden;
  run->add_option("--golden", golden, "fail unless the report matches this file byte for byte");
  auto* list = suite->add_subcommand("list", "list suites and parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (budget > 0) set_term_budget(static_cast<std::size_t>(budget));
    if (*info) return cmd_info(alg, json, seed);
    if (*jac) return cmd_jacobi(alg, ps);
    if (*idx) return cmd_index(alg, ps, diff, seed);
    if (*crt) return cmd_crt(ps, alg);
    if (*zz) return cmd_zz(mode, alg, p1, p2, in_path, out_path, samples, seed);
    if (*gd) return cmd_gaudin(alg, zs);
    if (*list) return cmd_suite_list();
    if (*run) return cmd_suite_run(suite_name, alg, params, seed, format, timing, time_cap, out_path, golden);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::bad_alloc&) {
    std::cerr << "budget exceeded: out of memory\n";
    return kBudget;
  }
  return kInput;
}
