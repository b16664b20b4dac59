#include "glab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace glab {

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(std::string("bad rational: ") + e.what());
  }
  throw InputError("bad rational: " + j.dump());
}

std::string var_str(const LieAlgebra& q, Var v) {
  const std::string& l = q.label(var_base(v));
  const int a = var_tdeg(v);
  if (a == 0) return l;
  if (a == 1) return "(" + l + " t)";
  return "(" + l + " t^" + std::to_string(a) + ")";
}

std::string poly_str(const MPoly& f, const LieAlgebra& q) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational a = c;
    if (!first) out += a < 0 ? " - " : " + ";
    else if (a < 0) out += "-";
    if (!first || a < 0) a = abs(a);
    first = false;
    std::string body;
    std::size_t i = 0;
    while (i < m.size()) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (!body.empty()) body += "*";
      body += var_str(q, m[i]);
      if (j - i > 1) body += "^" + std::to_string(j - i);
      i = j;
    }
    if (body.empty()) out += to_string(a);
    else if (a == 1) out += body;
    else out += to_string(a) + "*" + body;
  }
  return out;
}

Json poly_json(const MPoly& f, const LieAlgebra& q) {
  Json out = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json mono = Json::array();
    std::size_t i = 0;
    while (i < m.size()) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      mono.push_back(Json::array({q.label(var_base(m[i])), var_tdeg(m[i]), j - i}));
      i = j;
    }
    out.push_back({{"coeff", rational_json(c)}, {"monomial", mono}});
  }
  return out;
}

MPoly poly_from_json(const Json& j, const LieAlgebra& q) {
  if (!j.is_array()) throw InputError("polynomial JSON must be an array of terms");
  MPoly out;
  try {
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("monomial"))
      throw InputError("polynomial term needs coeff and monomial");
    Monomial m;
    for (const auto& f : term.at("monomial")) {
      if (!f.is_array() || f.size() != 3) throw InputError("monomial factor must be [label, t-degree, exponent]");
      const auto& labels = q.labels();
      const auto it = std::find(labels.begin(), labels.end(), f[0].get<std::string>());
      if (it == labels.end()) throw InputError("unknown label " + f[0].dump());
      const int base = static_cast<int>(it - labels.begin());
      const int a = f[1].get<int>(), e = f[2].get<int>();
      if (a < 0 || a > 0xFFFF || e < 1) throw InputError("bad t-degree or exponent");
      for (int k = 0; k < e; ++k) m.push_back(make_var(base, a));
    }
    std::sort(m.begin(), m.end());
    out.add_term(m, rational_from_json(term.at("coeff")));
  }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad polynomial JSON: ") + e.what());
  }
  return out;
}

Json algebra_json(const LieAlgebra& q) {
  Json sc = Json::array();
  for (int i = 0; i < q.dim(); ++i)
    for (int j = i + 1; j < q.dim(); ++j)
      for (const auto& [k, c] : q.bracket(i, j)) sc.push_back(Json::array({i, j, k, to_string(c)}));
  Json out = {{"name", q.name()}, {"dim", q.dim()}, {"basis", q.labels()}, {"sc", sc}};
  if (q.has_form()) {
    Json form = Json::array();
    for (std::size_t i = 0; i < q.form()->rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < q.form()->cols(); ++j) row.push_back(rational_json((*q.form())(i, j)));
      form.push_back(row);
    }
    out["form"] = form;
  }
  return out;
}

LieAlgebra algebra_from_json(const Json& j) {
  try {
    const auto labels = j.at("basis").get<std::vector<std::string>>();
    const int n = j.at("dim").get<int>();
    if (n < 1 || static_cast<std::size_t>(n) != labels.size()) throw InputError("dim does not match basis");
    LieAlgebra q(j.value("name", std::string("custom")), labels);
    for (int i = 0; i < n; ++i)
      if (q.index_of(labels[static_cast<std::size_t>(i)]) != i) throw InputError("duplicate basis label");
    std::vector<SparseVec> br(static_cast<std::size_t>(n * n));
    for (const auto& e : j.value("sc", Json::array())) {
      if (!e.is_array() || e.size() != 4) throw InputError("sc entry must be [i, j, k, c]");
      const int a = e[0].get<int>(), b = e[1].get<int>(), k = e[2].get<int>();
      if (a < 0 || b < 0 || k < 0 || a >= n || b >= n || k >= n) throw InputError("sc index out of range");
      if (a == b) throw InputError("sc entry [i, i, ...] must vanish");
      const Rational c = rational_from_json(e[3]);
      if (a < b) sparse_add(br[static_cast<std::size_t>(a * n + b)], {{k, c}});
      else sparse_add(br[static_cast<std::size_t>(b * n + a)], {{k, -c}});
    }
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) q.set_bracket(a, b, br[static_cast<std::size_t>(a * n + b)]);
    const LieCheck jac = check_jacobi(q);
    if (!jac.ok) throw InputError("Jacobi identity fails: " + jac.witness);
    if (j.contains("form") && !j.at("form").is_null()) {
      std::vector<QVector> rows;
      for (const auto& r : j.at("form")) {
        QVector row;
        for (const auto& c : r) row.push_back(rational_from_json(c));
        if (row.size() != labels.size()) throw InputError("form has wrong size");
        rows.push_back(row);
      }
      if (rows.size() != labels.size()) throw InputError("form has wrong size");
      QMatrix g = QMatrix::from_rows(rows);
      if (!g.is_symmetric()) throw InputError("form is not symmetric");
      if (det(g) == 0) throw InputError("form is degenerate");
      q.set_form(g);
      const LieCheck inv = check_form_invariant(q);
      if (!inv.ok) throw InputError("form is not invariant: " + inv.witness);
    }
    return q;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad algebra JSON: ") + e.what());
  }
}

namespace {

int parse_count(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size() || v < 1) throw InputError("");
    return v;
  } catch (const std::exception&) {
    throw InputError("bad " + what + ": " + s);
  }
}

}  // namespace

LieAlgebra parse_algebra(const std::string& spec) {
  if (spec.rfind("sl", 0) == 0 && spec.size() > 2 && std::isdigit(static_cast<unsigned char>(spec[2]))) {
    const int n = parse_count(spec.substr(2), "rank");
    if (n < 2) throw InputError("sl_n needs n >= 2");
    return make_sl(n);
  }
  if (spec.rfind("gl", 0) == 0 && spec.size() > 2 && std::isdigit(static_cast<unsigned char>(spec[2])))
    return make_gl(parse_count(spec.substr(2), "rank"));
  if (spec.rfind("abelian:", 0) == 0) return make_abelian(parse_count(spec.substr(8), "dimension"));
  for (const std::string prefix : {"takiff:", "power:"})
    if (spec.rfind(prefix, 0) == 0) {
      const auto colon = spec.rfind(':');
      if (colon <= prefix.size() - 1) throw InputError("expected " + prefix + "<algebra>:<k>");
      const LieAlgebra inner = parse_algebra(spec.substr(prefix.size(), colon - prefix.size()));
      const int k = parse_count(spec.substr(colon + 1), "order");
      return prefix == "takiff:" ? make_takiff(inner, k) : make_direct_power(inner, k);
    }
  if (spec.rfind("sum:", 0) == 0) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos) throw InputError("expected sum:<a>,<b>");
    return make_direct_sum(parse_algebra(spec.substr(4, comma - 4)), parse_algebra(spec.substr(comma + 1)));
  }
  std::ifstream in(spec);
  if (!in) throw InputError("unknown algebra: " + spec);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("cannot parse " + spec + ": " + e.what());
  }
  return algebra_from_json(j);
}

Json recipe_json(const Recipe& r) {
  Json out;
  switch (r.kind) {
    case Recipe::Kind::Crt:
      out = {{"kind", "CRT"}, {"root", rational_json(r.root)}};
      break;
    case Recipe::Kind::Takiff:
      out = {{"kind", "TAKIFF"}, {"root", rational_json(r.root)}, {"j", r.j}};
      break;
    case Recipe::Kind::Polar: {
      out = {{"kind", "POLAR"}};
      if (!r.k.empty()) out["k"] = r.k;
      Json c = Json::array();
      for (const auto& x : r.coeffs) c.push_back(rational_json(x));
      if (!r.coeffs.empty()) out["coeffs"] = c;
      break;
    }
    case Recipe::Kind::Tau:
      out = {{"kind", "TAU"}, {"k", r.j}};
      break;
    case Recipe::Kind::LemmaX:
      out = {{"kind", "LEMMA-X"}};
      break;
  }
  return out;
}

Recipe recipe_from_json(const Json& j) {
  Recipe r;
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "CRT") {
      r.kind = Recipe::Kind::Crt;
      r.root = rational_from_json(j.at("root"));
    } else if (kind == "TAKIFF") {
      r.kind = Recipe::Kind::Takiff;
      r.root = rational_from_json(j.at("root"));
      r.j = j.at("j").get<int>();
    } else if (kind == "POLAR") {
      r.kind = Recipe::Kind::Polar;
      if (j.contains("k")) r.k = j.at("k").get<KVec>();
      if (j.contains("coeffs"))
        for (const auto& c : j.at("coeffs")) r.coeffs.push_back(rational_from_json(c));
    } else if (kind == "TAU") {
      r.kind = Recipe::Kind::Tau;
      r.j = j.at("k").get<int>();
    } else if (kind == "LEMMA-X") {
      r.kind = Recipe::Kind::LemmaX;
    } else {
      throw InputError("unknown recipe kind " + kind);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad recipe: ") + e.what());
  }
  return r;
}

Json generators_json(const GeneratorSet& g, const LieAlgebra& q) {
  Json out = Json::array();
  for (const auto& e : g.entries)
    out.push_back({{"source", e.source}, {"recipe", recipe_json(e.recipe)}, {"poly", poly_json(e.poly, q)}});
  return out;
}

GeneratorSet generators_from_json(const Json& j, const LieAlgebra& q) {
  GeneratorSet out;
  try {
    for (const auto& e : j) {
      Generator g;
      g.source = e.at("source").get<int>();
      g.recipe = recipe_from_json(e.at("recipe"));
      g.poly = poly_from_json(e.at("poly"), q);
      out.entries.push_back(std::move(g));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad generator JSON: ") + e.what());
  }
  return out;
}

PolyInput unipoly_from_json(const Json& j) {
  PolyInput out;
  try {
    if (j.contains("coeffs")) {
      QVector c;
      for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
      out.p = UniPoly(c);
    } else if (j.contains("roots")) {
      RootData rd;
      for (const auto& r : j.at("roots")) {
        if (!r.is_array() || r.size() != 2) throw InputError("root entry must be [a, m]");
        const int m = r[1].get<int>();
        if (m < 1) throw InputError("root multiplicity must be positive");
        rd.roots.emplace_back(rational_from_json(r[0]), m);
      }
      out.p = UniPoly::from_roots(rd.roots);
      try {
        validate_roots(out.p, rd);
      } catch (const std::exception& e) {
        throw InputError(e.what());
      }
      out.roots = rd;
    } else {
      throw InputError("polynomial JSON needs coeffs or roots");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad polynomial JSON: ") + e.what());
  }
  if (out.p.degree() < 1) throw InputError("polynomial must have positive degree");
  if (!out.p.is_monic()) throw InputError("polynomial must be monic");
  return out;
}

PolyInput parse_poly_input(const std::string& s) {
  PolyInput out;
  const auto first = s.find_first_not_of(" \t");
  if (first != std::string::npos && s[first] == '{') {
    Json j;
    try {
      j = Json::parse(s);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("bad polynomial JSON: ") + e.what());
    }
    return unipoly_from_json(j);
  }
  try {
    out.p = parse_unipoly(s);
  } catch (const std::exception& e) {
    throw InputError("bad polynomial '" + s + "': " + e.what());
  }
  if (out.p.degree() < 1) throw InputError("polynomial must have positive degree");
  if (!out.p.is_monic()) throw InputError("polynomial must be monic");
  return out;
}

Json unipoly_json(const UniPoly& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(rational_json(x));
  return {{"coeffs", c}};
}

QVector parse_rational_list(const std::string& s) {
  QVector out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::exception&) {
      throw InputError("bad rational '" + item + "'");
    }
  }
  if (out.empty()) throw InputError("empty list");
  return out;
}

}  // namespace glab
