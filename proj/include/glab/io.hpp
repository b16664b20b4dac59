#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "glab/invariants.hpp"
#include "glab/lie_algebra.hpp"
#include "glab/mpoly.hpp"

namespace glab {

using Json = nlohmann::json;

// malformed user input: unknown builtin, bad file, bad polynomial
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

// "e", "(e t)", "(e t^2)"
std::string var_str(const LieAlgebra& q, Var v);
std::string poly_str(const MPoly& f, const LieAlgebra& q);
// [{"coeff": "3/2", "monomial": [["e", 0, 1], ["h", 1, 2]]}]
Json poly_json(const MPoly& f, const LieAlgebra& q);
MPoly poly_from_json(const Json& j, const LieAlgebra& q);

// {"dim": n, "basis": [labels], "sc": [[i, j, k, "c"], ...], "form": [[...]]}
Json algebra_json(const LieAlgebra& q);
LieAlgebra algebra_from_json(const Json& j);
// builtin name (sl<n>, gl<n>, abelian:k, takiff:<name>:<k>, sum:<a>,<b>, power:<name>:<n>) or JSON file path
LieAlgebra parse_algebra(const std::string& spec);

Json recipe_json(const Recipe& r);
Recipe recipe_from_json(const Json& j);
Json generators_json(const GeneratorSet& g, const LieAlgebra& q);
GeneratorSet generators_from_json(const Json& j, const LieAlgebra& q);

struct PolyInput {
  UniPoly p;
  std::optional<RootData> roots;  // set when given in factored form
};
// {"coeffs": ["c0", "c1", ...]} or {"roots": [["a", m], ...]}
PolyInput unipoly_from_json(const Json& j);
// JSON as above, or an expression such as "t^3-t"; must be monic
PolyInput parse_poly_input(const std::string& s);
Json unipoly_json(const UniPoly& p);
QVector parse_rational_list(const std::string& s);

}  // namespace glab
