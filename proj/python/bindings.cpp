#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "glab/harness.hpp"
#include "glab/lie_index.hpp"
#include "glab/pencil.hpp"
#include "glab/quadratic.hpp"

namespace py = pybind11;
using namespace glab;

namespace {

AlgebraPtr share(LieAlgebra q) { return std::make_shared<const LieAlgebra>(std::move(q)); }

std::vector<std::string> rationals(const QVector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

PYBIND11_MODULE(_glab, m) {
  m.doc() = "Exact computations with quotient current algebras and compatible Poisson pencils.";
  m.attr("__version__") = GLAB_VERSION;

  // InputError derives from std::invalid_argument and surfaces as ValueError
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<LieAlgebra, std::shared_ptr<LieAlgebra>>(m, "Algebra")
      .def(py::init([](const std::string& spec) { return std::make_shared<LieAlgebra>(parse_algebra(spec)); }),
           py::arg("spec"), "builtin name (sl2, gl2, abelian:3, takiff:sl2:2, sum:sl2,sl2) or spec file path")
      .def_static(
          "from_json", [](const std::string& s) { return std::make_shared<LieAlgebra>(algebra_from_json(Json::parse(s))); },
          py::arg("text"))
      .def_property_readonly("name", &LieAlgebra::name)
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def_property_readonly("labels", &LieAlgebra::labels)
      .def_property_readonly("has_form", &LieAlgebra::has_form)
      .def("to_json", [](const LieAlgebra& q) { return algebra_json(q).dump(); })
      .def(
          "bracket",
          [](const LieAlgebra& q, const std::string& x, const std::string& y) {
            std::map<std::string, std::string> out;
            for (const auto& [k, c] : q.bracket(q.index_of(x), q.index_of(y))) out[q.label(k)] = to_string(c);
            return out;
          },
          py::arg("x"), py::arg("y"))
      .def(
          "index", [](const LieAlgebra& q, std::uint64_t seed) { return lie_index(share(q), seed).index; },
          py::arg("seed") = 0)
      .def("basic_invariants",
           [](const LieAlgebra& q) {
             std::vector<std::string> out;
             for (const auto& f : basic_invariants(q)) out.push_back(poly_str(f, q));
             return out;
           })
      .def("__repr__", [](const LieAlgebra& q) { return "<Algebra " + q.name() + " dim=" + std::to_string(q.dim()) + ">"; });

  m.def(
      "jacobi",
      [](const LieAlgebra& q, const std::string& p) {
        const BracketTable t = make_quotient(share(q), parse_poly_input(p).p);
        return check_antisymmetry(t).ok && check_jacobi(t).ok;
      },
      py::arg("algebra"), py::arg("p"), "antisymmetry and Jacobi for W(q,n) = q[t]/(p)");

  m.def(
      "quotient_index",
      [](const LieAlgebra& q, const std::string& p, std::uint64_t seed) {
        return lie_index(make_quotient(share(q), parse_poly_input(p).p), seed).index;
      },
      py::arg("algebra"), py::arg("p"), py::arg("seed") = 0);

  m.def(
      "crt_idempotents",
      [](const std::string& p) {
        const PolyInput in = parse_poly_input(p);
        const auto rd = in.roots ? in.roots : rational_roots(in.p);
        if (!rd || !rd->simple()) throw InputError("p needs distinct rational roots");
        std::vector<std::vector<std::string>> out;
        for (const auto& r : crt_idempotents(in.p, *rd)) out.push_back(rationals(r.coeffs()));
        return out;
      },
      py::arg("p"), "coefficients (lowest degree first) of the idempotents r_i");

  m.def(
      "gaudin",
      [](const LieAlgebra& q, const std::vector<std::string>& z) {
        QVector zz;
        for (const auto& s : z) zz.push_back(parse_rational(s));
        const LieAlgebra power = make_direct_power(q, static_cast<int>(zz.size()));
        std::vector<std::string> out;
        for (const auto& h : gaudin_hamiltonians(q, zz)) out.push_back(poly_str(h, power));
        return out;
      },
      py::arg("algebra"), py::arg("z"));

  m.def(
      "build_z_json",
      [](const LieAlgebra& q, const std::string& p1, const std::string& p2, std::uint64_t seed) {
        const Pencil pen = make_pencil(share(q), parse_poly_input(p1).p, parse_poly_input(p2).p);
        const ZAlgebra z = build_Z(pen, basic_invariants(q), 0, seed);
        Json inv = Json::array();
        for (const auto& f : z.invariants) inv.push_back(poly_json(f, q));
        return Json{{"ind", z.ind},
                    {"bound", rational_json(z.bound)},
                    {"complete", z.complete},
                    {"commute", verify_Z_commutes(z).ok},
                    {"invariants", inv},
                    {"generators", generators_json(z.gens, q)}}
            .dump();
      },
      py::arg("algebra"), py::arg("p1"), py::arg("p2"), py::arg("seed") = 0);

  m.def("suites", [] {
    std::vector<std::string> out;
    for (const auto& s : registered_suites()) out.push_back(s.name);
    return out;
  });

  m.def(
      "run_suite",
      [](const std::string& name, const std::string& algebra, const std::map<std::string, std::string>& params,
         std::uint64_t seed, const std::string& format) {
        const Report r = run_suite(SuiteSpec{name, algebra, params, seed});
        return emit_report(r, format);
      },
      py::arg("name"), py::arg("algebra") = "", py::arg("params") = std::map<std::string, std::string>{},
      py::arg("seed") = 0, py::arg("format") = "json");

  m.def("set_term_budget", &set_term_budget, py::arg("terms"));
  m.def("term_budget", &term_budget);
}
