#include "glab/polyspan.hpp"

#include <map>
#include <stdexcept>

namespace glab {

CoefficientMatrix coefficient_matrix(const std::vector<MPoly>& polys) {
  std::map<Monomial, std::size_t, MonomialLess> index;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms()) index.emplace(m, 0);
  CoefficientMatrix cm;
  std::size_t k = 0;
  for (auto& [m, i] : index) {
    i = k++;
    cm.monomials.push_back(m);
  }
  cm.rows = QMatrix(polys.size(), index.size());
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& [m, c] : polys[r].terms()) cm.rows(r, index.at(m)) = c;
  return cm;
}

std::size_t span_rank(const std::vector<MPoly>& polys) {
  if (polys.empty()) return 0;
  return rank(coefficient_matrix(polys).rows);
}

std::vector<MPoly> span_basis(const std::vector<MPoly>& polys) {
  if (polys.empty()) return {};
  CoefficientMatrix cm = coefficient_matrix(polys);
  std::vector<std::size_t> piv;
  QMatrix r = rref(cm.rows, &piv);
  std::vector<MPoly> out;
  for (std::size_t i = 0; i < piv.size(); ++i) {
    MPoly p;
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (r(i, j) != 0) p.add_term(cm.monomials[j], r(i, j));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::size_t> independent_subset(const std::vector<MPoly>& polys) {
  if (polys.empty()) return {};
  // pivot columns of the column matrix are the first independent members
  std::vector<std::size_t> piv;
  rref(coefficient_matrix(polys).rows.transpose(), &piv);
  return piv;
}

std::vector<QVector> linear_relations(const std::vector<MPoly>& polys) {
  if (polys.empty()) return {};
  return nullspace(coefficient_matrix(polys).rows.transpose());
}

std::optional<QVector> coordinates(const MPoly& target, const std::vector<MPoly>& basis) {
  std::vector<MPoly> all = basis;
  all.push_back(target);
  CoefficientMatrix cm = coefficient_matrix(all);
  QMatrix a(cm.monomials.size(), basis.size());
  QVector b(cm.monomials.size());
  for (std::size_t j = 0; j < cm.monomials.size(); ++j) {
    for (std::size_t i = 0; i < basis.size(); ++i) a(j, i) = cm.rows(i, j);
    b[j] = cm.rows(basis.size(), j);
  }
  if (basis.empty()) return target.is_zero() ? std::optional<QVector>(QVector{}) : std::nullopt;
  return solve(a, b);
}

bool in_span(const MPoly& target, const std::vector<MPoly>& basis) { return coordinates(target, basis).has_value(); }

bool same_span(const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
  std::vector<MPoly> both = a;
  both.insert(both.end(), b.begin(), b.end());
  std::size_t r = span_rank(both);
  return r == span_rank(a) && r == span_rank(b);
}

MPoly combination(const std::vector<MPoly>& polys, const QVector& c) {
  if (c.size() != polys.size()) throw std::invalid_argument("combination: size mismatch");
  MPoly r;
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (c[i] != 0) r += polys[i] * c[i];
  return r;
}

}  // namespace glab
