#pragma once

#include <optional>
#include <vector>

#include "glab/mpoly.hpp"
#include "glab/qmatrix.hpp"

namespace glab {

// Linear algebra on finite families of polynomials, coordinates taken over the union of their monomials.
struct CoefficientMatrix {
  std::vector<Monomial> monomials;
  QMatrix rows;  // one row per polynomial
};

CoefficientMatrix coefficient_matrix(const std::vector<MPoly>& polys);
std::size_t span_rank(const std::vector<MPoly>& polys);
// reduced echelon basis of the span (canonical for the subspace)
std::vector<MPoly> span_basis(const std::vector<MPoly>& polys);
// indices of a maximal independent subfamily, greedy in the given order
std::vector<std::size_t> independent_subset(const std::vector<MPoly>& polys);
// all c with sum c_i polys[i] = 0
std::vector<QVector> linear_relations(const std::vector<MPoly>& polys);
std::optional<QVector> coordinates(const MPoly& target, const std::vector<MPoly>& basis);
bool in_span(const MPoly& target, const std::vector<MPoly>& basis);
bool same_span(const std::vector<MPoly>& a, const std::vector<MPoly>& b);
MPoly combination(const std::vector<MPoly>& polys, const QVector& c);

}  // namespace glab
