#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "glab/rational.hpp"

namespace glab {

// A graded variable x_i t^a packed as (i << 16) | a, so integer order is (base, t-degree) order.
using Var = std::uint32_t;

constexpr Var make_var(int base, int tdeg) {
  return (static_cast<Var>(base) << 16) | static_cast<Var>(tdeg);
}
constexpr int var_base(Var v) { return static_cast<int>(v >> 16); }
constexpr int var_tdeg(Var v) { return static_cast<int>(v & 0xFFFFu); }

// flat index in W = q + q t + ... + q t^{n-1}
constexpr int flat_index(Var v, int dim) { return var_tdeg(v) * dim + var_base(v); }
constexpr Var var_of_flat(int u, int dim) { return make_var(u % dim, u / dim); }

using LinComb = std::vector<std::pair<Var, Rational>>;  // sorted by Var, no zeros

void lin_add(LinComb& acc, const LinComb& v, const Rational& scale = 1);

}  // namespace glab
