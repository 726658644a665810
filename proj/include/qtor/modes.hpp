#pragma once

#include "qtor/expr.hpp"

namespace qtor {

/// Convenience single-generator expression.
Expr gen(const CtxPtr& ctx, Family f, int node, int mode = 0);
/// Power of an invertible group-like / central generator (exponent any int).
Expr gen_pow(const CtxPtr& ctx, Family f, int node, int exp);

/// All integer partitions of n >= 1 (parts descending).
const std::vector<std::vector<int>>& partitions_of(int n);

/// Mode t of (K^sign_node(a C^{cpow} z))^e, with K the kind-appropriate
/// Cartan current (K/k/phi). sign=+1 gives the K^+ current (modes t >= 0),
/// sign=-1 the K^- current (modes t <= 0); zero outside. The expansion is the
/// exponential formula: group part times partition sums in the H modes.
Expr cartan_current_mode(const CtxPtr& ctx, int node, int sign, int t,
                         int group_exp = 1, const Scalar& arg_scale = Scalar(1),
                         int arg_cpow = 0);

/// H_{node,r} (r != 0) written in raising/lowering modes via the mode-extracted
/// E-F relation: H_{i,r} = K_i^{-1} C^{-r} [E_{i,r}, F_{i,0}] - lower terms,
/// recursively expanded. Works for Toroidal and SlCurrent kinds.
Expr cartan_mode_ladder(const CtxPtr& ctx, int node, int r);

/// Generators of the algebra with |mode| <= R (the verification generator set).
std::vector<GeneratorSymbol> algebra_generators(const AlgebraCtx& ctx, int R);

}  // namespace qtor
