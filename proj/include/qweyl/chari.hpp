#pragma once

// The monomial automorphisms T_i(Y_{j,k}) = Y_{j,k} A_{i,k-d_i}^{-delta_ij},
// the truncation Lambda of identity-component series to their leading
// monomial, and the checks relating them to Theta_i.

#include "qweyl/sample.hpp"
#include "qweyl/weylaction.hpp"

#include <cstdint>

namespace qweyl {

Mono chariT(const CartanData& cartan, int i, const Mono& m);
Poly chariT(const CartanData& cartan, int i, const Poly& p);
/// T_{word[0]} ... T_{word[last]} (m).
Mono chariWord(const CartanData& cartan, const std::vector<int>& word, const Mono& m);

/// The anchor of a series of the identity component whose anchor
/// coefficient is 1.
Mono lambdaTrunc(const PSeries& x);

/// Lambda(Theta_i(m)) == T_i(m), with m taken in component s_i.
CheckEntry checkLambdaTheta(ThetaContext& ctx, int i, const Mono& m);

/// Braid relations of the T_i on the sampled monomials for every pair of
/// nodes, T_i^2 != Id on Y_{i,0}, and T_i(p) != p on a nonconstant sample.
Report verifyBraidT(const CartanPtr& cartan, const std::vector<Mono>& sample, Sampler& sampler);

/// The first n in 1..maxN with T_i^n(Y_{i,0}) == Y_{i,0}, or 0 if none.
int chariPeriod(const CartanData& cartan, int i, int maxN);

}  // namespace qweyl
