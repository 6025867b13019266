#pragma once

// Explicit polynomials fixed by Theta_i: the monomials V^{(alpha)}, the
// Kirillov-Reshetikhin type elements T^{(k)}, the sl2 fundamental q-character
// and polynomials in the blocks T^{(1)}_{i,k} and Y_{j,k}^{±1}, j != i.

#include "qweyl/laurent.hpp"

#include <string>
#include <string_view>

namespace qweyl {

/// V^{(alpha)}_{i,k}: for alpha > 0 the inverse of A_{i,k} A_{i,k-2d} ... (alpha
/// factors), 1 for alpha = 0, and (V^{(-alpha)}_{i,k-2d alpha})^{-1} below zero.
Mono vMono(const CartanData& cartan, int i, int k, int alpha);

struct InvariantElt {
    Poly value;
    std::string provenance;
};

inline constexpr int kMaxTLength = 16;

/// T^{(len)}_{i,k}.  Evaluates the nested form and the sum of V's independently
/// and throws if they disagree.
InvariantElt tElt(const CartanData& cartan, int i, int k, int len);

/// Nested form: Y_{k} Y_{k-2d} ... Y_{k-2d(len-1)} (1 + A_{k+d}^{-1}(1 + ...)).
Poly tEltNested(const CartanData& cartan, int i, int k, int len);

/// Sum form with an explicit prefactor Y_{k+2d s} ... Y_{k+2d(s+len-1)}
/// (s = 1 - len gives T^{(len)}; s = 0 is the other sign of the exponent).
Poly tEltSum(const CartanData& cartan, int i, int k, int len, int prefactorStart);

/// T^{(k+1)}_{a q_i^2} == T^{(k)}_a T^{(1)}_{a q_i^2} - T^{(k-1)}_{a q_i^{-2}} Y_a Y_{a q_i^2} A_{a q_i}^{-1}.
bool tRecurrenceHolds(const CartanData& cartan, int i, int k, int len);

/// Y_{1,k} + Y_{1,k+2}^{-1}; requires type A1.
InvariantElt sl2FundamentalQChar(const CartanData& cartan, int k);

/// Parses a polynomial in `T[i,k]` (meaning T^{(1)}_{i,k}) and `Y[j,k]` with
/// j != i for the designated node i (1-based in the text).
InvariantElt blockPolynomial(const CartanData& cartan, int node, std::string_view spec);

}  // namespace qweyl
