#pragma once

// Solutions of q-difference equations F(k) U(k) = H(k) + G(k) U(k - r) in one
// completion, the series Sigma_{i,k}, the iterated Sigma's given by explicit
// equations, and direct summation of their closed-form expansions.

#include "qweyl/series.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace qweyl {

/// A shift-equivariant equation, stored by the values of F, H, G at spectral
/// base 0.  All three live in the same component.
struct QDiffEq {
    PSeries F, H, G;
    int r = 0;
    /// Expected anchor weight of G/F as a root; checked when present.
    std::optional<RootVector> weightOfG;

    const WeylElt& w() const { return F.w(); }
    int order() const { return std::min({F.order(), H.order(), G.order()}); }
};

enum class SolveMethod { FixedPoint, Graded };

/// U(0) with F U = H + G tau_{-r} U up to the order of the inputs.
PSeries solve(const QDiffEq& eq, SolveMethod method = SolveMethod::FixedPoint);
/// Same, after checking the component and truncating the inputs to N.
PSeries solve(const QDiffEq& eq, const WeylElt& w, int N);

/// Sigma_{i,k} in component w: the solution of Sigma = 1 + A_{i,k}^{-1} tau_{-2d_i} Sigma.
QDiffEq sigmaEquation(const CartanPtr& cartan, int i, const WeylElt& w, int N);
PSeries sigma(const CartanPtr& cartan, int i, int k, const WeylElt& w, int N);

/// The explicit equations: "ij" and "ji" for any pair with C(i,j), C(j,i) < 0,
/// "iji" and "jij" when C(i,j) = -1 and C(j,i) = -2.
QDiffEq iteratedEquation(std::string_view name, const CartanPtr& cartan, int i, int j, const WeylElt& w, int N);
PSeries iteratedSigma(std::string_view name, const CartanPtr& cartan, int i, int j, int k, const WeylElt& w,
                      int N, SolveMethod method = SolveMethod::FixedPoint);

/// Names the displayed expansion covers for this pair and component, or an
/// explanation of why none is available.
struct OracleCase {
    bool available = false;
    std::string reason;
};
OracleCase closedFormCase(std::string_view name, const CartanData& cartan, int i, int j, const WeylElt& w);

/// Direct summation of the displayed expansion of Sigma_{name,k}, truncated
/// at offset height N.  `literalDomain` selects the summation domain exactly
/// as printed where it differs from the consistent one ("jij" and "ijiji").
PSeries closedFormOracle(std::string_view name, const CartanPtr& cartan, int i, int j, int k, const WeylElt& w,
                         int N, bool literalDomain = false);

/// Sum over alpha >= 0 of V^{(alpha)}_{i,k}, or minus the sum over alpha < 0,
/// whichever lies in the completion of w.
PSeries sigmaSplit(const CartanPtr& cartan, int i, int k, const WeylElt& w, int N);

}  // namespace qweyl
