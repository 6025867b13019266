#pragma once

// Screening operators S_i : Y -> Y_i.  The module Y_i is free over Y on the
// symbols S_{i,k}, one per residue class of k mod 2 d_i, subject to
// S_{i,k+2d_i} = A_{i,k+d_i} S_{i,k}.

#include "qweyl/io.hpp"
#include "qweyl/laurent.hpp"

#include <map>
#include <string>

namespace qweyl {

class SElt {
public:
    SElt(CartanPtr cartan, int node);

    const CartanPtr& cartan() const { return cartan_; }
    int node() const { return node_; }
    int period() const { return 2 * d_; }
    /// Canonical coefficients: one entry per nonzero residue class, at the
    /// minimal exponent that occurred in it.
    const std::map<int, Poly>& coeffs() const { return coeffs_; }
    bool isZero() const { return coeffs_.empty(); }

    /// Adds c S_{i,k} and recanonicalizes its residue class.
    void add(int k, const Poly& c);
    /// The coefficient of c S_{i,k} rewritten on S_{i,base}, base = k mod 2d_i.
    Poly rebasedCoefficient(int k, const Poly& c, int base) const;
    /// Every class rewritten on the given exponent of that class.
    std::map<int, Poly> onBases(const std::map<int, int>& baseOfClass) const;

    SElt& operator+=(const SElt& o);
    SElt& operator-=(const SElt& o);
    friend SElt operator+(SElt a, const SElt& b) { return a += b; }
    friend SElt operator-(SElt a, const SElt& b) { return a -= b; }
    friend SElt operator*(const Poly& p, const SElt& s);
    friend bool operator==(const SElt& a, const SElt& b);

    std::string toString() const;
    Json toJson() const;

private:
    int residue(int k) const;
    /// Product A_{i,k+d} A_{i,k+3d} ... up to target, or its inverse below.
    Mono shiftFactor(int from, int to) const;
    void canonicalizeClass(int r, std::map<int, Poly> entries);

    CartanPtr cartan_;
    int node_;
    int d_;
    std::map<int, Poly> coeffs_;
};

/// S_i(p) by the Leibniz rule from S_i(Y_{i,k}^{+-1}) = +-Y_{i,k}^{+-1} S_{i,k}.
SElt screen(const CartanPtr& cartan, int i, const Poly& p);

/// The h-linear term of Theta_{i,h}(p), evaluated over dual numbers from
///   Theta_{i,h}(Y_{i,k}) = Y_{i,k} - h Y_{i,k} / Sigma~_{i,k-d},
///   Theta_{i,h}(Y_{i,k}^{-1}) = Y_{i,k}^{-1} + h Y_{i,k}^{-1} A_{i,k-d} / Sigma~_{i,k-3d},
/// with 1/Sigma~_{i,m} = -S_{i,m+d}.  Classes are kept on the fixed bases
/// 0 .. 2d_i - 1, then canonicalized.
SElt thetaDeformLinearTerm(const CartanPtr& cartan, int i, const Poly& p);

/// screen(i, p) == 0 for every node.
bool inKernelAll(const CartanPtr& cartan, const Poly& p);

}  // namespace qweyl
