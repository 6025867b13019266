#pragma once

// The classical shadow: Z[y_i^{+-1}], the ring R obtained by inverting the
// factors (1 - a_alpha^{-1}), its W-action, expansions in the completions,
// and the projection varpi : Y_{i,k} -> y_i.
//
// Truncated y-series reuse PSeries with y_i written as Y_{i,0}.

#include "qweyl/series.hpp"
#include "qweyl/weylaction.hpp"

#include <map>
#include <string>
#include <vector>

namespace qweyl {

/// y^u with u in the fundamental-weight basis.
using ClassMono = std::vector<int>;

class ClassPoly {
public:
    explicit ClassPoly(int rank = 0) : rank_(rank) {}
    static ClassPoly constant(int rank, Integer c);
    static ClassPoly monomial(const ClassMono& u, Integer c = 1);
    static ClassPoly y(int rank, int i, int e = 1);
    /// a_alpha = prod a_i^{c_i} with a_i = prod_j y_j^{C_{ji}}.
    static ClassMono aMonomial(const CartanData& cartan, const RootVector& alpha);

    int rank() const { return rank_; }
    const std::map<ClassMono, Integer>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    void addTerm(const ClassMono& u, const Integer& c);

    ClassPoly& operator+=(const ClassPoly& o);
    ClassPoly& operator-=(const ClassPoly& o);
    friend ClassPoly operator+(ClassPoly a, const ClassPoly& b) { return a += b; }
    friend ClassPoly operator-(ClassPoly a, const ClassPoly& b) { return a -= b; }
    friend ClassPoly operator*(const ClassPoly& a, const ClassPoly& b);
    friend bool operator==(const ClassPoly& a, const ClassPoly& b) { return a.terms_ == b.terms_; }

    /// y_i written as Y_{i,0}.
    Poly toY() const;
    std::string toString() const;
    Json toJson() const;

private:
    int rank_;
    std::map<ClassMono, Integer> terms_;
};

/// s_i(y_j) = y_j a_i^{-delta_ij}.
ClassPoly classicalReflect(const CartanData& cartan, int i, const ClassPoly& p);

/// numerator / prod (1 - a_alpha^{-1}) over a multiset of positive roots.
class RElt {
public:
    RElt(CartanPtr cartan, ClassPoly numerator, std::vector<RootVector> denominator = {});
    static RElt fromClassPoly(CartanPtr cartan, ClassPoly p) { return RElt(std::move(cartan), std::move(p)); }
    /// (1 - a_alpha^{-1})^{-1}.
    static RElt inverseFactor(CartanPtr cartan, const RootVector& alpha);

    const CartanPtr& cartan() const { return cartan_; }
    const ClassPoly& numerator() const { return num_; }
    const std::vector<RootVector>& denominator() const { return den_; }

    friend RElt operator+(const RElt& a, const RElt& b);
    friend RElt operator-(const RElt& a, const RElt& b);
    friend RElt operator*(const RElt& a, const RElt& b);
    /// Cross-multiplication over the union of the denominators.
    friend bool operator==(const RElt& a, const RElt& b);

    std::string toString() const;
    Json toJson() const;

private:
    CartanPtr cartan_;
    ClassPoly num_;
    std::vector<RootVector> den_;  // sorted
};

RElt classicalReflect(int i, const RElt& x);

/// The expansion of x in the completion of w, to offset height N.
SeriesSum expandInCompletion(const RElt& x, const WeylElt& w, int N);

/// Y_{i,k} -> y_i.
ClassPoly varpi(const CartanData& cartan, const Poly& p);
PSeries varpi(const PSeries& x);
SeriesSum varpi(const SeriesSum& x);

/// s_i on a y-series of component w, landing in component w s_i.
PSeries classicalReflect(int i, const PSeries& x);
SeriesSum classicalReflect(int i, const SeriesSum& x);

/// varpi(Theta_i(x)) == s_i(varpi(x)) for x in the component of w.
CheckEntry checkEquivariance(ThetaContext& ctx, int i, const SeriesSum& x, std::string label);

/// The sl2 chain: 1 - 1/(1 - y^-2) = 1/(1 - y^2) = s_1(1/(1 - y^-2)) in R, and
/// the matching series identities for Sigma_{1,k} and Theta_1(Sigma_{1,k}).
Report verifySl2Chain(int N, const std::vector<int>& shifts = {0, 3});

}  // namespace qweyl
