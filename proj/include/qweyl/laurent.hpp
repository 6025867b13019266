#pragma once

// The ring of Laurent polynomials in the Y_{i,a}, restricted to one q-orbit:
// a spectral parameter a = q^k is stored as the integer k.

#include "qweyl/integer.hpp"
#include "qweyl/rootsystem.hpp"

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace qweyl {

/// One variable power Y_{node,q^k}^exp inside a monomial.
struct Factor {
    int node;
    int k;
    int exp;

    friend bool operator==(const Factor&, const Factor&) = default;
    friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Monomial in the Y_{i,k}^{±1}; factors are sorted by (node, k) and never
/// carry a zero exponent, so structural equality is mathematical equality.
class Mono {
public:
    Mono() = default;
    static Mono y(int node, int k, int exp = 1);
    /// Builds from arbitrary factors, merging repeats and dropping zeros.
    static Mono fromFactors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    bool isOne() const { return factors_.empty(); }
    int exponent(int node, int k) const;
    /// Total exponent of node i, the i-th coordinate of the weight.
    long nodeDegree(int node) const;
    Weight weight(int rank) const;

    Mono inverse() const;
    Mono pow(int e) const;
    Mono shifted(int s) const;

    std::size_t hash() const;

    friend Mono operator*(const Mono& a, const Mono& b);
    friend Mono operator/(const Mono& a, const Mono& b) { return a * b.inverse(); }
    friend bool operator==(const Mono& a, const Mono& b) { return a.factors_ == b.factors_; }
    friend bool operator<(const Mono& a, const Mono& b) { return a.factors_ < b.factors_; }

private:
    std::vector<Factor> factors_;
};

struct MonoHash {
    std::size_t operator()(const Mono& m) const { return m.hash(); }
};

/// A_{i,q^k}: weight alpha_i, built from the Cartan matrix column i.
Mono aMono(const CartanData& cartan, int i, int k);

/// Finite Z-linear combination of monomials.
class Poly {
public:
    using Terms = std::map<Mono, Integer>;

    Poly() = default;
    Poly(const Mono& m, Integer c = 1);
    static Poly constant(Integer c);
    static Poly y(int node, int k, int exp = 1) { return Poly(Mono::y(node, k, exp)); }

    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// True iff exactly one term with coefficient ±1.
    bool isUnitMonomial() const;
    Integer coeff(const Mono& m) const;

    void addTerm(const Mono& m, const Integer& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Integer& c, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    /// Nonnegative powers of anything; negative powers only of ±monomials.
    Poly pow(int e) const;
    Poly shifted(int s) const;

private:
    Terms terms_;
};

inline Poly tau(const Poly& p, int s) { return p.shifted(s); }
inline Mono tau(const Mono& m, int s) { return m.shifted(s); }

}  // namespace qweyl
