#pragma once

// Truncated pointed series in the completion attached to a Weyl group element w.
//
// A pointed series is c*m0*(1 + lower terms).  Every term m carries its offset
// beta(m) = w(omega(m0) - omega(m)) in the simple-root basis; offsets lie in
// Q+, only the anchor has offset 0, and a series of order N stores exactly the
// terms of offset height <= N.  Offsets add under multiplication, so products
// never touch the weight lattice again.

#include "qweyl/io.hpp"
#include "qweyl/laurent.hpp"
#include "qweyl/rootsystem.hpp"

#include <array>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qweyl {

inline constexpr int kMaxSeriesRank = 8;

struct Offset {
    std::array<int, kMaxSeriesRank> c{};
    int height = 0;

    static Offset fromRoot(const RootVector& r);
    RootVector toRoot(int rank) const;
    bool isNonNegative() const;
    bool isZero() const { return height == 0 && isNonNegative(); }

    friend Offset operator+(const Offset& a, const Offset& b);
    friend Offset operator-(const Offset& a, const Offset& b);
    friend bool operator==(const Offset& a, const Offset& b) { return a.c == b.c; }
};

struct Term {
    Mono mono;
    Integer coeff;
    Offset offset;
};

class PSeries {
public:
    PSeries() = default;

    static PSeries monomial(CartanPtr cartan, WeylElt w, const Mono& m, Integer c, int order);
    static PSeries one(CartanPtr cartan, WeylElt w, int order) {
        return monomial(std::move(cartan), std::move(w), Mono{}, 1, order);
    }

    /// Builds from raw terms.  Offsets are computed from weights; the anchor
    /// must be present and every other term strictly w-lower.
    static PSeries fromPoly(CartanPtr cartan, WeylElt w, const Mono& anchor, const Poly& terms, int order);

    /// Terms with precomputed offsets relative to `anchor`; zero coefficients
    /// and heights above `order` are dropped.  Internal building block.
    static PSeries fromOffsetTerms(CartanPtr cartan, WeylElt w, const Mono& anchor, std::vector<Term> terms,
                                   int order);

    const CartanPtr& cartan() const { return cartan_; }
    const WeylElt& w() const { return w_; }
    const Mono& anchor() const { return terms_.front().mono; }
    const Integer& anchorCoeff() const { return terms_.front().coeff; }
    int order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool isUnit() const { return anchorCoeff() == 1 || anchorCoeff() == -1; }
    Weight anchorWeight() const { return anchor().weight(cartan_->rank()); }

    Integer coeff(const Mono& m) const;
    /// w(omega(anchor) - omega(m)), or empty when that difference is not in Q.
    std::optional<Offset> offsetOf(const Mono& m) const;

    Poly toPoly() const;
    PSeries truncated(int order) const;
    PSeries shifted(int s) const;
    PSeries scaled(const Integer& c) const;
    PSeries timesMono(const Mono& m) const;
    PSeries operator-() const { return scaled(-1); }

    friend PSeries operator*(const PSeries& x, const PSeries& y);
    PSeries inverse() const;
    PSeries pow(int e) const;

    std::string toString() const;
    Json toJson() const;

private:
    void sortTerms();

    CartanPtr cartan_;
    WeylElt w_;
    std::vector<Term> terms_;
    int order_ = 0;
};

inline PSeries operator/(const PSeries& x, const PSeries& y) { return x * y.inverse(); }
inline PSeries tauSeries(const PSeries& x, int s) { return x.shifted(s); }
inline PSeries invSeries(const PSeries& x) { return x.inverse(); }

/// Offset of anchor b relative to anchor a in component w, when b is w-lower
/// or equal: w(omega(a) - omega(b)) in Q+.  Empty if incomparable.
std::optional<Offset> anchorGap(const CartanData& cartan, const WeylElt& w, const Mono& a, const Mono& b);

/// A finite sum of pointed series in one component, kept normalized: no two
/// anchors are w-comparable.  The empty sum is zero up to the tracked orders.
class SeriesSum {
public:
    SeriesSum() = default;
    SeriesSum(CartanPtr cartan, WeylElt w) : cartan_(std::move(cartan)), w_(std::move(w)) {}
    SeriesSum(const PSeries& x);  // NOLINT(google-explicit-constructor)

    const CartanPtr& cartan() const { return cartan_; }
    const WeylElt& w() const { return w_; }
    const std::vector<PSeries>& parts() const { return parts_; }
    bool isZero() const { return parts_.empty(); }
    bool isPointed() const { return parts_.size() == 1; }
    /// The single pointed series; throws SeriesError otherwise.
    const PSeries& single() const;
    int order() const;

    SeriesSum& operator+=(const SeriesSum& o);
    SeriesSum& operator-=(const SeriesSum& o);
    SeriesSum operator-() const;
    friend SeriesSum operator+(SeriesSum a, const SeriesSum& b) { return a += b; }
    friend SeriesSum operator-(SeriesSum a, const SeriesSum& b) { return a -= b; }
    friend SeriesSum operator*(const SeriesSum& a, const SeriesSum& b);
    SeriesSum shifted(int s) const;
    SeriesSum truncated(int order) const;

    /// Monomials of all parts merged (useful for printing and comparisons).
    Poly toPoly() const;
    std::string toString() const;
    Json toJson() const;

private:
    // Every summand is only known below its anchor up to offset height
    // `order`; a frame records that window so that cancellations do not
    // forget it.  Terms outside some frame's window are dropped.
    struct Frame {
        Mono anchor;
        int order;
    };

    void absorb(PSeries x);
    bool addFrame(const Mono& anchor, int order);
    std::optional<PSeries> limited(const PSeries& x) const;
    void restrictParts();

    CartanPtr cartan_;
    WeylElt w_;
    std::vector<PSeries> parts_;
    std::vector<Frame> frames_;
    int order_ = std::numeric_limits<int>::max();
};

SeriesSum addSeries(const PSeries& x, const PSeries& y);

/// Splits a polynomial into pointed series grouped under w-maximal monomials.
SeriesSum embed(const Poly& p, const CartanPtr& cartan, const WeylElt& w, int order);

/// Outcome of comparing two truncated elements.
struct Comparison {
    bool equal = true;
    int order = 0;
    std::string firstMismatch;
};

/// Equal iff the difference cancels at every tracked term.
Comparison compareSeries(const SeriesSum& a, const SeriesSum& b);

/// Direct sum over components, keyed by the Weyl element.
class PiElt {
public:
    using Components = std::map<std::vector<long>, SeriesSum>;

    void set(const SeriesSum& x) { components_[x.w().key()] = x; }
    const SeriesSum* find(const WeylElt& w) const;
    const Components& components() const { return components_; }

    PiElt& operator+=(const PiElt& o);
    friend PiElt operator*(const PiElt& a, const PiElt& b);

private:
    Components components_;
};

/// The diagonal image of a polynomial in the requested components.
PiElt embedDiagonal(const Poly& p, const CartanPtr& cartan, const std::vector<WeylElt>& ws, int order);

}  // namespace qweyl
