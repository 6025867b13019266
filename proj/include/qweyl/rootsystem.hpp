#pragma once

// Finite-type Cartan data, the root and weight lattices, and Weyl group
// elements acting on the root lattice.
//
// Conventions. Nodes are 0-based internally and 1-based in every text or CLI
// surface. The simple root alpha_i, written in the fundamental-weight basis,
// is column i of C:  alpha_i = sum_j C(j,i) omega_j.  Consequently the simple
// reflection acts on the root lattice by
//
//     s_j(alpha_i) = alpha_i - C(j,i) alpha_j
//
// and on weights by s_i(lambda) = lambda - lambda_i alpha_i.  With the B2
// matrix C(0,1) = -1, C(1,0) = -2 this gives s_2(alpha_1) = alpha_1 + 2 alpha_2.
// References that use the transposed matrix get the long and short roots
// swapped, so compare against the matrix, not the type label.

#include <Eigen/Dense>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qweyl {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<long>;
using IntVector = Vector<long>;

/// Element of the root lattice Q in the simple-root basis.
struct RootVector {
    IntVector coords;

    RootVector() = default;
    explicit RootVector(IntVector c) : coords(std::move(c)) {}
    static RootVector zero(int rank) { return RootVector(IntVector::Zero(rank)); }
    static RootVector simple(int rank, int i);

    int rank() const { return static_cast<int>(coords.size()); }
    long height() const { return coords.sum(); }
    bool isZero() const { return coords.isZero(); }
    /// True iff every coordinate is >= 0, i.e. the vector lies in Q+.
    bool isNonNegative() const { return (coords.array() >= 0).all(); }
    bool isNonPositive() const { return (coords.array() <= 0).all(); }

    friend RootVector operator+(const RootVector& a, const RootVector& b) { return RootVector(a.coords + b.coords); }
    friend RootVector operator-(const RootVector& a, const RootVector& b) { return RootVector(a.coords - b.coords); }
    friend RootVector operator-(const RootVector& a) { return RootVector(-a.coords); }
    friend RootVector operator*(long s, const RootVector& a) { return RootVector(s * a.coords); }
    friend bool operator==(const RootVector& a, const RootVector& b) { return a.coords == b.coords; }
    friend bool operator<(const RootVector& a, const RootVector& b);
};

/// Element of the weight lattice P in the fundamental-weight basis.
struct Weight {
    IntVector coords;

    Weight() = default;
    explicit Weight(IntVector c) : coords(std::move(c)) {}
    static Weight zero(int rank) { return Weight(IntVector::Zero(rank)); }
    static Weight fundamental(int rank, int i);

    int rank() const { return static_cast<int>(coords.size()); }

    friend Weight operator+(const Weight& a, const Weight& b) { return Weight(a.coords + b.coords); }
    friend Weight operator-(const Weight& a, const Weight& b) { return Weight(a.coords - b.coords); }
    friend Weight operator-(const Weight& a) { return Weight(-a.coords); }
    friend Weight operator*(long s, const Weight& a) { return Weight(s * a.coords); }
    friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
    friend bool operator<(const Weight& a, const Weight& b);
};

std::string toString(const RootVector& r);
std::string toString(const Weight& w);

class CartanData {
public:
    /// Validates a raw matrix and derives the symmetrizer and root system.
    /// Throws CartanError naming the violated invariant.
    static CartanData fromMatrix(const IntMatrix& c, std::string name = "");

    /// Named finite types: "A3", "B2", "G2", "D4", products such as "A1xA1".
    static CartanData named(std::string_view type);

    int rank() const { return static_cast<int>(c_.rows()); }
    long C(int i, int j) const { return c_(i, j); }
    const IntMatrix& matrix() const { return c_; }
    long d(int i) const { return d_(i); }
    const IntVector& symmetrizer() const { return d_; }
    long maxD() const { return d_.maxCoeff(); }
    const std::string& name() const { return name_; }

    const std::vector<RootVector>& positiveRoots() const { return positive_; }
    bool isRoot(const RootVector& r) const;

    void checkNode(int i) const;

    Weight rootToWeight(const RootVector& r) const { return Weight(c_ * r.coords); }
    /// Exact conversion P -> Q; empty when the weight is not in the root lattice.
    std::optional<RootVector> weightToRoot(const Weight& w) const;
    Weight alphaWeight(int i) const { return Weight(c_.col(i)); }

    /// Weight after applying s_i.
    Weight reflectWeight(int i, const Weight& w) const;

private:
    CartanData() = default;

    IntMatrix c_;
    IntVector d_;
    IntMatrix invNum_;
    long invDen_ = 1;
    std::vector<RootVector> positive_;
    std::string name_;
};

using CartanPtr = std::shared_ptr<const CartanData>;

inline CartanPtr makeCartan(std::string_view type) {
    return std::make_shared<const CartanData>(CartanData::named(type));
}

/// Element of W, stored as its matrix on Q in the simple-root basis together
/// with a witness word.  Equality and ordering only look at the matrix.
class WeylElt {
public:
    WeylElt() = default;
    static WeylElt identity(int rank);
    static WeylElt fromWord(const CartanData& cartan, const std::vector<int>& word);

    const std::vector<int>& word() const { return word_; }
    const IntMatrix& rootAction() const { return action_; }
    int rank() const { return static_cast<int>(action_.rows()); }
    bool isIdentity() const { return action_.isIdentity(); }

    RootVector apply(const RootVector& beta) const { return RootVector(action_ * beta.coords); }

    /// Word in 1-based node labels, "e" for the empty word.
    std::string wordString() const;
    /// Flattened matrix entries; a total order key.
    std::vector<long> key() const;

    friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.action_ == b.action_; }
    friend bool operator!=(const WeylElt& a, const WeylElt& b) { return !(a == b); }
    friend bool operator<(const WeylElt& a, const WeylElt& b) { return a.key() < b.key(); }

private:
    friend WeylElt compose(const WeylElt& u, const WeylElt& v);
    friend WeylElt simpleReflection(const CartanData& cartan, int i);

    std::vector<int> word_;
    IntMatrix action_;
};

WeylElt simpleReflection(const CartanData& cartan, int i);
/// Product uv: matrices multiply, words concatenate.
WeylElt compose(const WeylElt& u, const WeylElt& v);
/// w s_i.
WeylElt rightMultiply(const CartanData& cartan, const WeylElt& w, int i);
/// True iff w(beta) has all simple-root coordinates >= 0.
bool isPositive(const WeylElt& w, const RootVector& beta);

/// All elements of W, breadth-first under right multiplication by the s_i,
/// so each element carries a shortest word.  Throws once more than `bound`
/// elements have been found.
std::vector<WeylElt> enumerate(const CartanData& cartan, std::size_t bound = 100000);

/// Parses a word such as "e", "s1s2", "1 2", "121".
WeylElt parseWeylWord(const CartanData& cartan, std::string_view text);

/// Braid exponent m_ij for i != j: 2, 3, 4 or 6.
int braidExponent(const CartanData& cartan, int i, int j);

}  // namespace qweyl
