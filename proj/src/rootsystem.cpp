#include "qweyl/rootsystem.hpp"

#include "qweyl/error.hpp"

#include <boost/rational.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace qweyl {

namespace {

using Rational = boost::rational<long>;

bool lexLess(const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

std::vector<long> toKey(const IntVector& v) { return {v.data(), v.data() + v.size()}; }

// Fraction-free determinant of the leading k x k block.
long leadingMinor(const IntMatrix& m, int k) {
    IntMatrix a = m.topLeftCorner(k, k);
    long prev = 1;
    long sign = 1;
    for (int p = 0; p < k; ++p) {
        if (a(p, p) == 0) {
            int swap = -1;
            for (int r = p + 1; r < k; ++r)
                if (a(r, p) != 0) swap = r;
            if (swap < 0) return 0;
            a.row(p).swap(a.row(swap));
            sign = -sign;
        }
        for (int r = p + 1; r < k; ++r) {
            for (int c = p + 1; c < k; ++c) a(r, c) = (a(r, c) * a(p, p) - a(r, p) * a(p, c)) / prev;
            a(r, p) = 0;
        }
        prev = a(p, p);
    }
    return sign * a(k - 1, k - 1);
}

// Smallest positive integer symmetrizer, normalized per connected component.
IntVector computeSymmetrizer(const IntMatrix& c) {
    const int n = static_cast<int>(c.rows());
    std::vector<Rational> d(n, Rational(0));
    std::vector<int> component(n, -1);
    int ncomp = 0;
    for (int start = 0; start < n; ++start) {
        if (component[start] >= 0) continue;
        d[start] = 1;
        component[start] = ncomp;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < n; ++j) {
                if (j == i || c(i, j) == 0) continue;
                Rational dj = d[i] * Rational(c(i, j), c(j, i));
                if (component[j] < 0) {
                    component[j] = ncomp;
                    d[j] = dj;
                    queue.push_back(j);
                } else if (d[j] != dj) {
                    throw CartanError("Cartan matrix is not symmetrizable: no diagonal D with D*C symmetric");
                }
            }
        }
        ++ncomp;
    }
    IntVector out(n);
    for (int comp = 0; comp < ncomp; ++comp) {
        long lcm = 1;
        for (int i = 0; i < n; ++i)
            if (component[i] == comp) lcm = std::lcm(lcm, d[i].denominator());
        long g = 0;
        for (int i = 0; i < n; ++i)
            if (component[i] == comp) g = std::gcd(g, d[i].numerator() * (lcm / d[i].denominator()));
        for (int i = 0; i < n; ++i)
            if (component[i] == comp) out(i) = d[i].numerator() * (lcm / d[i].denominator()) / g;
    }
    for (int i = 0; i < n; ++i)
        if (out(i) <= 0) throw CartanError("Cartan matrix is not symmetrizable with positive d_i");
    return out;
}

IntMatrix reflectionMatrix(const IntMatrix& c, int i) {
    const int n = static_cast<int>(c.rows());
    IntMatrix m = IntMatrix::Identity(n, n);
    for (int k = 0; k < n; ++k) m(i, k) -= c(i, k);
    return m;
}

struct Factor {
    char series;
    int rank;
};

IntMatrix cartanForFactor(Factor f) {
    const int n = f.rank;
    std::vector<long> d(n, 1);
    std::vector<std::pair<int, int>> edges;
    auto chain = [&](int len) {
        for (int i = 0; i + 1 < len; ++i) edges.emplace_back(i, i + 1);
    };
    switch (f.series) {
    case 'A':
        if (n < 1) throw CartanError("type A needs rank >= 1");
        chain(n);
        break;
    case 'B':
        if (n < 2) throw CartanError("type B needs rank >= 2");
        chain(n);
        std::fill(d.begin(), d.end() - 1, 2);
        break;
    case 'C':
        if (n < 2) throw CartanError("type C needs rank >= 2");
        chain(n);
        d.back() = 2;
        break;
    case 'D':
        if (n < 4) throw CartanError("type D needs rank >= 4");
        chain(n - 1);
        edges.emplace_back(n - 3, n - 1);
        break;
    case 'E':
        if (n < 6 || n > 8) throw CartanError("type E needs rank 6, 7 or 8");
        // Bourbaki labels: 1-3-4-5-6-7-8 with 2 attached to 4.
        edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
        for (int i = 4; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        break;
    case 'F':
        if (n != 4) throw CartanError("type F needs rank 4");
        chain(4);
        d = {2, 2, 1, 1};
        break;
    case 'G':
        if (n != 2) throw CartanError("type G needs rank 2");
        chain(2);
        d = {3, 1};
        break;
    default:
        throw CartanError(fmt::format("unknown Cartan series '{}'", f.series));
    }
    IntMatrix c = 2 * IntMatrix::Identity(n, n);
    for (auto [i, j] : edges) {
        long m = std::max(d[i], d[j]);
        c(i, j) = -m / d[i];
        c(j, i) = -m / d[j];
    }
    return c;
}

}  // namespace

RootVector RootVector::simple(int rank, int i) {
    IntVector v = IntVector::Zero(rank);
    v(i) = 1;
    return RootVector(v);
}

bool operator<(const RootVector& a, const RootVector& b) { return lexLess(a.coords, b.coords); }

Weight Weight::fundamental(int rank, int i) {
    IntVector v = IntVector::Zero(rank);
    v(i) = 1;
    return Weight(v);
}

bool operator<(const Weight& a, const Weight& b) { return lexLess(a.coords, b.coords); }

std::string toString(const RootVector& r) {
    std::string s = "(";
    for (int i = 0; i < r.rank(); ++i) s += fmt::format("{}{}", i ? "," : "", r.coords(i));
    return s + ")";
}

std::string toString(const Weight& w) {
    std::string s = "[";
    for (int i = 0; i < w.rank(); ++i) s += fmt::format("{}{}", i ? "," : "", w.coords(i));
    return s + "]";
}

CartanData CartanData::fromMatrix(const IntMatrix& c, std::string name) {
    const int n = static_cast<int>(c.rows());
    if (n == 0 || c.cols() != n) throw CartanError("Cartan matrix must be square and non-empty");
    for (int i = 0; i < n; ++i) {
        if (c(i, i) != 2) throw CartanError(fmt::format("C[{},{}] must be 2", i + 1, i + 1));
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (c(i, j) > 0 || c(i, j) < -3)
                throw CartanError(fmt::format("off-diagonal entry C[{},{}] = {} outside {{0,-1,-2,-3}}", i + 1,
                                              j + 1, c(i, j)));
            if ((c(i, j) == 0) != (c(j, i) == 0))
                throw CartanError(fmt::format("C[{},{}] = 0 but C[{},{}] != 0", i + 1, j + 1, j + 1, i + 1));
        }
    }
    CartanData out;
    out.c_ = c;
    out.d_ = computeSymmetrizer(c);
    IntMatrix b = out.d_.asDiagonal() * c;
    if (b != b.transpose()) throw CartanError("diag(d)*C is not symmetric");
    for (int k = 1; k <= n; ++k)
        if (leadingMinor(b, k) <= 0)
            throw CartanError(
                fmt::format("diag(d)*C is not positive definite (leading minor {} is not positive); not finite type",
                            k));
    out.name_ = name.empty() ? "custom" : std::move(name);

    // Exact inverse of C over the rationals, stored as an integer matrix over a
    // common denominator.
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = c(i, j);
        aug[i][n + i] = 1;
    }
    for (int p = 0; p < n; ++p) {
        int piv = p;
        while (aug[piv][p].numerator() == 0) ++piv;
        std::swap(aug[p], aug[piv]);
        Rational inv = Rational(1) / aug[p][p];
        for (auto& x : aug[p]) x *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == p || aug[r][p].numerator() == 0) continue;
            Rational f = aug[r][p];
            for (int col = 0; col < 2 * n; ++col) aug[r][col] -= f * aug[p][col];
        }
    }
    long den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) den = std::lcm(den, aug[i][n + j].denominator());
    out.invDen_ = den;
    out.invNum_.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& x = aug[i][n + j];
            out.invNum_(i, j) = x.numerator() * (den / x.denominator());
        }

    // Roots: the W-orbit of the simple roots.
    std::set<std::vector<long>> seen;
    std::deque<IntVector> queue;
    for (int i = 0; i < n; ++i) {
        IntVector e = RootVector::simple(n, i).coords;
        seen.insert(toKey(e));
        queue.push_back(e);
    }
    std::vector<IntMatrix> refl;
    for (int i = 0; i < n; ++i) refl.push_back(reflectionMatrix(c, i));
    while (!queue.empty()) {
        IntVector r = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            IntVector s = refl[i] * r;
            if (seen.insert(toKey(s)).second) {
                if (seen.size() > 100000) throw CartanError("root system is not finite");
                queue.push_back(s);
            }
        }
    }
    for (const auto& key : seen) {
        IntVector v = Eigen::Map<const IntVector>(key.data(), n);
        if ((v.array() >= 0).all()) out.positive_.emplace_back(v);
        else if (!(v.array() <= 0).all()) throw CartanError("root with mixed-sign coordinates; not finite type");
    }
    std::sort(out.positive_.begin(), out.positive_.end(), [](const RootVector& a, const RootVector& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return b < a;
    });
    return out;
}

CartanData CartanData::named(std::string_view type) {
    std::vector<Factor> factors;
    std::string text(type);
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find_first_of("xX*", pos);
        std::string part = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (part.size() < 2 || !std::isalpha(static_cast<unsigned char>(part[0])))
            throw CartanError(fmt::format("cannot parse Cartan type '{}'", text));
        Factor f{static_cast<char>(std::toupper(static_cast<unsigned char>(part[0]))), 0};
        try {
            std::size_t used = 0;
            f.rank = std::stoi(part.substr(1), &used);
            if (used + 1 != part.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw CartanError(fmt::format("cannot parse Cartan type '{}'", text));
        }
        factors.push_back(f);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (factors.empty()) throw CartanError("empty Cartan type");
    int n = 0;
    for (auto f : factors) n += f.rank;
    IntMatrix c = IntMatrix::Zero(n, n);
    int offset = 0;
    for (auto f : factors) {
        c.block(offset, offset, f.rank, f.rank) = cartanForFactor(f);
        offset += f.rank;
    }
    return fromMatrix(c, text);
}

bool CartanData::isRoot(const RootVector& r) const {
    for (const auto& p : positive_)
        if (p == r || p == -r) return true;
    return false;
}

void CartanData::checkNode(int i) const {
    if (i < 0 || i >= rank()) throw CartanError(fmt::format("node {} out of range 1..{}", i + 1, rank()));
}

std::optional<RootVector> CartanData::weightToRoot(const Weight& w) const {
    IntVector num = invNum_ * w.coords;
    for (int i = 0; i < num.size(); ++i)
        if (num(i) % invDen_ != 0) return std::nullopt;
    return RootVector(num / invDen_);
}

Weight CartanData::reflectWeight(int i, const Weight& w) const {
    return Weight(w.coords - w.coords(i) * c_.col(i));
}

WeylElt WeylElt::identity(int rank) {
    WeylElt e;
    e.action_ = IntMatrix::Identity(rank, rank);
    return e;
}

WeylElt WeylElt::fromWord(const CartanData& cartan, const std::vector<int>& word) {
    WeylElt w = identity(cartan.rank());
    for (int i : word) w = rightMultiply(cartan, w, i);
    return w;
}

std::string WeylElt::wordString() const {
    if (word_.empty()) return "e";
    std::string s;
    for (int i : word_) s += fmt::format("s{}", i + 1);
    return s;
}

std::vector<long> WeylElt::key() const { return {action_.data(), action_.data() + action_.size()}; }

WeylElt simpleReflection(const CartanData& cartan, int i) {
    cartan.checkNode(i);
    WeylElt s;
    s.word_ = {i};
    s.action_ = reflectionMatrix(cartan.matrix(), i);
    return s;
}

WeylElt compose(const WeylElt& u, const WeylElt& v) {
    WeylElt w;
    w.action_ = u.action_ * v.action_;
    w.word_ = u.word_;
    w.word_.insert(w.word_.end(), v.word_.begin(), v.word_.end());
    return w;
}

WeylElt rightMultiply(const CartanData& cartan, const WeylElt& w, int i) {
    return compose(w, simpleReflection(cartan, i));
}

bool isPositive(const WeylElt& w, const RootVector& beta) { return w.apply(beta).isNonNegative(); }

std::vector<WeylElt> enumerate(const CartanData& cartan, std::size_t bound) {
    std::vector<WeylElt> out{WeylElt::identity(cartan.rank())};
    std::set<std::vector<long>> seen{out.front().key()};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (int i = 0; i < cartan.rank(); ++i) {
            WeylElt next = rightMultiply(cartan, out[head], i);
            if (seen.insert(next.key()).second) {
                if (out.size() >= bound)
                    throw CartanError(fmt::format("Weyl group of {} has more than {} elements", cartan.name(), bound));
                out.push_back(std::move(next));
            }
        }
    }
    return out;
}

WeylElt parseWeylWord(const CartanData& cartan, std::string_view text) {
    std::vector<int> word;
    std::string t(text);
    if (t == "e" || t == "id" || t.empty()) return WeylElt::identity(cartan.rank());
    std::size_t pos = 0;
    while (pos < t.size()) {
        char ch = t[pos];
        if (ch == 's' || ch == 'S' || ch == ' ' || ch == ',' || ch == '*') {
            ++pos;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError(fmt::format("cannot parse Weyl word '{}'", t));
        // With rank < 10 every digit is one node; otherwise digits group.
        std::size_t end = pos + 1;
        if (cartan.rank() >= 10)
            while (end < t.size() && std::isdigit(static_cast<unsigned char>(t[end]))) ++end;
        int node = std::stoi(t.substr(pos, end - pos)) - 1;
        cartan.checkNode(node);
        word.push_back(node);
        pos = end;
    }
    return WeylElt::fromWord(cartan, word);
}

int braidExponent(const CartanData& cartan, int i, int j) {
    switch (cartan.C(i, j) * cartan.C(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw CartanError("unexpected Cartan product");
    }
}

}  // namespace qweyl
