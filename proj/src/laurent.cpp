#include "qweyl/laurent.hpp"

#include "qweyl/error.hpp"

#include <algorithm>

namespace qweyl {

namespace {

std::vector<Factor> normalize(std::vector<Factor> fs) {
    std::sort(fs.begin(), fs.end(),
              [](const Factor& a, const Factor& b) { return a.node != b.node ? a.node < b.node : a.k < b.k; });
    std::vector<Factor> out;
    out.reserve(fs.size());
    for (const auto& f : fs) {
        if (!out.empty() && out.back().node == f.node && out.back().k == f.k) {
            out.back().exp += f.exp;
            if (out.back().exp == 0) out.pop_back();
        } else if (f.exp != 0) {
            out.push_back(f);
        }
    }
    return out;
}

}  // namespace

Mono Mono::y(int node, int k, int exp) {
    Mono m;
    if (exp != 0) m.factors_.push_back({node, k, exp});
    return m;
}

Mono Mono::fromFactors(std::vector<Factor> factors) {
    Mono m;
    m.factors_ = normalize(std::move(factors));
    return m;
}

int Mono::exponent(int node, int k) const {
    for (const auto& f : factors_)
        if (f.node == node && f.k == k) return f.exp;
    return 0;
}

long Mono::nodeDegree(int node) const {
    long s = 0;
    for (const auto& f : factors_)
        if (f.node == node) s += f.exp;
    return s;
}

Weight Mono::weight(int rank) const {
    IntVector v = IntVector::Zero(rank);
    for (const auto& f : factors_) {
        if (f.node < 0 || f.node >= rank) throw CartanError("monomial uses a node outside the Cartan rank");
        v(f.node) += f.exp;
    }
    return Weight(v);
}

Mono Mono::inverse() const {
    Mono m = *this;
    for (auto& f : m.factors_) f.exp = -f.exp;
    return m;
}

Mono Mono::pow(int e) const {
    if (e == 0) return {};
    Mono m = *this;
    for (auto& f : m.factors_) f.exp *= e;
    return m;
}

Mono Mono::shifted(int s) const {
    Mono m = *this;
    for (auto& f : m.factors_) f.k += s;
    return m;
}

std::size_t Mono::hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const auto& f : factors_) {
        for (int v : {f.node, f.k, f.exp}) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(v));
            h *= 0x100000001b3ull;
        }
    }
    return h;
}

Mono operator*(const Mono& a, const Mono& b) {
    Mono m;
    auto& out = m.factors_;
    out.reserve(a.factors_.size() + b.factors_.size());
    auto x = a.factors_.begin(), y = b.factors_.begin();
    while (x != a.factors_.end() && y != b.factors_.end()) {
        if (x->node == y->node && x->k == y->k) {
            int e = x->exp + y->exp;
            if (e != 0) out.push_back({x->node, x->k, e});
            ++x;
            ++y;
        } else if (x->node < y->node || (x->node == y->node && x->k < y->k)) {
            out.push_back(*x++);
        } else {
            out.push_back(*y++);
        }
    }
    out.insert(out.end(), x, a.factors_.end());
    out.insert(out.end(), y, b.factors_.end());
    return m;
}

Mono aMono(const CartanData& cartan, int i, int k) {
    cartan.checkNode(i);
    const int di = static_cast<int>(cartan.d(i));
    std::vector<Factor> fs{{i, k - di, 1}, {i, k + di, 1}};
    for (int j = 0; j < cartan.rank(); ++j) {
        if (j == i) continue;
        switch (cartan.C(j, i)) {
        case 0: break;
        case -1: fs.push_back({j, k, -1}); break;
        case -2:
            fs.push_back({j, k - 1, -1});
            fs.push_back({j, k + 1, -1});
            break;
        case -3:
            fs.push_back({j, k - 2, -1});
            fs.push_back({j, k, -1});
            fs.push_back({j, k + 2, -1});
            break;
        default: throw CartanError("unexpected Cartan entry");
        }
    }
    return Mono::fromFactors(std::move(fs));
}

Poly::Poly(const Mono& m, Integer c) {
    if (c != 0) terms_.emplace(m, std::move(c));
}

Poly Poly::constant(Integer c) { return Poly(Mono{}, std::move(c)); }

bool Poly::isUnitMonomial() const {
    return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

Integer Poly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

void Poly::addTerm(const Mono& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.addTerm(ma * mb, ca * cb);
    return out;
}

Poly operator*(const Integer& c, const Poly& p) {
    Poly out;
    if (c == 0) return out;
    out = p;
    for (auto& [m, x] : out.terms_) x *= c;
    return out;
}

Poly Poly::pow(int e) const {
    if (e < 0) {
        if (!isUnitMonomial())
            throw Error("negative power of a non-monomial polynomial; invert it as a series instead");
        const auto& [m, c] = *terms_.begin();
        return Poly(m.pow(e), (e % 2 == 0) ? Integer(1) : c);
    }
    Poly result = constant(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Poly Poly::shifted(int s) const {
    Poly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m.shifted(s), c);
    return out;
}

}  // namespace qweyl
