#include "qweyl/screening.hpp"

#include "qweyl/error.hpp"

#include <fmt/format.h>

namespace qweyl {

SElt::SElt(CartanPtr cartan, int node) : cartan_(std::move(cartan)), node_(node) {
    cartan_->checkNode(node);
    d_ = static_cast<int>(cartan_->d(node));
}

int SElt::residue(int k) const {
    const int p = period();
    return ((k % p) + p) % p;
}

Mono SElt::shiftFactor(int from, int to) const {
    if (residue(from) != residue(to)) throw Error("S exponents in different residue classes");
    if (to < from) return shiftFactor(to, from).inverse();
    Mono m;
    for (int k = from + period(); k <= to; k += period()) m = m * aMono(*cartan_, node_, k - d_);
    return m;
}

Poly SElt::rebasedCoefficient(int k, const Poly& c, int base) const {
    return c * Poly(shiftFactor(base, k));
}

void SElt::canonicalizeClass(int r, std::map<int, Poly> entries) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = residue(it->first) == r ? coeffs_.erase(it) : std::next(it);
    std::erase_if(entries, [](const auto& e) { return e.second.isZero(); });
    if (entries.empty()) return;
    const int base = entries.begin()->first;
    Poly sum;
    for (const auto& [k, c] : entries) sum += rebasedCoefficient(k, c, base);
    if (!sum.isZero()) coeffs_.emplace(base, std::move(sum));
}

void SElt::add(int k, const Poly& c) {
    std::map<int, Poly> entries;
    for (const auto& [k0, c0] : coeffs_)
        if (residue(k0) == residue(k)) entries[k0] += c0;
    entries[k] += c;
    canonicalizeClass(residue(k), std::move(entries));
}

std::map<int, Poly> SElt::onBases(const std::map<int, int>& baseOfClass) const {
    std::map<int, Poly> out;
    for (const auto& [k, c] : coeffs_) {
        auto it = baseOfClass.find(residue(k));
        const int base = it == baseOfClass.end() ? k : it->second;
        out[base] += rebasedCoefficient(k, c, base);
    }
    return out;
}

SElt& SElt::operator+=(const SElt& o) {
    if (o.node_ != node_ || o.cartan_ != cartan_) throw Error("adding screening elements of different modules");
    for (const auto& [k, c] : o.coeffs_) add(k, c);
    return *this;
}

SElt& SElt::operator-=(const SElt& o) {
    if (o.node_ != node_ || o.cartan_ != cartan_) throw Error("subtracting screening elements of different modules");
    for (const auto& [k, c] : o.coeffs_) add(k, -c);
    return *this;
}

SElt operator*(const Poly& p, const SElt& s) {
    SElt out(s.cartan_, s.node_);
    for (const auto& [k, c] : s.coeffs_) {
        Poly pc = p * c;
        if (!pc.isZero()) out.coeffs_.emplace(k, std::move(pc));
    }
    return out;
}

bool operator==(const SElt& a, const SElt& b) {
    if (a.node_ != b.node_ || a.cartan_->rank() != b.cartan_->rank()) return false;
    std::map<int, int> bases;
    for (const auto* s : {&a, &b})
        for (const auto& [k, c] : s->coeffs_) {
            auto [it, fresh] = bases.emplace(a.residue(k), k);
            if (!fresh) it->second = std::min(it->second, k);
        }
    return a.onBases(bases) == b.onBases(bases);
}

std::string SElt::toString() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : coeffs_) {
        if (!out.empty()) out += " + ";
        out += fmt::format("({})*S[{},{}]", qweyl::toString(c), node_ + 1, k);
    }
    return out;
}

Json SElt::toJson() const {
    Json terms = Json::array();
    for (const auto& [k, c] : coeffs_) terms.push_back({{"k", k}, {"coeff", qweyl::toJson(c)}});
    return {{"node", node_ + 1}, {"terms", terms}};
}

SElt screen(const CartanPtr& cartan, int i, const Poly& p) {
    SElt out(cartan, i);
    for (const auto& [m, c] : p.terms())
        for (const auto& f : m.factors())
            if (f.node == i) out.add(f.k, Poly(m, c * f.exp));
    return out;
}

namespace {

// a + h b with h^2 = 0; b holds the coefficients of S_{i,r}, r = 0 .. 2d-1.
struct Dual {
    Poly a;
    std::map<int, Poly> b;
};

Dual multiply(const Dual& x, const Dual& y) {
    Dual out{x.a * y.a, {}};
    for (const auto& [r, c] : y.b) out.b[r] += x.a * c;
    for (const auto& [r, c] : x.b) out.b[r] += y.a * c;
    return out;
}

}  // namespace

SElt thetaDeformLinearTerm(const CartanPtr& cartan, int i, const Poly& p) {
    SElt shape(cartan, i);
    const int d = static_cast<int>(cartan->d(i));
    const int period = 2 * d;
    auto base = [&](int k) { return ((k % period) + period) % period; };
    // 1/Sigma~_{i,m} = -S_{i,m+d}, written on the fixed base of its class.
    auto invSigmaTilde = [&](int m) -> std::pair<int, Poly> {
        const int k = m + d;
        return {base(k), shape.rebasedCoefficient(k, Poly::constant(-1), base(k))};
    };
    auto image = [&](const Factor& f) {
        const Mono y = Mono::y(f.node, f.k, f.exp);
        Dual out{Poly(y), {}};
        if (f.node != i) return out;
        Dual one{Poly(Mono::y(i, f.k)), {}};
        auto [r, s] = invSigmaTilde(f.k - d);
        one.b[r] = -Poly(Mono::y(i, f.k)) * s;
        Dual inv{Poly(Mono::y(i, f.k, -1)), {}};
        auto [r2, s2] = invSigmaTilde(f.k - 3 * d);
        inv.b[r2] = Poly(Mono::y(i, f.k, -1) * aMono(*cartan, i, f.k - d)) * s2;
        const Dual& g = f.exp > 0 ? one : inv;
        out = Dual{Poly::constant(1), {}};
        for (int t = 0; t < std::abs(f.exp); ++t) out = multiply(out, g);
        return out;
    };
    Dual total;
    for (const auto& [m, c] : p.terms()) {
        Dual term{Poly::constant(c), {}};
        for (const auto& f : m.factors()) term = multiply(term, image(f));
        total.a += term.a;
        for (const auto& [r, coeff] : term.b) total.b[r] += coeff;
    }
    if (!(total.a == p)) throw Error("the h-constant term of Theta_{i,h} is not the identity");
    SElt out(cartan, i);
    for (const auto& [r, coeff] : total.b) out.add(r, coeff);
    return out;
}

bool inKernelAll(const CartanPtr& cartan, const Poly& p) {
    for (int i = 0; i < cartan->rank(); ++i)
        if (!screen(cartan, i, p).isZero()) return false;
    return true;
}

}  // namespace qweyl
