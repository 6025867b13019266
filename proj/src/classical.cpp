#include "qweyl/classical.hpp"

#include "qweyl/error.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace qweyl {

ClassPoly ClassPoly::constant(int rank, Integer c) {
    ClassPoly p(rank);
    p.addTerm(ClassMono(rank, 0), c);
    return p;
}

ClassPoly ClassPoly::monomial(const ClassMono& u, Integer c) {
    ClassPoly p(static_cast<int>(u.size()));
    p.addTerm(u, c);
    return p;
}

ClassPoly ClassPoly::y(int rank, int i, int e) {
    ClassMono u(rank, 0);
    u[i] = e;
    return monomial(u);
}

ClassMono ClassPoly::aMonomial(const CartanData& cartan, const RootVector& alpha) {
    Weight wt = cartan.rootToWeight(alpha);
    ClassMono u(cartan.rank());
    for (int j = 0; j < cartan.rank(); ++j) u[j] = static_cast<int>(wt.coords(j));
    return u;
}

void ClassPoly::addTerm(const ClassMono& u, const Integer& c) {
    if (static_cast<int>(u.size()) != rank_) throw Error("classical monomial of the wrong rank");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(u, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ClassPoly& ClassPoly::operator+=(const ClassPoly& o) {
    if (rank_ == 0) rank_ = o.rank_;
    for (const auto& [u, c] : o.terms_) addTerm(u, c);
    return *this;
}

ClassPoly& ClassPoly::operator-=(const ClassPoly& o) {
    if (rank_ == 0) rank_ = o.rank_;
    for (const auto& [u, c] : o.terms_) addTerm(u, -c);
    return *this;
}

ClassPoly operator*(const ClassPoly& a, const ClassPoly& b) {
    ClassPoly out(std::max(a.rank_, b.rank_));
    for (const auto& [u, c] : a.terms_)
        for (const auto& [v, e] : b.terms_) {
            ClassMono s(u);
            for (std::size_t t = 0; t < s.size(); ++t) s[t] += v[t];
            out.addTerm(s, c * e);
        }
    return out;
}

Poly ClassPoly::toY() const {
    Poly p;
    for (const auto& [u, c] : terms_) {
        std::vector<Factor> fs;
        for (int i = 0; i < rank_; ++i) fs.push_back({i, 0, u[i]});
        p.addTerm(Mono::fromFactors(fs), c);
    }
    return p;
}

namespace {

std::string monoText(const ClassMono& u) {
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += u[i] == 1 ? fmt::format("y[{}]", i + 1) : fmt::format("y[{}]^{}", i + 1, u[i]);
    }
    return out;
}

}  // namespace

std::string ClassPoly::toString() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [u, c] : terms_) {
        const bool neg = c < 0;
        const Integer a = neg ? Integer(-c) : c;
        std::string m = monoText(u);
        std::string body = m.empty() ? qweyl::toString(a) : (a == 1 ? m : qweyl::toString(a) + "*" + m);
        if (out.empty())
            out = neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

Json ClassPoly::toJson() const {
    Json arr = Json::array();
    for (const auto& [u, c] : terms_) arr.push_back({{"y", u}, {"coeff", qweyl::toString(c)}});
    return arr;
}

ClassPoly classicalReflect(const CartanData& cartan, int i, const ClassPoly& p) {
    cartan.checkNode(i);
    const ClassMono ai = ClassPoly::aMonomial(cartan, RootVector::simple(cartan.rank(), i));
    ClassPoly out(cartan.rank());
    for (const auto& [u, c] : p.terms()) {
        ClassMono v(u);
        for (int j = 0; j < cartan.rank(); ++j) v[j] -= u[i] * ai[j];
        out.addTerm(v, c);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// 1 - a_alpha^{-1}.
ClassPoly factor(const CartanData& cartan, const RootVector& alpha) {
    ClassMono u = ClassPoly::aMonomial(cartan, alpha);
    for (auto& e : u) e = -e;
    return ClassPoly::constant(cartan.rank(), 1) - ClassPoly::monomial(u);
}

// The multiset union (maximum multiplicity) of two sorted lists.
std::vector<RootVector> unionOf(const std::vector<RootVector>& a, const std::vector<RootVector>& b) {
    std::vector<RootVector> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<RootVector> minus(const std::vector<RootVector>& a, const std::vector<RootVector>& b) {
    std::vector<RootVector> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

RElt::RElt(CartanPtr cartan, ClassPoly numerator, std::vector<RootVector> denominator)
    : cartan_(std::move(cartan)), num_(std::move(numerator)), den_(std::move(denominator)) {
    if (num_.rank() == 0) num_ = ClassPoly(cartan_->rank());
    if (num_.rank() != cartan_->rank()) throw Error("numerator of the wrong rank");
    for (const auto& a : den_)
        if (!cartan_->isRoot(a) || !a.isNonNegative())
            throw Error(fmt::format("{} is not a positive root", qweyl::toString(a)));
    std::sort(den_.begin(), den_.end());
}

RElt RElt::inverseFactor(CartanPtr cartan, const RootVector& alpha) {
    const int n = cartan->rank();
    return RElt(std::move(cartan), ClassPoly::constant(n, 1), {alpha});
}

namespace {

// Numerator over the given denominator, which must contain x's.
ClassPoly lift(const RElt& x, const std::vector<RootVector>& den) {
    ClassPoly n = x.numerator();
    for (const auto& a : minus(den, x.denominator())) n = n * factor(*x.cartan(), a);
    return n;
}

void checkSame(const RElt& a, const RElt& b) {
    if (a.cartan()->matrix() != b.cartan()->matrix()) throw Error("elements of R for different Cartan matrices");
}

}  // namespace

RElt operator*(const RElt& a, const RElt& b) {
    checkSame(a, b);
    std::vector<RootVector> den(a.den_);
    den.insert(den.end(), b.den_.begin(), b.den_.end());
    return RElt(a.cartan_, a.num_ * b.num_, std::move(den));
}

RElt operator+(const RElt& a, const RElt& b) {
    checkSame(a, b);
    auto den = unionOf(a.den_, b.den_);
    return RElt(a.cartan_, lift(a, den) + lift(b, den), den);
}

RElt operator-(const RElt& a, const RElt& b) {
    checkSame(a, b);
    auto den = unionOf(a.den_, b.den_);
    return RElt(a.cartan_, lift(a, den) - lift(b, den), den);
}

bool operator==(const RElt& a, const RElt& b) {
    if (a.cartan_->matrix() != b.cartan_->matrix()) return false;
    auto den = unionOf(a.den_, b.den_);
    return lift(a, den) == lift(b, den);
}

std::string RElt::toString() const {
    std::string roots;
    for (const auto& a : den_) roots += (roots.empty() ? "" : ", ") + qweyl::toString(a);
    return fmt::format("({}) / [{}]", num_.toString(), roots);
}

Json RElt::toJson() const {
    Json den = Json::array();
    for (const auto& a : den_) {
        std::vector<long> c(a.coords.data(), a.coords.data() + a.coords.size());
        den.push_back(c);
    }
    return {{"numerator", num_.toJson()}, {"denominator", den}};
}

RElt classicalReflect(int i, const RElt& x) {
    const CartanData& cartan = *x.cartan();
    const WeylElt si = simpleReflection(cartan, i);
    ClassPoly num = classicalReflect(cartan, i, x.numerator());
    std::vector<RootVector> den;
    for (const auto& a : x.denominator()) {
        RootVector b = si.apply(a);
        if (b.isNonNegative()) {
            den.push_back(b);
            continue;
        }
        // (1 - a_{-b}^{-1})^{-1} = (1 - a_b)^{-1} = -a_b^{-1} (1 - a_b^{-1})^{-1} for b = -alpha_i.
        RootVector pos = -b;
        ClassMono u = ClassPoly::aMonomial(cartan, pos);
        for (auto& e : u) e = -e;
        num = num * ClassPoly::monomial(u, -1);
        den.push_back(pos);
    }
    return RElt(x.cartan(), num, den);
}

// ---------------------------------------------------------------------------

namespace {

Mono yMono(const ClassMono& u) {
    std::vector<Factor> fs;
    for (std::size_t i = 0; i < u.size(); ++i) fs.push_back({static_cast<int>(i), 0, u[i]});
    return Mono::fromFactors(fs);
}

ClassMono collapse(const Mono& m, int rank) {
    ClassMono u(rank, 0);
    for (const auto& f : m.factors()) u[f.node] += f.exp;
    return u;
}

// The expansion of (1 - a_alpha^{-1})^{-1} in the completion of w.
PSeries factorSeries(const CartanPtr& cartan, const RootVector& alpha, const WeylElt& w, int N) {
    const ClassMono a = ClassPoly::aMonomial(*cartan, alpha);
    auto power = [&](int n) {
        ClassMono u(a);
        for (auto& e : u) e *= n;
        return yMono(u);
    };
    std::vector<Term> terms;
    if (isPositive(w, alpha)) {
        // sum_{n >= 0} a^{-n}
        const Mono anchor;
        for (int n = 0; n <= N; ++n)
            terms.push_back({power(-n), 1, Offset::fromRoot(w.apply(static_cast<long>(n) * alpha))});
        return PSeries::fromOffsetTerms(cartan, w, anchor, std::move(terms), N);
    }
    // -sum_{n > 0} a^n
    for (int n = 1; n <= N + 1; ++n)
        terms.push_back({power(n), -1, Offset::fromRoot(w.apply(static_cast<long>(1 - n) * alpha))});
    return PSeries::fromOffsetTerms(cartan, w, power(1), std::move(terms), N);
}

}  // namespace

SeriesSum expandInCompletion(const RElt& x, const WeylElt& w, int N) {
    const CartanPtr& cartan = x.cartan();
    SeriesSum out = embed(x.numerator().toY(), cartan, w, N);
    for (const auto& a : x.denominator()) out = out * SeriesSum(factorSeries(cartan, a, w, N));
    return out;
}

ClassPoly varpi(const CartanData& cartan, const Poly& p) {
    ClassPoly out(cartan.rank());
    for (const auto& [m, c] : p.terms()) out.addTerm(collapse(m, cartan.rank()), c);
    return out;
}

namespace {

// Applies a monomial map that preserves offsets.
PSeries mapTerms(const PSeries& x, const WeylElt& target, const std::function<ClassMono(const ClassMono&)>& f) {
    const int n = x.cartan()->rank();
    std::map<ClassMono, Term> merged;
    for (const auto& t : x.terms()) {
        ClassMono u = f(collapse(t.mono, n));
        auto [it, fresh] = merged.emplace(u, Term{yMono(u), t.coeff, t.offset});
        if (!fresh) it->second.coeff += t.coeff;
    }
    std::vector<Term> terms;
    for (auto& [u, t] : merged) terms.push_back(std::move(t));
    return PSeries::fromOffsetTerms(x.cartan(), target, yMono(f(collapse(x.anchor(), n))), std::move(terms),
                                    x.order());
}

template <typename F>
SeriesSum mapSum(const SeriesSum& x, const WeylElt& target, F f) {
    SeriesSum out(x.cartan(), target);
    for (const auto& part : x.parts()) out += SeriesSum(f(part));
    return out;
}

}  // namespace

PSeries varpi(const PSeries& x) {
    return mapTerms(x, x.w(), [](const ClassMono& u) { return u; });
}

SeriesSum varpi(const SeriesSum& x) {
    return mapSum(x, x.w(), [](const PSeries& p) { return varpi(p); });
}

PSeries classicalReflect(int i, const PSeries& x) {
    const CartanData& cartan = *x.cartan();
    const ClassMono ai = ClassPoly::aMonomial(cartan, RootVector::simple(cartan.rank(), i));
    return mapTerms(x, rightMultiply(cartan, x.w(), i), [&](const ClassMono& u) {
        ClassMono v(u);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= u[i] * ai[j];
        return v;
    });
}

SeriesSum classicalReflect(int i, const SeriesSum& x) {
    return mapSum(x, rightMultiply(*x.cartan(), x.w(), i), [i](const PSeries& p) { return classicalReflect(i, p); });
}

CheckEntry checkEquivariance(ThetaContext& ctx, int i, const SeriesSum& x, std::string label) {
    SeriesSum lhs = varpi(ctx.thetaOnSum(i, x));
    SeriesSum rhs = classicalReflect(i, varpi(x));
    return makeEntry("equivariance", *ctx.cartan(), x.w(), std::move(label), compareSeries(lhs, rhs));
}

Report verifySl2Chain(int N, const std::vector<int>& shifts) {
    auto a1 = makeCartan("A1");
    const auto e = WeylElt::identity(1), s1 = simpleReflection(*a1, 0);
    const RootVector a = RootVector::simple(1, 0);
    const RElt sigma = RElt::inverseFactor(a1, a);
    const RElt one(a1, ClassPoly::constant(1, 1));
    const RElt target(a1, ClassPoly::monomial({-2}, -1), {a});
    Report report;
    auto exact = [&](std::string relation, bool pass) {
        Comparison cmp;
        cmp.equal = pass;
        if (!pass) cmp.firstMismatch = "rational functions differ";
        report.add(makeEntry(std::move(relation), *a1, e, "1/(1 - y^-2)", cmp));
    };
    exact("1 - 1/(1 - y^-2) = 1/(1 - y^2)", one - sigma == target);
    exact("s_1(1/(1 - y^-2)) = 1/(1 - y^2)", classicalReflect(0, sigma) == target);

    ThetaContext ctx(a1, N);
    for (int k : shifts) {
        const std::string label = fmt::format("Sigma[1,{}]", k);
        SeriesSum sig(ctx.sigma(0, k, e));
        SeriesSum image = ctx.thetaOnSum(0, sig);
        report.add(makeEntry("varpi(Sigma) = 1/(1 - y^-2)", *a1, e, label,
                             compareSeries(varpi(sig), expandInCompletion(sigma, e, N))));
        report.add(makeEntry("Theta(Sigma) = 1 - Sigma", *a1, s1, label,
                             compareSeries(image, SeriesSum(PSeries::one(a1, s1, N)) - SeriesSum(ctx.sigma(0, k, s1)))));
        report.add(makeEntry("varpi(Theta(Sigma)) = 1 - 1/(1 - y^-2)", *a1, s1, label,
                             compareSeries(varpi(image), expandInCompletion(one - sigma, s1, N))));
        report.add(makeEntry("varpi(Theta(Sigma)) = 1/(1 - y^2)", *a1, s1, label,
                             compareSeries(varpi(image), expandInCompletion(target, s1, N))));
        report.add(makeEntry("varpi(Theta(Sigma)) = s_1(varpi(Sigma))", *a1, s1, label,
                             compareSeries(varpi(image), classicalReflect(0, varpi(sig)))));
    }
    return report;
}

}  // namespace qweyl
