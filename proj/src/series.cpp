#include "qweyl/series.hpp"

#include "qweyl/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <climits>
#include <unordered_map>

namespace qweyl {

Offset Offset::fromRoot(const RootVector& r) {
    if (r.rank() > kMaxSeriesRank) throw SeriesError(fmt::format("series support rank <= {}", kMaxSeriesRank));
    Offset o;
    for (int i = 0; i < r.rank(); ++i) o.c[i] = static_cast<int>(r.coords(i));
    o.height = static_cast<int>(r.height());
    return o;
}

RootVector Offset::toRoot(int rank) const {
    IntVector v(rank);
    for (int i = 0; i < rank; ++i) v(i) = c[i];
    return RootVector(v);
}

bool Offset::isNonNegative() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

Offset operator+(const Offset& a, const Offset& b) {
    Offset o;
    for (int i = 0; i < kMaxSeriesRank; ++i) o.c[i] = a.c[i] + b.c[i];
    o.height = a.height + b.height;
    return o;
}

Offset operator-(const Offset& a, const Offset& b) {
    Offset o;
    for (int i = 0; i < kMaxSeriesRank; ++i) o.c[i] = a.c[i] - b.c[i];
    o.height = a.height - b.height;
    return o;
}

namespace {

bool termLess(const Term& a, const Term& b) {
    if (a.offset.height != b.offset.height) return a.offset.height < b.offset.height;
    return a.mono < b.mono;
}

void requireCompatible(const PSeries& x, const PSeries& y) {
    if (x.cartan() != y.cartan() && x.cartan()->matrix() != y.cartan()->matrix())
        throw SeriesError("series over different Cartan data");
    if (x.w() != y.w())
        throw SeriesError(fmt::format("series live in different components ({} vs {})", x.w().wordString(),
                                      y.w().wordString()));
}

std::string formatTerms(const std::vector<Term>& terms) {
    std::string s;
    for (const auto& t : terms) {
        bool negative = t.coeff < 0;
        Integer a = negative ? Integer(-t.coeff) : t.coeff;
        std::string body;
        if (t.mono.isOne()) body = toString(a);
        else if (a == 1) body = toString(t.mono);
        else body = toString(a) + "*" + toString(t.mono);
        if (s.empty()) s = negative ? "-" + body : body;
        else s += (negative ? " - " : " + ") + body;
    }
    return s;
}

// Accumulates terms keyed by monomial, keeping the first offset seen (all
// offsets of one monomial agree since they are functions of its weight).
class TermAccumulator {
public:
    void add(const Mono& m, const Integer& c, const Offset& off) {
        auto [it, inserted] = index_.try_emplace(m, terms_.size());
        if (inserted) terms_.push_back({m, c, off});
        else terms_[it->second].coeff += c;
    }
    void add(Mono&& m, Integer&& c, const Offset& off) {
        auto it = index_.find(m);
        if (it == index_.end()) {
            index_.emplace(m, terms_.size());
            terms_.push_back({std::move(m), std::move(c), off});
        } else {
            terms_[it->second].coeff += c;
        }
    }
    std::vector<Term> take() { return std::move(terms_); }

private:
    std::unordered_map<Mono, std::size_t, MonoHash> index_;
    std::vector<Term> terms_;
};

}  // namespace

std::optional<Offset> anchorGap(const CartanData& cartan, const WeylElt& w, const Mono& a, const Mono& b) {
    if (a == b) return Offset{};
    auto root = cartan.weightToRoot(a.weight(cartan.rank()) - b.weight(cartan.rank()));
    if (!root) return std::nullopt;
    RootVector r = w.apply(*root);
    if (!r.isNonNegative() || r.isZero()) return std::nullopt;
    return Offset::fromRoot(r);
}

PSeries PSeries::monomial(CartanPtr cartan, WeylElt w, const Mono& m, Integer c, int order) {
    if (c == 0) throw SeriesError("a pointed series needs a nonzero anchor coefficient");
    if (order < 0) throw SeriesError("negative truncation order");
    if (cartan->rank() > kMaxSeriesRank) throw SeriesError(fmt::format("series support rank <= {}", kMaxSeriesRank));
    PSeries s;
    s.cartan_ = std::move(cartan);
    s.w_ = std::move(w);
    s.order_ = order;
    s.terms_.push_back({m, std::move(c), Offset{}});
    return s;
}

PSeries PSeries::fromPoly(CartanPtr cartan, WeylElt w, const Mono& anchor, const Poly& terms, int order) {
    PSeries base = monomial(cartan, w, anchor, 1, order);
    std::vector<Term> out;
    for (const auto& [m, c] : terms.terms()) {
        auto off = base.offsetOf(m);
        if (!off) throw SeriesError(fmt::format("offset of {} is not in the root lattice", qweyl::toString(m)));
        if (!off->isNonNegative() || (off->isZero() && !(m == anchor)))
            throw SeriesError(fmt::format("{} is not w-lower than the anchor {}", qweyl::toString(m), qweyl::toString(anchor)));
        out.push_back({m, c, *off});
    }
    return fromOffsetTerms(std::move(cartan), std::move(w), anchor, std::move(out), order);
}

PSeries PSeries::fromOffsetTerms(CartanPtr cartan, WeylElt w, const Mono& anchor, std::vector<Term> terms,
                                 int order) {
    PSeries s;
    s.cartan_ = std::move(cartan);
    s.w_ = std::move(w);
    s.order_ = order;
    s.terms_.reserve(terms.size());
    for (auto& t : terms)
        if (t.coeff != 0 && t.offset.height <= order) s.terms_.push_back(std::move(t));
    s.sortTerms();
    if (s.terms_.empty() || !(s.terms_.front().mono == anchor) || s.terms_.front().offset.height != 0)
        throw SeriesError(fmt::format("anchor {} missing or cancelled", qweyl::toString(anchor)));
    if (s.terms_.size() > 1 && s.terms_[1].offset.height == 0)
        throw SeriesError("two terms at offset 0 in one pointed series");
    return s;
}

void PSeries::sortTerms() { std::sort(terms_.begin(), terms_.end(), termLess); }

Integer PSeries::coeff(const Mono& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return 0;
}

std::optional<Offset> PSeries::offsetOf(const Mono& m) const {
    const int n = cartan_->rank();
    auto root = cartan_->weightToRoot(anchor().weight(n) - m.weight(n));
    if (!root) return std::nullopt;
    return Offset::fromRoot(w_.apply(*root));
}

Poly PSeries::toPoly() const {
    Poly p;
    for (const auto& t : terms_) p.addTerm(t.mono, t.coeff);
    return p;
}

PSeries PSeries::truncated(int order) const {
    PSeries s = *this;
    if (order >= order_) return s;
    s.order_ = order;
    s.terms_.erase(std::find_if(s.terms_.begin(), s.terms_.end(),
                                [order](const Term& t) { return t.offset.height > order; }),
                   s.terms_.end());
    return s;
}

PSeries PSeries::shifted(int shift) const {
    PSeries s = *this;
    for (auto& t : s.terms_) t.mono = t.mono.shifted(shift);
    return s;
}

PSeries PSeries::scaled(const Integer& c) const {
    if (c == 0) throw SeriesError("scaling a pointed series by zero");
    PSeries s = *this;
    for (auto& t : s.terms_) t.coeff *= c;
    return s;
}

PSeries PSeries::timesMono(const Mono& m) const {
    PSeries s = *this;
    for (auto& t : s.terms_) t.mono = t.mono * m;
    s.sortTerms();
    return s;
}

PSeries operator*(const PSeries& x, const PSeries& y) {
    requireCompatible(x, y);
    const int n = std::min(x.order(), y.order());
    TermAccumulator acc;
    for (const auto& a : x.terms()) {
        if (a.offset.height > n) break;
        for (const auto& b : y.terms()) {
            if (a.offset.height + b.offset.height > n) break;
            acc.add(a.mono * b.mono, a.coeff * b.coeff, a.offset + b.offset);
        }
    }
    return PSeries::fromOffsetTerms(x.cartan(), x.w(), x.anchor() * y.anchor(), acc.take(), n);
}

PSeries PSeries::inverse() const {
    if (!isUnit())
        throw SeriesError(fmt::format("cannot invert a series with anchor coefficient {}", qweyl::toString(anchorCoeff())));
    const Integer& c = anchorCoeff();
    const Mono inv = anchor().inverse();
    // x = c*m0*(1 + t); 1/x = c*m0^{-1} * sum_n (-t)^n, built one height level at a time.
    std::vector<Term> tail;
    for (std::size_t idx = 1; idx < terms_.size(); ++idx)
        tail.push_back({terms_[idx].mono * inv, terms_[idx].coeff * c, terms_[idx].offset});
    std::vector<std::vector<Term>> levels(order_ + 1);
    levels[0].push_back({Mono{}, 1, Offset{}});
    for (int h = 1; h <= order_; ++h) {
        TermAccumulator acc;
        for (const auto& t : tail) {
            if (t.offset.height > h) break;
            for (const auto& y : levels[h - t.offset.height]) acc.add(t.mono * y.mono, -(t.coeff * y.coeff), t.offset + y.offset);
        }
        for (auto& t : acc.take())
            if (t.coeff != 0) levels[h].push_back(std::move(t));
    }
    std::vector<Term> out;
    for (auto& level : levels)
        for (auto& t : level) out.push_back({t.mono * inv, t.coeff * c, t.offset});
    return fromOffsetTerms(cartan_, w_, inv, std::move(out), order_);
}

PSeries PSeries::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    PSeries result = one(cartan_, w_, order_);
    PSeries base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::string PSeries::toString() const {
    return fmt::format("{} + O(ht>{})", formatTerms(terms_), order_);
}

Json PSeries::toJson() const {
    Json terms = Json::array();
    for (const auto& t : terms_)
        terms.push_back({{"mono", qweyl::toJson(t.mono)}, {"coeff", qweyl::toString(t.coeff)}, {"height", t.offset.height}});
    return {{"w", w_.wordString()}, {"anchor", qweyl::toJson(anchor())}, {"order", order_}, {"terms", terms}};
}

namespace {

// hi + lo where lo's anchor sits at offset `gap` below hi's anchor.  Returns the
// pointed pieces of the sum (none if everything cancels within the order).
std::vector<PSeries> combine(const PSeries& hi, const PSeries& lo, const Offset& gap) {
    const int order = std::min(hi.order(), lo.order() + gap.height);
    TermAccumulator acc;
    for (const auto& t : hi.terms())
        if (t.offset.height <= order) acc.add(t.mono, t.coeff, t.offset);
    for (const auto& t : lo.terms())
        if (t.offset.height + gap.height <= order) acc.add(t.mono, t.coeff, t.offset + gap);
    std::vector<Term> terms;
    for (auto& t : acc.take())
        if (t.coeff != 0) terms.push_back(std::move(t));
    std::sort(terms.begin(), terms.end(), termLess);
    if (!terms.empty() && terms.front().mono == hi.anchor())
        return {PSeries::fromOffsetTerms(hi.cartan(), hi.w(), hi.anchor(), std::move(terms), order)};

    // The anchor cancelled: regroup the survivors under their maximal terms.
    // Processing by height means a term can only be dominated by earlier ones.
    std::vector<std::vector<Term>> groups;
    for (auto& t : terms) {
        bool placed = false;
        for (auto& g : groups) {
            Offset d = t.offset - g.front().offset;
            if (d.isNonNegative() && d.height > 0) {
                g.push_back(std::move(t));
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({std::move(t)});
    }
    std::vector<PSeries> out;
    for (auto& g : groups) {
        const Offset base = g.front().offset;
        const Mono anchor = g.front().mono;
        for (auto& t : g) t.offset = t.offset - base;
        out.push_back(PSeries::fromOffsetTerms(hi.cartan(), hi.w(), anchor, std::move(g), order - base.height));
    }
    return out;
}

}  // namespace

SeriesSum::SeriesSum(const PSeries& x)
    : cartan_(x.cartan()), w_(x.w()), parts_{x}, frames_{{x.anchor(), x.order()}}, order_(x.order()) {}

const PSeries& SeriesSum::single() const {
    if (parts_.size() != 1)
        throw SeriesError(fmt::format("expected one pointed series, found {}", parts_.size()));
    return parts_.front();
}

int SeriesSum::order() const { return order_; }

bool SeriesSum::addFrame(const Mono& anchor, int order) {
    for (const auto& f : frames_)
        if (auto gap = anchorGap(*cartan_, w_, f.anchor, anchor); gap && order >= f.order - gap->height) return false;
    std::erase_if(frames_, [&](const Frame& f) {
        auto gap = anchorGap(*cartan_, w_, anchor, f.anchor);
        return gap && f.order >= order - gap->height;
    });
    frames_.push_back({anchor, order});
    return true;
}

std::optional<PSeries> SeriesSum::limited(const PSeries& x) const {
    int order = x.order();
    for (const auto& f : frames_)
        if (auto gap = anchorGap(*cartan_, w_, f.anchor, x.anchor())) order = std::min(order, f.order - gap->height);
    if (order < 0) return std::nullopt;
    return order < x.order() ? x.truncated(order) : x;
}

void SeriesSum::restrictParts() {
    std::vector<PSeries> kept;
    for (const auto& p : parts_)
        if (auto q = limited(p)) kept.push_back(std::move(*q));
    parts_ = std::move(kept);
}

void SeriesSum::absorb(PSeries x) {
    if (!cartan_) {
        cartan_ = x.cartan();
        w_ = x.w();
    } else if (x.w() != w_) {
        throw SeriesError("adding series from different components");
    }
    order_ = std::min(order_, x.order());
    if (addFrame(x.anchor(), x.order())) restrictParts();
    auto lim = limited(x);
    if (!lim) return;
    x = std::move(*lim);
    for (std::size_t idx = 0; idx < parts_.size(); ++idx) {
        const PSeries& p = parts_[idx];
        std::vector<PSeries> pieces;
        if (auto gap = anchorGap(*cartan_, w_, p.anchor(), x.anchor())) pieces = combine(p, x, *gap);
        else if (auto gap2 = anchorGap(*cartan_, w_, x.anchor(), p.anchor())) pieces = combine(x, p, *gap2);
        else continue;
        parts_.erase(parts_.begin() + static_cast<std::ptrdiff_t>(idx));
        for (auto& piece : pieces) absorb(std::move(piece));
        return;
    }
    auto pos = std::lower_bound(parts_.begin(), parts_.end(), x,
                                [](const PSeries& a, const PSeries& b) { return a.anchor() < b.anchor(); });
    parts_.insert(pos, std::move(x));
}

SeriesSum& SeriesSum::operator+=(const SeriesSum& o) {
    if (!cartan_ && o.cartan_) {
        cartan_ = o.cartan_;
        w_ = o.w_;
    }
    order_ = std::min(order_, o.order_);
    bool changed = false;
    for (const auto& f : o.frames_) changed = addFrame(f.anchor, f.order) || changed;
    if (changed) restrictParts();
    for (const auto& p : o.parts_) absorb(p);
    return *this;
}

SeriesSum& SeriesSum::operator-=(const SeriesSum& o) { return *this += -o; }

SeriesSum SeriesSum::operator-() const {
    SeriesSum s = *this;
    for (auto& p : s.parts_) p = -p;
    return s;
}

SeriesSum operator*(const SeriesSum& a, const SeriesSum& b) {
    SeriesSum out(a.cartan_ ? a.cartan_ : b.cartan_, a.cartan_ ? a.w_ : b.w_);
    out.order_ = std::min(a.order_, b.order_);
    for (const auto& fa : a.frames_)
        for (const auto& fb : b.frames_) out.addFrame(fa.anchor * fb.anchor, std::min(fa.order, fb.order));
    for (const auto& x : a.parts_)
        for (const auto& y : b.parts_) out.absorb(x * y);
    return out;
}

SeriesSum SeriesSum::shifted(int s) const {
    SeriesSum out = *this;
    for (auto& p : out.parts_) p = p.shifted(s);
    for (auto& f : out.frames_) f.anchor = f.anchor.shifted(s);
    std::sort(out.parts_.begin(), out.parts_.end(),
              [](const PSeries& x, const PSeries& y) { return x.anchor() < y.anchor(); });
    return out;
}

SeriesSum SeriesSum::truncated(int order) const {
    SeriesSum out = *this;
    for (auto& p : out.parts_) p = p.truncated(order);
    for (auto& f : out.frames_) f.order = std::min(f.order, order);
    out.order_ = std::min(order_, order);
    return out;
}

Poly SeriesSum::toPoly() const {
    Poly p;
    for (const auto& s : parts_) p += s.toPoly();
    return p;
}

std::string SeriesSum::toString() const {
    if (parts_.empty()) return fmt::format("0 + O(ht>{})", order_ == INT_MAX ? 0 : order_);
    std::string s;
    for (const auto& p : parts_) {
        if (!s.empty()) s += " ; ";
        s += "[" + p.toString() + "]";
    }
    return s;
}

Json SeriesSum::toJson() const {
    Json arr = Json::array();
    for (const auto& p : parts_) arr.push_back(p.toJson());
    return arr;
}

SeriesSum addSeries(const PSeries& x, const PSeries& y) {
    SeriesSum s(x);
    s += SeriesSum(y);
    return s;
}

SeriesSum embed(const Poly& p, const CartanPtr& cartan, const WeylElt& w, int order) {
    SeriesSum s(cartan, w);
    for (const auto& [m, c] : p.terms()) s += SeriesSum(PSeries::monomial(cartan, w, m, c, order));
    return s;
}

Comparison compareSeries(const SeriesSum& a, const SeriesSum& b) {
    SeriesSum d = a - b;
    Comparison out;
    out.order = d.order() == INT_MAX ? 0 : d.order();
    if (d.isZero()) return out;
    out.equal = false;
    const Term& t = d.parts().front().terms().front();
    out.firstMismatch = fmt::format("{}*{}", qweyl::toString(t.coeff), toString(t.mono));
    return out;
}

const SeriesSum* PiElt::find(const WeylElt& w) const {
    auto it = components_.find(w.key());
    return it == components_.end() ? nullptr : &it->second;
}

PiElt& PiElt::operator+=(const PiElt& o) {
    for (const auto& [key, x] : o.components_) {
        auto it = components_.find(key);
        if (it == components_.end()) components_.emplace(key, x);
        else it->second += x;
    }
    return *this;
}

PiElt operator*(const PiElt& a, const PiElt& b) {
    PiElt out;
    for (const auto& [key, x] : a.components_) {
        auto it = b.components_.find(key);
        if (it != b.components_.end()) out.components_.emplace(key, x * it->second);
    }
    return out;
}

PiElt embedDiagonal(const Poly& p, const CartanPtr& cartan, const std::vector<WeylElt>& ws, int order) {
    PiElt out;
    for (const auto& w : ws) out.set(embed(p, cartan, w, order));
    return out;
}

}  // namespace qweyl
