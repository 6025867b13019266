#include "qweyl/weylaction.hpp"

#include "qweyl/error.hpp"

#include <fmt/format.h>

#include <array>
#include <mutex>
#include <unordered_map>

namespace qweyl {

std::string Generator::toString() const {
    return sign == 1 ? fmt::format("Y[{},{}]", node + 1, k) : fmt::format("Y[{},{}]^-1", node + 1, k);
}

std::vector<Generator> defaultGenerators(int rank) {
    std::vector<Generator> out;
    for (int j = 0; j < rank; ++j) {
        out.push_back({j, 0, 1});
        out.push_back({j, 0, -1});
    }
    return out;
}

Json CheckEntry::toJson() const {
    Json j{{"relation", relation}, {"type", type},   {"w", w},
           {"generator", generator}, {"order", order}, {"status", pass ? "pass" : "fail"}};
    if (!pass) j["firstMismatch"] = firstMismatch;
    return j;
}

bool Report::allPassed() const { return failures() == 0; }

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.pass ? 0 : 1;
    return n;
}

void Report::append(const Report& other) { entries.insert(entries.end(), other.entries.begin(), other.entries.end()); }

Json Report::toJson() const {
    Json arr = Json::array();
    for (const auto& e : entries) arr.push_back(e.toJson());
    return arr;
}

CheckEntry makeEntry(std::string relation, const CartanData& cartan, const WeylElt& w, std::string generator,
                     const Comparison& cmp) {
    return {std::move(relation), cartan.name(), w.wordString(), std::move(generator), cmp.order, cmp.equal,
            cmp.firstMismatch};
}

ThetaContext::ThetaContext(CartanPtr cartan, int order) : cartan_(std::move(cartan)), order_(order) {
    if (order_ < 0) throw SeriesError("negative truncation order");
    if (cartan_->rank() > kMaxSeriesRank) throw CartanError(fmt::format("rank above {}", kMaxSeriesRank));
}

PSeries ThetaContext::sigma(int i, int k, const WeylElt& w) {
    auto key = std::make_pair(i, w.key());
    {
        std::shared_lock lock(mutex_);
        if (auto it = sigmas_.find(key); it != sigmas_.end()) return it->second.shifted(k);
    }
    auto eq = sigmaEquation(cartan_, i, w, order_);
    PSeries s = solve(eq);
    SeriesSum rhs = SeriesSum(eq.H) + SeriesSum(eq.G * s.shifted(-eq.r));
    if (!compareSeries(SeriesSum(s), rhs).equal)
        throw SolverError(fmt::format("Sigma_{} in component {} fails its equation", i + 1, w.wordString()));
    std::unique_lock lock(mutex_);
    return sigmas_.try_emplace(key, std::move(s)).first->second.shifted(k);
}

const PSeries& ThetaContext::ratioPower(int i, const WeylElt& target, int u) {
    auto key = std::make_tuple(i, target.key(), u);
    {
        std::shared_lock lock(mutex_);
        if (auto it = ratioPowers_.find(key); it != ratioPowers_.end()) return it->second;
    }
    // R = Sigma_{i,-3d} / Sigma_{i,-d}; Theta(Y_{i,k}) = T_i(Y_{i,k}) R shifted by k.
    const int d = static_cast<int>(cartan_->d(i));
    PSeries r = sigma(i, -3 * d, target) * sigma(i, -d, target).inverse();
    PSeries p = r.pow(u);
    std::unique_lock lock(mutex_);
    return ratioPowers_.try_emplace(key, std::move(p)).first->second;
}

PSeries ThetaContext::thetaOnSeries(int i, const PSeries& x) {
    cartan_->checkNode(i);
    const int n = std::min(x.order(), order_);
    const WeylElt target = rightMultiply(*cartan_, x.w(), i);
    const int d = static_cast<int>(cartan_->d(i));

    // The Sigma factor depends only on the Y_{i,*} part of a monomial, and a
    // term at offset height h only needs it up to n - h.
    std::map<std::pair<Mono, int>, PSeries> factorCache;
    auto factorFor = [&](const Mono& ipart, int budget) -> const PSeries& {
        auto key = std::make_pair(ipart, budget);
        auto it = factorCache.find(key);
        if (it != factorCache.end()) return it->second;
        PSeries f = PSeries::one(cartan_, target, budget);
        for (const auto& fac : ipart.factors())
            f = f * ratioPower(i, target, fac.exp).truncated(budget).shifted(fac.k);
        return factorCache.emplace(key, std::move(f)).first->second;
    };

    std::unordered_map<Mono, Term, MonoHash> acc;
    Mono anchor;
    for (std::size_t idx = 0; idx < x.terms().size(); ++idx) {
        const Term& t = x.terms()[idx];
        const int budget = n - t.offset.height;
        if (budget < 0) break;
        std::vector<Factor> ifactors;
        Mono image = t.mono;
        for (const auto& fac : t.mono.factors())
            if (fac.node == i) {
                ifactors.push_back(fac);
                image = image * aMono(*cartan_, i, fac.k - d).pow(-fac.exp);
            }
        const PSeries& f = factorFor(Mono::fromFactors(ifactors), budget);
        if (idx == 0) anchor = image * f.anchor();
        for (const auto& ft : f.terms()) {
            if (ft.offset.height > budget) break;
            Mono m = image * ft.mono;
            auto [it, fresh] = acc.try_emplace(m, Term{m, 0, t.offset + ft.offset});
            it->second.coeff += t.coeff * ft.coeff;
        }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, term] : acc) terms.push_back(std::move(term));
    return PSeries::fromOffsetTerms(cartan_, target, anchor, std::move(terms), n);
}

PSeries ThetaContext::thetaOnGenerator(int i, const Generator& g, const WeylElt& w) {
    cartan_->checkNode(g.node);
    return thetaOnSeries(i, PSeries::monomial(cartan_, w, g.mono(), 1, order_));
}

SeriesSum ThetaContext::thetaOnSum(int i, const SeriesSum& x) {
    SeriesSum out(cartan_, rightMultiply(*cartan_, x.w(), i));
    for (const auto& part : x.parts()) out += SeriesSum(thetaOnSeries(i, part));
    return out;
}

PiElt ThetaContext::thetaOnPi(int i, const PiElt& x) {
    PiElt out;
    for (const auto& [key, part] : x.components()) out.set(thetaOnSum(i, part));
    return out;
}

SeriesSum ThetaContext::thetaWord(const std::vector<int>& word, const SeriesSum& x) {
    SeriesSum y = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) y = thetaOnSum(*it, y);
    return y;
}

// ---------------------------------------------------------------------------
// Iterated sigmas

namespace {

int pairKind(const CartanData& c, int i, int j) {
    if (c.C(i, j) != -1) return c.C(i, j) * c.C(j, i) == 1 ? 1 : 0;
    return static_cast<int>(c.C(i, j) * c.C(j, i));
}

}  // namespace

std::optional<ThetaContext::Step> ThetaContext::transportStep(const std::string& name, int i, int j) const {
    const int kind = pairKind(*cartan_, i, j);
    if (kind == 2) {
        if (name == "iji") return Step{"ji", 0, {-2}};
        if (name == "jij") return Step{"ij", 1, {-4}};
    }
    if (kind == 3) {
        if (name == "iji") return Step{"ji", 0, {-4, -2}};
        if (name == "jiji") return Step{"iji", 1, {-3}};
        if (name == "ijiji") return Step{"jiji", 0, {-6}};
        if (name == "jij") return Step{"ij", 1, {-4, -6}};
        if (name == "ijij") return Step{"jij", 0, {-7, -9, -11}};
        if (name == "jijij") return Step{"ijij", 1, {-10}};
    }
    return std::nullopt;
}

PSeries ThetaContext::transportFactor(const Step& step, int i, int j, const WeylElt& w) {
    const int node = step.node == 0 ? i : j;
    PSeries p = PSeries::one(cartan_, w, order_);
    for (int s : step.shifts) p = p * sigma(node, s, w);
    return p;
}

QDiffEq ThetaContext::transportedEquation(const std::string& name, int i, int j, const WeylElt& w) {
    auto step = transportStep(name, i, j);
    if (!step) throw Error(fmt::format("Sigma_{} is not defined through Theta for this pair", name));
    const int node = step->node == 0 ? i : j;
    const WeylElt source = rightMultiply(*cartan_, w, node);
    QDiffEq base = transportStep(step->source, i, j) ? transportedEquation(step->source, i, j, source)
                                                     : iteratedEquation(step->source, cartan_, i, j, source, order_);
    // X solves F X = H + G tau X, so Y = Theta(X) P solves
    // (Theta F / P) Y = Theta H + (Theta G / tau P) tau Y.
    PSeries p = transportFactor(*step, i, j, w);
    QDiffEq eq{thetaOnSeries(node, base.F) * p.inverse(), thetaOnSeries(node, base.H),
               thetaOnSeries(node, base.G) * p.shifted(-base.r).inverse(), base.r, std::nullopt};
    return eq;
}

PSeries ThetaContext::iteratedSigma(const std::string& name, int i, int j, int k, const WeylElt& w, Source source) {
    cartan_->checkNode(i);
    cartan_->checkNode(j);
    const bool explicitName = name == "ij" || name == "ji" || ((name == "iji" || name == "jij") && pairKind(*cartan_, i, j) == 2);
    if (source == Source::Default) source = explicitName ? Source::Explicit : Source::Transported;
    if (source == Source::Explicit && !explicitName)
        throw Error(fmt::format("Sigma_{} has no explicit equation for this pair", name));
    auto step = transportStep(name, i, j);
    if (source != Source::Explicit && !step)
        throw Error(fmt::format("Sigma_{} is not defined through Theta for this pair", name));

    auto key = std::make_tuple(name, i, j, w.key(), static_cast<int>(source));
    {
        std::shared_lock lock(mutex_);
        if (auto it = iterated_.find(key); it != iterated_.end()) return it->second.shifted(k);
    }
    PSeries value;
    if (source == Source::Explicit) {
        value = qweyl::iteratedSigma(name, cartan_, i, j, 0, w, order_);
    } else if (source == Source::Transported) {
        value = solve(transportedEquation(name, i, j, w));
    } else {
        const int node = step->node == 0 ? i : j;
        const WeylElt from = rightMultiply(*cartan_, w, node);
        Source prev = transportStep(step->source, i, j) ? Source::Theta : Source::Explicit;
        value = thetaOnSeries(node, iteratedSigma(step->source, i, j, 0, from, prev)) * transportFactor(*step, i, j, w);
    }
    std::unique_lock lock(mutex_);
    return iterated_.try_emplace(key, std::move(value)).first->second.shifted(k);
}

// ---------------------------------------------------------------------------
// Verification drivers

Comparison compareTheta(ThetaContext& ctx, int i, const SeriesSum& x, const SeriesSum& expected) {
    return compareSeries(ctx.thetaOnSum(i, x), expected);
}

Report verifyInvolution(ThetaContext& ctx, int i, const WeylElt& w, const std::vector<Generator>& gens) {
    Report report;
    for (const auto& g : gens) {
        SeriesSum x(PSeries::monomial(ctx.cartan(), w, g.mono(), 1, ctx.order()));
        auto cmp = compareSeries(ctx.thetaWord({i, i}, x), x);
        report.add(makeEntry(fmt::format("Theta_{}^2 = Id", i + 1), *ctx.cartan(), w, g.toString(), cmp));
    }
    return report;
}

Report verifyInvolutionAll(ThetaContext& ctx) {
    Report report;
    const auto gens = defaultGenerators(ctx.cartan()->rank());
    for (const auto& w : enumerate(*ctx.cartan()))
        for (int i = 0; i < ctx.cartan()->rank(); ++i) report.append(verifyInvolution(ctx, i, w, gens));
    return report;
}

namespace {

std::vector<int> alternating(int first, int second, int length) {
    std::vector<int> word;
    for (int t = 0; t < length; ++t) word.push_back(t % 2 == 0 ? first : second);
    return word;
}

std::string relationName(int m) {
    switch (m) {
        case 2: return "commutation";
        case 3: return "braid length 3";
        case 4: return "braid length 4";
        default: return "braid length 6";
    }
}

// One vertex of the rank-2 diagrams: word(Y_{start,0}) equals a monomial
// times Sigma_{sigma,top}/Sigma_{sigma,bottom}.  Nodes: 0 for i, 1 for j.
struct DiagramNode {
    std::vector<int> word;
    int start;
    std::vector<std::array<int, 3>> prefix;
    std::string sigma;
    int top, bottom;
};

const std::vector<DiagramNode>& diagramNodes(int kind) {
    static const std::vector<DiagramNode> a2{
        {{1, 0}, 0, {{1, -3, -1}}, "ji", -3, -1},
        {{0, 1}, 1, {{0, -3, -1}}, "ij", -3, -1},
    };
    static const std::vector<DiagramNode> b2{
        {{1, 0}, 0, {{0, -2, 1}, {1, -5, -1}, {1, -3, -1}}, "ji", -6, -2},
        {{0, 1, 0}, 0, {{0, -6, -1}}, "iji", -6, -2},
        {{0, 1}, 1, {{0, -5, -1}, {1, -4, 1}}, "ij", -3, -1},
        {{1, 0, 1}, 1, {{1, -6, -1}}, "jij", -3, -1},
    };
    static const std::vector<DiagramNode> g2{
        {{1, 0}, 0, {{0, -4, 1}, {0, -2, 1}, {1, -3, -1}, {1, -5, -1}, {1, -7, -1}}, "ji", -9, -3},
        {{0, 1, 0}, 0, {{1, -5, 1}, {1, -7, 1}, {1, -9, 1}, {0, -10, -1}, {0, -8, -1}}, "iji", -9, -3},
        {{1, 0, 1, 0}, 0, {{0, -6, 1}, {1, -7, -1}, {1, -9, -1}, {1, -11, -1}}, "jiji", -9, -3},
        {{0, 1, 0, 1, 0}, 0, {{0, -12, -1}}, "ijiji", -9, -3},
        {{0, 1}, 1, {{1, -4, 1}, {1, -6, 1}, {0, -7, -1}}, "ij", -3, -1},
        {{1, 0, 1}, 1, {{0, -5, 1}, {1, -6, -1}, {1, -8, -1}}, "jij", -3, -1},
        {{0, 1, 0, 1}, 1, {{1, -10, 1}, {0, -11, -1}}, "ijij", -3, -1},
        {{1, 0, 1, 0, 1}, 1, {{1, -12, -1}}, "jijij", -3, -1},
    };
    static const std::vector<DiagramNode> none;
    switch (kind) {
        case 1: return a2;
        case 2: return b2;
        case 3: return g2;
        default: return none;
    }
}

}  // namespace

Report verifyBraidRelation(ThetaContext& ctx, int i, int j) {
    const auto& cartan = *ctx.cartan();
    const int m = braidExponent(cartan, i, j);
    const auto lhs = alternating(i, j, m), rhs = alternating(j, i, m);
    Report report;
    for (const auto& w : enumerate(cartan))
        for (int node : {i, j}) {
            Generator g{node, 0, 1};
            SeriesSum x(PSeries::monomial(ctx.cartan(), w, g.mono(), 1, ctx.order()));
            auto cmp = compareSeries(ctx.thetaWord(lhs, x), ctx.thetaWord(rhs, x));
            report.add(makeEntry(fmt::format("{} ({},{})", relationName(m), i + 1, j + 1), cartan, w, g.toString(), cmp));
        }
    return report;
}

Report verifyDiagramIdentities(ThetaContext& ctx, int i, int j) {
    const auto& cartan = *ctx.cartan();
    const int n = ctx.order();
    const int kind = pairKind(cartan, i, j);
    Report report;

    // Theta_node(Sigma_name) = Sigma_name in every component.
    std::vector<std::pair<std::string, int>> fixed;
    if (cartan.C(i, j) == 0) fixed = {};
    else if (kind == 1) fixed = {{"ji", i}, {"ij", j}};
    else if (kind == 2) fixed = {{"iji", j}, {"jij", i}};
    else if (kind == 3) fixed = {{"ijiji", j}, {"jijij", i}};

    for (const auto& w : enumerate(cartan)) {
        if (cartan.C(i, j) == 0) {
            // Commuting nodes: Theta_j fixes Sigma_i.
            for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
                WeylElt target = rightMultiply(cartan, w, b);
                auto cmp = compareTheta(ctx, b, SeriesSum(ctx.sigma(a, 0, w)), SeriesSum(ctx.sigma(a, 0, target)));
                report.add(makeEntry(fmt::format("Theta_{}(Sigma_{}) = Sigma_{}", b + 1, a + 1, a + 1), cartan, w, "", cmp));
            }
            continue;
        }
        for (const auto& [name, node] : fixed) {
            WeylElt target = rightMultiply(cartan, w, node);
            auto cmp = compareTheta(ctx, node, SeriesSum(ctx.iteratedSigma(name, i, j, 0, w)),
                                    SeriesSum(ctx.iteratedSigma(name, i, j, 0, target)));
            report.add(makeEntry(fmt::format("Theta_{}(Sigma_{}) = Sigma_{}", node + 1, name, name), cartan, w, "", cmp));
        }

        for (const auto& node : diagramNodes(kind)) {
            std::vector<int> word;
            for (int letter : node.word) word.push_back(letter == 0 ? i : j);
            const int start = node.start == 0 ? i : j;
            WeylElt end = w;
            for (auto it = word.rbegin(); it != word.rend(); ++it) end = rightMultiply(cartan, end, *it);
            Mono prefix;
            for (const auto& [which, k, e] : node.prefix) prefix = prefix * Mono::y(which == 0 ? i : j, k, e);
            PSeries expected = PSeries::monomial(ctx.cartan(), end, prefix, 1, n) *
                               ctx.iteratedSigma(node.sigma, i, j, node.top, end) *
                               ctx.iteratedSigma(node.sigma, i, j, node.bottom, end).inverse();
            SeriesSum x(PSeries::monomial(ctx.cartan(), w, Mono::y(start, 0), 1, n));
            auto cmp = compareSeries(ctx.thetaWord(word, x), SeriesSum(expected));
            std::string label;
            for (int letter : word) label += fmt::format("Theta_{}", letter + 1);
            report.add(makeEntry(fmt::format("diagram {} via Sigma_{}", label, node.sigma), cartan, w,
                                 fmt::format("Y[{},0]", start + 1), cmp));
        }
    }
    return report;
}

Report verifyBraid(ThetaContext& ctx) {
    if (ctx.cartan()->rank() != 2) throw CartanError("braid verification needs a rank-2 Cartan matrix");
    Report report = verifyBraidRelation(ctx, 0, 1);
    report.append(verifyDiagramIdentities(ctx, 0, 1));
    return report;
}

}  // namespace qweyl
