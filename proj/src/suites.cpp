#include "qweyl/suites.hpp"

#include "qweyl/chari.hpp"
#include "qweyl/classical.hpp"
#include "qweyl/error.hpp"
#include "qweyl/qchar.hpp"
#include "qweyl/qdiff.hpp"
#include "qweyl/sample.hpp"
#include "qweyl/screening.hpp"

#include <fmt/format.h>

namespace qweyl {

std::vector<WeylElt> RunConfig::selectedComponents() const {
    if (!components.empty()) return components;
    return enumerate(*cartan);
}

std::vector<int> RunConfig::selectedNodes() const {
    if (node) {
        cartan->checkNode(*node);
        return {*node};
    }
    std::vector<int> out;
    for (int i = 0; i < cartan->rank(); ++i) out.push_back(i);
    return out;
}

Json RunConfig::toJson() const {
    Json comps = Json::array();
    for (const auto& w : components) comps.push_back(w.wordString());
    Json matrix = Json::array();
    for (int i = 0; i < cartan->rank(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < cartan->rank(); ++j) row.push_back(cartan->C(i, j));
        matrix.push_back(row);
    }
    Json j{{"type", cartan->name()}, {"cartan", matrix},  {"order", order},     {"base", base},
           {"seed", seed},          {"samples", samples}, {"w", components.empty() ? Json("all") : comps}};
    j["node"] = node ? Json(*node + 1) : Json("all");
    if (!expr.empty()) j["expr"] = expr;
    if (!name.empty()) j["name"] = name;
    return j;
}

void SuiteResult::append(SuiteResult other) {
    for (auto& r : other.results) results.push_back(std::move(r));
    checks.append(other.checks);
}

namespace {

CheckEntry boolEntry(std::string relation, const CartanData& cartan, const WeylElt& w, std::string generator,
                     bool pass, std::string detail, int order = 0) {
    CheckEntry e{std::move(relation), cartan.name(), w.wordString(), std::move(generator), order, pass, {}};
    if (!pass) e.firstMismatch = std::move(detail);
    return e;
}

WeylElt identityOf(const RunConfig& cfg) { return WeylElt::identity(cfg.cartan->rank()); }

Poly requireExpr(const RunConfig& cfg) {
    if (cfg.expr.empty()) throw Error("this command needs --expr");
    return parsePoly(cfg.expr, cfg.cartan.get());
}

// Index pairs (component, node) for the worker pool.
struct Cell {
    WeylElt w;
    int i;
};

std::vector<Cell> cells(const RunConfig& cfg) {
    std::vector<Cell> out;
    for (const auto& w : cfg.selectedComponents())
        for (int i : cfg.selectedNodes()) out.push_back({w, i});
    return out;
}

SuiteResult mergeAll(std::vector<SuiteResult> parts) {
    SuiteResult out;
    for (auto& p : parts) out.append(std::move(p));
    return out;
}

template <typename F>
SuiteResult overCells(const RunConfig& cfg, F f) {
    auto cs = cells(cfg);
    return mergeAll(parallelMap<SuiteResult>(cs.size(), cfg.jobs, [&](std::size_t idx) { return f(cs[idx]); }));
}

// 0 for a non-rank-2 or orthogonal pair, else C(i,j) C(j,i) with C(i,j) = -1.
int rank2Kind(const CartanData& c) {
    if (c.rank() != 2 || c.C(0, 1) == 0) return 0;
    if (c.C(0, 1) != -1) return 0;
    return static_cast<int>(c.C(0, 1) * c.C(1, 0));
}

std::vector<std::string> iteratedNames(const CartanData& c) {
    switch (rank2Kind(c)) {
        case 1: return {"ij", "ji"};
        case 2: return {"ij", "ji", "iji", "jij"};
        case 3: return {"ij", "ji", "iji", "jiji", "ijiji", "jij", "ijij", "jijij"};
        default: return {};
    }
}

bool hasExplicitEquation(const CartanData& c, const std::string& name) {
    return name == "ij" || name == "ji" || (rank2Kind(c) == 2 && (name == "iji" || name == "jij"));
}

}  // namespace

// ---------------------------------------------------------------------------

PSeries sigmaBySummation(const CartanPtr& cartan, int i, int k, const WeylElt& w, int N) {
    const int d = static_cast<int>(cartan->d(i));
    Poly p;
    Mono prod;
    if (isPositive(w, RootVector::simple(cartan->rank(), i))) {
        for (int n = 0; n <= N + 1; ++n) {
            p.addTerm(prod, 1);
            prod = prod * aMono(*cartan, i, k - 2 * d * n).inverse();
        }
    } else {
        for (int n = 1; n <= N + 1; ++n) {
            prod = prod * aMono(*cartan, i, k + 2 * d * n);
            p.addTerm(prod, -1);
        }
    }
    return embed(p, cartan, w, N).single();
}

SuiteResult runSigma(const RunConfig& cfg) {
    return overCells(cfg, [&](const Cell& c) {
        SuiteResult r;
        PSeries s = sigma(cfg.cartan, c.i, cfg.base, c.w, cfg.order);
        const bool plus = isPositive(c.w, RootVector::simple(cfg.cartan->rank(), c.i));
        r.results.push_back({{"w", c.w.wordString()},
                             {"node", c.i + 1},
                             {"k", cfg.base},
                             {"expansion", plus ? "+" : "-"},
                             {"terms", s.size()},
                             {"series", s.toString()}});
        auto cmp = compareSeries(SeriesSum(s), SeriesSum(sigmaBySummation(cfg.cartan, c.i, cfg.base, c.w, cfg.order)));
        r.checks.add(makeEntry("Sigma definition", *cfg.cartan, c.w, fmt::format("Sigma[{},{}]", c.i + 1, cfg.base), cmp));
        return r;
    });
}

SuiteResult runIteratedSigma(const RunConfig& cfg) {
    const CartanData& cartan = *cfg.cartan;
    auto names = iteratedNames(cartan);
    if (names.empty()) throw CartanError("iterated sigmas need a rank-2 Cartan matrix with C(1,2) = -1");
    if (!cfg.name.empty()) {
        if (std::find(names.begin(), names.end(), cfg.name) == names.end())
            throw Error(fmt::format("Sigma_{} is not defined for type {}", cfg.name, cartan.name()));
        names = {cfg.name};
    }
    ThetaContext ctx(cfg.cartan, cfg.order);
    const auto comps = cfg.selectedComponents();
    // Transported names depend on earlier ones; warm the cache in order first.
    for (const auto& w : comps)
        for (const auto& n : names) ctx.iteratedSigma(n, 0, 1, cfg.base, w);
    SuiteResult out = mergeAll(parallelMap<SuiteResult>(comps.size() * names.size(), cfg.jobs, [&](std::size_t idx) {
        const WeylElt& w = comps[idx / names.size()];
        const std::string& name = names[idx % names.size()];
        const std::string label = fmt::format("Sigma_{}[{}]", name, cfg.base);
        SuiteResult r;
        using S = ThetaContext::Source;
        PSeries s = ctx.iteratedSigma(name, 0, 1, cfg.base, w);
        r.results.push_back({{"w", w.wordString()}, {"name", name}, {"k", cfg.base}, {"terms", s.size()},
                             {"series", s.toString()}});
        if (hasExplicitEquation(cartan, name)) {
            PSeries graded = iteratedSigma(name, cfg.cartan, 0, 1, cfg.base, w, cfg.order, SolveMethod::Graded);
            r.checks.add(makeEntry("fixed point = graded", cartan, w, label, compareSeries(SeriesSum(s), SeriesSum(graded))));
        }
        if (ctx.hasTransport(name, 0, 1)) {
            r.checks.add(makeEntry("transported equation", cartan, w, label,
                                   compareSeries(SeriesSum(ctx.iteratedSigma(name, 0, 1, cfg.base, w, S::Transported)),
                                                 SeriesSum(ctx.iteratedSigma(name, 0, 1, cfg.base, w, S::Theta)))));
            if (hasExplicitEquation(cartan, name))
                r.checks.add(makeEntry("explicit = transported", cartan, w, label,
                                       compareSeries(SeriesSum(s), SeriesSum(ctx.iteratedSigma(name, 0, 1, cfg.base, w,
                                                                                               S::Transported)))));
        }
        if (closedFormCase(name, cartan, 0, 1, w).available) {
            PSeries oracle = closedFormOracle(name, cfg.cartan, 0, 1, cfg.base, w, cfg.order);
            r.checks.add(makeEntry("closed form", cartan, w, label, compareSeries(SeriesSum(s), SeriesSum(oracle))));
        }
        return r;
    }));
    RunConfig identities = cfg;
    out.checks.append(runSigmaIdentities(identities).checks);
    return out;
}

SuiteResult runSigmaIdentities(const RunConfig& cfg) {
    const CartanData& cartan = *cfg.cartan;
    ThetaContext ctx(cfg.cartan, cfg.order);
    const int N = cfg.order;
    const int k = cfg.base;
    SuiteResult out = overCells(cfg, [&](const Cell& c) {
        SuiteResult r;
        const int i = c.i;
        const int d = static_cast<int>(cartan.d(i));
        const WeylElt& w = c.w;
        const WeylElt ws = rightMultiply(cartan, w, i);
        const std::string label = fmt::format("Sigma[{},{}]", i + 1, k);
        SeriesSum sig(ctx.sigma(i, k, w));
        SeriesSum one(PSeries::one(cfg.cartan, w, N));
        r.checks.add(makeEntry("Theta(Sigma) = 1 - Sigma", cartan, ws, label,
                               compareTheta(ctx, i, SeriesSum(ctx.sigma(i, k, ws)), one - sig)));
        r.checks.add(makeEntry("1 - Sigma = -A^-1 tau Sigma", cartan, w, label,
                               compareSeries(one - sig, SeriesSum(ctx.sigma(i, k - 2 * d, w)
                                                                      .timesMono(aMono(cartan, i, k).inverse())
                                                                      .scaled(-1)))));
        PSeries rhs = PSeries::monomial(cfg.cartan, w, aMono(cartan, i, k - 2 * d), 1, N) * ctx.sigma(i, k, w) *
                      ctx.sigma(i, k - 4 * d, w).inverse();
        r.checks.add(makeEntry("Theta(A^-1)", cartan, ws, fmt::format("A[{},{}]^-1", i + 1, k),
                               compareTheta(ctx, i, SeriesSum(PSeries::monomial(cfg.cartan, ws,
                                                                                aMono(cartan, i, k).inverse(), 1, N)),
                                            SeriesSum(rhs))));
        // Theta_i(Sigma_j) prod Sigma_{i,shift} = Sigma_ij (or ji).
        if (rank2Kind(cartan) != 0) {
            const int j = 1 - i;
            const std::string name = i == 0 ? "ij" : "ji";
            std::vector<int> shifts;
            switch (rank2Kind(cartan)) {
                case 1: shifts = {-1}; break;
                case 2: shifts = i == 0 ? std::vector<int>{-2, -4} : std::vector<int>{0}; break;
                default: shifts = i == 0 ? std::vector<int>{-3, -5, -7} : std::vector<int>{1}; break;
            }
            PSeries p = PSeries::one(cfg.cartan, w, N);
            for (int s : shifts) p = p * ctx.sigma(i, k + s, w);
            PSeries image = ctx.thetaOnSeries(i, ctx.sigma(j, k, ws));
            r.checks.add(makeEntry("Theta_i(Sigma_j) = Sigma_" + name + " / prod Sigma_i", cartan, w,
                                   fmt::format("Sigma[{},{}]", j + 1, k),
                                   compareSeries(SeriesSum(image * p), SeriesSum(ctx.iteratedSigma(name, 0, 1, k, w)))));
        }
        return r;
    });
    if (rank2Kind(cartan) == 1)
        for (const auto& w : cfg.selectedComponents()) {
            // Sigma_{i,a} Sigma_{j,aq} = Sigma_{ij,aq} + A_{j,aq}^{-1} Sigma_{ji,a}
            SeriesSum lhs(ctx.sigma(0, k, w) * ctx.sigma(1, k + 1, w));
            SeriesSum rhs = SeriesSum(ctx.iteratedSigma("ij", 0, 1, k + 1, w)) +
                            SeriesSum(ctx.iteratedSigma("ji", 0, 1, k, w).timesMono(aMono(cartan, 1, k + 1).inverse()));
            out.checks.add(makeEntry("Sigma_i Sigma_j = Sigma_ij + A_j^-1 Sigma_ji", cartan, w,
                                     fmt::format("k={}", k), compareSeries(lhs, rhs)));
        }
    return out;
}

SuiteResult runTheta(const RunConfig& cfg) {
    if (cfg.expr.empty()) return runSigmaIdentities(cfg);
    const Poly p = requireExpr(cfg);
    ThetaContext ctx(cfg.cartan, cfg.order);
    return overCells(cfg, [&](const Cell& c) {
        SuiteResult r;
        SeriesSum x = embed(p, cfg.cartan, c.w, cfg.order);
        SeriesSum y = ctx.thetaOnSum(c.i, x);
        r.results.push_back({{"w", c.w.wordString()},
                             {"node", c.i + 1},
                             {"target", y.w().wordString()},
                             {"image", y.toString()}});
        r.checks.add(makeEntry(fmt::format("Theta_{}^2 = Id", c.i + 1), *cfg.cartan, c.w, cfg.expr,
                               compareSeries(ctx.thetaOnSum(c.i, y), x)));
        return r;
    });
}

SuiteResult runInvolution(const RunConfig& cfg) {
    ThetaContext ctx(cfg.cartan, cfg.order);
    std::vector<Generator> gens;
    for (int j = 0; j < cfg.cartan->rank(); ++j)
        for (int s : {1, -1}) gens.push_back({j, cfg.base, s});
    return overCells(cfg, [&](const Cell& c) {
        SuiteResult r;
        r.checks = verifyInvolution(ctx, c.i, c.w, gens);
        return r;
    });
}

SuiteResult runBraid(const RunConfig& cfg) {
    ThetaContext ctx(cfg.cartan, cfg.order);
    SuiteResult r;
    if (cfg.cartan->rank() == 2) {
        r.checks = verifyBraid(ctx);
        return r;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < cfg.cartan->rank(); ++i)
        for (int j = i + 1; j < cfg.cartan->rank(); ++j) pairs.emplace_back(i, j);
    auto parts = parallelMap<SuiteResult>(pairs.size(), cfg.jobs, [&](std::size_t idx) {
        SuiteResult s;
        s.checks = verifyBraidRelation(ctx, pairs[idx].first, pairs[idx].second);
        return s;
    });
    return mergeAll(std::move(parts));
}

SuiteResult runFixedElements(const RunConfig& cfg) {
    ThetaContext ctx(cfg.cartan, cfg.order);
    const CartanData& cartan = *cfg.cartan;
    std::optional<Poly> given;
    if (!cfg.expr.empty()) given = requireExpr(cfg);
    SuiteResult out = overCells(cfg, [&](const Cell& c) {
        SuiteResult r;
        const WeylElt ws = rightMultiply(cartan, c.w, c.i);
        std::vector<std::pair<std::string, Poly>> elts;
        if (given)
            elts.emplace_back(cfg.expr, *given);
        else
            for (int len = 1; len <= 5; ++len) {
                auto t = tElt(cartan, c.i, cfg.base, len);
                elts.emplace_back(t.provenance, t.value);
            }
        for (const auto& [label, p] : elts)
            r.checks.add(makeEntry(fmt::format("Theta_{} fixes", c.i + 1), cartan, c.w, label,
                                   compareTheta(ctx, c.i, embed(p, cfg.cartan, c.w, cfg.order),
                                                embed(p, cfg.cartan, ws, cfg.order))));
        return r;
    });
    if (!given)
        for (int i : cfg.selectedNodes())
            for (int len = 1; len <= 4; ++len)
                out.checks.add(boolEntry("T recurrence", cartan, identityOf(cfg),
                                         fmt::format("T^({})[{},{}]", len, i + 1, cfg.base),
                                         tRecurrenceHolds(cartan, i, cfg.base, len), "recurrence fails"));
    return out;
}

SuiteResult runScreen(const RunConfig& cfg) {
    const Poly p = requireExpr(cfg);
    SuiteResult r;
    for (int i : cfg.selectedNodes()) {
        SElt s = screen(cfg.cartan, i, p);
        r.results.push_back({{"node", i + 1}, {"screen", s.toString()}, {"zero", s.isZero()}});
        r.checks.add(boolEntry("screen = h-linear term of Theta_h", *cfg.cartan, identityOf(cfg),
                               fmt::format("S_{}({})", i + 1, cfg.expr), thetaDeformLinearTerm(cfg.cartan, i, p) == s,
                               "the two constructions differ"));
    }
    return r;
}

SuiteResult runKernel(const RunConfig& cfg) {
    const Poly p = requireExpr(cfg);
    SuiteResult r;
    bool all = true;
    for (int i = 0; i < cfg.cartan->rank(); ++i) {
        SElt s = screen(cfg.cartan, i, p);
        all = all && s.isZero();
        r.results.push_back({{"node", i + 1}, {"inKernel", s.isZero()}});
        r.checks.add(boolEntry("screen = h-linear term of Theta_h", *cfg.cartan, identityOf(cfg),
                               fmt::format("S_{}({})", i + 1, cfg.expr), thetaDeformLinearTerm(cfg.cartan, i, p) == s,
                               "the two constructions differ"));
    }
    r.results.push_back({{"node", "all"}, {"inKernel", all}});
    return r;
}

SuiteResult runDeformCheck(const RunConfig& cfg) {
    const CartanPtr& c = cfg.cartan;
    const WeylElt e = identityOf(cfg);
    SuiteResult r;
    auto agree = [&](int i, const Poly& p, const std::string& kind) {
        r.checks.add(boolEntry("Theta_h linear term = screen", *c, e, fmt::format("{} S_{} {}", kind, i + 1, toString(p)),
                               thetaDeformLinearTerm(c, i, p) == screen(c, i, p), "the two constructions differ"));
    };
    for (int i : cfg.selectedNodes())
        for (int j = 0; j < c->rank(); ++j)
            for (int k = cfg.base - 4; k <= cfg.base + 4; ++k)
                for (int s : {1, -1}) agree(i, Poly::y(j, k, s), "generator");
    Sampler sampler(cfg.seed);
    for (int t = 0; t < cfg.samples; ++t) {
        Poly p = sampler.poly(c->rank(), 3);
        for (int i : cfg.selectedNodes()) agree(i, p, "random");
    }
    if (c->rank() == 1) {
        Poly chi = sl2FundamentalQChar(*c, cfg.base).value;
        r.checks.add(boolEntry("sl2 fundamental in kernel", *c, e, toString(chi), screen(c, 0, chi).isZero(),
                               "S_1 does not vanish"));
    }
    for (int i : cfg.selectedNodes()) {
        for (int len = 1; len <= 5; ++len) {
            auto t = tElt(*c, i, cfg.base, len);
            r.checks.add(boolEntry("screen kills T", *c, e, t.provenance, screen(c, i, t.value).isZero(), "nonzero"));
        }
        for (int t = 0; t < 5; ++t) {
            std::string spec = fmt::format("T[{},{}]*T[{},{}] - {}*T[{},{}]", i + 1, sampler.uniform(-4, 4), i + 1,
                                           sampler.uniform(-4, 4), sampler.uniform(1, 3), i + 1, sampler.uniform(-4, 4));
            if (c->rank() > 1) {
                const int j = (i + 1) % c->rank();
                spec += fmt::format(" + Y[{},{}]^{}*T[{},{}]", j + 1, sampler.uniform(-4, 4), sampler.uniform(0, 1) ? 1 : -1,
                                    i + 1, sampler.uniform(-4, 4));
            }
            auto block = blockPolynomial(*c, i, spec);
            r.checks.add(boolEntry("screen kills blocks", *c, e, spec, screen(c, i, block.value).isZero(), "nonzero"));
        }
    }
    return r;
}

SuiteResult runClassical(const RunConfig& cfg) {
    const CartanData& cartan = *cfg.cartan;
    const WeylElt e = identityOf(cfg);
    SuiteResult r;
    if (!cfg.expr.empty()) {
        ClassPoly v = varpi(cartan, requireExpr(cfg));
        Json row{{"varpi", v.toString()}};
        for (int i : cfg.selectedNodes()) {
            ClassPoly s = classicalReflect(cartan, i, v);
            row[fmt::format("s{}", i + 1)] = s.toString();
            r.checks.add(boolEntry("s_i^2 = Id", cartan, e, v.toString(), classicalReflect(cartan, i, s) == v,
                                   "not an involution"));
        }
        r.results.push_back(row);
    }
    // varpi(Sigma_i) is the expansion of 1 / (1 - a_i^{-1}).
    ThetaContext ctx(cfg.cartan, cfg.order);
    SuiteResult sums = overCells(cfg, [&](const Cell& c) {
        SuiteResult s;
        RElt f = RElt::inverseFactor(cfg.cartan, RootVector::simple(cartan.rank(), c.i));
        s.checks.add(makeEntry("varpi(Sigma) = 1/(1 - a^-1)", cartan, c.w, fmt::format("Sigma[{},{}]", c.i + 1, cfg.base),
                               compareSeries(varpi(SeriesSum(ctx.sigma(c.i, cfg.base, c.w))),
                                             expandInCompletion(f, c.w, cfg.order))));
        return s;
    });
    r.append(std::move(sums));
    return r;
}

SuiteResult runEquivariance(const RunConfig& cfg) {
    const CartanData& cartan = *cfg.cartan;
    ThetaContext ctx(cfg.cartan, cfg.order);
    std::vector<std::string> names;
    if (rank2Kind(cartan) == 1 || rank2Kind(cartan) == 2)
        for (const auto& n : iteratedNames(cartan)) names.push_back(n);
    else if (rank2Kind(cartan) == 3)
        names = {"ij", "ji"};
    for (const auto& w : cfg.selectedComponents())
        for (const auto& n : names) ctx.iteratedSigma(n, 0, 1, cfg.base, w);
    return overCells(cfg, [&](const Cell& c) {
        SuiteResult r;
        for (int j = 0; j < cartan.rank(); ++j)
            for (int s : {1, -1}) {
                Generator g{j, cfg.base, s};
                r.checks.add(checkEquivariance(ctx, c.i, SeriesSum(PSeries::monomial(cfg.cartan, c.w, g.mono(), 1, cfg.order)),
                                               g.toString()));
            }
        for (int j = 0; j < cartan.rank(); ++j)
            r.checks.add(checkEquivariance(ctx, c.i, SeriesSum(ctx.sigma(j, cfg.base, c.w)),
                                           fmt::format("Sigma[{},{}]", j + 1, cfg.base)));
        for (const auto& n : names)
            r.checks.add(checkEquivariance(ctx, c.i, SeriesSum(ctx.iteratedSigma(n, 0, 1, cfg.base, c.w)),
                                           fmt::format("Sigma_{}[{}]", n, cfg.base)));
        return r;
    });
}

namespace {

std::vector<Mono> sampleMonomials(const RunConfig& cfg, Sampler& s) {
    std::vector<Mono> out;
    for (int t = 0; t < cfg.samples; ++t) out.push_back(s.mono(cfg.cartan->rank(), s.uniform(1, 4)));
    return out;
}

}  // namespace

SuiteResult runChari(const RunConfig& cfg) {
    const CartanData& cartan = *cfg.cartan;
    SuiteResult r;
    if (!cfg.expr.empty()) {
        Poly p = requireExpr(cfg);
        for (int i : cfg.selectedNodes()) r.results.push_back({{"node", i + 1}, {"T", toString(chariT(cartan, i, p))}});
    }
    Sampler s(cfg.seed);
    auto sample = sampleMonomials(cfg, s);
    r.checks = verifyBraidT(cfg.cartan, sample, s);
    for (int i : cfg.selectedNodes())
        r.checks.add(boolEntry(fmt::format("T_{}^n != Id for n <= 10", i + 1), cartan, identityOf(cfg),
                               fmt::format("Y[{},0]", i + 1), chariPeriod(cartan, i, 10) == 0, "finite period"));
    return r;
}

SuiteResult runLambda(const RunConfig& cfg) {
    ThetaContext ctx(cfg.cartan, std::max(1, cfg.order));
    Sampler s(cfg.seed);
    auto sample = sampleMonomials(cfg, s);
    const auto nodes = cfg.selectedNodes();
    auto parts = parallelMap<SuiteResult>(sample.size() * nodes.size(), cfg.jobs, [&](std::size_t idx) {
        SuiteResult r;
        r.checks.add(checkLambdaTheta(ctx, nodes[idx % nodes.size()], sample[idx / nodes.size()]));
        return r;
    });
    return mergeAll(std::move(parts));
}

// ---------------------------------------------------------------------------

const std::vector<std::pair<std::string, Suite>>& suites() {
    static const std::vector<std::pair<std::string, Suite>> table{
        {"sigma", runSigma},
        {"iterated-sigma", runIteratedSigma},
        {"theta", runTheta},
        {"involution", runInvolution},
        {"braid", runBraid},
        {"fixed-elements", runFixedElements},
        {"screen", runScreen},
        {"kernel", runKernel},
        {"deform-check", runDeformCheck},
        {"classical", runClassical},
        {"equivariance", runEquivariance},
        {"chari", runChari},
        {"lambda", runLambda},
    };
    return table;
}

const Suite& findSuite(const std::string& command) {
    for (const auto& [name, suite] : suites())
        if (name == command) return suite;
    throw Error(fmt::format("unknown command '{}'", command));
}

Json reportDocument(const std::string& command, const RunConfig& cfg, const SuiteResult& r) {
    const std::size_t failures = r.checks.failures();
    return {{"schema", kReportSchema},
            {"command", command},
            {"config", cfg.toJson()},
            {"results", r.results},
            {"checks", r.checks.toJson()},
            {"summary",
             {{"checks", r.checks.entries.size()}, {"failures", failures}, {"status", failures == 0 ? "pass" : "fail"}}}};
}

namespace {

std::string scalarText(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

std::string renderText(const Json& doc) {
    std::string out;
    const Json& cfg = doc["config"];
    out += fmt::format("{} {} type={} order={} seed={}\n", scalarText(doc["schema"]), scalarText(doc["command"]),
                       scalarText(cfg["type"]), scalarText(cfg["order"]), scalarText(cfg["seed"]));
    for (const auto& row : doc["results"]) {
        std::string line;
        for (const auto& [key, value] : row.items()) line += (line.empty() ? "" : "  ") + key + "=" + scalarText(value);
        out += line + "\n";
    }
    for (const auto& e : doc["checks"])
        if (e["status"] == "fail")
            out += fmt::format("FAIL {} [{} w={}] {}: {}\n", scalarText(e["relation"]), scalarText(e["type"]),
                               scalarText(e["w"]), scalarText(e["generator"]), scalarText(e["firstMismatch"]));
    const Json& s = doc["summary"];
    out += fmt::format("checks={} failures={} status={}\n", scalarText(s["checks"]), scalarText(s["failures"]),
                       scalarText(s["status"]));
    return out;
}

}  // namespace qweyl
