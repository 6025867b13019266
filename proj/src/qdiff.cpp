#include "qweyl/qdiff.hpp"

#include "qweyl/error.hpp"
#include "qweyl/qchar.hpp"

#include <fmt/format.h>

#include <array>
#include <functional>
#include <map>

namespace qweyl {

namespace {

void requireUnit(const PSeries& x, const char* what) {
    if (!x.isUnit())
        throw SolverError(fmt::format("{} must have anchor coefficient +-1, got {}", what, toString(x.anchorCoeff())));
}

// U = 1 + G tau_{-r} U by repeated substitution.
PSeries forwardFixedPoint(const PSeries& g, int r) {
    const int n = g.order();
    const PSeries one = PSeries::one(g.cartan(), g.w(), n);
    PSeries u = one;
    for (int round = 0; round <= n + 1; ++round) {
        PSeries next = addSeries(one, g * u.shifted(-r)).single();
        if (round > 0 && next.toPoly() == u.toPoly()) return next;
        u = std::move(next);
    }
    throw SolverError("fixed-point iteration did not converge");
}

// U = 1 + G tau_{-r} U one offset height at a time.
PSeries forwardGraded(const PSeries& g, int r) {
    const int n = g.order();
    auto gap = anchorGap(*g.cartan(), g.w(), Mono{}, g.anchor());
    if (!gap || gap->height < 1)
        throw SolverError(fmt::format("graded recursion stalls: G anchor {} is not below 1 in component {}",
                                      toString(g.anchor()), g.w().wordString()));
    std::vector<std::vector<Term>> levels(n + 1);
    levels[0].push_back({Mono{}, 1, Offset{}});
    for (int h = 1; h <= n; ++h) {
        std::map<Mono, Term> acc;
        for (const auto& gt : g.terms()) {
            Offset base = *gap + gt.offset;
            int rest = h - base.height;
            if (rest < 0) continue;
            for (const auto& ut : levels[rest]) {
                Mono m = gt.mono * ut.mono.shifted(-r);
                auto [it, fresh] = acc.try_emplace(m, Term{m, 0, base + ut.offset});
                it->second.coeff += gt.coeff * ut.coeff;
            }
        }
        for (auto& [m, t] : acc)
            if (t.coeff != 0) levels[h].push_back(std::move(t));
    }
    std::vector<Term> all;
    for (auto& level : levels)
        for (auto& t : level) all.push_back(std::move(t));
    return PSeries::fromOffsetTerms(g.cartan(), g.w(), Mono{}, std::move(all), n);
}

PSeries forward(const PSeries& g, int r, SolveMethod method) {
    return method == SolveMethod::Graded ? forwardGraded(g, r) : forwardFixedPoint(g, r);
}

}  // namespace

PSeries solve(const QDiffEq& eq, SolveMethod method) {
    if (eq.r == 0) throw SolverError("the shift r must be nonzero");
    requireUnit(eq.F, "F");
    requireUnit(eq.H, "H");
    requireUnit(eq.G, "G");
    const int n = eq.order();
    const auto& cartan = *eq.F.cartan();
    if (!(eq.H.w() == eq.w()) || !(eq.G.w() == eq.w()))
        throw SolverError("F, H and G must lie in the same component");

    // F U = H + G tau U  becomes  U' = 1 + G'' tau U'  with U = (H/F) U'.
    PSeries fInv = eq.F.truncated(n).inverse();
    PSeries hp = eq.H.truncated(n) * fInv;
    PSeries gp = eq.G.truncated(n) * fInv;
    PSeries gpp = gp * hp.shifted(-eq.r) * hp.inverse();

    auto beta = cartan.weightToRoot(gpp.anchorWeight());
    if (!beta || !(cartan.isRoot(*beta) || cartan.isRoot(-*beta)))
        throw SolverError(fmt::format("weight {} of G is not a root", toString(gpp.anchorWeight())));
    if (eq.weightOfG && !(*eq.weightOfG == *beta))
        throw SolverError(fmt::format("weight of G is {}, expected {}", toString(*beta), toString(*eq.weightOfG)));

    PSeries up;
    if (eq.w().apply(*beta).isNonPositive()) {
        up = forward(gpp, eq.r, method);
    } else {
        // U' = -tau_r(G'')^{-1} V with V = 1 + tau_{2r}(G'')^{-1} tau_r V.
        PSeries v = forward(gpp.shifted(2 * eq.r).inverse(), -eq.r, method);
        up = -(gpp.shifted(eq.r).inverse() * v);
    }
    return hp * up;
}

PSeries solve(const QDiffEq& eq, const WeylElt& w, int N) {
    if (!(eq.w() == w)) throw SolverError("equation lives in another component");
    QDiffEq t = eq;
    t.F = t.F.truncated(N);
    t.H = t.H.truncated(N);
    t.G = t.G.truncated(N);
    return solve(t);
}

QDiffEq sigmaEquation(const CartanPtr& cartan, int i, const WeylElt& w, int N) {
    cartan->checkNode(i);
    const int n = cartan->rank();
    QDiffEq eq{PSeries::one(cartan, w, N), PSeries::one(cartan, w, N),
               PSeries::monomial(cartan, w, aMono(*cartan, i, 0).inverse(), 1, N),
               static_cast<int>(2 * cartan->d(i)), -RootVector::simple(n, i)};
    return eq;
}

PSeries sigma(const CartanPtr& cartan, int i, int k, const WeylElt& w, int N) {
    return solve(sigmaEquation(cartan, i, w, N)).shifted(k);
}

namespace {

struct PairContext {
    const CartanPtr& cartan;
    const WeylElt& w;
    int N;
    std::map<std::pair<int, int>, PSeries> sigmas;

    PSeries sig(int node, int k) {
        auto key = std::make_pair(node, 0);
        auto it = sigmas.find(key);
        if (it == sigmas.end()) it = sigmas.emplace(key, sigma(cartan, node, 0, w, N)).first;
        return it->second.shifted(k);
    }
    Mono aInv(int node, int k) const { return aMono(*cartan, node, k).inverse(); }
    PSeries mono(const Mono& m) const { return PSeries::monomial(cartan, w, m, 1, N); }
};

// Sigma^{(j)}_{i,0} and A_{ij,0}.
PSeries sigmaUpper(PairContext& ctx, int i, int j) {
    const auto& c = *ctx.cartan;
    const int di = static_cast<int>(c.d(i));
    switch (c.C(j, i)) {
        case -1: return ctx.sig(i, di * (-2 - static_cast<int>(c.C(i, j))));
        case -2: return ctx.sig(i, -2) * ctx.sig(i, -4);
        case -3: return ctx.sig(i, -3) * ctx.sig(i, -5) * ctx.sig(i, -7);
        default: throw CartanError(fmt::format("nodes {} and {} are not adjacent", i + 1, j + 1));
    }
}

Mono aPair(const CartanData& c, int i, int j) {
    const int di = static_cast<int>(c.d(i));
    switch (c.C(i, j)) {
        case -1: return aMono(c, i, -di);
        case -2: return aMono(c, i, -2) * aMono(c, i, 0);
        case -3: return aMono(c, i, 1) * aMono(c, i, -1) * aMono(c, i, -3);
        default: throw CartanError(fmt::format("nodes {} and {} are not adjacent", i + 1, j + 1));
    }
}

QDiffEq pairEquation(PairContext& ctx, int i, int j) {
    const auto& c = *ctx.cartan;
    Mono g = ctx.aInv(j, 0) * aPair(c, i, j).inverse();
    PSeries one = PSeries::one(ctx.cartan, ctx.w, ctx.N);
    return {one, sigmaUpper(ctx, i, j), ctx.mono(g), static_cast<int>(2 * c.d(j)), std::nullopt};
}

bool isDoubleBond(const CartanData& c, int i, int j) { return c.C(i, j) == -1 && c.C(j, i) == -2; }

}  // namespace

QDiffEq iteratedEquation(std::string_view name, const CartanPtr& cartan, int i, int j, const WeylElt& w, int N) {
    cartan->checkNode(i);
    cartan->checkNode(j);
    if (i == j) throw CartanError("iterated sigmas need two distinct nodes");
    PairContext ctx{cartan, w, N, {}};
    if (name == "ij") return pairEquation(ctx, i, j);
    if (name == "ji") return pairEquation(ctx, j, i);
    if (name == "iji" || name == "jij") {
        if (!isDoubleBond(*cartan, i, j))
            throw CartanError(fmt::format("Sigma_{} needs C(i,j) = -1 and C(j,i) = -2 (type B2 with i long)", name));
        auto solved = [&](std::string_view sub, int k) { return iteratedSigma(sub, cartan, i, j, k, w, N); };
        if (name == "iji") {
            Mono g = ctx.aInv(i, -2) * ctx.aInv(j, -2) * ctx.aInv(j, 0);
            return {ctx.sig(i, -4), solved("ij", 0), ctx.mono(g) * ctx.sig(i, 0), 4, std::nullopt};
        }
        Mono g = ctx.aInv(i, -2) * ctx.aInv(j, -4);
        return {ctx.sig(j, -2), solved("ji", -2) * solved("ji", -4), ctx.mono(g) * ctx.sig(j, 0), 2, std::nullopt};
    }
    if (name == "ijiji" || name == "jijij" || name == "jiji" || name == "ijij")
        throw Error(fmt::format("Sigma_{} is defined through Theta; use the transported equations", name));
    throw Error(fmt::format("unknown iterated sigma '{}'", name));
}

PSeries iteratedSigma(std::string_view name, const CartanPtr& cartan, int i, int j, int k, const WeylElt& w, int N,
                      SolveMethod method) {
    return solve(iteratedEquation(name, cartan, i, j, w, N), method).shifted(k);
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

bool isWord(const CartanData& c, const WeylElt& w, std::initializer_list<WeylElt> allowed) {
    for (const auto& a : allowed)
        if (a == w) return true;
    (void)c;
    return false;
}

int pairType(const CartanData& c, int i, int j) {
    if (c.C(i, j) >= 0 || c.C(j, i) >= 0) return 0;
    long p = c.C(i, j) * c.C(j, i);
    if (p == 1) return 1;
    if (c.C(i, j) != -1) return 0;
    return static_cast<int>(p);
}

// Collects signed products of V monomials, prunes on a lower bound for the
// offset height and embeds the result.
struct Summation {
    const CartanPtr& cartan;
    const WeylElt& w;
    int k;
    int bound;
    std::array<int, 2> weightOf{};  // pruning weight of one unit of V at each of the two nodes
    int i, j;
    Poly sum;

    int cost(int node, int n) const { return n * (node == i ? weightOf[0] : weightOf[1]); }
    void emit(std::initializer_list<std::array<int, 3>> vs, int sign = 1) {
        Mono m;
        for (const auto& [node, shift, n] : vs) m = m * vMono(*cartan, node, k + shift, n);
        sum.addTerm(m, sign);
    }
};

using Body = std::function<void(Summation&)>;

PSeries summed(const CartanPtr& cartan, int i, int j, int k, const WeylElt& w, int N, const Body& body) {
    const int n = cartan->rank();
    auto run = [&](int slack) {
        Summation s{cartan, w, k, N + slack, {}, i, j, {}};
        s.weightOf[0] = isPositive(w, RootVector::simple(n, i)) ? 1 : 0;
        s.weightOf[1] = isPositive(w, RootVector::simple(n, j)) ? 1 : 0;
        body(s);
        return embed(s.sum, cartan, w, N);
    };
    SeriesSum a = run(2), b = run(6);
    if (!a.isPointed() || !b.isPointed() || !(a.toPoly() == b.toPoly()))
        throw SeriesError("closed-form summation did not stabilize at the requested order");
    return a.single();
}

// Sum over 0 <= beta <= alpha etc. of V_{j,k-1}^{(alpha)} V_{i,k}^{(beta)} (simply laced pair).
void exp1Body(Summation& s) {
    const int n = s.cartan->rank();
    RootVector aj = RootVector::simple(n, s.j), aij = RootVector::simple(n, s.i) + aj;
    const bool pj = isPositive(s.w, aj), pij = isPositive(s.w, aij);
    const int b = 2 * s.bound;
    for (int alpha = -b; alpha <= b; ++alpha)
        for (int beta = -b; beta <= b; ++beta) {
            bool in = false;
            if (pj && pij) in = 0 <= beta && beta <= alpha;
            if (!pj && pij) in = 0 <= beta && alpha < beta;
            if (pj && !pij) in = beta < 0 && beta <= alpha;
            if (!pj && !pij) in = alpha < beta && beta < 0;
            if (in) s.emit({{s.j, -1, alpha}, {s.i, 0, beta}}, pj == pij ? 1 : -1);
        }
}

// B2, i long.  Loops run over nonnegative indices with monotone pruning.
void exp2Body(Summation& s) {  // ij
    for (int a = 0; s.cost(s.i, a) <= s.bound && a <= 4 * s.bound; ++a)
        for (int a2 = 0; s.cost(s.i, a + a2) <= s.bound && a2 <= 4 * s.bound; ++a2)
            for (int b = 0; b <= std::min(2 * a, 2 * a2 + 1) && s.cost(s.i, a + a2) + s.cost(s.j, b) <= s.bound; ++b)
                s.emit({{s.i, -2, a}, {s.i, -4, a2}, {s.j, 0, b}});
}

void exp3Body(Summation& s) {  // ji
    for (int a = 0; s.cost(s.j, a) <= s.bound && a <= 4 * s.bound; ++a)
        for (int b = 0; 2 * b <= a && s.cost(s.j, a) + s.cost(s.i, b) <= s.bound; ++b)
            s.emit({{s.j, 0, a}, {s.i, 0, b}});
}

void exp5Body(Summation& s) {  // iji
    for (int a = 0; s.cost(s.i, a) <= s.bound && a <= 4 * s.bound; ++a)
        for (int b = 0; b <= 2 * a && s.cost(s.i, a) + s.cost(s.j, b) <= s.bound; ++b)
            for (int c = 0; 2 * c <= b && s.cost(s.i, a + c) + s.cost(s.j, b) <= s.bound; ++c)
                s.emit({{s.i, -2, a}, {s.j, 0, b}, {s.i, 0, c}});
}

void exp4Body(Summation& s, bool literal) {  // jij
    for (int a = 0; s.cost(s.j, a) <= s.bound && a <= 4 * s.bound; ++a)
        for (int b = 0; 2 * b <= a; ++b)
            for (int b2 = 0; 2 * b2 <= a + 1; ++b2) {
                int top = literal ? std::min(1 + 2 * b, 2 * b2 - 1) : std::min(1 + 2 * b, 2 * b2);
                for (int c = 0; c <= top; ++c) {
                    if (s.cost(s.j, a + c) + s.cost(s.i, b + b2) > s.bound) break;
                    s.emit({{s.j, -4, a}, {s.i, -4, b}, {s.i, -2, b2}, {s.j, 0, c}});
                }
            }
}

// G2, i long: Sigma_{ijiji}.  The printed bound on gamma' is 3 gamma' <= beta + 2.
void g2Body(Summation& s, bool literal) {
    const int gamma2Slack = literal ? 2 : 0;
    for (int a = 0; s.cost(s.i, a) <= s.bound && a <= 4 * s.bound; ++a)
        for (int b = 0; b <= 3 * a; ++b) {
            const int c0 = s.cost(s.i, a) + s.cost(s.j, b);
            if (c0 > s.bound) break;
            for (int g = 0; 3 * g <= b + 1; ++g)
                for (int g2 = 0; 3 * g2 <= b + gamma2Slack; ++g2) {
                    const int c1 = c0 + s.cost(s.i, g + g2);
                    if (c1 > s.bound) break;
                    for (int d = 0; d <= std::min(3 * g, 3 * g2 + 1) && c1 + s.cost(s.j, d) <= s.bound; ++d)
                        for (int e = 0; 3 * e <= d && c1 + s.cost(s.j, d) + s.cost(s.i, e) <= s.bound; ++e)
                            s.emit({{s.i, -6, a}, {s.j, -3, b}, {s.i, -2, g}, {s.i, -4, g2}, {s.j, 1, d}, {s.i, 0, e}});
                }
        }
}

}  // namespace

OracleCase closedFormCase(std::string_view name, const CartanData& cartan, int i, int j, const WeylElt& w) {
    cartan.checkNode(i);
    cartan.checkNode(j);
    const int type = i == j ? 0 : pairType(cartan, i, j);
    const WeylElt e = WeylElt::identity(cartan.rank());
    const WeylElt si = simpleReflection(cartan, i), sj = simpleReflection(cartan, j);
    auto only = [&](std::initializer_list<WeylElt> ws, const char* label) -> OracleCase {
        if (isWord(cartan, w, ws)) return {true, ""};
        return {false, fmt::format("the expansion of Sigma_{} is only displayed for w in {}", name, label)};
    };
    if (type == 1 && (name == "ji" || name == "ij")) return {true, ""};
    if (type == 2) {
        if (name == "ij" || name == "iji") return only({e, sj}, "{e, s_j}");
        if (name == "ji" || name == "jij") return only({e, si}, "{e, s_i}");
    }
    if (type == 3) {
        if (name == "ijiji") return only({e, sj}, "{e, s_j}");
        if (name == "jijij") return {false, "the summation domain for Sigma_jijij is not stated; verified through its equation only"};
    }
    return {false, fmt::format("no displayed expansion of Sigma_{} for this pair of nodes", name)};
}

PSeries closedFormOracle(std::string_view name, const CartanPtr& cartan, int i, int j, int k, const WeylElt& w, int N,
                         bool literalDomain) {
    OracleCase oc = closedFormCase(name, *cartan, i, j, w);
    if (!oc.available) throw Error(oc.reason);
    const int type = pairType(*cartan, i, j);
    if (type == 1) {
        // Sigma_ij is Sigma_ji with the roles of the nodes exchanged.
        if (name == "ij") return summed(cartan, j, i, k, w, N, exp1Body);
        return summed(cartan, i, j, k, w, N, exp1Body);
    }
    if (name == "ij") return summed(cartan, i, j, k, w, N, exp2Body);
    if (name == "ji") return summed(cartan, i, j, k, w, N, exp3Body);
    if (name == "iji") return summed(cartan, i, j, k, w, N, exp5Body);
    if (name == "jij")
        return summed(cartan, i, j, k, w, N, [literalDomain](Summation& s) { exp4Body(s, literalDomain); });
    return summed(cartan, i, j, k, w, N, [literalDomain](Summation& s) { g2Body(s, literalDomain); });
}

PSeries sigmaSplit(const CartanPtr& cartan, int i, int k, const WeylElt& w, int N) {
    const bool plus = isPositive(w, RootVector::simple(cartan->rank(), i));
    Poly p;
    for (int a = 0; a <= N + 2; ++a) {
        if (plus) p.addTerm(vMono(*cartan, i, k, a), 1);
        else p.addTerm(vMono(*cartan, i, k, -a - 1), -1);
    }
    return embed(p, cartan, w, N).single();
}

}  // namespace qweyl
