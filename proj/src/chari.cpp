#include "qweyl/chari.hpp"

#include "qweyl/error.hpp"

#include <fmt/format.h>

namespace qweyl {

Mono chariT(const CartanData& cartan, int i, const Mono& m) {
    cartan.checkNode(i);
    const int d = static_cast<int>(cartan.d(i));
    Mono out = m;
    for (const auto& f : m.factors())
        if (f.node == i) out = out * aMono(cartan, i, f.k - d).pow(-f.exp);
    return out;
}

Poly chariT(const CartanData& cartan, int i, const Poly& p) {
    Poly out;
    for (const auto& [m, c] : p.terms()) out.addTerm(chariT(cartan, i, m), c);
    return out;
}

Mono chariWord(const CartanData& cartan, const std::vector<int>& word, const Mono& m) {
    Mono out = m;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = chariT(cartan, *it, out);
    return out;
}

Mono lambdaTrunc(const PSeries& x) {
    if (!x.w().isIdentity()) throw SeriesError("Lambda is defined on the identity component only");
    if (x.anchorCoeff() != 1)
        throw SeriesError(fmt::format("Lambda needs anchor coefficient 1, got {}", toString(x.anchorCoeff())));
    return x.anchor();
}

CheckEntry checkLambdaTheta(ThetaContext& ctx, int i, const Mono& m) {
    const CartanData& cartan = *ctx.cartan();
    const WeylElt si = simpleReflection(cartan, i);
    PSeries image = ctx.thetaOnSeries(i, PSeries::monomial(ctx.cartan(), si, m, 1, ctx.order()));
    Comparison cmp;
    cmp.order = ctx.order();
    const Mono expected = chariT(cartan, i, m);
    try {
        const Mono got = lambdaTrunc(image);
        if (!(got == expected)) {
            cmp.equal = false;
            cmp.firstMismatch = fmt::format("Lambda = {}, T = {}", toString(got), toString(expected));
        }
    } catch (const SeriesError& e) {
        cmp.equal = false;
        cmp.firstMismatch = e.what();
    }
    CheckEntry entry = makeEntry(fmt::format("Lambda Theta_{} = T_{}", i + 1, i + 1), cartan, si, toString(m), cmp);
    return entry;
}

Report verifyBraidT(const CartanPtr& cartan, const std::vector<Mono>& sample, Sampler& sampler) {
    Report r;
    const auto e = WeylElt::identity(cartan->rank());
    auto entry = [&](std::string relation, std::string gen, bool pass, std::string detail) {
        CheckEntry c{std::move(relation), cartan->name(), e.wordString(), std::move(gen), 0, pass, {}};
        if (!pass) c.firstMismatch = std::move(detail);
        r.add(std::move(c));
    };
    for (int i = 0; i < cartan->rank(); ++i)
        for (int j = i + 1; j < cartan->rank(); ++j) {
            const int m = braidExponent(*cartan, i, j);
            std::vector<int> left, right;
            for (int t = 0; t < m; ++t) {
                left.push_back(t % 2 ? j : i);
                right.push_back(t % 2 ? i : j);
            }
            const std::string rel = fmt::format("T braid {}{}", i + 1, j + 1);
            for (const auto& mono : sample) {
                Mono l = chariWord(*cartan, left, mono), rr = chariWord(*cartan, right, mono);
                entry(rel, toString(mono), l == rr, fmt::format("{} vs {}", toString(l), toString(rr)));
            }
        }
    for (int i = 0; i < cartan->rank(); ++i) {
        const Mono y = Mono::y(i, 0);
        const Mono twice = chariWord(*cartan, {i, i}, y);
        entry(fmt::format("T_{}^2 != Id", i + 1), toString(y), !(twice == y), "T_i^2 fixes the generator");
        Poly p;
        do p = sampler.poly(cartan->rank());
        while (p.isZero() || (p.size() == 1 && p.terms().begin()->first.isOne()));
        // Invariants of T_i are constants; a nonconstant sample is moved, unless it avoids node i entirely.
        Poly q = p * Poly(Mono::y(i, 0));
        entry(fmt::format("T_{} moves nonconstants", i + 1), toString(q), !(chariT(*cartan, i, q) == q),
              "T_i fixes a nonconstant polynomial");
    }
    return r;
}

int chariPeriod(const CartanData& cartan, int i, int maxN) {
    const Mono y = Mono::y(i, 0);
    Mono x = y;
    for (int n = 1; n <= maxN; ++n) {
        x = chariT(cartan, i, x);
        if (x == y) return n;
    }
    return 0;
}

}  // namespace qweyl
