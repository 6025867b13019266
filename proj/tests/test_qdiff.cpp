#include "catch_amalgamated.hpp"

#include "qweyl/error.hpp"
#include "qweyl/qchar.hpp"
#include "qweyl/qdiff.hpp"

using namespace qweyl;

namespace {

// F U - H - G tau_{-r} U vanishes up to the order.
bool satisfies(const QDiffEq& eq, const PSeries& u) {
    SeriesSum lhs(eq.F * u);
    SeriesSum rhs = SeriesSum(eq.H) + SeriesSum(eq.G * u.shifted(-eq.r));
    return compareSeries(lhs, rhs).equal;
}

// Sigma^+ written out: 1 + A_k^{-1} + A_k^{-1} A_{k-2d}^{-1} + ...
Poly sigmaPlusReference(const CartanData& c, int i, int k, int terms) {
    const int d = static_cast<int>(c.d(i));
    Poly p;
    Mono m;
    for (int t = 0; t < terms; ++t) {
        p.addTerm(m, 1);
        m = m * aMono(c, i, k - 2 * d * t).inverse();
    }
    return p;
}

// Sigma^- written out: -A_{k+2d} - A_{k+2d} A_{k+4d} - ...
Poly sigmaMinusReference(const CartanData& c, int i, int k, int terms) {
    const int d = static_cast<int>(c.d(i));
    Poly p;
    Mono m;
    for (int t = 1; t <= terms; ++t) {
        m = m * aMono(c, i, k + 2 * d * t);
        p.addTerm(m, -1);
    }
    return p;
}

}  // namespace

TEST_CASE("sigma expansions", "[qdiff]")
{
    auto a1 = makeCartan("A1");
    auto e = WeylElt::identity(1);
    auto s1 = simpleReflection(*a1, 0);
    auto plus = sigma(a1, 0, 0, e, 5);
    CHECK(plus.toPoly() == sigmaPlusReference(*a1, 0, 0, 6));
    auto minus = sigma(a1, 0, 0, s1, 5);
    CHECK(minus.toPoly() == sigmaMinusReference(*a1, 0, 0, 6));
    CHECK(minus.anchorCoeff() == -1);
    CHECK(minus.anchor() == aMono(*a1, 0, 2));

    auto g2 = makeCartan("G2");
    CHECK(sigma(g2, 0, 3, WeylElt::identity(2), 4).toPoly() == sigmaPlusReference(*g2, 0, 3, 5));
}

TEST_CASE("sigma agrees with the split sums in every component", "[qdiff]")
{
    for (const char* type : {"A1", "A2", "B2", "G2", "A3"}) {
        auto c = makeCartan(type);
        for (const auto& w : enumerate(*c))
            for (int i = 0; i < c->rank(); ++i) {
                auto s = sigma(c, i, 1, w, 6);
                CHECK(compareSeries(SeriesSum(s), SeriesSum(sigmaSplit(c, i, 1, w, 6))).equal);
                CHECK(s.anchorWeight() == (isPositive(w, RootVector::simple(c->rank(), i))
                                               ? Weight::zero(c->rank())
                                               : c->alphaWeight(i)));
            }
    }
}

TEST_CASE("fixed point and graded recursion agree", "[qdiff]")
{
    for (const char* type : {"A2", "B2", "G2"}) {
        auto c = makeCartan(type);
        for (const auto& w : enumerate(*c)) {
            for (int i = 0; i < 2; ++i) {
                auto eq = sigmaEquation(c, i, w, 6);
                auto x = solve(eq, SolveMethod::FixedPoint), y = solve(eq, SolveMethod::Graded);
                CHECK(x.toPoly() == y.toPoly());
                CHECK(satisfies(eq, x));
            }
            std::vector<std::string> names{"ij", "ji"};
            if (std::string(type) == "B2") names.insert(names.end(), {"iji", "jij"});
            for (const auto& name : names) {
                auto eq = iteratedEquation(name, c, 0, 1, w, 5);
                auto x = solve(eq, SolveMethod::FixedPoint), y = solve(eq, SolveMethod::Graded);
                CHECK(x.toPoly() == y.toPoly());
                CHECK(x.isUnit());
                CHECK(satisfies(eq, x));
            }
        }
    }
}

TEST_CASE("shift equivariance", "[qdiff]")
{
    auto b2 = makeCartan("B2");
    for (const auto& w : enumerate(*b2)) {
        auto base = iteratedSigma("ij", b2, 0, 1, 0, w, 5);
        auto moved = iteratedSigma("ij", b2, 0, 1, 3, w, 5);
        CHECK(base.shifted(3).toPoly() == moved.toPoly());
        auto eq = sigmaEquation(b2, 1, w, 5);
        CHECK(sigma(b2, 1, -2, w, 5).toPoly() == solve(eq).shifted(-2).toPoly());
    }
}

TEST_CASE("three-term relation in type A2", "[qdiff]")
{
    auto a2 = makeCartan("A2");
    const int n = 6;
    for (const auto& w : enumerate(*a2)) {
        // Sigma_{i,0} Sigma_{j,1} = Sigma_{ij,1} + A_{j,1}^{-1} Sigma_{ji,0}.
        SeriesSum lhs(sigma(a2, 0, 0, w, n) * sigma(a2, 1, 1, w, n));
        auto aj = PSeries::monomial(a2, w, aMono(*a2, 1, 1).inverse(), 1, n);
        SeriesSum rhs = SeriesSum(iteratedSigma("ij", a2, 0, 1, 1, w, n)) +
                        SeriesSum(aj * iteratedSigma("ji", a2, 0, 1, 0, w, n));
        auto cmp = compareSeries(lhs, rhs);
        CHECK(cmp.equal);
        INFO(w.wordString() << " " << cmp.firstMismatch);
    }
}

TEST_CASE("closed forms match the solver", "[qdiff]")
{
    auto a2 = makeCartan("A2");
    for (const auto& w : enumerate(*a2))
        for (const char* name : {"ij", "ji"}) {
            auto cmp = compareSeries(SeriesSum(iteratedSigma(name, a2, 0, 1, 0, w, 6)),
                                     SeriesSum(closedFormOracle(name, a2, 0, 1, 0, w, 6)));
            INFO(name << " " << w.wordString() << " " << cmp.firstMismatch);
            CHECK(cmp.equal);
        }

    auto b2 = makeCartan("B2");
    int matched = 0;
    for (const auto& w : enumerate(*b2))
        for (const char* name : {"ij", "ji", "iji", "jij"}) {
            if (!closedFormCase(name, *b2, 0, 1, w).available) continue;
            auto cmp = compareSeries(SeriesSum(iteratedSigma(name, b2, 0, 1, 2, w, 7)),
                                     SeriesSum(closedFormOracle(name, b2, 0, 1, 2, w, 7)));
            INFO(name << " " << w.wordString() << " " << cmp.firstMismatch);
            CHECK(cmp.equal);
            ++matched;
        }
    CHECK(matched == 8);
}

TEST_CASE("printed domain for Sigma_jij misses the constant term", "[qdiff]")
{
    auto b2 = makeCartan("B2");
    auto e = WeylElt::identity(2);
    auto literal = closedFormOracle("jij", b2, 0, 1, 0, e, 6, true);
    CHECK_FALSE(literal.anchor().isOne());
    CHECK_FALSE(compareSeries(SeriesSum(iteratedSigma("jij", b2, 0, 1, 0, e, 6)), SeriesSum(literal)).equal);
}

TEST_CASE("closed form availability", "[qdiff]")
{
    auto b2 = makeCartan("B2");
    auto g2 = makeCartan("G2");
    auto s1 = simpleReflection(*b2, 0);
    CHECK_FALSE(closedFormCase("ij", *b2, 0, 1, s1).available);
    CHECK(closedFormCase("ji", *b2, 0, 1, s1).available);
    auto none = closedFormCase("jijij", *g2, 0, 1, WeylElt::identity(2));
    CHECK_FALSE(none.available);
    CHECK_THROWS_AS(closedFormOracle("jijij", g2, 0, 1, 0, WeylElt::identity(2), 4), Error);
    CHECK_THROWS_AS(closedFormOracle("ij", b2, 0, 1, 0, s1, 4), Error);
}

TEST_CASE("solver errors", "[qdiff]")
{
    auto a2 = makeCartan("A2");
    auto e = WeylElt::identity(2);
    auto one = PSeries::one(a2, e, 4);
    // G of weight alpha_1 + 2 alpha_2 is not a root of A2.
    Mono g = (aMono(*a2, 0, 0) * aMono(*a2, 1, 0).pow(2)).inverse();
    QDiffEq bad{one, one, PSeries::monomial(a2, e, g, 1, 4), 2, std::nullopt};
    CHECK_THROWS_AS(solve(bad), SolverError);
    QDiffEq zero{one, one, PSeries::monomial(a2, e, aMono(*a2, 0, 0).inverse(), 1, 4), 0, std::nullopt};
    CHECK_THROWS_AS(solve(zero), SolverError);
    QDiffEq scaled{one, one, PSeries::monomial(a2, e, aMono(*a2, 0, 0).inverse(), 2, 4), 2, std::nullopt};
    CHECK_THROWS_AS(solve(scaled), SolverError);
    QDiffEq wrong{one, one, PSeries::monomial(a2, e, aMono(*a2, 0, 0).inverse(), 1, 4), 2,
                  RootVector::simple(2, 1)};
    CHECK_THROWS_AS(solve(wrong), SolverError);
    CHECK_THROWS_AS(iteratedSigma("iji", a2, 0, 1, 0, e, 3), CartanError);
    CHECK_THROWS_AS(iteratedSigma("ijk", a2, 0, 1, 0, e, 3), Error);
    CHECK_THROWS_AS(iteratedSigma("ij", makeCartan("A1xA1"), 0, 1, 0, e, 3), CartanError);
}
