#include "catch_amalgamated.hpp"

#include "qweyl/error.hpp"
#include "qweyl/series.hpp"

#include <random>

using namespace qweyl;

namespace {

struct Fixture {
    CartanPtr cartan;
    WeylElt e;

    explicit Fixture(const char* type) : cartan(makeCartan(type)), e(WeylElt::identity(cartan->rank())) {}

    PSeries mono(const Mono& m, int order, Integer c = 1) const { return PSeries::monomial(cartan, e, m, c, order); }
    PSeries poly(const Poly& p, const Mono& anchor, int order) const {
        return PSeries::fromPoly(cartan, e, anchor, p, order);
    }
    Mono a(int i, int k) const { return aMono(*cartan, i, k); }
};

// Reference truncated product: multiply as polynomials, keep heights <= n.
Poly truncatedProduct(const PSeries& x, const PSeries& y, int n) {
    Poly full = x.toPoly() * y.toPoly();
    PSeries probe = PSeries::monomial(x.cartan(), x.w(), x.anchor() * y.anchor(), 1, n);
    Poly out;
    for (const auto& [m, c] : full.terms())
        if (probe.offsetOf(m)->height <= n) out.addTerm(m, c);
    return out;
}

PSeries randomUnit(const Fixture& f, std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> node(0, f.cartan->rank() - 1), k(-3, 3), c(-2, 2), len(0, 3);
    Poly p = Poly::constant(1);
    for (int t = len(rng); t > 0; --t) {
        Mono m;
        for (int s = 1 + len(rng) % 2; s > 0; --s) m = m * f.a(node(rng), k(rng)).inverse();
        p.addTerm(m, c(rng));
    }
    return f.poly(p, Mono{}, order);
}

}  // namespace

TEST_CASE("embedding splits by w-maximal monomials", "[series]")
{
    Fixture sl2("A1");
    auto s = embed(Poly::y(0, 0) + Poly::y(0, 2, -1), sl2.cartan, sl2.e, 4);
    REQUIRE(s.isPointed());
    CHECK(s.single().anchor() == Mono::y(0, 0));
    CHECK(s.single().terms()[1].offset.height == 1);

    auto s1 = simpleReflection(*sl2.cartan, 0);
    auto t = embed(Poly::y(0, 0) + Poly::y(0, 2, -1), sl2.cartan, s1, 4);
    REQUIRE(t.isPointed());
    CHECK(t.single().anchor() == Mono::y(0, 2, -1));

    CHECK(embed(Poly::constant(1), sl2.cartan, sl2.e, 3).single().size() == 1);

    Fixture a2("A2");
    auto u = embed(Poly::y(0, 0) + Poly::y(1, 0), a2.cartan, a2.e, 3);
    CHECK(u.parts().size() == 2);
    // Same weight, different monomials: incomparable.
    CHECK(embed(Poly::y(0, 0) + Poly::y(0, 2), a2.cartan, a2.e, 3).parts().size() == 2);
}

TEST_CASE("embedding respects the diagonal", "[series]")
{
    Fixture b2("B2");
    Poly p = Poly::y(0, 0) + Poly(b2.a(0, 1).inverse() * Mono::y(0, 0), 3) + Poly::y(1, 4, -1) +
             Poly(Mono::y(1, 4, -1) * b2.a(1, 5).inverse(), -2);
    for (const auto& w : enumerate(*b2.cartan)) {
        auto s = embed(p, b2.cartan, w, 10);
        CHECK(s.toPoly() == p);
    }
}

TEST_CASE("products and truncation", "[series]")
{
    Fixture sl2("A1");
    Mono ainv = sl2.a(0, 0).inverse();
    auto x = sl2.poly(Poly::constant(1) + Poly(ainv), Mono{}, 2);
    auto y = sl2.poly(Poly::constant(1) - Poly(ainv), Mono{}, 2);
    CHECK((x * y).toPoly() == Poly::constant(1) - Poly(ainv.pow(2)));
    CHECK((x * y.truncated(1)).order() == 1);
    auto z = sl2.mono(Mono::y(0, 1), 3) * sl2.mono(Mono::y(0, 5), 5);
    CHECK(z.order() == 3);
    CHECK(z.anchorWeight() == Mono::y(0, 1).weight(1) + Mono::y(0, 5).weight(1));
}

TEST_CASE("inversion", "[series]")
{
    Fixture sl2("A1");
    Mono ainv = sl2.a(0, 0).inverse();
    auto x = sl2.poly(Poly::constant(1) + Poly(ainv), Mono{}, 3);
    Poly expected = Poly::constant(1) - Poly(ainv) + Poly(ainv.pow(2)) - Poly(ainv.pow(3));
    CHECK(x.inverse().toPoly() == expected);

    Mono A = sl2.a(0, 3);
    Mono B = sl2.a(0, 5);
    auto g = sl2.poly(-(Poly(A) + Poly(A / B)), A, 4);
    auto gi = g.inverse();
    CHECK(gi.anchor() == A.inverse());
    CHECK(gi.anchorCoeff() == -1);
    CHECK(gi.coeff(A.inverse() / B) == 1);
    CHECK(gi.coeff(A.inverse() * B.pow(-2)) == -1);
    CHECK_THROWS_AS(sl2.mono(A, 3, 2).inverse(), SeriesError);
}

TEST_CASE("ring laws against polynomial reference", "[series]")
{
    for (const char* type : {"A1", "A2", "B2", "G2"}) {
        Fixture f(type);
        std::mt19937 rng(3);
        for (int trial = 0; trial < 25; ++trial) {
            const int n = 4;
            auto x = randomUnit(f, rng, n), y = randomUnit(f, rng, n), z = randomUnit(f, rng, n);
            CHECK((x * y).toPoly() == truncatedProduct(x, y, n));
            CHECK(((x * y) * z).toPoly() == (x * (y * z)).toPoly());
            CHECK((x * y).toPoly() == (y * x).toPoly());
            CHECK((x * x.inverse()).toPoly() == Poly::constant(1));
            CHECK(x.inverse().inverse().toPoly() == x.toPoly());
            CHECK(compareSeries(x * (SeriesSum(y) + SeriesSum(z)).single(),
                                SeriesSum(x * y) + SeriesSum(x * z))
                      .equal);
            CHECK(tauSeries(tauSeries(x, 3), -3).toPoly() == x.toPoly());
            CHECK(tauSeries(x * y, 2).toPoly() == (tauSeries(x, 2) * tauSeries(y, 2)).toPoly());
            // Truncation soundness: order n and n + 2 agree up to n.
            auto big = randomUnit(f, rng, n + 2);
            CHECK((big.inverse() * big).truncated(n).toPoly() == (big.truncated(n).inverse() * big.truncated(n)).toPoly());
        }
    }
}

TEST_CASE("addition re-points and splits", "[series]")
{
    Fixture sl2("A1");
    Mono A = sl2.a(0, 0);
    // 1 + A^{-1} (order 3) plus A^{-1} (order 3): re-pointed at 1, order min(3, 3+1).
    auto s = addSeries(sl2.poly(Poly::constant(1) + Poly(A.inverse()), Mono{}, 3), sl2.mono(A.inverse(), 3));
    REQUIRE(s.isPointed());
    CHECK(s.single().order() == 3);
    CHECK(s.single().coeff(A.inverse()) == 2);

    // Anchor cancellation leaves a series pointed at the next term.
    auto t = addSeries(sl2.poly(Poly::constant(1) + Poly(A.inverse()), Mono{}, 3), sl2.mono(Mono{}, 3, -1));
    REQUIRE(t.isPointed());
    CHECK(t.single().anchor() == A.inverse());
    CHECK(t.single().order() == 2);

    auto zero = SeriesSum(sl2.mono(A, 2)) - SeriesSum(sl2.mono(A, 2));
    CHECK(zero.isZero());
    auto cmp = compareSeries(SeriesSum(sl2.mono(A, 2)), SeriesSum(sl2.mono(A, 2, 2)));
    CHECK_FALSE(cmp.equal);
    CHECK(cmp.firstMismatch == "-1*Y[1,-1]*Y[1,1]");
}

TEST_CASE("offsets must be in the root lattice", "[series]")
{
    Fixture a2("A2");
    CHECK_THROWS_AS(a2.poly(Poly::y(0, 0) + Poly::y(1, 0), Mono::y(0, 0), 3), SeriesError);
    CHECK_THROWS_AS(a2.poly(Poly::constant(1) + Poly(a2.a(0, 0)), Mono{}, 3), SeriesError);
}

TEST_CASE("JSON dump", "[series]")
{
    Fixture sl2("A1");
    auto x = sl2.poly(Poly::constant(1) + Poly(sl2.a(0, 0).inverse()), Mono{}, 2);
    auto j = x.toJson();
    CHECK(j["w"] == "e");
    CHECK(j["order"] == 2);
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][1]["height"] == 1);
    CHECK(j["terms"][1]["mono"]["1,-1"] == -1);
}
