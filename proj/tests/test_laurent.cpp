#include "catch_amalgamated.hpp"

#include "qweyl/error.hpp"
#include "qweyl/io.hpp"
#include "qweyl/laurent.hpp"

#include <random>

using namespace qweyl;

namespace {

// A_{i,k} assembled from its weight-lattice description: the exponent of
// Y_{j,*} summed over spectral shifts must equal C(j,i), with the shifts
// symmetric around k.
void checkAShape(const CartanData& c, int i, int k) {
    Mono a = aMono(c, i, k);
    for (int j = 0; j < c.rank(); ++j) CHECK(a.nodeDegree(j) == c.C(j, i));
    long first = 0;
    for (const auto& f : a.factors()) first += static_cast<long>(f.exp) * (f.k - k);
    CHECK(first == 0);
}

Poly randomPoly(std::mt19937& rng, int rank) {
    std::uniform_int_distribution<int> node(0, rank - 1), k(-4, 4), e(-2, 2), coeff(-3, 3), len(1, 4);
    Poly p;
    for (int t = len(rng); t > 0; --t) {
        Mono m;
        for (int f = len(rng); f > 0; --f) m = m * Mono::y(node(rng), k(rng), e(rng));
        p.addTerm(m, coeff(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("monomial group law", "[laurent]")
{
    Mono y = Mono::y(0, 0);
    CHECK((y * y.inverse()).isOne());
    CHECK(y.weight(2) == Weight::fundamental(2, 0));
    CHECK((Mono::y(1, 3) * Mono::y(0, -1, 2)).factors().front() == Factor{0, -1, 2});
    CHECK(y.pow(-3) == y.inverse().pow(3));
    CHECK(Mono::fromFactors({{1, 2, 1}, {0, 0, 1}, {1, 2, -1}}) == Mono::y(0, 0));
}

TEST_CASE("binomial square", "[laurent]")
{
    Poly p = Poly::y(0, 0) + Poly::y(0, 2, -1);
    Poly sq = p.pow(2);
    CHECK(sq.size() == 3);
    CHECK(sq.coeff(Mono::y(0, 0, 2)) == 1);
    CHECK(sq.coeff(Mono::y(0, 0) * Mono::y(0, 2, -1)) == 2);
    CHECK(sq.coeff(Mono::y(0, 2, -2)) == 1);
    CHECK_THROWS(p.pow(-1));
    CHECK((-Poly::y(0, 1)).pow(-1) == -Poly::y(0, 1, -1));
}

TEST_CASE("A monomials", "[laurent]")
{
    auto a1 = CartanData::named("A1");
    CHECK(aMono(a1, 0, 5) == Mono::y(0, 4) * Mono::y(0, 6));

    auto b2 = CartanData::named("B2");
    // Node 2 is short (d = 1): C(1,2) = -1 contributes Y_{1,k}^{-1}.
    CHECK(aMono(b2, 1, 0) == Mono::fromFactors({{1, -1, 1}, {1, 1, 1}, {0, 0, -1}}));
    // Node 1 is long (d = 2): C(2,1) = -2 contributes Y_{2,k-1}^{-1} Y_{2,k+1}^{-1}.
    CHECK(aMono(b2, 0, 0) == Mono::fromFactors({{0, -2, 1}, {0, 2, 1}, {1, -1, -1}, {1, 1, -1}}));

    auto g2 = CartanData::named("G2");
    CHECK(aMono(g2, 0, 0) == Mono::fromFactors({{0, -3, 1}, {0, 3, 1}, {1, -2, -1}, {1, 0, -1}, {1, 2, -1}}));
    CHECK(aMono(g2, 1, 0) == Mono::fromFactors({{1, -1, 1}, {1, 1, 1}, {0, 0, -1}}));

    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4", "E6"}) {
        auto c = CartanData::named(name);
        for (int i = 0; i < c.rank(); ++i) {
            CHECK(aMono(c, i, 3).weight(c.rank()) == c.alphaWeight(i));
            CHECK(tau(aMono(c, i, 3), -7) == aMono(c, i, -4));
            checkAShape(c, i, 3);
        }
    }
}

TEST_CASE("ring laws on random polynomials", "[laurent]")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Poly a = randomPoly(rng, 3), b = randomPoly(rng, 3), c = randomPoly(rng, 3);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Poly{});
        CHECK(tau(tau(a, 5), -5) == a);
        CHECK(tau(a * b, 2) == tau(a, 2) * tau(b, 2));
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms())
                CHECK((ma * mb).weight(3) == ma.weight(3) + mb.weight(3));
    }
}

TEST_CASE("text round trip", "[laurent][io]")
{
    auto b2 = CartanData::named("B2");
    Poly p = parsePoly("Y[1,0] + Y[1,2]^-1", &b2);
    CHECK(toString(p) == "Y[1,0] + Y[1,2]^-1");
    CHECK(toString(parsePoly("(Y[1,0] + Y[1,2]^-1)^2")) == "2*Y[1,0]*Y[1,2]^-1 + Y[1,0]^2 + Y[1,2]^-2");
    CHECK(parsePoly("A[2,0]", &b2) == Poly(aMono(b2, 1, 0)));
    CHECK(parsePoly("3 - 3") == Poly{});
    CHECK(toString(Poly{}) == "0");
    CHECK(toString(parsePoly("-2*Y[2,-1] + 5")) == "5 - 2*Y[2,-1]");
    CHECK_THROWS_AS(parsePoly("A[1,0]"), ParseError);
    CHECK_THROWS_AS(parsePoly("(Y[1,0]+1)^-1"), ParseError);
    CHECK_THROWS_AS(parsePoly("Y[1,0"), ParseError);
    CHECK_THROWS_AS(parsePoly("Y[3,0]", &b2), ParseError);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Poly q = randomPoly(rng, 4);
        CHECK(parsePoly(toString(q)) == q);
        CHECK(polyFromJson(toJson(q)) == q);
        CHECK(toString(parsePoly(toString(q))) == toString(q));
    }
}

TEST_CASE("big coefficients", "[laurent]")
{
    Poly p = Poly::constant(3) + Poly::y(0, 0);
    Poly big = p.pow(60);
    CHECK(big.coeff(Mono{}) == boost::multiprecision::pow(Integer(3), 60));
    CHECK(polyFromJson(toJson(big)) == big);
    CHECK(parsePoly(toString(big)) == big);
}
