#include "catch_amalgamated.hpp"

#include "qweyl/chari.hpp"
#include "qweyl/error.hpp"
#include "qweyl/qchar.hpp"

using namespace qweyl;

TEST_CASE("Chari operators on generators", "[chari]")
{
    auto b2 = makeCartan("B2");
    CHECK(chariT(*b2, 0, Mono::y(0, 5)) == Mono::y(0, 5) * aMono(*b2, 0, 3).inverse());
    CHECK(chariT(*b2, 1, Mono::y(1, 5)) == Mono::y(1, 5) * aMono(*b2, 1, 4).inverse());
    CHECK(chariT(*b2, 0, Mono::y(1, 5)) == Mono::y(1, 5));
    CHECK(chariT(*b2, 0, Mono::y(0, 5, -2)) == Mono::y(0, 5, -2) * aMono(*b2, 0, 3).pow(2));
    Mono m = Mono::y(0, 1) * Mono::y(1, -2, -1);
    CHECK(chariT(*b2, 1, chariT(*b2, 1, m)) == chariWord(*b2, {1, 1}, m));
}

TEST_CASE("T_1 has infinite order", "[chari]")
{
    auto a1 = makeCartan("A1");
    Mono y = Mono::y(0, 0), x = y;
    for (int n = 1; n <= 10; ++n) {
        x = chariT(*a1, 0, x);
        CHECK_FALSE(x == y);
    }
    CHECK(chariPeriod(*a1, 0, 10) == 0);
    // T_1(Y_{1,0}) = Y_{1,-2}^{-1}, T_1^2(Y_{1,0}) = Y_{1,-2}^{-1} A_{1,-3} = Y_{1,-4}.
    CHECK(chariT(*a1, 0, y) == Mono::y(0, -2, -1));
    CHECK(chariWord(*a1, {0, 0}, y) == Mono::y(0, -4));
    // The sl2 fundamental q-character is not T_1-invariant.
    Poly chi = sl2FundamentalQChar(*a1, 0).value;
    CHECK_FALSE(chariT(*a1, 0, chi) == chi);
}

TEST_CASE("Lambda", "[chari]")
{
    auto a2 = makeCartan("A2");
    const auto e = WeylElt::identity(2);
    ThetaContext ctx(a2, 4);
    Mono m = Mono::y(0, 2) * Mono::y(1, -1, -1);
    CHECK(lambdaTrunc(PSeries::monomial(a2, e, m, 1, 4)) == m);
    CHECK(lambdaTrunc(ctx.sigma(0, 3, e)) == Mono{});
    CHECK_THROWS_AS(lambdaTrunc(PSeries::monomial(a2, e, m, -1, 4)), SeriesError);
    CHECK_THROWS_AS(lambdaTrunc(PSeries::monomial(a2, simpleReflection(*a2, 0), m, 1, 4)), SeriesError);
    // Sigma_i in component s_i has anchor -A_{i,k}.
    CHECK_THROWS_AS(lambdaTrunc(ctx.sigma(0, 3, simpleReflection(*a2, 0)).scaled(1)), SeriesError);

    Sampler s(9);
    for (int trial = 0; trial < 20; ++trial) {
        PSeries x = ctx.sigma(s.uniform(0, 1), s.uniform(-3, 3), e).timesMono(s.mono(2, 3));
        PSeries y = ctx.sigma(s.uniform(0, 1), s.uniform(-3, 3), e).timesMono(s.mono(2, 2));
        CHECK(lambdaTrunc(x * y) == lambdaTrunc(x) * lambdaTrunc(y));
    }
}

TEST_CASE("Lambda Theta_i = T_i", "[chari]")
{
    Sampler s(2024);
    for (const char* type : {"A1", "A2", "B2", "G2", "A3"}) {
        auto c = makeCartan(type);
        ThetaContext ctx(c, 2);
        for (int trial = 0; trial < 30; ++trial) {
            Mono m = s.mono(c->rank(), s.uniform(1, 4));
            for (int i = 0; i < c->rank(); ++i) {
                auto entry = checkLambdaTheta(ctx, i, m);
                INFO(type << " " << entry.generator << " " << entry.firstMismatch);
                CHECK(entry.pass);
            }
        }
    }
}

TEST_CASE("braid relations of the T_i", "[chari]")
{
    Sampler s(8);
    for (const char* type : {"A2", "B2", "G2", "A1xA1", "A3"}) {
        auto c = makeCartan(type);
        std::vector<Mono> sample;
        for (int t = 0; t < 50; ++t) sample.push_back(s.mono(c->rank(), s.uniform(1, 4)));
        Report r = verifyBraidT(c, sample, s);
        for (const auto& e : r.entries) {
            INFO(type << " " << e.relation << " " << e.generator << " " << e.firstMismatch);
            CHECK(e.pass);
        }
    }
}
