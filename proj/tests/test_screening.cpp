#include "catch_amalgamated.hpp"

#include "qweyl/qchar.hpp"
#include "qweyl/sample.hpp"
#include "qweyl/screening.hpp"
#include "qweyl/weylaction.hpp"

#include <algorithm>

using namespace qweyl;

TEST_CASE("screening on generators", "[screening]")
{
    auto a1 = makeCartan("A1");
    SElt expected(a1, 0);
    expected.add(0, Poly::y(0, 0));
    CHECK(screen(a1, 0, Poly::y(0, 0)) == expected);
    CHECK_FALSE(inKernelAll(a1, Poly::y(0, 0)));
    CHECK(screen(a1, 0, Poly::constant(7)).isZero());

    auto a2 = makeCartan("A2");
    CHECK(screen(a2, 0, Poly::y(1, 3)).isZero());
    CHECK(screen(a2, 0, Poly::y(1, 3, -1)).isZero());
    SElt inv(a2, 0);
    inv.add(3, -Poly::y(0, 3, -1));
    CHECK(screen(a2, 0, Poly::y(0, 3, -1)) == inv);
}

TEST_CASE("the sl2 fundamental q-character is in the kernel", "[screening]")
{
    auto a1 = makeCartan("A1");
    for (int k = -3; k <= 3; ++k) {
        Poly chi = sl2FundamentalQChar(*a1, k).value;
        CHECK(screen(a1, 0, chi).isZero());
        CHECK(thetaDeformLinearTerm(a1, 0, chi).isZero());
        CHECK(inKernelAll(a1, chi));
    }
    // Y[1,0] S[1,0] - Y[1,2]^-1 S[1,2] before rewriting.
    SElt raw(a1, 0);
    raw.add(2, -Poly::y(0, 2, -1));
    CHECK(raw.coeffs().begin()->first == 2);
    raw.add(0, Poly::y(0, 0));
    CHECK(raw.isZero());
}

TEST_CASE("module relation and canonical form", "[screening]")
{
    auto b2 = makeCartan("B2");
    SElt up(b2, 0), down(b2, 0);
    Poly c = Poly::y(1, 2) + Poly::constant(3);
    up.add(9, c);
    down.add(5, c * Poly(aMono(*b2, 0, 7)));
    CHECK(up == down);
    CHECK(down.coeffs().begin()->first == 5);

    // Any insertion order and representative gives the same coefficients.
    Sampler s(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::pair<int, Poly>> items;
        for (int t = 0; t < 5; ++t) items.emplace_back(s.uniform(-6, 6), s.poly(2, 2, 2));
        SElt a(b2, 0);
        for (const auto& [k, p] : items) a.add(k, p);
        std::reverse(items.begin(), items.end());
        SElt b(b2, 0);
        for (const auto& [k, p] : items) {
            // Push the same element up one period first.
            b.add(k + 4, p * Poly(aMono(*b2, 0, k + 2).inverse()));
        }
        SElt c2(b2, 0);
        for (const auto& [k, p] : items) c2.add(k, p);
        CHECK(a.coeffs() == c2.coeffs());
        CHECK(a == b);
        CHECK((a - b).isZero());
    }
}

TEST_CASE("screening is a derivation", "[screening]")
{
    Sampler s(3);
    for (const char* type : {"A1", "A2", "B2", "G2"}) {
        auto c = makeCartan(type);
        for (int trial = 0; trial < 25; ++trial) {
            Poly p = s.poly(c->rank()), q = s.poly(c->rank());
            for (int i = 0; i < c->rank(); ++i)
                CHECK(screen(c, i, p * q) == p * screen(c, i, q) + q * screen(c, i, p));
        }
    }
}

TEST_CASE("the h-linear term of Theta_{i,h} is the screening operator", "[screening]")
{
    for (const char* type : {"A1", "A2", "B2", "G2", "C3"}) {
        auto c = makeCartan(type);
        for (int i = 0; i < c->rank(); ++i)
            for (int j = 0; j < c->rank(); ++j)
                for (int k = -4; k <= 4; ++k)
                    for (int e : {1, -1, 2, -3}) {
                        Poly y = Poly::y(j, k, e);
                        INFO(type << " S" << i + 1 << " " << toString(y));
                        CHECK(thetaDeformLinearTerm(c, i, y) == screen(c, i, y));
                    }
        Sampler s(17);
        for (int trial = 0; trial < 100; ++trial) {
            Poly p = s.poly(c->rank());
            for (int i = 0; i < c->rank(); ++i) CHECK(thetaDeformLinearTerm(c, i, p) == screen(c, i, p));
        }
    }
}

TEST_CASE("Theta_i-invariant polynomials are killed by S_i", "[screening]")
{
    for (const char* type : {"A2", "B2", "G2"}) {
        auto c = makeCartan(type);
        for (int i = 0; i < 2; ++i)
            for (int len = 1; len <= 4; ++len) CHECK(screen(c, i, tElt(*c, i, 2, len).value).isZero());
    }
    auto a2 = makeCartan("A2");
    Poly block = blockPolynomial(*a2, 0, "T[1,0]*T[1,2] - 3*Y[2,1]^-1*T[1,4] + Y[2,5]").value;
    CHECK(screen(a2, 0, block).isZero());
    CHECK_FALSE(screen(a2, 1, block).isZero());
    CHECK_FALSE(inKernelAll(a2, block));
    auto g2 = makeCartan("G2");
    CHECK(screen(g2, 1, blockPolynomial(*g2, 1, "T[2,0]^2*Y[1,3]").value).isZero());
}

TEST_CASE("the deformation specialized at h = 1 is the bold Theta", "[screening]")
{
    // Y A^{-1} Sigma_{k-3d} / Sigma_{k-d} = Y - Y / Sigma_{k-d} in the identity component.
    for (const char* type : {"A1", "B2", "G2"}) {
        auto c = makeCartan(type);
        ThetaContext ctx(c, 6);
        const auto e = WeylElt::identity(c->rank());
        for (int i = 0; i < c->rank(); ++i) {
            const int d = static_cast<int>(c->d(i));
            const int k = 1;
            auto y = PSeries::monomial(c, e, Mono::y(i, k), 1, 6);
            auto image = ctx.thetaOnGenerator(i, {i, k, 1}, simpleReflection(*c, i));
            CHECK(compareSeries(SeriesSum(image), SeriesSum(y) - SeriesSum(y * ctx.sigma(i, k - d, e).inverse())).equal);
            auto yinv = PSeries::monomial(c, e, Mono::y(i, k, -1), 1, 6);
            auto inv = ctx.thetaOnGenerator(i, {i, k, -1}, simpleReflection(*c, i));
            auto rhs = SeriesSum(yinv) +
                       SeriesSum(yinv.timesMono(aMono(*c, i, k - d)) * ctx.sigma(i, k - 3 * d, e).inverse());
            CHECK(compareSeries(SeriesSum(inv), rhs).equal);
        }
    }
}

TEST_CASE("screening output", "[screening]")
{
    auto a1 = makeCartan("A1");
    SElt s = screen(a1, 0, Poly::y(0, 0) * Poly::y(0, 1));
    CHECK(s.toString() == "(Y[1,0]*Y[1,1])*S[1,0] + (Y[1,0]*Y[1,1])*S[1,1]");
    auto j = s.toJson();
    CHECK(j["node"] == 1);
    CHECK(j["terms"].size() == 2);
    CHECK(SElt(a1, 0).toString() == "0");
}
