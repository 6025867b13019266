#include "qweyl/qchar.hpp"

#include "qweyl/error.hpp"
#include "qweyl/io.hpp"

#include <fmt/format.h>

namespace qweyl {

Mono vMono(const CartanData& cartan, int i, int k, int alpha) {
    const int d = static_cast<int>(cartan.d(i));
    Mono m;
    if (alpha > 0)
        for (int t = 0; t < alpha; ++t) m = m * aMono(cartan, i, k - 2 * d * t).inverse();
    else
        for (int s = 1; s <= -alpha; ++s) m = m * aMono(cartan, i, k + 2 * d * s);
    return m;
}

namespace {

void checkLength(int len) {
    if (len < 0 || len > kMaxTLength)
        throw Error(fmt::format("T^(k) length {} outside 0..{}", len, kMaxTLength));
}

}  // namespace

Poly tEltNested(const CartanData& cartan, int i, int k, int len) {
    checkLength(len);
    const int d = static_cast<int>(cartan.d(i));
    if (len == 0) return Poly::constant(1);
    // Innermost bracket first: 1 + A_{k+(3-2len)d}^{-1}, then outwards.
    Poly inner = Poly::constant(1);
    for (int t = len - 1; t >= 0; --t) {
        int shift = k + d * (1 - 2 * t);
        inner = Poly::constant(1) + Poly(aMono(cartan, i, shift).inverse()) * inner;
    }
    Mono prefix;
    for (int t = 0; t < len; ++t) prefix = prefix * Mono::y(i, k - 2 * d * t);
    return Poly(prefix) * inner;
}

Poly tEltSum(const CartanData& cartan, int i, int k, int len, int prefactorStart) {
    checkLength(len);
    const int d = static_cast<int>(cartan.d(i));
    if (len == 0) return Poly::constant(1);
    Mono prefix;
    for (int t = 0; t < len; ++t) prefix = prefix * Mono::y(i, k + 2 * d * (prefactorStart + t));
    Poly sum;
    for (int alpha = 0; alpha <= len; ++alpha) sum.addTerm(vMono(cartan, i, k + d, alpha), 1);
    return Poly(prefix) * sum;
}

InvariantElt tElt(const CartanData& cartan, int i, int k, int len) {
    cartan.checkNode(i);
    Poly nested = tEltNested(cartan, i, k, len);
    Poly summed = tEltSum(cartan, i, k, len, 1 - len);
    if (!(nested == summed))
        throw Error(fmt::format("T^({})_{{{},{}}}: nested and summed forms disagree", len, i + 1, k));
    return {nested, fmt::format("T^({})[{},{}]", len, i + 1, k)};
}

bool tRecurrenceHolds(const CartanData& cartan, int i, int k, int len) {
    if (len < 1) throw Error("the T recurrence needs k >= 1");
    const int d = static_cast<int>(cartan.d(i));
    Poly lhs = tElt(cartan, i, k + 2 * d, len + 1).value;
    Mono correction = Mono::y(i, k) * Mono::y(i, k + 2 * d) * aMono(cartan, i, k + d).inverse();
    Poly rhs = tElt(cartan, i, k, len).value * tElt(cartan, i, k + 2 * d, 1).value -
               tElt(cartan, i, k - 2 * d, len - 1).value * Poly(correction);
    return lhs == rhs;
}

InvariantElt sl2FundamentalQChar(const CartanData& cartan, int k) {
    if (cartan.rank() != 1) throw CartanError("the sl2 fundamental q-character needs type A1");
    return {Poly::y(0, k) + Poly::y(0, k + 2, -1), fmt::format("sl2 fundamental at {}", k)};
}

InvariantElt blockPolynomial(const CartanData& cartan, int node, std::string_view spec) {
    cartan.checkNode(node);
    // Y_{node,*} is not a block; catch it in the text before expansion.
    SymbolResolver resolver = [&](char symbol, int i, int k) -> std::optional<Poly> {
        if (symbol != 'T') return std::nullopt;
        if (i != node)
            throw ParseError(fmt::format("block T[{},{}] is not at the designated node {}", i + 1, k, node + 1));
        return tElt(cartan, i, k, 1).value;
    };
    std::string text(spec);
    for (std::size_t pos = text.find("Y["); pos != std::string::npos; pos = text.find("Y[", pos + 1)) {
        int i = 0;
        if (std::sscanf(text.c_str() + pos, "Y[%d", &i) == 1 && i - 1 == node)
            throw ParseError(fmt::format("Y[{},.] is not a block for node {}; use T[{},k]", i, node + 1, node + 1));
    }
    if (text.find("A[") != std::string::npos) throw ParseError("A[i,k] is not a block");
    return {parsePoly(text, &cartan, resolver), fmt::format("blocks for node {}: {}", node + 1, text)};
}

}  // namespace qweyl
