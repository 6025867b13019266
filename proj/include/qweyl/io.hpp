#pragma once

// Text and JSON forms of monomials and polynomials.
//
// Text: `Y[i,k]`, `A[i,k]` with `^e`, `*`, `+`, `-`, parentheses and integer
// constants; nodes are 1-based.  The printer emits canonical term order and
// parse(print(p)) == p.
//
// JSON: a polynomial is a list of {"mono": {"i,k": e, ...}, "coeff": "c"}.

#include "qweyl/laurent.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace qweyl {

using Json = nlohmann::json;

std::string toString(const Mono& m);
std::string toString(const Poly& p);

/// Resolves extra bracket symbols such as `T[i,k]`; node is 0-based.
using SymbolResolver = std::function<std::optional<Poly>(char symbol, int node, int k)>;

/// `A[i,k]` needs a Cartan matrix; without one it is a parse error.
Poly parsePoly(std::string_view text, const CartanData* cartan = nullptr, const SymbolResolver& extra = {});

Json toJson(const Mono& m);
Json toJson(const Poly& p);
Mono monoFromJson(const Json& j);
Poly polyFromJson(const Json& j);

}  // namespace qweyl
