#include "qweyl/io.hpp"

#include "qweyl/error.hpp"

#include <fmt/format.h>

#include <cctype>

namespace qweyl {

std::string toString(const Mono& m) {
    if (m.isOne()) return "1";
    std::string s;
    for (const auto& f : m.factors()) {
        if (!s.empty()) s += '*';
        s += fmt::format("Y[{},{}]", f.node + 1, f.k);
        if (f.exp != 1) s += fmt::format("^{}", f.exp);
    }
    return s;
}

std::string toString(const Poly& p) {
    if (p.isZero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms()) {
        bool negative = c < 0;
        Integer a = negative ? Integer(-c) : c;
        std::string body;
        if (m.isOne()) body = toString(a);
        else if (a == 1) body = toString(m);
        else body = toString(a) + "*" + toString(m);
        if (s.empty()) s = negative ? "-" + body : body;
        else s += (negative ? " - " : " + ") + body;
    }
    return s;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const CartanData* cartan, const SymbolResolver& extra)
        : text_(text), cartan_(cartan), extra_(extra) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(fmt::format("{} at position {} in '{}'", what, pos_, text_));
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(fmt::format("expected '{}'", c));
    }

    std::string digits() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::string(text_.substr(start, pos_ - start));
    }

    long smallInt() {
        bool neg = false;
        skip();
        if (accept('-')) neg = true;
        else accept('+');
        std::string d = digits();
        if (d.size() > 9) fail("integer too large");
        long v = std::stol(d);
        return neg ? -v : v;
    }

    Poly expr() {
        Poly acc;
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        Poly t = term();
        acc = negate ? -t : t;
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = power();
        while (accept('*')) acc = acc * power();
        return acc;
    }

    Poly power() {
        Poly base = atom();
        if (accept('^')) {
            long e = smallInt();
            if (!base.isUnitMonomial() && e < 0) fail("negative exponent on a non-monomial");
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    Poly atom() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            expect(')');
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(Integer(digits()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            expect('[');
            long node = smallInt();
            expect(',');
            long k = smallInt();
            expect(']');
            int i = static_cast<int>(node) - 1;
            if (i < 0) fail("node labels start at 1");
            if (cartan_ && i >= cartan_->rank()) fail(fmt::format("node {} out of range", node));
            if (c == 'Y') return Poly::y(i, static_cast<int>(k));
            if (c == 'A') {
                if (!cartan_) fail("A[i,k] needs a Cartan type");
                return Poly(aMono(*cartan_, i, static_cast<int>(k)));
            }
            if (extra_) {
                if (auto p = extra_(c, i, static_cast<int>(k))) return *p;
            }
            fail(fmt::format("unknown symbol '{}'", c));
        }
        fail("unexpected character");
    }

    std::string_view text_;
    const CartanData* cartan_;
    const SymbolResolver& extra_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parsePoly(std::string_view text, const CartanData* cartan, const SymbolResolver& extra) {
    return Parser(text, cartan, extra).parse();
}

Json toJson(const Mono& m) {
    Json j = Json::object();
    for (const auto& f : m.factors()) j[fmt::format("{},{}", f.node + 1, f.k)] = f.exp;
    return j;
}

Json toJson(const Poly& p) {
    Json arr = Json::array();
    for (const auto& [m, c] : p.terms()) arr.push_back({{"mono", toJson(m)}, {"coeff", toString(c)}});
    return arr;
}

Mono monoFromJson(const Json& j) {
    if (!j.is_object()) throw ParseError("monomial JSON must be an object");
    std::vector<Factor> fs;
    for (const auto& [key, value] : j.items()) {
        int node = 0, k = 0;
        char tail = 0;
        if (std::sscanf(key.c_str(), "%d,%d%c", &node, &k, &tail) != 2 || node < 1)
            throw ParseError(fmt::format("bad monomial key '{}'", key));
        if (!value.is_number_integer()) throw ParseError("monomial exponent must be an integer");
        fs.push_back({node - 1, k, value.get<int>()});
    }
    return Mono::fromFactors(std::move(fs));
}

Poly polyFromJson(const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial JSON must be an array");
    Poly p;
    for (const auto& t : j) {
        if (!t.contains("mono") || !t.contains("coeff")) throw ParseError("term needs 'mono' and 'coeff'");
        const auto& c = t.at("coeff");
        Integer coeff = c.is_string() ? parseInteger(c.get<std::string>()) : Integer(c.get<long long>());
        p.addTerm(monoFromJson(t.at("mono")), coeff);
    }
    return p;
}

}  // namespace qweyl
