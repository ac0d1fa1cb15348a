#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "firlab/error.hpp"
#include "firlab/series.hpp"
#include "firlab/skew_poly.hpp"

namespace firlab {

namespace detail {

struct Token {
    enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::size_t pos = 0;
    std::uint64_t value = 0;  // Int
    std::string text;         // Ident
};

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            std::uint64_t v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
                if (v > (std::uint64_t(1) << 62)) throw ParseError("integer literal too large", start);
                ++i;
            }
            out.push_back({Token::Int, start, v, {}});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            std::string text;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                text += s[i++];
            out.push_back({Token::Ident, start, 0, std::move(text)});
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '*': k = Token::Star; break;
            case '/': k = Token::Slash; break;
            case '^': k = Token::Caret; break;
            case '(': k = Token::LParen; break;
            case ')': k = Token::RParen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, i, 0, {}});
        ++i;
    }
    out.push_back({Token::End, s.size(), 0, {}});
    return out;
}

/// Recursive-descent evaluator over any commutative-enough expression ring
/// supplied through an adapter with:
///   Value from_int(uint64); optional<Value> symbol(name);
///   add/sub/mul/neg; optional<Value> divide(a, b); Value pow(a, uint64).
template <class Adapter>
class ExprParser {
public:
    using Value = typename Adapter::Value;

    ExprParser(const Adapter& ring, const std::string& text) : ring_(ring), toks_(tokenize(text)) {}

    Value parse() {
        Value v = expr();
        expect(Token::End, "end of input");
        return v;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    Token take() { return toks_[i_++]; }
    void expect(typename Token::Kind k, const std::string& what) {
        if (peek().kind != k) throw ParseError("expected " + what, peek().pos);
        ++i_;
    }

    Value expr() {
        Value v = peek().kind == Token::Minus ? (static_cast<void>(take()), ring_.neg(term())) : term();
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            const bool minus = take().kind == Token::Minus;
            Value rhs = term();
            v = minus ? ring_.sub(v, rhs) : ring_.add(v, rhs);
        }
        return v;
    }

    Value term() {
        Value v = power();
        while (peek().kind == Token::Star || peek().kind == Token::Slash) {
            const Token op = take();
            Value rhs = power();
            if (op.kind == Token::Star) {
                v = ring_.mul(v, rhs);
            } else {
                std::optional<Value> q = ring_.divide(v, rhs);
                if (!q) throw ParseError("division is only defined by nonzero constants", op.pos);
                v = std::move(*q);
            }
        }
        return v;
    }

    Value power() {
        Value base = atom();
        if (peek().kind == Token::Caret) {
            const Token op = take();
            if (peek().kind != Token::Int) throw ParseError("exponent must be a nonnegative integer", op.pos);
            const std::uint64_t e = take().value;
            base = ring_.pow(base, e);
        }
        return base;
    }

    Value atom() {
        const Token tk = take();
        switch (tk.kind) {
            case Token::Int:
                return ring_.from_int(tk.value);
            case Token::Ident: {
                std::optional<Value> v = ring_.symbol(tk.text);
                if (!v) throw ParseError("unknown symbol '" + tk.text + "'", tk.pos);
                return std::move(*v);
            }
            case Token::Minus:
                return ring_.neg(atom());
            case Token::LParen: {
                Value v = expr();
                expect(Token::RParen, "')'");
                return v;
            }
            default:
                throw ParseError("expected a value", tk.pos);
        }
    }

    const Adapter& ring_;
    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

/// Name of the coefficient-field generator symbol, if any.
inline std::optional<GfElem> field_symbol(const FiniteTwistedField& k, const std::string& name) {
    if (name == "w" && k.field().degree() >= 2) return k.field().element(k.characteristic());
    return std::nullopt;
}
inline std::optional<RatFn> field_symbol(const RationalFunctionTwistedField& k, const std::string& name) {
    if (name == "x") return RatFn::x(k.p());
    return std::nullopt;
}
inline std::optional<mpq_class> field_symbol(const RationalTwistedField&, const std::string&) {
    return std::nullopt;
}

template <twisted_field F>
struct SkewPolyAdapter {
    using Value = SkewPoly<F>;
    using RingPtr = typename SkewPoly<F>::RingPtr;

    RingPtr ring;
    bool allow_t;

    Value from_int(std::uint64_t v) const {
        return Value::constant(ring, ring->from_int(static_cast<std::int64_t>(v)));
    }
    std::optional<Value> symbol(const std::string& name) const {
        if (name == "t" && allow_t) return Value::t(ring);
        if (std::optional<typename F::Elem> e = field_symbol(*ring, name))
            return Value::constant(ring, *e);
        return std::nullopt;
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value neg(const Value& a) const { return -a; }
    std::optional<Value> divide(const Value& a, const Value& b) const {
        if (!b.is_unit()) return std::nullopt;  // divisor must be a nonzero field constant
        return a.scale_left(ring->inv(b.coeff(0)));
    }
    Value pow(Value a, std::uint64_t e) const {
        Value r = Value::one(ring);
        while (e--) r = r * a;
        return r;
    }
};

struct SeriesAdapter {
    using Value = TruncatedSeries;
    std::uint32_t trunc;

    Value from_int(std::uint64_t v) const {
        return TruncatedSeries::constant(trunc, mpq_class(static_cast<unsigned long>(v)));
    }
    std::optional<Value> symbol(const std::string& name) const {
        if (name == "x") return TruncatedSeries::x(trunc);
        return std::nullopt;
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value neg(const Value& a) const { return -a; }
    std::optional<Value> divide(const Value& a, const Value& b) const {
        const auto ob = b.order();
        if (!ob || *ob != 0) return std::nullopt;
        for (std::size_t i = 1; i <= b.trunc(); ++i)
            if (b.coeff(i) != 0) return std::nullopt;  // divisor must be a rational constant
        Value r(a.trunc());
        std::vector<mpq_class> c(a.trunc() + 1);
        for (std::size_t i = 0; i <= a.trunc(); ++i) c[i] = a.coeff(i) / b.coeff(0);
        return TruncatedSeries(a.trunc(), std::move(c));
    }
    Value pow(Value a, std::uint64_t e) const {
        Value r = from_int(1);
        while (e--) r = r * a;
        return r;
    }
};

}  // namespace detail

/// Parse a polynomial in t over the given ring; grammar: integer and
/// generator literals, + - * / ^ and parentheses, e.g. "t^2 + (w+1)*t + w".
template <twisted_field F>
SkewPoly<F> parse_poly(const std::shared_ptr<const F>& ring, const std::string& text) {
    detail::SkewPolyAdapter<F> adapter{ring, true};
    return detail::ExprParser<detail::SkewPolyAdapter<F>>(adapter, text).parse();
}

/// Parse a coefficient-field element (a polynomial expression without t).
template <twisted_field F>
typename F::Elem parse_element(const std::shared_ptr<const F>& ring, const std::string& text) {
    detail::SkewPolyAdapter<F> adapter{ring, false};
    SkewPoly<F> v = detail::ExprParser<detail::SkewPolyAdapter<F>>(adapter, text).parse();
    return v.coeff(0);
}

/// Parse a truncated series literal such as "2 + 3/2*x + x^2".  The result
/// must lie in Z + xQ[[x]]; intermediate subexpressions may not.
inline TruncatedSeries parse_series(std::uint32_t trunc, const std::string& text) {
    detail::SeriesAdapter adapter{trunc};
    TruncatedSeries f = detail::ExprParser<detail::SeriesAdapter>(adapter, text).parse();
    if (f.coeff(0).get_den() != 1) throw ParseError("constant term must be an integer", 0);
    return f;
}

/// A parsed --field descriptor: one of the two skew coefficient backends.
using FieldHandle = std::variant<std::shared_ptr<const FiniteTwistedField>,
                                 std::shared_ptr<const RationalFunctionTwistedField>>;

/// Descriptor syntax:
///   gf(p,e)                 finite field, S = Frobenius (frob=1), D = 0
///   gf(p,e,frob=k)          S(a) = a^(p^k); frob=0 is the commutative case
///   gf(p,e,der=<elem>)      inner derivation D_c with c = <elem>
///   funfield(p)             F_p(x) with S(x) = x^2
///   funfield(p,der=<elem>)  inner derivation
inline FieldHandle parse_field_descriptor(const std::string& text) {
    const std::size_t open = text.find('(');
    const std::size_t close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError("field descriptor must look like gf(p,e) or funfield(p)", 0);
    const std::string head = text.substr(0, open);
    std::vector<std::string> args;
    std::string cur;
    int depth = 0;
    for (std::size_t i = open + 1; i < close; ++i) {
        const char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            args.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) args.push_back(cur);

    auto as_uint = [&](const std::string& s, const std::string& what) -> std::uint32_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(what + " must be a positive integer", 0);
        return static_cast<std::uint32_t>(std::stoul(s));
    };
    auto keyed = [&](const std::string& key) -> std::optional<std::string> {
        for (const std::string& a : args)
            if (a.rfind(key + "=", 0) == 0) return a.substr(key.size() + 1);
        return std::nullopt;
    };

    if (head == "gf") {
        if (args.size() < 2) throw ParseError("gf needs characteristic and degree: gf(p,e)", 0);
        const std::uint32_t p = as_uint(args[0], "characteristic");
        const std::uint32_t e = as_uint(args[1], "degree");
        std::uint32_t frob = 1;
        if (auto k = keyed("frob")) frob = as_uint(*k, "frob");
        auto ring = std::make_shared<const FiniteTwistedField>(GfField(p, e), frob);
        if (auto d = keyed("der")) {
            GfElem c = parse_element<FiniteTwistedField>(ring, *d);
            ring = std::make_shared<const FiniteTwistedField>(GfField(p, e), frob, c);
        }
        return FieldHandle{std::move(ring)};
    }
    if (head == "funfield") {
        if (args.empty()) throw ParseError("funfield needs a characteristic: funfield(p)", 0);
        const std::uint32_t p = as_uint(args[0], "characteristic");
        auto ring = std::make_shared<const RationalFunctionTwistedField>(p);
        if (auto d = keyed("der")) {
            RatFn c = parse_element<RationalFunctionTwistedField>(ring, *d);
            ring = std::make_shared<const RationalFunctionTwistedField>(p, c);
        }
        return FieldHandle{std::move(ring)};
    }
    throw ParseError("unknown field backend '" + head + "'", 0);
}

}  // namespace firlab
