#pragma once

// Small recursive-descent parser for polynomial expressions, used by the CLI
// and by tests to keep inputs readable. Grammar:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' ['-'] integer)?
//   atom   := rational | identifier | '(' expr ')'
//
// Rational literals may be written p/q. The identifier "t" maps to the
// context's t slot when one exists, otherwise (for Q(t) coefficients) to the
// coefficient field's t. Negative exponents are only accepted on t, and only
// in laurent mode.

#include <cctype>
#include <string>

#include "curva/gcpoly.hpp"

namespace curva {

namespace detail {

template <class K>
struct PolyParser {
    CtxPtr ctx;
    const std::string& s;
    size_t pos = 0;

    PolyParser(CtxPtr c, const std::string& src) : ctx(std::move(c)), s(src) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos) +
                                    ": " + msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool consume(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string read_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return s.substr(start, pos - start);
    }

    std::string read_ident() {
        skip_ws();
        size_t start = pos;
        if (pos >= s.size() ||
            !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            fail("expected an identifier");
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                  s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    GCPoly<K> t_factor(int k) {
        if (ctx->t_mode != TMode::none) return GCPoly<K>::t_power(ctx, k);
        if constexpr (std::is_same_v<K, RatFunc>) {
            return GCPoly<K>::constant(ctx, RatFunc::t(k));
        } else {
            fail("t is not available in this context");
        }
    }

    GCPoly<K> atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (consume('(')) {
            GCPoly<K> e = expr();
            if (!consume(')')) fail("expected ')'");
            return e;
        }
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_int();
            if (consume('/')) num += "/" + read_int();
            return GCPoly<K>::constant(ctx, K(rat_from_string(num)));
        }
        std::string id = read_ident();
        if (id == "t") return t_factor(1);
        int i = ctx->index_of(id);
        if (i < 0) fail("unknown variable '" + id + "'");
        return GCPoly<K>::variable(ctx, i);
    }

    GCPoly<K> factor() {
        skip_ws();
        size_t atom_pos = pos;
        bool was_t = pos < s.size() && s.compare(pos, 1, "t") == 0;
        GCPoly<K> base = atom();
        if (consume('^')) {
            bool neg = consume('-');
            int k = std::stoi(read_int());
            if (neg) {
                // only t^-k is meaningful here
                skip_ws();
                (void)atom_pos;
                if (!was_t) fail("negative exponents are only allowed on t");
                return t_factor(-k);
            }
            return base.pow(k);
        }
        return base;
    }

    GCPoly<K> term() {
        GCPoly<K> r = factor();
        while (consume('*')) r = r * factor();
        return r;
    }

    GCPoly<K> expr() {
        skip_ws();
        bool neg = false;
        if (consume('-'))
            neg = true;
        else
            consume('+');
        GCPoly<K> r = term();
        if (neg) r = -r;
        while (true) {
            if (consume('+')) {
                r += term();
            } else if (consume('-')) {
                r -= term();
            } else {
                break;
            }
        }
        return r;
    }

    GCPoly<K> run() {
        GCPoly<K> r = expr();
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return r;
    }
};

}  // namespace detail

template <class K>
GCPoly<K> parse_poly(const CtxPtr& ctx, const std::string& src) {
    return detail::PolyParser<K>(ctx, src).run();
}

inline QPoly parse_qpoly(const CtxPtr& ctx, const std::string& src) {
    return parse_poly<Rat>(ctx, src);
}

inline TPoly parse_tpoly(const CtxPtr& ctx, const std::string& src) {
    return parse_poly<RatFunc>(ctx, src);
}

}  // namespace curva
