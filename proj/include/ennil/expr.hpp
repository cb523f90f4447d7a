#ifndef ENNIL_EXPR_HPP
#define ENNIL_EXPR_HPP

#include "ennilhecke.hpp"
#include "ktheory.hpp"

#include <cctype>
#include <string>

namespace ennil {

struct SyntaxError : std::runtime_error {
    size_t pos;
    SyntaxError(const std::string &msg, size_t at)
        : std::runtime_error(msg + " at position " + std::to_string(at)),
          pos(at) {}
};

struct IndexOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ContextError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

struct Token {
    enum Kind { num, name, plus, minus, star, caret, lpar, rpar, end } kind;
    long long value = 0;  // num
    char letter = 0;      // name: x, w, T, q, l, A
    long index = -1;      // name index, -1 if none
    size_t pos = 0;
};

inline std::vector<Token> lex(const std::string &src) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.pos = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (i < src.size() &&
                   std::isdigit(static_cast<unsigned char>(src[i])))
                v = v * 10 + (src[i++] - '0');
            t.kind = Token::num;
            t.value = v;
        } else if (c == 'x' || c == 'w' || c == 'T' || c == 'A' || c == 'q' ||
                   c == 'l') {
            t.kind = Token::name;
            t.letter = c;
            ++i;
            if ((c == 'x' || c == 'w' || c == 'T' || c == 'A')) {
                if (i >= src.size() ||
                    !std::isdigit(static_cast<unsigned char>(src[i])))
                    throw SyntaxError("expected index after '" +
                                          std::string(1, c) + "'",
                                      t.pos);
                long v = 0;
                while (i < src.size() &&
                       std::isdigit(static_cast<unsigned char>(src[i])))
                    v = v * 10 + (src[i++] - '0');
                t.index = v;
            }
        } else {
            switch (c) {
            case '+': t.kind = Token::plus; break;
            case '-': t.kind = Token::minus; break;
            case '*': t.kind = Token::star; break;
            case '^': t.kind = Token::caret; break;
            case '(': t.kind = Token::lpar; break;
            case ')': t.kind = Token::rpar; break;
            default:
                throw SyntaxError("unexpected character '" +
                                      std::string(1, c) + "'",
                                  i);
            }
            ++i;
        }
        out.push_back(t);
    }
    Token e;
    e.kind = Token::end;
    e.pos = src.size();
    out.push_back(e);
    return out;
}

// Policy-driven recursive descent for
//   expr   := ["+"|"-"] term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := ["-"] (INT | atom ("^" ["-"] INT)? | "(" expr ")")
template <class Policy> struct Parser {
    using V = typename Policy::value_type;
    Policy &pol;
    std::vector<Token> toks;
    size_t at = 0;

    Parser(Policy &p, const std::string &src) : pol(p), toks(lex(src)) {}

    const Token &peek() const { return toks[at]; }
    Token take() { return toks[at++]; }

    V parse() {
        V v = expr();
        if (peek().kind != Token::end)
            throw SyntaxError("trailing input", peek().pos);
        return v;
    }

    V expr() {
        bool neg = false;
        if (peek().kind == Token::plus) take();
        else if (peek().kind == Token::minus) {
            take();
            neg = true;
        }
        V v = term();
        if (neg) v = pol.neg(v);
        while (peek().kind == Token::plus || peek().kind == Token::minus) {
            bool minus = take().kind == Token::minus;
            V t = term();
            v = minus ? pol.sub(v, t) : pol.add(v, t);
        }
        return v;
    }

    V term() {
        V v = factor();
        while (peek().kind == Token::star) {
            take();
            v = pol.mul(v, factor());
        }
        return v;
    }

    V factor() {
        if (peek().kind == Token::minus) {
            take();
            return pol.neg(factor());
        }
        if (peek().kind == Token::num) {
            Token t = take();
            return maybe_pow(pol.from_int(t.value));
        }
        if (peek().kind == Token::name) {
            Token t = take();
            return maybe_pow(pol.atom(t.letter, t.index, t.pos));
        }
        if (peek().kind == Token::lpar) {
            take();
            V v = expr();
            if (peek().kind != Token::rpar)
                throw SyntaxError("expected ')'", peek().pos);
            take();
            return maybe_pow(v);
        }
        throw SyntaxError("expected integer, variable or '('", peek().pos);
    }

    V maybe_pow(V base) {
        if (peek().kind != Token::caret) return base;
        take();
        bool neg = false;
        if (peek().kind == Token::minus) {
            take();
            neg = true;
        }
        if (peek().kind != Token::num)
            throw SyntaxError("expected integer exponent", peek().pos);
        long long e = take().value;
        return pol.pow(base, neg ? -e : e);
    }
};

template <class C> struct RingPolicy {
    using value_type = ExtPoly<C>;
    int n;
    value_type from_int(long long v) {
        return ExtPoly<C>::constant(n, C(static_cast<long>(v)));
    }
    value_type atom(char letter, long idx, size_t pos) {
        if (letter == 'x' || letter == 'w') {
            if (idx < 1 || idx > n)
                throw IndexOutOfRange("variable index " + std::to_string(idx) +
                                      " out of range 1.." + std::to_string(n));
            return letter == 'x' ? ExtPoly<C>::x(n, static_cast<int>(idx))
                                 : ExtPoly<C>::w(n, static_cast<int>(idx));
        }
        throw ContextError(std::string("'") + letter +
                           "' is not allowed in ring context");
        (void)pos;
    }
    value_type add(value_type a, const value_type &b) { return a + b; }
    value_type sub(value_type a, const value_type &b) { return a - b; }
    value_type neg(const value_type &a) { return -a; }
    value_type mul(const value_type &a, const value_type &b) { return a * b; }
    value_type pow(const value_type &a, long long e) {
        if (e < 0) throw ContextError("negative exponent in ring context");
        value_type r = ExtPoly<C>::one(n);
        for (long long t = 0; t < e; ++t) r = r * a;
        return r;
    }
};

template <class C> struct AlgebraPolicy {
    using value_type = AnElt<C>;
    int n;
    value_type from_int(long long v) {
        return AnElt<C>::from_poly(
            ExtPoly<C>::constant(n, C(static_cast<long>(v))));
    }
    value_type atom(char letter, long idx, size_t pos) {
        if (letter == 'x' || letter == 'w') {
            if (idx < 1 || idx > n)
                throw IndexOutOfRange("variable index " + std::to_string(idx) +
                                      " out of range 1.." + std::to_string(n));
            return letter == 'x' ? AnElt<C>::x(n, static_cast<int>(idx))
                                 : AnElt<C>::w(n, static_cast<int>(idx));
        }
        if (letter == 'T') {
            if (idx < 1 || idx >= n)
                throw IndexOutOfRange("T index " + std::to_string(idx) +
                                      " out of range 1.." +
                                      std::to_string(n - 1));
            return AnElt<C>::T(n, static_cast<int>(idx));
        }
        throw ContextError(std::string("'") + letter +
                           "' is not allowed in algebra context");
        (void)pos;
    }
    value_type add(value_type a, const value_type &b) { return a + b; }
    value_type sub(value_type a, const value_type &b) { return a - b; }
    value_type neg(const value_type &a) { return -a; }
    value_type mul(const value_type &a, const value_type &b) {
        return an_mul(a, b);
    }
    value_type pow(const value_type &a, long long e) {
        if (e < 0) throw ContextError("negative exponent in algebra context");
        value_type r = AnElt<C>::one(n);
        for (long long t = 0; t < e; ++t) r = an_mul(r, a);
        return r;
    }
};

} // namespace detail

// K0-context value: either a scalar in O_p[l^{+-1}] or a vector of [A_n]
// coefficients.
struct K0Val {
    long p = 0;
    bool is_vec = false;
    QLambda scalar;
    std::vector<QLambda> coords;

    static K0Val make_scalar(long p, QLambda v) {
        K0Val r;
        r.p = p;
        r.scalar = std::move(v);
        return r;
    }
    static K0Val make_class(long p, long n) {
        K0Val r;
        r.p = p;
        r.is_vec = true;
        r.coords.assign(p, QLambda(p));
        r.coords[n] = QLambda::from_int(p, 1);
        return r;
    }
};

namespace detail {

struct K0Policy {
    using value_type = K0Val;
    long p;
    value_type from_int(long long v) {
        return K0Val::make_scalar(p, QLambda::from_int(p, Rat(v)));
    }
    value_type atom(char letter, long idx, size_t pos) {
        if (letter == 'q')
            return K0Val::make_scalar(p, QLambda::q_power(p, 1));
        if (letter == 'l')
            return K0Val::make_scalar(p, QLambda::l_power(p, 1));
        if (letter == 'A') {
            if (idx < 0 || idx >= p)
                throw IndexOutOfRange("class index " + std::to_string(idx) +
                                      " out of range 0.." +
                                      std::to_string(p - 1));
            return K0Val::make_class(p, idx);
        }
        throw ContextError(std::string("'") + letter +
                           "' is not allowed in k0 context");
        (void)pos;
    }
    value_type add(const value_type &a, const value_type &b) {
        if (a.is_vec != b.is_vec)
            throw ContextError("cannot add a scalar and a class");
        K0Val r = a;
        if (a.is_vec)
            for (long i = 0; i < p; ++i) r.coords[i] = r.coords[i] + b.coords[i];
        else r.scalar = r.scalar + b.scalar;
        return r;
    }
    value_type sub(const value_type &a, const value_type &b) {
        return add(a, neg(b));
    }
    value_type neg(const value_type &a) {
        K0Val r = a;
        if (a.is_vec)
            for (auto &c : r.coords) c = -c;
        else r.scalar = -r.scalar;
        return r;
    }
    value_type mul(const value_type &a, const value_type &b) {
        if (a.is_vec && b.is_vec)
            throw ContextError("cannot multiply two classes");
        if (!a.is_vec && !b.is_vec)
            return K0Val::make_scalar(p, a.scalar * b.scalar);
        const K0Val &vec = a.is_vec ? a : b;
        const QLambda &s = a.is_vec ? b.scalar : a.scalar;
        K0Val r = vec;
        for (auto &c : r.coords) c = c * s;
        return r;
    }
    value_type pow(const value_type &a, long long e) {
        if (a.is_vec) throw ContextError("cannot exponentiate a class");
        QLambda r = QLambda::from_int(p, 1);
        QLambda base = e < 0 ? qlambda_invert(a.scalar) : a.scalar;
        for (long long t = 0; t < (e < 0 ? -e : e); ++t) r = r * base;
        return K0Val::make_scalar(p, r);
    }
};

} // namespace detail

template <class C = Int>
ExtPoly<C> parse_ring(const std::string &src, int n) {
    detail::RingPolicy<C> pol{n};
    return detail::Parser<detail::RingPolicy<C>>(pol, src).parse();
}

template <class C = Int>
AnElt<C> parse_algebra(const std::string &src, int n) {
    detail::AlgebraPolicy<C> pol{n};
    return detail::Parser<detail::AlgebraPolicy<C>>(pol, src).parse();
}

inline K0Val parse_k0(const std::string &src, long p) {
    detail::K0Policy pol{p};
    return detail::Parser<detail::K0Policy>(pol, src).parse();
}

inline std::string k0val_str(const K0Val &v) {
    if (!v.is_vec) return qlambda_str(v.scalar);
    std::string s;
    for (long i = 0; i < v.p; ++i) {
        if (v.coords[i].is_zero()) continue;
        std::string cs = qlambda_str(v.coords[i]);
        if (!s.empty()) s += " + ";
        if (cs == "1") s += "A" + std::to_string(i);
        else if (cs.find(' ') != std::string::npos)
            s += "(" + cs + ")*A" + std::to_string(i);
        else s += cs + "*A" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

} // namespace ennil

#endif
