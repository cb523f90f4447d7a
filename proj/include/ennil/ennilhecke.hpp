#ifndef ENNIL_ENNILHECKE_HPP
#define ENNIL_ENNILHECKE_HPP

#include "derivations.hpp"
#include "report.hpp"

#include <random>

namespace ennil {

// Element of A_n in left normal form: sum_w f_w T_w with f_w in R_n.
template <class C> struct AnElt {
    int n = 0;
    std::map<Perm, ExtPoly<C>> terms;

    AnElt() = default;
    explicit AnElt(int rank) : n(rank) {}

    static AnElt zero(int n) { return AnElt(n); }

    static AnElt from_poly(const ExtPoly<C> &f) {
        AnElt a(f.n);
        a.add_term(Perm::identity(f.n), f);
        return a;
    }

    static AnElt one(int n) { return from_poly(ExtPoly<C>::one(n)); }
    static AnElt x(int n, int i) { return from_poly(ExtPoly<C>::x(n, i)); }
    static AnElt w(int n, int i) { return from_poly(ExtPoly<C>::w(n, i)); }

    static AnElt T(int n, int i) {
        AnElt a(n);
        a.add_term(Perm::transposition(n, i), ExtPoly<C>::one(n));
        return a;
    }

    static AnElt T_word(int n, const Perm &w) {
        AnElt a(n);
        a.add_term(w, ExtPoly<C>::one(n));
        return a;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Perm &w, const ExtPoly<C> &f) {
        if (f.is_zero()) return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(w, f);
        } else {
            it->second += f;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    AnElt &operator+=(const AnElt &o) {
        check_rank(o);
        for (auto &[w, f] : o.terms) add_term(w, f);
        return *this;
    }
    AnElt &operator-=(const AnElt &o) {
        check_rank(o);
        for (auto &[w, f] : o.terms) add_term(w, -f);
        return *this;
    }
    friend AnElt operator+(AnElt a, const AnElt &b) { return a += b; }
    friend AnElt operator-(AnElt a, const AnElt &b) { return a -= b; }
    AnElt operator-() const {
        AnElt r(n);
        for (auto &[w, f] : terms) r.terms.emplace(w, -f);
        return r;
    }
    AnElt scaled(const C &c) const {
        AnElt r(n);
        for (auto &[w, f] : terms) r.add_term(w, f.scaled(c));
        return r;
    }

    bool operator==(const AnElt &o) const { return n == o.n && terms == o.terms; }
    bool operator!=(const AnElt &o) const { return !(*this == o); }

    void check_rank(const AnElt &o) const {
        if (n != o.n) throw std::invalid_argument("AnElt: rank mismatch");
    }
};

// T_w * g expanded as sum_u h_u T_u (u <= w), by pushing the word past g
// letter by letter via T_j o (g.) = T_j(g).( ) + s_j(g).T_j( ).
template <class C>
std::map<Perm, ExtPoly<C>> push_word(int n, const std::vector<int> &word,
                                     const ExtPoly<C> &g) {
    std::map<Perm, ExtPoly<C>> out;
    if (word.empty()) {
        if (!g.is_zero()) out.emplace(Perm::identity(n), g);
        return out;
    }
    int j = word.back();
    std::vector<int> pref(word.begin(), word.end() - 1);
    for (auto &[u, h] : push_word(n, pref, demazure(j, g))) {
        auto it = out.find(u);
        if (it == out.end()) out.emplace(u, h);
        else {
            it->second += h;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    Perm sj = Perm::transposition(n, j);
    for (auto &[u, h] : push_word(n, pref, apply_transposition(j, g))) {
        Perm usj = u * sj;
        if (usj.length() != u.length() + 1) continue; // nilCoxeter kill
        auto it = out.find(usj);
        if (it == out.end()) out.emplace(usj, h);
        else {
            it->second += h;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

template <class C> AnElt<C> an_mul(const AnElt<C> &a, const AnElt<C> &b) {
    a.check_rank(b);
    AnElt<C> r(a.n);
    for (auto &[w, f] : a.terms) {
        auto word = w.reduced_word();
        for (auto &[v, g] : b.terms) {
            for (auto &[u, h] : push_word(a.n, word, g)) {
                Perm uv = u * v;
                if (uv.length() != u.length() + v.length()) continue;
                r.add_term(uv, f * h);
            }
        }
    }
    return r;
}

template <class C> AnElt<C> operator*(const AnElt<C> &a, const AnElt<C> &b) {
    return an_mul(a, b);
}

// T_w(f): Demazure operators composed along the reduced word, rightmost
// letter applied first.
template <class C> ExtPoly<C> demazure_word(const Perm &w, ExtPoly<C> f) {
    auto word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        f = demazure(*it, f);
    return f;
}

template <class C> ExtPoly<C> act(const AnElt<C> &a, const ExtPoly<C> &f) {
    if (a.n != f.n) throw std::invalid_argument("act: rank mismatch");
    ExtPoly<C> out(a.n);
    for (auto &[w, g] : a.terms) out += g * demazure_word(w, f);
    return out;
}

// Common bidegree with deg(T_w) = (-2 l(w), 0); nullopt if inhomogeneous.
template <class C>
std::optional<std::pair<long, long>> an_bidegree(const AnElt<C> &a) {
    if (a.is_zero()) throw std::invalid_argument("an_bidegree: zero input");
    std::optional<std::pair<long, long>> deg;
    for (auto &[w, f] : a.terms) {
        auto d = bidegree(f);
        if (!d) return std::nullopt;
        d->first -= 2L * w.length();
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg;
}

template <class C> std::string an_str(const AnElt<C> &a) {
    if (a.is_zero()) return "0";
    std::vector<std::pair<Perm, ExtPoly<C>>> ts(a.terms.begin(), a.terms.end());
    std::sort(ts.begin(), ts.end(), [](const auto &l, const auto &r) {
        int ll = l.first.length(), rl = r.first.length();
        if (ll != rl) return ll < rl;
        return l.first < r.first;
    });
    std::string s;
    for (auto &[w, f] : ts) {
        std::string fs = poly_str(f);
        bool neg = false;
        if (f.terms.size() == 1 && !fs.empty() && fs[0] == '-') {
            neg = true;
            fs = fs.substr(1);
        }
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        if (w.is_identity()) {
            s += fs;
            continue;
        }
        if (f.terms.size() > 1 || fs == "1") {
            if (fs == "1") fs.clear();
            else fs = "(" + fs + ")*";
        } else {
            fs += "*";
        }
        s += fs;
        bool first = true;
        for (int j : w.reduced_word()) {
            if (!first) s += "*";
            s += "T" + std::to_string(j);
            first = false;
        }
    }
    return s;
}

// epsilon_n = (-1)^{n(n-1)/2} T_{w0} x_1^0 x_2^1 ... x_n^{n-1}, normal-formed.
template <class C> AnElt<C> epsilon(int n) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = i;
    C c((n * (n - 1) / 2) % 2 ? -1 : 1);
    return an_mul(AnElt<C>::T_word(n, Perm::longest(n)),
                  AnElt<C>::from_poly(ExtPoly<C>::monomial(n, 0u, e, c)));
}

// d_a(T_i) = a - (a+1) x_i T_i + (a-1) x_{i+1} T_i.
template <class C> AnElt<C> d_a_of_T(int n, long a, int i) {
    AnElt<C> r(n);
    r.add_term(Perm::identity(n), ExtPoly<C>::constant(n, C(a)));
    r.add_term(Perm::transposition(n, i),
               ExtPoly<C>::x(n, i, C(-(a + 1))) +
                   ExtPoly<C>::x(n, i + 1, C(a - 1)));
    return r;
}

// d_a(T_w) by the Leibniz rule along the reduced word.
template <class C> AnElt<C> d_a_of_word(int n, long a, const Perm &w) {
    auto word = w.reduced_word();
    AnElt<C> r = AnElt<C>::zero(n);
    AnElt<C> left = AnElt<C>::one(n);
    for (std::size_t k = 0; k < word.size(); ++k) {
        AnElt<C> right = AnElt<C>::one(n);
        for (std::size_t l = k + 1; l < word.size(); ++l)
            right = an_mul(right, AnElt<C>::T(n, word[l]));
        r += an_mul(an_mul(left, d_a_of_T<C>(n, a, word[k])), right);
        left = an_mul(left, AnElt<C>::T(n, word[k]));
    }
    return r;
}

// d_a on A_n: d_n on the coefficients, Leibniz across T_w.
template <class C> AnElt<C> d_a_apply(long a, const AnElt<C> &x) {
    auto dn = dn_derivation<C>(x.n);
    AnElt<C> r(x.n);
    for (auto &[w, f] : x.terms) {
        r.add_term(w, dn.apply(f));
        r += an_mul(AnElt<C>::from_poly(f), d_a_of_word<C>(x.n, a, w));
    }
    return r;
}

// phi_n: A_n -> A_{n+1}, coefficients via phi'_n, T_w fixed.
template <class C> AnElt<C> phi_inclusion(int n, const AnElt<C> &x) {
    if (x.n != n) throw std::invalid_argument("phi_inclusion: rank mismatch");
    AnElt<C> r(n + 1);
    for (auto &[w, f] : x.terms) {
        std::vector<int> img = w.img;
        img.push_back(n);
        r.add_term(Perm(img), phi_prime<C>(n, f));
    }
    return r;
}

namespace detail {

template <class C>
void relation_check(Report &rep, const std::string &name, const AnElt<C> &lhs,
                    const AnElt<C> &rhs,
                    const std::vector<typename ExtPoly<C>::Key> &probes) {
    bool nf = (lhs == rhs);
    rep.add(name + " [normal form]", nf, an_str(lhs), an_str(rhs));
    AnElt<C> z = lhs - rhs;
    bool ok = true;
    std::string bad;
    for (auto &k : probes) {
        auto f = ExtPoly<C>::monomial(lhs.n, k.first, k.second, C(1));
        if (!act(z, f).is_zero()) {
            ok = false;
            bad = poly_str(f);
            break;
        }
    }
    rep.add(name + " [action]", ok, "0", "0",
            ok ? "" : "difference acts nontrivially on " + bad);
}

} // namespace detail

// All defining relations of A_n, as normal-form identities and as operator
// identities on every monomial of q-degree <= D.
template <class C> Report verify_relations(int n, long D = 12) {
    Report rep;
    rep.command = "relations";
    auto probes = monomials_up_to<C>(n, D);
    auto X = [&](int i) { return AnElt<C>::x(n, i); };
    auto W = [&](int i) { return AnElt<C>::w(n, i); };
    auto T = [&](int i) { return AnElt<C>::T(n, i); };
    auto one = AnElt<C>::one(n);
    auto num = [](int i) { return std::to_string(i); };

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            detail::relation_check(rep, "x" + num(i) + "*x" + num(j) + " comm",
                                   X(i) * X(j), X(j) * X(i), probes);
    for (int i = 1; i < n; ++i)
        detail::relation_check(rep, "T" + num(i) + "^2=0", T(i) * T(i),
                               AnElt<C>::zero(n), probes);
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            detail::relation_check(rep, "T" + num(i) + "*T" + num(j) + " comm",
                                   T(i) * T(j), T(j) * T(i), probes);
    for (int i = 1; i + 1 < n; ++i)
        detail::relation_check(rep, "braid T" + num(i) + ",T" + num(i + 1),
                               T(i) * T(i + 1) * T(i),
                               T(i + 1) * T(i) * T(i + 1), probes);
    for (int j = 1; j < n; ++j)
        for (int i = 1; i <= n; ++i) {
            if (i == j || i == j + 1) continue;
            detail::relation_check(rep, "x" + num(i) + "*T" + num(j) + " comm",
                                   X(i) * T(j), T(j) * X(i), probes);
        }
    for (int i = 1; i < n; ++i) {
        detail::relation_check(rep, "x" + num(i) + "T" + num(i) + "-T" + num(i) +
                                        "x" + num(i + 1) + "=1",
                               X(i) * T(i) - T(i) * X(i + 1), one, probes);
        detail::relation_check(rep, "T" + num(i) + "x" + num(i) + "-x" +
                                        num(i + 1) + "T" + num(i) + "=1",
                               T(i) * X(i) - X(i + 1) * T(i), one, probes);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            detail::relation_check(rep, "w" + num(i) + "*w" + num(j) + " anticomm",
                                   W(i) * W(j), -(W(j) * W(i)), probes);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            detail::relation_check(rep, "x" + num(i) + "*w" + num(j) + " comm",
                                   X(i) * W(j), W(j) * X(i), probes);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            detail::relation_check(rep, "T" + num(i) + "*w" + num(j) + " comm",
                                   T(i) * W(j), W(j) * T(i), probes);
        }
    for (int i = 1; i < n; ++i) {
        AnElt<C> u = W(i) - X(i + 1) * W(i + 1);
        detail::relation_check(rep, "T" + num(i) + " comm w" + num(i) + "-x" +
                                        num(i + 1) + "w" + num(i + 1),
                               T(i) * u, u * T(i), probes);
    }
    // theta-presentation, theta = w_1
    AnElt<C> th = W(1);
    detail::relation_check(rep, "theta^2=0", th * th, AnElt<C>::zero(n), probes);
    for (int i = 1; i <= n; ++i)
        detail::relation_check(rep, "theta*x" + num(i) + " comm", th * X(i),
                               X(i) * th, probes);
    for (int i = 2; i < n; ++i)
        detail::relation_check(rep, "theta*T" + num(i) + " comm", th * T(i),
                               T(i) * th, probes);
    if (n >= 2)
        detail::relation_check(rep, "theta*T1*theta*T1 anticomm",
                               th * T(1) * th * T(1),
                               -(T(1) * th * T(1) * th), probes);
    return rep;
}

// act() vanishes on the staircase-x-omega basis iff the normal form is zero.
template <class C> bool acts_as_zero(const AnElt<C> &a) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << a.n); ++mask)
        for (auto &e : staircase_exponents(a.n)) {
            auto f = ExtPoly<C>::monomial(a.n, mask, e, C(1));
            if (!act(a, f).is_zero()) return false;
        }
    return true;
}

template <class C> AnElt<C> an_bind_p(const AnElt<C> &a, long p);

inline AnElt<Fp> an_bind_p(const AnElt<Fp> &a, long p) {
    AnElt<Fp> r(a.n);
    for (auto &[w, f] : a.terms) {
        ExtPoly<Fp> g(a.n);
        for (auto &[k, c] : f.terms) g.add_term(k, Fp(c.v, p));
        r.add_term(w, g);
    }
    return r;
}

// d_a^p = 0 on generators and short random products over F_p (n < p).
inline Report an_nilpotency_check(long p, int n, long a = 1,
                                  unsigned seed = 12345) {
    Report rep;
    rep.command = "an_nilpotency";
    if (n >= p) throw std::invalid_argument("an_nilpotency_check: need n < p");
    std::vector<std::pair<std::string, AnElt<Fp>>> gens;
    for (int i = 1; i <= n; ++i) {
        gens.push_back({"x" + std::to_string(i), AnElt<Fp>::x(n, i)});
        gens.push_back({"w" + std::to_string(i), AnElt<Fp>::w(n, i)});
    }
    for (int i = 1; i < n; ++i)
        gens.push_back({"T" + std::to_string(i), AnElt<Fp>::T(n, i)});
    std::mt19937 rng(seed);
    std::vector<std::pair<std::string, AnElt<Fp>>> cases = gens;
    for (int t = 0; t < 4; ++t) {
        int len = 2 + static_cast<int>(rng() % 2);
        AnElt<Fp> prod = AnElt<Fp>::one(n);
        std::string name = "prod(";
        for (int l = 0; l < len; ++l) {
            auto &g = gens[rng() % gens.size()];
            prod = an_mul(prod, g.second);
            name += (l ? "*" : "") + g.first;
        }
        cases.push_back({name + ")", prod});
    }
    for (auto &[name, g0] : cases) {
        AnElt<Fp> g = an_bind_p(g0, p);
        for (long t = 0; t < p; ++t) g = d_a_apply(a, g);
        rep.add("d^" + std::to_string(p) + "(" + name + ")=0", g.is_zero(),
                an_str(g), "0");
    }
    return rep;
}

// act(d_a(xi), f) = d_tw(act(xi, f)) - act(xi, d_tw(f)) with the weight
// preset alpha_i = a(i-n), on monomials of q-degree <= D.
template <class C>
Report d_a_commutator_check(long a, int n, long D, unsigned seed = 777) {
    Report rep;
    rep.command = "d_a_commutator";
    TwistedDn<C> tw = TwistedDn<C>::preset(n, a);
    std::vector<std::pair<std::string, AnElt<C>>> gens;
    for (int i = 1; i <= n; ++i) {
        gens.push_back({"x" + std::to_string(i), AnElt<C>::x(n, i)});
        gens.push_back({"w" + std::to_string(i), AnElt<C>::w(n, i)});
    }
    for (int i = 1; i < n; ++i)
        gens.push_back({"T" + std::to_string(i), AnElt<C>::T(n, i)});
    std::mt19937 rng(seed);
    std::vector<std::pair<std::string, AnElt<C>>> cases = gens;
    for (int t = 0; t < 3; ++t) {
        AnElt<C> prod = AnElt<C>::one(n);
        std::string name = "prod(";
        for (int l = 0; l < 2; ++l) {
            auto &g = gens[rng() % gens.size()];
            prod = an_mul(prod, g.second);
            name += (l ? "*" : "") + g.first;
        }
        cases.push_back({name + ")", prod});
    }
    auto probes = monomials_up_to<C>(n, D);
    for (auto &[name, xi] : cases) {
        AnElt<C> dxi = d_a_apply(a, xi);
        bool ok = true;
        std::string bad;
        for (auto &k : probes) {
            auto f = ExtPoly<C>::monomial(n, k.first, k.second, C(1));
            auto lhs = act(dxi, f);
            auto rhs = tw.apply(act(xi, f)) - act(xi, tw.apply(f));
            if (lhs != rhs) {
                ok = false;
                bad = poly_str(f);
                break;
            }
        }
        rep.add("xi=" + name, ok, "act(d_a(xi))", "[d_tw, act(xi)]",
                ok ? "" : "fails on " + bad);
    }
    return rep;
}

} // namespace ennil

#endif
