#ifndef ENNIL_SL2REP_HPP
#define ENNIL_SL2REP_HPP

#include "ennilhecke.hpp"
#include "invariants.hpp"

#include <functional>
#include <random>

namespace ennil {

// Derivation on A_n: a ring derivation on coefficients plus images of the
// T_i, extended across words by the Leibniz rule. Word images are cached,
// so applying to x^e w_S T_w costs one ring application and one
// coefficient multiplication.
template <class C> struct AnDerivation {
    int n = 0;
    Derivation<C> ring;
    std::vector<AnElt<C>> Tim; // image of T_{i+1}
    mutable std::map<Perm, AnElt<C>> cache;

    AnDerivation(Derivation<C> r, std::vector<AnElt<C>> t)
        : n(r.n), ring(std::move(r)), Tim(std::move(t)) {}

    const AnElt<C> &word_image(const Perm &w) const {
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
        AnElt<C> d(n);
        if (!w.is_identity()) {
            auto word = w.reduced_word();
            int j = word.back();
            std::vector<int> pref(word.begin(), word.end() - 1);
            Perm wp = perm_from_word(n, pref);
            d = an_mul(word_image(wp), AnElt<C>::T(n, j)) +
                an_mul(AnElt<C>::T_word(n, wp), Tim[j - 1]);
        }
        return cache.emplace(w, std::move(d)).first->second;
    }

    AnElt<C> apply(const AnElt<C> &x) const {
        if (x.n != n) throw std::invalid_argument("AnDerivation: rank");
        AnElt<C> out(n);
        for (auto &[w, f] : x.terms) {
            out.add_term(w, ring.apply(f));
            for (auto &[u, g] : word_image(w).terms) out.add_term(u, f * g);
        }
        return out;
    }
};

template <class C> AnDerivation<C> an_sl2_e(int n) {
    std::vector<AnElt<C>> t;
    for (int i = 1; i < n; ++i) {
        AnElt<C> im = AnElt<C>::one(n);
        im.add_term(Perm::transposition(n, i), ExtPoly<C>::x(n, i, C(-2)));
        t.push_back(im);
    }
    return AnDerivation<C>(witt_derivation<C>(n, 1), std::move(t));
}

template <class C> AnDerivation<C> an_sl2_f(int n) {
    return AnDerivation<C>(sl2_f<C>(n),
                           std::vector<AnElt<C>>(n > 0 ? n - 1 : 0,
                                                 AnElt<C>::zero(n)));
}

// h(T_i) = -2T_i: the sign is forced by well-definedness, since applying h
// across the relation T_i x_i - x_{i+1} T_i = 1 gives (c+2)(T_i x_i -
// x_{i+1} T_i) = 0 for h(T_i) = c T_i. It also matches the q-degree -2 of
// T_i and closes the triple: [e,f](T_i) = -2T_i, [h,e] = 2e on T_i.
template <class C> AnDerivation<C> an_sl2_h(int n) {
    std::vector<AnElt<C>> t;
    for (int i = 1; i < n; ++i) {
        AnElt<C> im(n);
        im.add_term(Perm::transposition(n, i), ExtPoly<C>::constant(n, C(-2)));
        t.push_back(im);
    }
    return AnDerivation<C>(sl2_h<C>(n), std::move(t));
}

// Witt relations, the sl2 triple, gl2 relations with the q-degree Euler
// operator, on R_n; then the sl2 triple on A_n via normal forms.
template <class C>
Report verify_sl2_suite(int n, long D, unsigned seed = 2024) {
    Report rep;
    rep.command = "sl2_suite";
    auto probes = monomials_up_to<C>(n, D);
    auto comm_on = [&](const Derivation<C> &a, const Derivation<C> &b,
                       const ExtPoly<C> &f) {
        return a.apply(b.apply(f)) - b.apply(a.apply(f));
    };
    // Witt: [l_k, l_r] = (r-k) l_{k+r}
    for (int k = -1; k <= 3; ++k)
        for (int r = k + 1; r <= 3; ++r) {
            auto lk = witt_derivation<C>(n, k), lr = witt_derivation<C>(n, r);
            auto lkr = witt_derivation<C>(n, k + r);
            bool ok = true;
            for (auto &key : probes) {
                auto f = ExtPoly<C>::monomial(n, key.first, key.second, C(1));
                if (comm_on(lk, lr, f) != lkr.apply(f).scaled(C(r - k))) {
                    ok = false;
                    break;
                }
            }
            rep.add("witt[" + std::to_string(k) + "," + std::to_string(r) + "]",
                    ok);
        }
    // sl2 and gl2 on R_n
    auto e = sl2_e<C>(n), f = sl2_f<C>(n), h = sl2_h<C>(n);
    auto dq = degq_derivation<C>(n);
    struct Rel {
        std::string name;
        const Derivation<C> *a, *b, *c;
        int scale;
    };
    std::vector<Rel> rels{{"[e,f]=h", &e, &f, &h, 1},
                          {"[h,e]=2e", &h, &e, &e, 2},
                          {"[h,f]=-2f", &h, &f, &f, -2},
                          {"[degq,e]=2e", &dq, &e, &e, 2},
                          {"[degq,f]=-2f", &dq, &f, &f, -2},
                          {"[degq,h]=0", &dq, &h, &h, 0}};
    for (auto &rel : rels) {
        bool ok = true;
        for (auto &key : probes) {
            auto g = ExtPoly<C>::monomial(n, key.first, key.second, C(1));
            if (comm_on(*rel.a, *rel.b, g) !=
                rel.c->apply(g).scaled(C(rel.scale))) {
                ok = false;
                break;
            }
        }
        rep.add("R_n " + rel.name, ok);
    }
    // A_n: generator images and the triple on generators and random words
    auto ea = an_sl2_e<C>(n), fa = an_sl2_f<C>(n), ha = an_sl2_h<C>(n);
    for (int i = 1; i < n; ++i) {
        auto Ti = AnElt<C>::T(n, i);
        rep.add("f(T" + std::to_string(i) + ")=0", fa.apply(Ti).is_zero());
        rep.add("h(T" + std::to_string(i) + ")=-2T" + std::to_string(i),
                ha.apply(Ti) == Ti.scaled(C(-2)));
        AnElt<C> eti = AnElt<C>::one(n);
        eti.add_term(Perm::transposition(n, i), ExtPoly<C>::x(n, i, C(-2)));
        rep.add("e(T" + std::to_string(i) + ")=1-2x" + std::to_string(i) + "T" +
                    std::to_string(i),
                ea.apply(Ti) == eti);
    }
    std::vector<AnElt<C>> gens;
    for (int i = 1; i <= n; ++i) {
        gens.push_back(AnElt<C>::x(n, i));
        gens.push_back(AnElt<C>::w(n, i));
    }
    for (int i = 1; i < n; ++i) gens.push_back(AnElt<C>::T(n, i));
    std::mt19937 rng(seed);
    std::vector<std::pair<std::string, AnElt<C>>> cases;
    for (size_t i = 0; i < gens.size(); ++i)
        cases.push_back({"gen" + std::to_string(i), gens[i]});
    for (int t = 0; t < 4; ++t) {
        AnElt<C> prod = AnElt<C>::one(n);
        int len = 2 + static_cast<int>(rng() % 2);
        for (int l = 0; l < len; ++l)
            prod = an_mul(prod, gens[rng() % gens.size()]);
        cases.push_back({"word" + std::to_string(t), prod});
    }
    for (auto &[name, xi] : cases) {
        auto ef = ea.apply(fa.apply(xi)) - fa.apply(ea.apply(xi));
        rep.add("A_n [e,f]=h on " + name, ef == ha.apply(xi));
        auto he = ha.apply(ea.apply(xi)) - ea.apply(ha.apply(xi));
        rep.add("A_n [h,e]=2e on " + name, he == ea.apply(xi).scaled(C(2)));
        auto hf = ha.apply(fa.apply(xi)) - fa.apply(ha.apply(xi));
        rep.add("A_n [h,f]=-2f on " + name, hf == fa.apply(xi).scaled(C(-2)));
    }
    return rep;
}

inline std::vector<int> mask_list(std::uint32_t mask) {
    std::vector<int> out;
    for (std::uint32_t m = mask; m; m &= m - 1)
        out.push_back(std::countr_zero(m) + 1);
    return out;
}

inline long mask_sum(std::uint32_t mask) {
    long s = 0;
    for (std::uint32_t m = mask; m; m &= m - 1) s += std::countr_zero(m) + 1;
    return s;
}

// Lexicographic order on m-element omega subsets as ascending index lists.
inline bool omega_less(std::uint32_t a, std::uint32_t b) {
    return mask_list(a) < mask_list(b);
}

// Monomial count in n variables of total degree t, by convolving n copies
// of the one-variable character.
inline std::vector<long> pol_char(int n, int tmax) {
    std::vector<long> ch(tmax + 1, 1); // one variable: dim 1 in each degree
    for (int v = 1; v < n; ++v) {
        std::vector<long> next(tmax + 1, 0);
        for (int t = 0; t <= tmax; ++t)
            for (int s = 0; s <= t; ++s) next[t] += ch[s];
        ch = std::move(next);
    }
    return ch;
}

// Filtration of (R_n)^{2m} by the omega order: order compatibility,
// quotient structure, and associated-graded characters up to degree D.
template <class C> Report filtration_check(int n, int m, long D) {
    Report rep;
    rep.command = "filtration";
    if (m < 0 || m > n) throw std::invalid_argument("filtration: bad m");
    std::vector<Derivation<C>> ops{sl2_e<C>(n), sl2_f<C>(n), sl2_h<C>(n)};
    std::vector<std::string> opname{"e", "f", "h"};
    std::vector<Derivation<C>> ops_poly = ops;
    for (auto &o : ops_poly)
        for (auto &g : o.wim) g = ExtPoly<C>::zero(n);
    for (std::uint32_t S = 0; S < (std::uint32_t(1) << n); ++S) {
        if (std::popcount(S) != m) continue;
        std::string sname = "S=" + poly_str(ExtPoly<C>::monomial(
                                n, S, std::vector<int>(n, 0), C(1)));
        long esum_max = (D + 2 * mask_sum(S)) / 2;
        bool order_ok = true, quot_ok = true;
        for (long tot = 0; tot <= esum_max && order_ok && quot_ok; ++tot)
            for (auto &e : exponent_vectors(n, static_cast<int>(tot))) {
                auto mono = ExtPoly<C>::monomial(n, S, e, C(1));
                auto xpart = ExtPoly<C>::monomial(n, 0u, e, C(1));
                for (size_t o = 0; o < ops.size(); ++o) {
                    auto img = ops[o].apply(mono);
                    ExtPoly<C> same(n);
                    for (auto &[k, c] : img.terms) {
                        if (omega_less(k.first, S)) order_ok = false;
                        if (k.first == S) same.add_term(k, c);
                    }
                    auto expect = ExtPoly<C>::monomial(
                                      n, S, std::vector<int>(n, 0), C(1)) *
                                  ops_poly[o].apply(xpart);
                    if (same != expect) quot_ok = false;
                }
                if (!order_ok || !quot_ok) break;
            }
        rep.add(sname + " order_compatible", order_ok);
        rep.add(sname + " quotient=omega*Pol", quot_ok);
        // character of the quotient vs the co-Verma tensor power character
        auto ch = pol_char(n, static_cast<int>(esum_max));
        bool char_ok = true;
        for (long q = -2 * mask_sum(S); q <= D; q += 2) {
            long tot = (q + 2 * mask_sum(S)) / 2;
            long dim = 0;
            if (tot >= 0)
                dim = static_cast<long>(
                    exponent_vectors(n, static_cast<int>(tot)).size());
            long expect = (tot >= 0 && tot <= esum_max) ? ch[tot] : 0;
            if (dim != expect) char_ok = false;
        }
        rep.add(sname + " character", char_ok);
    }
    return rep;
}

inline std::vector<long> nilcox_lengths(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    std::vector<long> counts;
    do {
        int len = Perm(v).length();
        if (static_cast<int>(counts.size()) <= len) counts.resize(len + 1, 0);
        counts[len] += 1;
    } while (std::next_permutation(v.begin(), v.end()));
    return counts;
}

// Same three checks on the lambda-degree-2m slice of A_n, with nh_n in
// place of Pol_n.
template <class C> Report an_filtration_check(int n, int m, long D) {
    Report rep;
    rep.command = "an_filtration";
    if (m < 0 || m > n) throw std::invalid_argument("an_filtration: bad m");
    std::vector<AnDerivation<C>> ops{an_sl2_e<C>(n), an_sl2_f<C>(n),
                                     an_sl2_h<C>(n)};
    std::vector<AnDerivation<C>> ops_nh;
    for (auto &o : ops) {
        Derivation<C> ring = o.ring;
        for (auto &g : ring.wim) g = ExtPoly<C>::zero(n);
        ops_nh.emplace_back(std::move(ring), o.Tim);
    }
    std::vector<Perm> perms;
    {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i;
        do perms.push_back(Perm(v));
        while (std::next_permutation(v.begin(), v.end()));
    }
    auto lengths = nilcox_lengths(n);
    for (std::uint32_t S = 0; S < (std::uint32_t(1) << n); ++S) {
        if (std::popcount(S) != m) continue;
        std::string sname = "S=" + poly_str(ExtPoly<C>::monomial(
                                n, S, std::vector<int>(n, 0), C(1)));
        bool order_ok = true, quot_ok = true;
        std::map<long, long> histo;
        for (auto &w : perms) {
            long lmax = (D + 2 * mask_sum(S) + 2 * w.length()) / 2;
            for (long tot = 0; tot <= lmax; ++tot)
                for (auto &e : exponent_vectors(n, static_cast<int>(tot))) {
                    histo[2 * tot - 2 * mask_sum(S) - 2 * w.length()] += 1;
                    if (!order_ok || !quot_ok) continue;
                    AnElt<C> mono(n);
                    mono.add_term(w, ExtPoly<C>::monomial(n, S, e, C(1)));
                    AnElt<C> xw(n);
                    xw.add_term(w, ExtPoly<C>::monomial(n, 0u, e, C(1)));
                    for (size_t o = 0; o < ops.size(); ++o) {
                        auto img = ops[o].apply(mono);
                        AnElt<C> same(n);
                        for (auto &[u, g] : img.terms)
                            for (auto &[k, c] : g.terms) {
                                if (omega_less(k.first, S)) order_ok = false;
                                if (k.first == S)
                                    same.add_term(
                                        u, ExtPoly<C>::monomial(n, k.first,
                                                                k.second, c));
                            }
                        auto nh = ops_nh[o].apply(xw);
                        AnElt<C> expect(n);
                        for (auto &[u, g] : nh.terms)
                            expect.add_term(
                                u, ExtPoly<C>::monomial(
                                       n, S, std::vector<int>(n, 0), C(1)) *
                                       g);
                        if (same != expect) quot_ok = false;
                    }
                }
        }
        rep.add(sname + " order_compatible", order_ok);
        rep.add(sname + " quotient=omega*nh", quot_ok);
        // character: histogram vs Pol character convolved with nilCoxeter
        // length counts, on fully enumerated degrees q <= D
        auto ch = pol_char(n, static_cast<int>((D + 2 * mask_sum(S) +
                                                2 * (lengths.size() - 1)) /
                                               2));
        bool char_ok = true;
        for (auto &[q, dim] : histo) {
            if (q > D) continue;
            long expect = 0;
            for (size_t l = 0; l < lengths.size(); ++l) {
                long tot = (q + 2 * mask_sum(S) + 2 * static_cast<long>(l)) / 2;
                if ((q + 2 * mask_sum(S)) % 2) continue;
                if (tot >= 0 && tot < static_cast<long>(ch.size()))
                    expect += lengths[l] * ch[tot];
            }
            if (dim != expect) char_ok = false;
        }
        rep.add(sname + " character", char_ok);
    }
    return rep;
}

// The q-degree-m slice of R_n with its sl_n action: joint highest-weight
// vectors, their h_i weights, and a comparison against both readings of
// the conjectured decomposition. Observations only; nothing about the
// conjecture itself is asserted.
inline Report conjecture_scan(int n, int m_max) {
    Report rep;
    rep.command = "conjecture";
    rep.info_only = true;
    using C = Rat;
    for (long m = 0; m <= m_max; ++m) {
        if (m % 2) continue; // odd slices are empty
        // basis of the slice
        std::vector<typename ExtPoly<C>::Key> basis;
        for (int mm = 0; mm <= n; ++mm)
            for (auto &k : slice_basis<C>(n, m, mm)) basis.push_back(k);
        std::map<typename ExtPoly<C>::Key, int> index;
        for (auto &k : basis) index.emplace(k, static_cast<int>(index.size()));
        int dim = static_cast<int>(basis.size());
        auto op_matrix = [&](const Derivation<C> &d) {
            Matrix<C> M(dim, dim);
            for (int j = 0; j < dim; ++j) {
                auto img = d.apply(ExtPoly<C>::monomial(
                    n, basis[j].first, basis[j].second, C(1)));
                for (auto &[k, c] : img.terms) M.at(index.at(k), j) = c;
            }
            return M;
        };
        std::vector<Matrix<C>> Es, Hs;
        for (int i = 1; i < n; ++i) {
            Es.push_back(op_matrix(sln_e<C>(n, i)));
            Hs.push_back(op_matrix(sln_h<C>(n, i)));
        }
        // joint kernel of the e_i
        Matrix<C> stacked(dim * (n - 1), dim);
        for (int i = 0; i < n - 1; ++i)
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c)
                    stacked.at(i * dim + r, c) = Es[i].at(r, c);
        auto ker = kernel(stacked);
        int kdim = static_cast<int>(ker.size());
        // h_i restricted to the kernel
        Matrix<C> K(dim, kdim);
        for (int j = 0; j < kdim; ++j)
            for (int r = 0; r < dim; ++r) K.at(r, j) = ker[j][r];
        std::vector<Matrix<C>> Hres;
        for (int i = 0; i < n - 1; ++i) {
            Matrix<C> H(kdim, kdim);
            for (int j = 0; j < kdim; ++j) {
                std::vector<C> hv(dim, C(0));
                for (int r = 0; r < dim; ++r)
                    for (int c = 0; c < dim; ++c)
                        hv[r] += Hs[i].at(r, c) * ker[j][c];
                auto sol = solve(K, hv);
                if (!sol)
                    throw std::logic_error("conjecture_scan: kernel not h-stable");
                for (int r = 0; r < kdim; ++r) H.at(r, j) = (*sol)[r];
            }
            Hres.push_back(std::move(H));
        }
        // integer weights by kernel dimensions of H_i - t
        long B = m / 2 + static_cast<long>(n) * (n + 1) / 2 + n;
        std::vector<std::vector<long>> cand(n - 1);
        for (int i = 0; i < n - 1; ++i)
            for (long t = -B; t <= B; ++t) {
                Matrix<C> M = Hres[i];
                for (int d = 0; d < kdim; ++d) M.at(d, d) -= C(t);
                if (static_cast<int>(kernel(M).size()) > 0)
                    cand[i].push_back(t);
            }
        std::map<std::vector<long>, long> observed;
        std::vector<long> tuple(n - 1, 0);
        std::function<void(int)> scan = [&](int i) {
            if (i == n - 1) {
                Matrix<C> M((n - 1) * kdim, kdim);
                for (int ii = 0; ii < n - 1; ++ii)
                    for (int r = 0; r < kdim; ++r)
                        for (int c = 0; c < kdim; ++c) {
                            C v = Hres[ii].at(r, c);
                            if (r == c) v -= C(tuple[ii]);
                            M.at(ii * kdim + r, c) = v;
                        }
                long mult = static_cast<long>(kernel(M).size());
                if (mult > 0) observed[tuple] = mult;
                return;
            }
            for (long t : cand[i]) {
                tuple[i] = t;
                scan(i + 1);
            }
        };
        if (kdim > 0) scan(0);
        long total_hw = 0;
        for (auto &[t, mult] : observed) total_hw += mult;
        rep.add("m=" + std::to_string(m) + " hw_count=kernel_dim",
                total_hw == kdim, std::to_string(total_hw),
                std::to_string(kdim));
        // dimension sum over the reported irreps (sl2 / sl3 Weyl dimensions)
        if (n == 2 || n == 3) {
            long dsum = 0;
            for (auto &[t, mult] : observed) {
                long d = (n == 2) ? t[0] + 1
                                  : (t[0] + 1) * (t[1] + 1) * (t[0] + t[1] + 2) / 2;
                dsum += mult * d;
            }
            rep.add("m=" + std::to_string(m) + " dim_sum", dsum == dim,
                    std::to_string(dsum), std::to_string(dim));
        }
        // both readings of the conjectured weights: (m/2 -+ sum(S), 0, ..., 0)
        auto reading = [&](int sign) {
            std::map<std::vector<long>, long> pred;
            for (std::uint32_t S = 0; S < (std::uint32_t(1) << n); ++S) {
                long v = m / 2 + sign * mask_sum(S);
                std::vector<long> t(n - 1, 0);
                t[0] = v;
                pred[t] += 1;
            }
            return pred;
        };
        auto plus = reading(-1);  // 1/2 m + 1/2 qdeg(omega) = m/2 - sum(S)
        auto minus = reading(+1); // 1/2 m - 1/2 qdeg(omega) = m/2 + sum(S)
        std::string obs;
        for (auto &[t, mult] : observed) {
            obs += "(";
            for (size_t i = 0; i < t.size(); ++i)
                obs += (i ? "," : "") + std::to_string(t[i]);
            obs += ")x" + std::to_string(mult) + " ";
        }
        rep.add("m=" + std::to_string(m) + " reading_plus", true, obs,
                "", observed == plus ? "matches" : "does not match");
        rep.add("m=" + std::to_string(m) + " reading_minus", true, obs,
                "", observed == minus ? "matches" : "does not match");
    }
    return rep;
}

} // namespace ennil

#endif
