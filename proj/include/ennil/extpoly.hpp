#ifndef ENNIL_EXTPOLY_HPP
#define ENNIL_EXTPOLY_HPP

#include "common.hpp"
#include "perm.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace ennil {

// Element of R_n = Pol_n (x) Lambda(w_1..w_n). Terms are keyed by
// (omega subset as bitmask, x-exponent vector); omega factors are kept in
// ascending index order and reordering signs are absorbed into coefficients.
template <class C> class ExtPoly {
public:
    using Key = std::pair<std::uint32_t, std::vector<int>>;

    int n = 0;
    std::map<Key, C> terms;

    ExtPoly() = default;
    explicit ExtPoly(int rank) : n(rank) {}

    static ExtPoly zero(int n) { return ExtPoly(n); }

    static ExtPoly constant(int n, C c) {
        ExtPoly f(n);
        f.add_term({0u, std::vector<int>(n, 0)}, std::move(c));
        return f;
    }

    static ExtPoly one(int n) { return constant(n, C(1)); }

    static ExtPoly x(int n, int i, C c = C(1)) { // 1-based
        if (i < 1 || i > n) throw std::out_of_range("x index");
        ExtPoly f(n);
        std::vector<int> e(n, 0);
        e[i - 1] = 1;
        f.add_term({0u, std::move(e)}, std::move(c));
        return f;
    }

    static ExtPoly w(int n, int i, C c = C(1)) { // 1-based
        if (i < 1 || i > n) throw std::out_of_range("w index");
        ExtPoly f(n);
        f.add_term({std::uint32_t(1) << (i - 1), std::vector<int>(n, 0)},
                   std::move(c));
        return f;
    }

    static ExtPoly monomial(int n, std::uint32_t mask, std::vector<int> e, C c) {
        ExtPoly f(n);
        f.add_term({mask, std::move(e)}, std::move(c));
        return f;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(Key k, C c) {
        auto it = terms.find(k);
        if (it == terms.end()) {
            if (!ennil::is_zero(c)) terms.emplace(std::move(k), std::move(c));
        } else {
            it->second += c;
            if (ennil::is_zero(it->second)) terms.erase(it);
        }
    }

    ExtPoly &operator+=(const ExtPoly &o) {
        check_rank(o);
        for (auto &[k, c] : o.terms) add_term(k, c);
        return *this;
    }
    ExtPoly &operator-=(const ExtPoly &o) {
        check_rank(o);
        for (auto &[k, c] : o.terms) add_term(k, -c);
        return *this;
    }
    friend ExtPoly operator+(ExtPoly a, const ExtPoly &b) { return a += b; }
    friend ExtPoly operator-(ExtPoly a, const ExtPoly &b) { return a -= b; }
    ExtPoly operator-() const {
        ExtPoly r(n);
        for (auto &[k, c] : terms) r.terms.emplace(k, -c);
        return r;
    }
    ExtPoly scaled(const C &c) const {
        ExtPoly r(n);
        if (ennil::is_zero(c)) return r;
        for (auto &[k, v] : terms) r.add_term(k, v * c);
        return r;
    }

    bool operator==(const ExtPoly &o) const {
        return n == o.n && terms == o.terms;
    }
    bool operator!=(const ExtPoly &o) const { return !(*this == o); }

    void check_rank(const ExtPoly &o) const {
        if (n != o.n) throw std::invalid_argument("ExtPoly: rank mismatch");
    }
};

// Sign of sorting the concatenation w_A * w_B into ascending order:
// counts pairs (i in A, j in B) with j < i.
inline int super_sign(std::uint32_t a, std::uint32_t b) {
    int swaps = 0;
    for (std::uint32_t m = a; m; m &= m - 1) {
        int i = std::countr_zero(m);
        swaps += std::popcount(b & ((std::uint32_t(1) << i) - 1));
    }
    return (swaps & 1) ? -1 : 1;
}

template <class C>
ExtPoly<C> ext_mul(const ExtPoly<C> &f, const ExtPoly<C> &g) {
    f.check_rank(g);
    ExtPoly<C> r(f.n);
    for (auto &[ka, ca] : f.terms) {
        for (auto &[kb, cb] : g.terms) {
            if (ka.first & kb.first) continue; // repeated odd variable
            std::vector<int> e(ka.second);
            for (int i = 0; i < f.n; ++i) e[i] += kb.second[i];
            C c = ca * cb;
            if (super_sign(ka.first, kb.first) < 0) c = -c;
            r.add_term({ka.first | kb.first, std::move(e)}, std::move(c));
        }
    }
    return r;
}

template <class C>
ExtPoly<C> operator*(const ExtPoly<C> &f, const ExtPoly<C> &g) {
    return ext_mul(f, g);
}

// Bidegree per deg(x_i)=(2,0), deg(w_i)=(-2i,2).
template <class C>
std::pair<long, long> term_bidegree(const ExtPoly<C> &f,
                                    const typename ExtPoly<C>::Key &k) {
    long q = 0;
    for (int i = 0; i < f.n; ++i) q += 2L * k.second[i];
    long lam = 0;
    for (std::uint32_t m = k.first; m; m &= m - 1) {
        int i = std::countr_zero(m) + 1;
        q -= 2L * i;
        lam += 2;
    }
    return {q, lam};
}

// Common bidegree of all terms, or nullopt if inhomogeneous.
// Throws on zero input.
template <class C>
std::optional<std::pair<long, long>> bidegree(const ExtPoly<C> &f) {
    if (f.is_zero()) throw std::invalid_argument("bidegree: zero input");
    std::optional<std::pair<long, long>> deg;
    for (auto &[k, c] : f.terms) {
        auto d = term_bidegree(f, k);
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg;
}

template <class C> int parity(const ExtPoly<C> &f) {
    auto d = bidegree(f);
    if (!d) throw std::invalid_argument("parity: inhomogeneous");
    return static_cast<int>((d->second / 2) % 2);
}

// s_j: x_j <-> x_{j+1}; w_k -> w_k + delta_{j,k}(x_k - x_{k+1}) w_{k+1},
// extended as a ring automorphism.
template <class C>
ExtPoly<C> apply_transposition(int j, const ExtPoly<C> &f) {
    if (j < 1 || j >= f.n) throw std::out_of_range("transposition index");
    ExtPoly<C> r(f.n);
    ExtPoly<C> wj_image =
        ExtPoly<C>::w(f.n, j) +
        (ExtPoly<C>::x(f.n, j) - ExtPoly<C>::x(f.n, j + 1)) *
            ExtPoly<C>::w(f.n, j + 1);
    for (auto &[k, c] : f.terms) {
        std::vector<int> e(k.second);
        std::swap(e[j - 1], e[j]);
        ExtPoly<C> t = ExtPoly<C>::monomial(f.n, 0u, std::move(e), c);
        for (std::uint32_t m = k.first; m; m &= m - 1) {
            int i = std::countr_zero(m) + 1;
            if (i == j) t = t * wj_image;
            else t = t * ExtPoly<C>::w(f.n, i);
        }
        r += t;
    }
    return r;
}

template <class C>
ExtPoly<C> apply_permutation(const Perm &w, const ExtPoly<C> &f) {
    if (w.n() != f.n) throw std::invalid_argument("rank mismatch");
    auto word = w.reduced_word();
    ExtPoly<C> r = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        r = apply_transposition(*it, r);
    return r;
}

// Exact division of g by (x_j - x_{j+1}); throws if not divisible
// (which signals an internal bug for Demazure inputs).
template <class C>
ExtPoly<C> divide_by_xdiff(ExtPoly<C> g, int j) {
    ExtPoly<C> q(g.n);
    while (!g.is_zero()) {
        auto best = g.terms.end();
        int bestdeg = -1;
        for (auto it = g.terms.begin(); it != g.terms.end(); ++it) {
            if (it->first.second[j - 1] > bestdeg) {
                bestdeg = it->first.second[j - 1];
                best = it;
            }
        }
        if (bestdeg == 0)
            throw std::logic_error("divide_by_xdiff: not divisible");
        auto key = best->first;
        C c = best->second;
        key.second[j - 1] -= 1;
        ExtPoly<C> qt = ExtPoly<C>::monomial(g.n, key.first, key.second, c);
        q += qt;
        g -= qt * (ExtPoly<C>::x(g.n, j) - ExtPoly<C>::x(g.n, j + 1));
    }
    return q;
}

// Demazure operator T_j(f) = (f - s_j f)/(x_j - x_{j+1}).
template <class C> ExtPoly<C> demazure(int j, const ExtPoly<C> &f) {
    if (j < 1 || j >= f.n) throw std::out_of_range("demazure index");
    return divide_by_xdiff(f - apply_transposition(j, f), j);
}

// Complete homogeneous symmetric polynomial h_l(x_j..x_k); h_0 = 1,
// h_l = 0 for l < 0.
template <class C> ExtPoly<C> complete_h(int n, int l, int j, int k) {
    if (j < 1 || k > n || j > k) throw std::out_of_range("complete_h range");
    if (l < 0) return ExtPoly<C>::zero(n);
    if (l == 0) return ExtPoly<C>::one(n);
    if (j == k) {
        std::vector<int> e(n, 0);
        e[j - 1] = l;
        return ExtPoly<C>::monomial(n, 0u, std::move(e), C(1));
    }
    ExtPoly<C> r(n);
    ExtPoly<C> xj_pow = ExtPoly<C>::one(n);
    for (int a = 0; a <= l; ++a) {
        r += xj_pow * complete_h<C>(n, l - a, j + 1, k);
        xj_pow = xj_pow * ExtPoly<C>::x(n, j);
    }
    return r;
}

// Elementary symmetric polynomial e_l(x_j..x_k); e_0 = 1, e_l = 0 for
// l < 0 or l > k-j+1.
template <class C> ExtPoly<C> elementary_e(int n, int l, int j, int k) {
    if (j < 1 || k > n || j > k) throw std::out_of_range("elementary_e range");
    if (l < 0 || l > k - j + 1) return ExtPoly<C>::zero(n);
    if (l == 0) return ExtPoly<C>::one(n);
    if (j == k) return ExtPoly<C>::x(n, j); // here l == 1
    return elementary_e<C>(n, l, j + 1, k) +
           ExtPoly<C>::x(n, j) * elementary_e<C>(n, l - 1, j + 1, k);
}

// Labeled omega: w_k^a = sum_{l=1}^{k} (-1)^{a+k+l} h_{a+l-k}(l,k) w_l.
template <class C> ExtPoly<C> labeled_omega(int n, int k, int a) {
    if (k < 1 || k > n) throw std::out_of_range("labeled_omega index");
    if (a < 0) throw std::out_of_range("labeled_omega label");
    ExtPoly<C> r(n);
    for (int l = 1; l <= k; ++l) {
        ExtPoly<C> h = complete_h<C>(n, a + l - k, l, k);
        if (h.is_zero()) continue;
        ExtPoly<C> t = h * ExtPoly<C>::w(n, l);
        if ((a + k + l) & 1) t = -t;
        r += t;
    }
    return r;
}

template <class C> bool is_invariant(const ExtPoly<C> &f) {
    for (int j = 1; j < f.n; ++j)
        if (apply_transposition(j, f) != f) return false;
    return true;
}

// All x-exponent vectors of length n with given total degree.
inline void exponents_of_total(int n, int total, std::vector<std::vector<int>> &out,
                               std::vector<int> &cur, int pos = 0) {
    if (pos == n - 1) {
        cur[pos] = total;
        out.push_back(cur);
        return;
    }
    for (int a = 0; a <= total; ++a) {
        cur[pos] = a;
        exponents_of_total(n, total - a, out, cur, pos + 1);
    }
}

inline std::vector<std::vector<int>> exponent_vectors(int n, int total) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(n, 0);
    exponents_of_total(n, total, out, cur);
    return out;
}

// Monomial basis of the bidegree-(q, 2m) slice of R_n.
template <class C>
std::vector<typename ExtPoly<C>::Key> slice_basis(int n, long q, int m) {
    std::vector<typename ExtPoly<C>::Key> basis;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        if (std::popcount(mask) != m) continue;
        long wsum = 0;
        for (std::uint32_t mm = mask; mm; mm &= mm - 1)
            wsum += std::countr_zero(mm) + 1;
        long twice_deg = q + 2 * wsum;
        if (twice_deg < 0 || twice_deg % 2) continue;
        for (auto &e : exponent_vectors(n, static_cast<int>(twice_deg / 2)))
            basis.push_back({mask, e});
    }
    return basis;
}

// All monomials of R_n with q-degree <= D (as keys).
template <class C>
std::vector<typename ExtPoly<C>::Key> monomials_up_to(int n, long D) {
    std::vector<typename ExtPoly<C>::Key> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        long wsum = 0;
        for (std::uint32_t mm = mask; mm; mm &= mm - 1)
            wsum += std::countr_zero(mm) + 1;
        long maxdeg = (D + 2 * wsum) / 2;
        for (long t = 0; t <= maxdeg; ++t)
            for (auto &e : exponent_vectors(n, static_cast<int>(t)))
                out.push_back({mask, e});
    }
    return out;
}

// Staircase exponents 0 <= b_i <= n-i (free basis of R_n over invariants).
inline std::vector<std::vector<int>> staircase_exponents(int n) {
    std::vector<std::vector<int>> out{{}};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::vector<int>> next;
        for (auto &v : out)
            for (int b = 0; b <= n - i; ++b) {
                auto w = v;
                w.push_back(b);
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

// Canonical text form: terms sorted by (x-exponents lex, omega-set lex),
// e.g. "2*x1^2*x2*w1*w3 - w2".
template <class C> std::string poly_str(const ExtPoly<C> &f) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<typename ExtPoly<C>::Key, C>> ts(f.terms.begin(),
                                                          f.terms.end());
    std::sort(ts.begin(), ts.end(), [](const auto &a, const auto &b) {
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first < b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto &[k, c] : ts) {
        std::string cs = coeff_str(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        std::vector<std::string> factors;
        for (int i = 0; i < f.n; ++i) {
            if (k.second[i] == 0) continue;
            std::string v = "x" + std::to_string(i + 1);
            if (k.second[i] > 1) v += "^" + std::to_string(k.second[i]);
            factors.push_back(v);
        }
        for (std::uint32_t m = k.first; m; m &= m - 1)
            factors.push_back("w" + std::to_string(std::countr_zero(m) + 1));
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (factors.empty()) {
            os << cs;
        } else {
            bool wrote = false;
            if (cs != "1") { os << cs; wrote = true; }
            for (auto &v : factors) {
                if (wrote) os << "*";
                os << v;
                wrote = true;
            }
        }
    }
    return os.str();
}

} // namespace ennil

#endif
