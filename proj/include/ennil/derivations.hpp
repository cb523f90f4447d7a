#ifndef ENNIL_DERIVATIONS_HPP
#define ENNIL_DERIVATIONS_HPP

#include "extpoly.hpp"

#include <map>

namespace ennil {

// alpha_{i,j} = sum_{l=j}^{n} x_l^2 prod_{k=i+1}^{j-1} (x_k - x_l),
// for 1 <= i < j <= n. Memoized per (n,i,j).
template <class C> ExtPoly<C> alpha_poly(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n)) throw std::out_of_range("alpha indices");
    static std::map<std::tuple<int, int, int>, ExtPoly<C>> cache;
    auto key = std::make_tuple(n, i, j);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    ExtPoly<C> r(n);
    for (int l = j; l <= n; ++l) {
        ExtPoly<C> t = ExtPoly<C>::x(n, l) * ExtPoly<C>::x(n, l);
        for (int k = i + 1; k <= j - 1; ++k)
            t = t * (ExtPoly<C>::x(n, k) - ExtPoly<C>::x(n, l));
        r += t;
    }
    cache.emplace(key, r);
    return r;
}

// partial d/dx_r applied to w_i:
// 0 if i >= r, else sum_{j=i+1}^{r} prod_{k=i+1}^{j-1} (x_k - x_r) w_j.
template <class C> ExtPoly<C> partial_omega(int r, int i, int n) {
    ExtPoly<C> res(n);
    if (i >= r) return res;
    for (int j = i + 1; j <= r; ++j) {
        ExtPoly<C> t = ExtPoly<C>::w(n, j);
        for (int k = i + 1; k <= j - 1; ++k)
            t = (ExtPoly<C>::x(n, k) - ExtPoly<C>::x(n, r)) * t;
        res += t;
    }
    return res;
}

// An even derivation on R_n stored as its generator-image table and
// extended over products by the Leibniz rule.
template <class C> struct Derivation {
    int n = 0;
    std::vector<ExtPoly<C>> xim; // image of x_{i+1}
    std::vector<ExtPoly<C>> wim; // image of w_{i+1}

    Derivation() = default;
    explicit Derivation(int rank)
        : n(rank), xim(rank, ExtPoly<C>(rank)), wim(rank, ExtPoly<C>(rank)) {}

    ExtPoly<C> apply(const ExtPoly<C> &f) const {
        if (f.n != n) throw std::invalid_argument("Derivation: rank mismatch");
        ExtPoly<C> out(n);
        for (auto &[k, c] : f.terms) {
            // x-part
            for (int i = 0; i < n; ++i) {
                if (k.second[i] == 0 || xim[i].is_zero()) continue;
                auto e = k.second;
                e[i] -= 1;
                ExtPoly<C> base =
                    ExtPoly<C>::monomial(n, k.first, e, c * C(k.second[i]));
                out += base * xim[i];
            }
            // omega-part: replace each odd factor in place; the operator is
            // even, so ext_mul's sign bookkeeping is all that is needed.
            for (std::uint32_t m = k.first; m; m &= m - 1) {
                int i = std::countr_zero(m); // 0-based
                if (wim[i].is_zero()) continue;
                std::uint32_t low = k.first & ((std::uint32_t(1) << i) - 1);
                std::uint32_t high =
                    k.first & ~((std::uint32_t(1) << (i + 1)) - 1);
                ExtPoly<C> pre = ExtPoly<C>::monomial(n, low, k.second, c);
                ExtPoly<C> post = ExtPoly<C>::monomial(
                    n, high, std::vector<int>(n, 0), C(1));
                out += pre * wim[i] * post;
            }
        }
        return out;
    }

    ExtPoly<C> apply_pow(ExtPoly<C> f, int k) const {
        for (int t = 0; t < k; ++t) f = apply(f);
        return f;
    }
};

// d_n: x_i -> x_i^2, w_i -> sum_{j>i} alpha_{i,j} w_j, w_n -> 0.
template <class C> Derivation<C> dn_derivation(int n) {
    Derivation<C> d(n);
    for (int i = 1; i <= n; ++i) {
        d.xim[i - 1] = ExtPoly<C>::x(n, i) * ExtPoly<C>::x(n, i);
        for (int j = i + 1; j <= n; ++j)
            d.wim[i - 1] += alpha_poly<C>(i, j, n) * ExtPoly<C>::w(n, j);
    }
    return d;
}

// d/dx_r.
template <class C> Derivation<C> partial_derivation(int n, int r) {
    if (r < 1 || r > n) throw std::out_of_range("partial index");
    Derivation<C> d(n);
    d.xim[r - 1] = ExtPoly<C>::one(n);
    for (int i = 1; i <= n; ++i) d.wim[i - 1] = partial_omega<C>(r, i, n);
    return d;
}

// Witt operator l_k = sum_j x_j^{k+1} d/dx_j, k >= -1.
template <class C> Derivation<C> witt_derivation(int n, int k) {
    if (k < -1) throw std::out_of_range("witt index");
    Derivation<C> d(n);
    for (int j = 1; j <= n; ++j) {
        ExtPoly<C> xpow = ExtPoly<C>::one(n);
        for (int t = 0; t < k + 1; ++t) xpow = xpow * ExtPoly<C>::x(n, j);
        d.xim[j - 1] = xpow;
        for (int i = 1; i <= n; ++i)
            d.wim[i - 1] += xpow * partial_omega<C>(j, i, n);
    }
    return d;
}

// sl2 triple e = l_1, f = -l_{-1}, h = 2 l_0.
template <class C> Derivation<C> sl2_e(int n) { return witt_derivation<C>(n, 1); }
template <class C> Derivation<C> sl2_f(int n) {
    Derivation<C> d = witt_derivation<C>(n, -1);
    for (auto &g : d.xim) g = -g;
    for (auto &g : d.wim) g = -g;
    return d;
}
template <class C> Derivation<C> sl2_h(int n) {
    Derivation<C> d = witt_derivation<C>(n, 0);
    for (auto &g : d.xim) g = g + g;
    for (auto &g : d.wim) g = g + g;
    return d;
}

// deg_q: the Euler operator multiplying a monomial by its q-degree.
template <class C> Derivation<C> degq_derivation(int n) {
    Derivation<C> d(n);
    for (int i = 1; i <= n; ++i) {
        d.xim[i - 1] = ExtPoly<C>::x(n, i, C(2));
        d.wim[i - 1] = ExtPoly<C>::w(n, i, C(-2 * i));
    }
    return d;
}

// sl_n operators e_i = x_i d/dx_{i+1}, f_i = x_{i+1} d/dx_i, and
// h_i = [e_i, f_i] (a derivation; its table is the commutator on generators).
template <class C> Derivation<C> sln_e(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("sln index");
    Derivation<C> d(n);
    d.xim[i] = ExtPoly<C>::x(n, i);
    ExtPoly<C> xi = ExtPoly<C>::x(n, i);
    for (int j = 1; j <= n; ++j) d.wim[j - 1] = xi * partial_omega<C>(i + 1, j, n);
    return d;
}
template <class C> Derivation<C> sln_f(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("sln index");
    Derivation<C> d(n);
    d.xim[i - 1] = ExtPoly<C>::x(n, i + 1);
    ExtPoly<C> xi1 = ExtPoly<C>::x(n, i + 1);
    for (int j = 1; j <= n; ++j) d.wim[j - 1] = xi1 * partial_omega<C>(i, j, n);
    return d;
}
template <class C> Derivation<C> sln_h(int n, int i) {
    Derivation<C> e = sln_e<C>(n, i), f = sln_f<C>(n, i);
    Derivation<C> d(n);
    for (int j = 1; j <= n; ++j) {
        d.xim[j - 1] = e.apply(f.xim[j - 1]) - f.apply(e.xim[j - 1]);
        d.wim[j - 1] = e.apply(f.wim[j - 1]) - f.apply(e.wim[j - 1]);
    }
    return d;
}

// Twisted application: d_alpha on P_n = R_n.v with d(v) = g_alpha v,
// realized as f -> d_n(f) + f*g_alpha.
template <class C> struct TwistedDn {
    int n = 0;
    Derivation<C> dn;
    ExtPoly<C> g_alpha;

    TwistedDn(int rank, const std::vector<long> &weights)
        : n(rank), dn(dn_derivation<C>(rank)), g_alpha(rank) {
        if (static_cast<int>(weights.size()) != rank)
            throw std::invalid_argument("TwistedDn: weight count");
        for (int i = 1; i <= rank; ++i)
            g_alpha += ExtPoly<C>::x(n, i, C(weights[i - 1]));
    }

    // The preset alpha_i = a*(i-n), satisfying alpha_{i+1} - alpha_i = a.
    static TwistedDn preset(int rank, long a) {
        std::vector<long> w(rank);
        for (int i = 1; i <= rank; ++i) w[i - 1] = a * (i - rank);
        return TwistedDn(rank, w);
    }

    ExtPoly<C> apply(const ExtPoly<C> &f) const {
        return dn.apply(f) + f * g_alpha;
    }

    ExtPoly<C> apply_pow(ExtPoly<C> f, int k) const {
        for (int t = 0; t < k; ++t) f = apply(f);
        return f;
    }
};

// phi'_n: R_n -> R_{n+1}: x_i -> x_i,
// w_i -> w_i - sum_{l=i+1}^{n+1} x_{n+1} prod_{j=i+1}^{l-1}(x_j - x_{n+1}) w_l.
template <class C> ExtPoly<C> phi_prime_omega(int n, int i) {
    int N = n + 1;
    ExtPoly<C> r = ExtPoly<C>::w(N, i);
    for (int l = i + 1; l <= N; ++l) {
        ExtPoly<C> t = ExtPoly<C>::x(N, N);
        for (int j = i + 1; j <= l - 1; ++j)
            t = t * (ExtPoly<C>::x(N, j) - ExtPoly<C>::x(N, N));
        r -= t * ExtPoly<C>::w(N, l);
    }
    return r;
}

template <class C> ExtPoly<C> phi_prime(int n, const ExtPoly<C> &f) {
    if (f.n != n) throw std::invalid_argument("phi_prime: rank mismatch");
    int N = n + 1;
    ExtPoly<C> out(N);
    for (auto &[k, c] : f.terms) {
        std::vector<int> e = k.second;
        e.push_back(0);
        ExtPoly<C> t = ExtPoly<C>::monomial(N, 0u, e, c);
        for (std::uint32_t m = k.first; m; m &= m - 1)
            t = t * phi_prime_omega<C>(n, std::countr_zero(m) + 1);
        out += t;
    }
    return out;
}

// phi'_{m,n} = phi'_{n-1} ... phi'_m (identity for m = n).
template <class C> ExtPoly<C> phi_prime_chain(int m, int n, ExtPoly<C> f) {
    if (m > n) throw std::invalid_argument("phi_prime_chain: m > n");
    for (int t = m; t < n; ++t) f = phi_prime<C>(t, f);
    return f;
}

// Omega_n(w_i) = phi'_{i,n}(w_i).
template <class C> ExtPoly<C> omega_map(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("omega_map index");
    return phi_prime_chain<C>(i, n, ExtPoly<C>::w(i, i));
}

// Coefficients of (x^2 d/dx)^n = sum_i a_{i,n} x^{n+i} d^i/dx^i via the
// recursion a_{1,n} = n!, a_{n,n} = 1, a_{j,n} = a_{j-1,n-1} + (n-1+j) a_{j,n-1}.
inline std::map<std::pair<int, int>, Int> shift_coeffs(int nmax) {
    std::map<std::pair<int, int>, Int> a;
    a[{1, 1}] = 1;
    for (int n = 2; n <= nmax; ++n) {
        for (int j = 1; j <= n; ++j) {
            Int v = 0;
            if (j >= 2) v += a[{j - 1, n - 1}];
            if (j <= n - 1) v += Int(n - 1 + j) * a[{j, n - 1}];
            if (j == n) v = a[{j - 1, n - 1}];
            a[{j, n}] = v;
        }
    }
    return a;
}

} // namespace ennil

#endif
