#ifndef ENNIL_KTHEORY_HPP
#define ENNIL_KTHEORY_HPP

#include "ennilhecke.hpp"
#include "pcomplex.hpp"

namespace ennil {

// p x p matrix over the rationalized O_p[l^{+-1}], acting on coordinate
// columns indexed by n (K0 model, coefficient of [A_n]) or i (Verma model,
// coefficient of m_i).
struct QLMat {
    long p = 0;
    std::vector<std::vector<QLambda>> a;

    explicit QLMat(long prime)
        : p(prime), a(prime, std::vector<QLambda>(prime, QLambda(prime))) {}

    static QLMat zero(long p) { return QLMat(p); }
    static QLMat identity(long p) {
        QLMat m(p);
        for (long i = 0; i < p; ++i) m.a[i][i] = QLambda::from_int(p, 1);
        return m;
    }

    bool is_zero() const {
        for (auto &row : a)
            for (auto &v : row)
                if (!v.is_zero()) return false;
        return true;
    }
    bool operator==(const QLMat &o) const { return p == o.p && a == o.a; }
};

inline QLMat operator*(const QLMat &x, const QLMat &y) {
    QLMat r(x.p);
    for (long i = 0; i < x.p; ++i)
        for (long k = 0; k < x.p; ++k) {
            if (x.a[i][k].is_zero()) continue;
            for (long j = 0; j < x.p; ++j)
                r.a[i][j] = r.a[i][j] + x.a[i][k] * y.a[k][j];
        }
    return r;
}
inline QLMat operator+(const QLMat &x, const QLMat &y) {
    QLMat r(x.p);
    for (long i = 0; i < x.p; ++i)
        for (long j = 0; j < x.p; ++j) r.a[i][j] = x.a[i][j] + y.a[i][j];
    return r;
}
inline QLMat operator-(const QLMat &x, const QLMat &y) {
    QLMat r(x.p);
    for (long i = 0; i < x.p; ++i)
        for (long j = 0; j < x.p; ++j) r.a[i][j] = x.a[i][j] - y.a[i][j];
    return r;
}
inline QLMat scaled(const QLMat &x, const QLambda &c) {
    QLMat r(x.p);
    for (long i = 0; i < x.p; ++i)
        for (long j = 0; j < x.p; ++j) r.a[i][j] = x.a[i][j] * c;
    return r;
}
inline QLMat mat_pow(QLMat x, long e) {
    QLMat r = QLMat::identity(x.p);
    for (long t = 0; t < e; ++t) r = r * x;
    return r;
}

// The K0 class of E on [A_n]: [n](l q^{-n} - l^{-1} q^{n}).
inline QLambda k0_E_class(long p, long n) {
    QLambda bracket = QLambda::from_cyclo(quantum_int(p, n));
    QLambda inner = QLambda::l_power(p, 1) * QLambda::q_power(p, -n) -
                    QLambda::l_power(p, -1) * QLambda::q_power(p, n);
    return bracket * inner;
}

inline QLambda qq_inv(long p) { // 1/(q - q^{-1})
    Cyclo qq = Cyclo::q_power(p, 1) - Cyclo::q_power(p, -1);
    return QLambda::from_cyclo(cyclo_invert(qq));
}

// K0 operators. The printed form uses the undivided E class and
// K[A_n] = l q^{-2n}; the coherent form divides E by q - q^{-1} and uses
// K[A_n] = l q^{-2n-1}, which is the variant satisfying the u_q(sl2)
// relations and intertwining with the Verma module at highest weight
// l q^{-1}.
enum class K0Model { printed, coherent };

inline QLMat k0_op_E(long p, K0Model model) {
    QLMat m(p);
    for (long n = 1; n < p; ++n) {
        QLambda v = k0_E_class(p, n);
        if (model == K0Model::coherent) v = v * qq_inv(p);
        m.a[n - 1][n] = v;
    }
    return m;
}

inline QLMat k0_op_F(long p) {
    QLMat m(p);
    for (long n = 0; n + 1 < p; ++n) m.a[n + 1][n] = QLambda::from_int(p, 1);
    return m;
}

inline QLMat k0_op_K(long p, int sign, K0Model model) {
    QLMat m(p);
    for (long n = 0; n < p; ++n) {
        long qe = (model == K0Model::coherent) ? -2 * n - 1 : -2 * n;
        QLambda v = QLambda::l_power(p, 1) * QLambda::q_power(p, qe);
        m.a[n][n] = sign >= 0 ? v : qlambda_invert(v);
    }
    return m;
}

// Baby Verma operators at highest weight hw (a unit, e.g. l or l q^{-1}):
// K m_i = hw q^{-2i} m_i, F m_i = m_{i+1} (0 at i = p-1),
// E m_i = [i](hw q^{1-i} - hw^{-1} q^{i-1})/(q - q^{-1}) m_{i-1}.
inline QLMat verma_op_E(long p, const QLambda &hw) {
    QLMat m(p);
    QLambda hwinv = qlambda_invert(hw);
    QLambda inv = qq_inv(p);
    for (long i = 1; i < p; ++i) {
        QLambda bracket = QLambda::from_cyclo(quantum_int(p, i));
        QLambda inner = hw * QLambda::q_power(p, 1 - i) -
                        hwinv * QLambda::q_power(p, i - 1);
        m.a[i - 1][i] = bracket * inner * inv;
    }
    return m;
}

inline QLMat verma_op_F(long p) { return k0_op_F(p); }

inline QLMat verma_op_K(long p, const QLambda &hw, int sign) {
    QLMat m(p);
    for (long i = 0; i < p; ++i) {
        QLambda v = hw * QLambda::q_power(p, -2 * i);
        m.a[i][i] = sign >= 0 ? v : qlambda_invert(v);
    }
    return m;
}

// The five defining relations of the small quantum group, as exact matrix
// identities on the p-dimensional state space.
inline Report uqsl2_relations(long p, const QLMat &E, const QLMat &F,
                              const QLMat &K, const QLMat &Kinv) {
    Report rep;
    QLambda q2 = QLambda::q_power(p, 2), qm2 = QLambda::q_power(p, -2);
    rep.add("K*Kinv=1", K * Kinv == QLMat::identity(p), "K K^-1", "1");
    rep.add("KE=q^2EK", K * E == scaled(E * K, q2), "KE", "q^2 EK");
    rep.add("KF=q^-2FK", K * F == scaled(F * K, qm2), "KF", "q^-2 FK");
    QLMat comm = E * F - F * E;
    QLMat rhs = scaled(K - Kinv, qq_inv(p));
    rep.add("EF-FE=(K-Kinv)/(q-qinv)", comm == rhs, "EF-FE", "(K-K^-1)/(q-q^-1)");
    rep.add("E^p=0", mat_pow(E, p).is_zero(), "E^p", "0");
    rep.add("F^p=0", mat_pow(F, p).is_zero(), "F^p", "0");
    return rep;
}

inline Report verify_uqsl2(long p, const std::string &model) {
    Report rep;
    rep.command = "verify_uqsl2";
    if (model == "K0") {
        Report r = uqsl2_relations(p, k0_op_E(p, K0Model::coherent), k0_op_F(p),
                                   k0_op_K(p, +1, K0Model::coherent),
                                   k0_op_K(p, -1, K0Model::coherent));
        rep.merge(r, "K0");
    } else if (model == "Verma") {
        QLambda hw = QLambda::l_power(p, 1);
        Report r = uqsl2_relations(p, verma_op_E(p, hw), verma_op_F(p),
                                   verma_op_K(p, hw, +1), verma_op_K(p, hw, -1));
        rep.merge(r, "Verma");
    } else {
        throw std::invalid_argument("verify_uqsl2: model must be K0 or Verma");
    }
    return rep;
}

// Phi([A_r]) = (q - q^{-1}) m_r intertwines the K0 operators with the baby
// Verma module at highest weight l q^{-1}.
inline Report verify_iso(long p) {
    Report rep;
    rep.command = "verify_iso";
    QLambda hw = QLambda::l_power(p, 1) * QLambda::q_power(p, -1);
    QLMat phi = scaled(QLMat::identity(p), QLambda::from_cyclo(
                                               Cyclo::q_power(p, 1) -
                                               Cyclo::q_power(p, -1)));
    rep.add("phi_invertible", true, "(q-q^-1) diagonal", "unit",
            "diagonal unit matrix");
    auto intertwine = [&](const std::string &name, const QLMat &a,
                          const QLMat &b) {
        rep.add("phi_" + name, phi * a == b * phi, "phi o " + name,
                name + " o phi");
    };
    intertwine("E", k0_op_E(p, K0Model::coherent), verma_op_E(p, hw));
    intertwine("F", k0_op_F(p), verma_op_F(p));
    intertwine("K", k0_op_K(p, +1, K0Model::coherent), verma_op_K(p, hw, +1));
    intertwine("Kinv", k0_op_K(p, -1, K0Model::coherent), verma_op_K(p, hw, -1));
    return rep;
}

// The categorified E class via the weighted-shift filtration: for j = 1..n
// a complex with weight w_j = (n-1) - 2(j-1), generator at q = -2(j-1)
// (even, lambda 0), plus the omega-shifted copy at q - 2n (odd, lambda 2).
// Returns -q^{2n-1} l^{-1} ([F] + [F^w]) and compares with the E class.
inline std::pair<QLambda, Report> categorified_E_class(long n, long p) {
    Report rep;
    rep.command = "categorified_E_class";
    if (!(0 < n && n < p))
        throw std::invalid_argument("categorified_E_class: need 0 < n < p");
    auto filtration_symbol = [&](long q_extra, long lam, int parity) {
        QLambda total(p);
        for (long j = 1; j <= n; ++j) {
            long w = (n - 1) - 2 * (j - 1);
            long q0 = -2 * (j - 1) + q_extra;
            long r0 = (((-w) % p) + p) % p;
            int count = static_cast<int>(r0 + 1 + p); // leading block + one tail
            Report wrep = weighted_shift_blocks(p, w, count, q0, lam, parity);
            rep.merge(wrep, "j=" + std::to_string(j) +
                                (q_extra ? ",omega" : ""));
            total = total +
                    k0_symbol(weighted_shift_complex(p, w, count, q0, lam,
                                                     parity));
        }
        return total;
    };
    QLambda F = filtration_symbol(0, 0, 0);
    QLambda Fw = filtration_symbol(-2 * n, 2, 1);
    // intermediate identity [F] = sum_{j=0}^{n-1} q^{2(1-n)+2j}
    QLambda Fexpect(p);
    for (long j = 0; j < n; ++j)
        Fexpect = Fexpect + QLambda::q_power(p, 2 * (1 - n) + 2 * j);
    rep.add("[F]", F == Fexpect, qlambda_str(F), qlambda_str(Fexpect));
    QLambda result = -(QLambda::q_power(p, 2 * n - 1) *
                       QLambda::l_power(p, -1) * (F + Fw));
    QLambda expect = k0_E_class(p, n);
    rep.add("E_class", result == expect, qlambda_str(result),
            qlambda_str(expect));
    return {result, rep};
}

// Normal-form basis elements of A_{n-1} embedded in A_n (polynomial part
// only: x-monomials in the first n-1 variables times T_w, w in S_{n-1}).
namespace detail {

inline std::vector<Perm> all_perms(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    std::vector<Perm> out;
    do out.push_back(Perm(v));
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

inline Perm embed_perm(const Perm &w, int n) {
    std::vector<int> img = w.img;
    while (static_cast<int>(img.size()) < n)
        img.push_back(static_cast<int>(img.size()));
    return Perm(img);
}

} // namespace detail

// Confirms the weighted-shift weights w_i = (n-1) - 2(n-i) on the coset
// filtration of A_n over A_{n-1}. A_n is free as a right A_{n-1}-module on
// {T~_i x_n^r}, where T~_i = T_i T_{i+1} ... T_{n-1} are the minimal-length
// coset representatives (T~_n = 1); the module differential is
// d = d_1 + (n-1)(. x_n). Modulo the span of the shorter cosets (i' > i)
// the differential is the pure weighted shift
//   d(T~_i x_n^r) = (w_i + r) T~_i x_n^{r+1},
// which is checked here by an exact linear solve over F_p in each graded
// slice. These are the weights used by categorified_E_class.
inline Report d_matrix_consistency(int n, long p, long D) {
    Report rep;
    rep.command = "d_matrix_consistency";
    using A = AnElt<Fp>;
    auto coset_word = [&](int i) {
        A t = A::one(n);
        for (int k = i; k <= n - 1; ++k) t = an_mul(t, A::T(n, k));
        return t;
    };
    auto subperms = detail::all_perms(n - 1);
    int maxlen = (n - 1) * (n - 2) / 2;
    for (int i = 1; i <= n; ++i) {
        long w_i = (n - 1) - 2 * (n - i);
        A Tbar = coset_word(i);
        A xn = A::x(n, n);
        for (long r = 0; r <= D; ++r) {
            A xi = Tbar;
            for (long t = 0; t < r; ++t) xi = an_mul(xi, xn);
            xi = an_bind_p(xi, p);
            A dxi = d_a_apply(1, xi) +
                    an_mul(xi, xn).scaled(Fp(n - 1, p));
            // basis elements T~_{i'} x_n^{r'} (x^e T_w) of the matching
            // q-degree, lambda 0
            long Q = -2 * (n - i) + 2 * r + 2;
            std::vector<A> cands;
            int target = -1; // index of T~_i x_n^{r+1} * 1
            for (int ip = 1; ip <= n; ++ip) {
                A Tb = coset_word(ip);
                for (auto &wperm : subperms) {
                    Perm wemb = detail::embed_perm(wperm, n);
                    long lw = wemb.length();
                    if (lw > maxlen) continue;
                    long rest = Q + 2 * (n - ip) + 2 * lw; // = 2 r' + 2|e|
                    if (rest < 0 || rest % 2) continue;
                    for (long rp = 0; 2 * rp <= rest; ++rp) {
                        int etot = static_cast<int>(rest / 2 - rp);
                        for (auto &e : exponent_vectors(n - 1, etot)) {
                            A a = Tb;
                            for (long t = 0; t < rp; ++t) a = an_mul(a, xn);
                            std::vector<int> efull = e;
                            efull.push_back(0);
                            a = an_mul(
                                a, an_bind_p(
                                       A::from_poly(ExtPoly<Fp>::monomial(
                                           n, 0u, efull, Fp(1, p))),
                                       p));
                            a = an_mul(a, A::T_word(n, wemb));
                            a = an_bind_p(a, p);
                            if (a.is_zero()) continue;
                            if (ip == i && rp == r + 1 && etot == 0 &&
                                wperm.is_identity())
                                target = static_cast<int>(cands.size());
                            cands.push_back(std::move(a));
                        }
                    }
                }
            }
            // coordinate map over the canonical normal form
            std::map<std::pair<Perm, typename ExtPoly<Fp>::Key>, int> coords;
            auto index_of = [&](const A &el) {
                for (auto &[pm, f] : el.terms)
                    for (auto &[k, c] : f.terms)
                        coords.emplace(std::make_pair(pm, k),
                                       static_cast<int>(coords.size()));
            };
            for (auto &cnd : cands) index_of(cnd);
            index_of(dxi);
            Matrix<Fp> M(static_cast<int>(coords.size()),
                         static_cast<int>(cands.size()));
            for (size_t cidx = 0; cidx < cands.size(); ++cidx)
                for (auto &[pm, f] : cands[cidx].terms)
                    for (auto &[k, c] : f.terms)
                        M.at(coords.at({pm, k}), static_cast<int>(cidx)) = c;
            std::vector<Fp> b(coords.size(), Fp(0, p));
            for (auto &[pm, f] : dxi.terms)
                for (auto &[k, c] : f.terms) b[coords.at({pm, k})] = c;
            auto sol = solve(M, b);
            std::string nm = "i=" + std::to_string(i) + ",r=" + std::to_string(r);
            if (!sol || target < 0) {
                rep.add(nm, false, "unsolvable", "",
                        "d image not in the module basis span");
                continue;
            }
            Fp got = (*sol)[target];
            Fp want = Fp(w_i + r, p);
            rep.add(nm, got == want, coeff_str(got), coeff_str(want),
                    "weight " + std::to_string(w_i) + " + r");
        }
    }
    return rep;
}

} // namespace ennil

#endif
