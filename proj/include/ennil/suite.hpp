#ifndef ENNIL_SUITE_HPP
#define ENNIL_SUITE_HPP

#include "deriv_checks.hpp"
#include "ennilhecke.hpp"
#include "invariants.hpp"
#include "ktheory.hpp"
#include "pcomplex.hpp"
#include "sl2rep.hpp"

#include <chrono>
#include <cstdlib>

namespace ennil {

// Degree bounds for the verification battery. NHV_DEGREE_BOUND overrides
// both defaults; explicit flags override the environment.
struct SuiteBounds {
    long relations = 12; // relation / sl2 suites
    long slices = 10;    // monomial-slice sweeps (equivariance, filtration)
};

inline SuiteBounds suite_bounds_from_env() {
    SuiteBounds b;
    if (const char *s = std::getenv("NHV_DEGREE_BOUND")) {
        long v = std::atol(s);
        if (v > 0) {
            b.relations = v;
            b.slices = v;
        }
    }
    return b;
}

namespace detail {
inline ExtPoly<Int> X5(int i) { return ExtPoly<Int>::x(5, i); }
inline ExtPoly<Int> W5(int i) { return ExtPoly<Int>::w(5, i); }
} // namespace detail

// Criterion 1: the rank-5 worked example — all ten alpha polynomials and
// the expansions d_5(w_1..w_5).
inline Report crit_alpha_example() {
    using detail::X5;
    using detail::W5;
    using P = ExtPoly<Int>;
    Report rep;
    rep.command = "alpha_example";
    auto sq = [](const P &f) { return f * f; };
    std::map<std::pair<int, int>, P> expect;
    expect[{1, 5}] = sq(X5(5)) * (X5(2) - X5(5)) * (X5(3) - X5(5)) *
                     (X5(4) - X5(5));
    expect[{1, 4}] = sq(X5(4)) * (X5(2) - X5(4)) * (X5(3) - X5(4)) +
                     sq(X5(5)) * (X5(2) - X5(5)) * (X5(3) - X5(5));
    expect[{1, 3}] = sq(X5(3)) * (X5(2) - X5(3)) +
                     sq(X5(4)) * (X5(2) - X5(4)) +
                     sq(X5(5)) * (X5(2) - X5(5));
    expect[{1, 2}] = sq(X5(2)) + sq(X5(3)) + sq(X5(4)) + sq(X5(5));
    expect[{2, 5}] = sq(X5(5)) * (X5(3) - X5(5)) * (X5(4) - X5(5));
    expect[{2, 4}] = sq(X5(5)) * (X5(3) - X5(5)) + sq(X5(4)) * (X5(3) - X5(4));
    expect[{2, 3}] = sq(X5(5)) + sq(X5(4)) + sq(X5(3));
    expect[{3, 5}] = sq(X5(5)) * (X5(4) - X5(5));
    expect[{3, 4}] = sq(X5(5)) + sq(X5(4));
    expect[{4, 5}] = sq(X5(5));
    for (auto &[ij, val] : expect) {
        auto got = alpha_poly<Int>(ij.first, ij.second, 5);
        rep.add("alpha_{" + std::to_string(ij.first) + "," +
                    std::to_string(ij.second) + "}",
                got == val, poly_str(got), poly_str(val));
    }
    auto d5 = dn_derivation<Int>(5);
    for (int i = 1; i <= 4; ++i) {
        P want(5);
        for (int j = i + 1; j <= 5; ++j) want += expect[{i, j}] * W5(j);
        auto got = d5.apply(W5(i));
        rep.add("d_5(w" + std::to_string(i) + ")", got == want, poly_str(got),
                poly_str(want));
    }
    rep.add("d_5(w5)", d5.apply(W5(5)).is_zero(),
            poly_str(d5.apply(W5(5))), "0");
    return rep;
}

// Criterion 4 helpers ------------------------------------------------------

inline Report crit_equivariance(long D) {
    using P = ExtPoly<Int>;
    Report rep;
    rep.command = "equivariance";
    for (int n = 2; n <= 4; ++n) {
        auto dn = dn_derivation<Int>(n);
        bool ok = true;
        for (auto &k : monomials_up_to<Int>(n, D)) {
            P f = P::monomial(n, k.first, k.second, Int(1));
            for (int j = 1; j < n && ok; ++j)
                ok = apply_transposition(j, dn.apply(f)) ==
                     dn.apply(apply_transposition(j, f));
            if (!ok) break;
        }
        rep.add("sn_equivariance n=" + std::to_string(n), ok, "s_j d_n",
                "d_n s_j");
    }
    for (int n = 1; n <= 4; ++n) {
        auto dn = dn_derivation<Int>(n);
        auto dn1 = dn_derivation<Int>(n + 1);
        bool ok = true;
        for (int i = 1; i <= n; ++i) {
            ok = ok && phi_prime<Int>(n, dn.apply(P::x(n, i))) ==
                           dn1.apply(phi_prime<Int>(n, P::x(n, i)));
            ok = ok && phi_prime<Int>(n, dn.apply(P::w(n, i))) ==
                           dn1.apply(phi_prime<Int>(n, P::w(n, i)));
        }
        rep.add("phi_prime_equivariance n=" + std::to_string(n), ok,
                "phi' d_n", "d_{n+1} phi'");
    }
    for (int n = 1; n <= 4; ++n) {
        using A = AnElt<Int>;
        std::vector<A> gens;
        for (int i = 1; i <= n; ++i) {
            gens.push_back(A::x(n, i));
            gens.push_back(A::w(n, i));
        }
        for (int i = 1; i < n; ++i) gens.push_back(A::T(n, i));
        bool ok = true;
        for (auto &g : gens)
            ok = ok && phi_inclusion(n, d_a_apply(1, g)) ==
                           d_a_apply(1, phi_inclusion(n, g));
        rep.add("phi_equivariance n=" + std::to_string(n), ok, "phi_n d",
                "d phi_n");
    }
    for (int n = 1; n <= 6; ++n) {
        auto dn = dn_derivation<Int>(n);
        bool ok = true;
        for (int i = 1; i <= n; ++i) {
            ok = ok && omega_map<Int>(n, i) == labeled_omega<Int>(n, n, n - i);
            ok = ok && dn.apply(omega_map<Int>(n, i)).is_zero();
        }
        rep.add("omega_map n=" + std::to_string(n), ok, "Omega_n(w_i)",
                "w_n^{n-i}, d-closed");
    }
    return rep;
}

// Criterion 5 helpers ------------------------------------------------------

inline Report crit_partials(long D) {
    using P = ExtPoly<Int>;
    Report rep;
    rep.command = "partials";
    for (int n = 2; n <= 4; ++n) {
        std::vector<Derivation<Int>> parts;
        for (int r = 1; r <= n; ++r)
            parts.push_back(partial_derivation<Int>(n, r));
        bool comm = true, sq = true;
        for (auto &k : monomials_up_to<Int>(n, D)) {
            P f = P::monomial(n, k.first, k.second, Int(1));
            for (int r = 0; r < n && comm; ++r)
                for (int s = r + 1; s < n && comm; ++s)
                    comm = parts[r].apply(parts[s].apply(f)) ==
                           parts[s].apply(parts[r].apply(f));
            if (!comm) break;
        }
        for (int r = 0; r < n; ++r)
            for (int i = 1; i <= n; ++i)
                sq = sq && parts[r].apply(parts[r].apply(P::w(n, i))).is_zero();
        rep.add("partials_commute n=" + std::to_string(n), comm, "d_r d_s",
                "d_s d_r");
        rep.add("partial_square_omega n=" + std::to_string(n), sq,
                "d_r^2 w_i", "0");
    }
    for (int n = 1; n <= 4; ++n)
        rep.merge(dn_as_partials_check(n, D), "n=" + std::to_string(n));
    for (int n = 2; n <= 4; ++n)
        rep.merge(dk_power_formula_check(n, 4), "kpow n=" + std::to_string(n));
    return rep;
}

// Criterion 6: complete-homogeneous symmetric function identities.
inline Report crit_symmetric_lemmas() {
    using P = ExtPoly<Int>;
    Report rep;
    rep.command = "symmetric_lemmas";
    {
        int N = 5;
        bool ok = true;
        for (int m = 1; m < N && ok; ++m)
            for (int nn = m + 1; nn <= N && ok; ++nn)
                for (int l = 0; l <= 5 && ok; ++l) {
                    P lhs = (P::x(N, m) - P::x(N, nn)) *
                                complete_h<Int>(N, l - 1, m, nn) +
                            complete_h<Int>(N, l, m + 1, nn) -
                            complete_h<Int>(N, l, m, nn - 1);
                    ok = lhs.is_zero();
                }
        rep.add("h_recurrence", ok, "(x_m-x_n)h_{l-1}(m..n)",
                "h_l(m..n-1) - h_l(m+1..n)");
    }
    {
        int N = 6;
        bool ok = true;
        for (int q = 1; q <= 3 && ok; ++q)
            for (int m = 1; m <= 5 && ok; ++m)
                for (int nn = q + m; nn <= 5 && ok; ++nn) {
                    P lhs(N);
                    for (int s = 0; s <= m; ++s) {
                        P prod = P::one(N);
                        for (int j = q + 1 + s; j <= q + m; ++j)
                            prod = prod * (P::x(N, j) - P::x(N, nn + 1));
                        P t = complete_h<Int>(N, s, q + s, nn) * prod;
                        if (s & 1) t = -t;
                        lhs += t;
                    }
                    P rhs = complete_h<Int>(N, m, q + m + 1, nn + 1);
                    if (m & 1) rhs = -rhs;
                    ok = lhs == rhs;
                }
        rep.add("h_alternating_sum", ok, "sum_s (-1)^s h_s * prod",
                "(-1)^m h_m");
    }
    return rep;
}

// Criterion 7: the primitive idempotent.
inline Report crit_idempotent() {
    using A = AnElt<Int>;
    Report rep;
    rep.command = "idempotent";
    for (int n = 1; n <= 4; ++n) {
        A e = epsilon<Int>(n);
        rep.add("epsilon^2=epsilon n=" + std::to_string(n),
                an_mul(e, e) == e, "eps^2", "eps");
        A lhs = d_a_apply(1, e);
        A rhs = A::zero(n);
        for (int i = 1; i <= n; ++i)
            rhs = rhs - an_mul(A::x(n, i), e).scaled(Int(n - i));
        rep.add("d(epsilon) n=" + std::to_string(n), lhs == rhs,
                "d_1(eps_n)", "-sum (n-i) x_i eps_n");
    }
    return rep;
}

// The twelve acceptance criteria.
struct Criterion {
    int id;
    std::string name;
    Report rep;
    long limit_ms; // 0 = no stated limit
};

inline std::vector<Criterion> run_acceptance(const SuiteBounds &b) {
    std::vector<Criterion> out;
    auto timed = [&](int id, const std::string &name, long limit,
                     auto &&fn) {
        auto t0 = std::chrono::steady_clock::now();
        Report rep = fn();
        rep.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        if (limit > 0)
            rep.add("runtime_under_" + std::to_string(limit) + "ms",
                    rep.timing_ms < limit, std::to_string(rep.timing_ms) + "ms",
                    "< " + std::to_string(limit) + "ms");
        out.push_back({id, name, std::move(rep), limit});
    };

    timed(1, "rank-5 example reproduction", 5000,
          [] { return crit_alpha_example(); });

    timed(2, "defining relations", 60000, [&] {
        Report rep;
        rep.command = "relations";
        for (int n = 1; n <= 4; ++n)
            rep.merge(verify_relations<Int>(n, b.relations),
                      "n=" + std::to_string(n));
        return rep;
    });

    timed(3, "p-nilpotency", 120000, [] {
        Report rep;
        rep.command = "nilpotency";
        for (long p : {3L, 5L, 7L})
            for (int n = 1; n < p; ++n) {
                rep.merge(nilpotency_check(p, n),
                          "R p=" + std::to_string(p) + ",n=" +
                              std::to_string(n));
                rep.merge(an_nilpotency_check(p, n),
                          "A p=" + std::to_string(p) + ",n=" +
                              std::to_string(n));
            }
        return rep;
    });

    timed(4, "equivariance and maps", 0,
          [&] { return crit_equivariance(b.slices); });

    timed(5, "partial-derivative suite", 0,
          [&] { return crit_partials(b.slices); });

    timed(6, "symmetric-function lemmas", 0,
          [] { return crit_symmetric_lemmas(); });

    timed(7, "idempotent", 0, [] { return crit_idempotent(); });

    timed(8, "small quantum group", 10000, [] {
        Report rep;
        rep.command = "uqsl2";
        for (long p : {3L, 5L, 7L}) {
            rep.merge(verify_uqsl2(p, "K0"), "K0 p=" + std::to_string(p));
            rep.merge(verify_uqsl2(p, "Verma"),
                      "Verma p=" + std::to_string(p));
            rep.merge(verify_iso(p), "iso p=" + std::to_string(p));
        }
        return rep;
    });

    timed(9, "categorified E", 0, [] {
        Report rep;
        rep.command = "categorified_E";
        for (long p : {3L, 5L, 7L})
            for (long n = 1; n < p; ++n) {
                auto [val, sub] = categorified_E_class(n, p);
                std::string tag =
                    "n=" + std::to_string(n) + ",p=" + std::to_string(p);
                rep.merge(sub, tag);
                rep.add(tag + " class", val == k0_E_class(p, n),
                        qlambda_str(val), qlambda_str(k0_E_class(p, n)));
            }
        for (auto [n, p] : std::vector<std::pair<int, long>>{
                 {1, 3}, {2, 3}, {3, 3}, {1, 5}, {2, 5}, {3, 5}})
            rep.merge(d_matrix_consistency(n, p, 4),
                      "dmat n=" + std::to_string(n) + ",p=" +
                          std::to_string(p));
        return rep;
    });

    timed(10, "sl2 and Witt suites", 0, [&] {
        Report rep;
        rep.command = "sl2";
        for (int n = 1; n <= 3; ++n)
            rep.merge(verify_sl2_suite<Int>(n, b.relations),
                      "n=" + std::to_string(n));
        return rep;
    });

    timed(11, "filtration theorems", 0, [&] {
        Report rep;
        rep.command = "filtration";
        for (int n = 1; n <= 4; ++n)
            for (int m = 0; m <= n; ++m) {
                std::string tag =
                    "n=" + std::to_string(n) + ",m=" + std::to_string(m);
                if (n >= 2)
                    rep.merge(filtration_check<Int>(n, m, b.slices),
                              "R " + tag);
                rep.merge(an_filtration_check<Int>(n, m, b.slices),
                          "A " + tag);
            }
        return rep;
    });

    timed(12, "conjecture scan", 300000, [] {
        Report rep;
        rep.command = "conjecture";
        auto scan2 = conjecture_scan(2, 8);
        for (auto &c : scan2.checks) {
            if (c.name.find("reading_minus") != std::string::npos)
                rep.add("n=2 " + c.name, c.detail == "matches", c.lhs, c.rhs,
                        c.detail);
            if (c.name.find("hw_count") != std::string::npos ||
                c.name.find("dim_sum") != std::string::npos)
                rep.add("n=2 " + c.name, c.equal, c.lhs, c.rhs, c.detail);
        }
        auto scan3 = conjecture_scan(3, 2);
        rep.add("n=3 completes", scan3.status() == "info",
                scan3.status(), "info");
        for (auto &c : scan3.checks)
            if (c.name.find("hw_count") != std::string::npos ||
                c.name.find("dim_sum") != std::string::npos)
                rep.add("n=3 " + c.name, c.equal, c.lhs, c.rhs, c.detail);
        return rep;
    });

    return out;
}

} // namespace ennil

#endif
