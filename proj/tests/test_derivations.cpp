#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ennil/deriv_checks.hpp"

#include <random>

using namespace ennil;

using P = ExtPoly<Int>;

static P X(int n, int i) { return P::x(n, i); }
static P W(int n, int i) { return P::w(n, i); }

TEST_CASE("alpha examples in rank 5") {
    int n = 5;
    CHECK(alpha_poly<Int>(4, 5, n) == X(n, 5) * X(n, 5));
    CHECK(alpha_poly<Int>(1, 2, n) ==
          X(n, 2) * X(n, 2) + X(n, 3) * X(n, 3) + X(n, 4) * X(n, 4) +
              X(n, 5) * X(n, 5));
    // alpha_{n-1,n} = x_n^2 in other ranks too
    for (int m = 2; m <= 6; ++m)
        CHECK(alpha_poly<Int>(m - 1, m, m) == X(m, m) * X(m, m));
}

TEST_CASE("alpha Demazure relations") {
    for (int n = 2; n <= 5; ++n) {
        for (int i = 1; i < n; ++i) {
            // T_i(alpha_{i,i+1}) = -(x_i + x_{i+1})
            CHECK(demazure(i, alpha_poly<Int>(i, i + 1, n)) ==
                  -(X(n, i) + X(n, i + 1)));
            for (int j = i + 2; j <= n; ++j)
                CHECK(demazure(i, alpha_poly<Int>(i, j, n)) ==
                      -alpha_poly<Int>(i + 1, j, n));
        }
        // T_j(alpha_{i,j+1}) = alpha_{i,j}
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n - 1; ++j)
                CHECK(demazure(j, alpha_poly<Int>(i, j + 1, n)) ==
                      alpha_poly<Int>(i, j, n));
        // s_l fixes alpha_{i,j+1} for l != i, j
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n - 1; ++j)
                for (int l = 1; l < n; ++l) {
                    if (l == i || l == j) continue;
                    CHECK(apply_transposition(l, alpha_poly<Int>(i, j + 1, n)) ==
                          alpha_poly<Int>(i, j + 1, n));
                }
    }
}

TEST_CASE("alpha via elementary symmetric polynomials") {
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                P rhs(n);
                for (int l = j; l <= n; ++l) {
                    P xl2 = X(n, l) * X(n, l);
                    P xpow = P::one(n);
                    for (int k = 0; k <= j - i - 1; ++k) {
                        P e = (i + 1 <= j - 1)
                                  ? elementary_e<Int>(n, j - i - 1 - k, i + 1, j - 1)
                                  : (j - i - 1 - k == 0 ? P::one(n) : P::zero(n));
                        P t = xl2 * e * xpow;
                        if (k & 1) t = -t;
                        rhs += t;
                        xpow = xpow * X(n, l);
                    }
                }
                CHECK(alpha_poly<Int>(i, j, n) == rhs);
            }
}

TEST_CASE("recursive alpha corollary") {
    auto dn_of = [](int n, const P &f) { return dn_derivation<Int>(n).apply(f); };
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                P rhs(n);
                for (int s = 1; s <= j - i - 1; ++s) {
                    P t = complete_h<Int>(n, s, i + s, n) *
                          alpha_poly<Int>(i + s, j, n);
                    if (!((s - 1) & 1)) rhs += t;
                    else rhs -= t;
                }
                P last = dn_of(n, complete_h<Int>(n, j - i, j, n));
                if ((j - i - 1) & 1) rhs -= last;
                else rhs += last;
                CHECK(alpha_poly<Int>(i, j, n) == rhs);
            }
}

TEST_CASE("d_5 action on the omegas") {
    int n = 5;
    auto dn = dn_derivation<Int>(n);
    CHECK(dn.apply(W(n, 4)) == X(n, 5) * X(n, 5) * W(n, 5));
    CHECK(dn.apply(W(n, 5)).is_zero());
    for (int i = 1; i <= 4; ++i) {
        P expect(n);
        for (int j = i + 1; j <= n; ++j)
            expect += alpha_poly<Int>(i, j, n) * W(n, j);
        CHECK(dn.apply(W(n, i)) == expect);
    }
}

TEST_CASE("eq pdiff1") {
    for (int n = 2; n <= 5; ++n) {
        auto dn = dn_derivation<Int>(n);
        for (int i = 1; i <= n - 1; ++i) {
            P lhs = dn.apply(W(n, i + 1));
            P rhs = -((X(n, i) + X(n, i + 1)) * W(n, i + 1)) -
                    demazure(i, dn.apply(W(n, i)));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Leibniz rule for derivations") {
    std::mt19937 rng(17);
    int n = 3;
    std::uniform_int_distribution<int> dc(-3, 3), de(0, 2);
    std::uniform_int_distribution<std::uint32_t> dm(0, (1u << n) - 1);
    auto rnd = [&] {
        P f(n);
        for (int t = 0; t < 3; ++t) {
            std::vector<int> e(n);
            for (int i = 0; i < n; ++i) e[i] = de(rng);
            f.add_term({dm(rng), e}, Int(dc(rng)));
        }
        return f;
    };
    std::vector<Derivation<Int>> ops{dn_derivation<Int>(n),
                                     partial_derivation<Int>(n, 2),
                                     witt_derivation<Int>(n, 2),
                                     sl2_h<Int>(n),
                                     degq_derivation<Int>(n),
                                     sln_e<Int>(n, 1)};
    for (int rep = 0; rep < 15; ++rep) {
        P f = rnd(), g = rnd();
        for (auto &d : ops)
            CHECK(d.apply(f * g) == d.apply(f) * g + f * d.apply(g));
    }
}

TEST_CASE("S_n equivariance of d_n") {
    for (int n = 2; n <= 4; ++n) {
        auto dn = dn_derivation<Int>(n);
        long D = n <= 3 ? 8 : 6;
        for (auto &k : monomials_up_to<Int>(n, D)) {
            P f = P::monomial(n, k.first, k.second, Int(1));
            for (int j = 1; j < n; ++j)
                CHECK(apply_transposition(j, dn.apply(f)) ==
                      dn.apply(apply_transposition(j, f)));
        }
    }
}

TEST_CASE("partial derivative examples and properties") {
    auto part = [](int n, int r) { return partial_derivation<Int>(n, r); };
    CHECK(part(2, 2).apply(W(2, 1)) == W(2, 2));
    // d/dx_3 (w1 w2) = w1 w3 - (x2 - x3) w2 w3 in R_3
    CHECK(part(3, 3).apply(W(3, 1) * W(3, 2)) ==
          W(3, 1) * W(3, 3) - (X(3, 2) - X(3, 3)) * (W(3, 2) * W(3, 3)));
    for (int n = 2; n <= 4; ++n) {
        // dr dr w_i = 0; partials commute; recursion
        for (int r = 1; r <= n; ++r)
            for (int i = 1; i <= n; ++i)
                CHECK(part(n, r).apply(part(n, r).apply(W(n, i))).is_zero());
        for (auto &k : monomials_up_to<Int>(n, 6)) {
            P f = P::monomial(n, k.first, k.second, Int(1));
            for (int r = 1; r <= n; ++r)
                for (int s = r + 1; s <= n; ++s)
                    CHECK(part(n, r).apply(part(n, s).apply(f)) ==
                          part(n, s).apply(part(n, r).apply(f)));
        }
        for (int r = 1; r <= n; ++r)
            for (int i = 1; i + 1 <= n; ++i)
                CHECK(part(n, r).apply(W(n, i)) ==
                      ((i + 1 > r ? P::zero(n) : W(n, i + 1)) +
                       (X(n, i + 1) - X(n, r)) * part(n, r).apply(W(n, i + 1))));
    }
}

TEST_CASE("dn as sum of x_r^2 partials") {
    CHECK(dn_as_partials_check(1, 8).passed());
    CHECK(dn_as_partials_check(2, 6).passed());
    CHECK(dn_as_partials_check(3, 6).passed());
}

TEST_CASE("SL2 example value") {
    CHECK(sl2_e<Int>(2).apply(W(2, 1)) == X(2, 2) * X(2, 2) * W(2, 2));
    // e agrees with d_n on generators
    for (int n = 1; n <= 4; ++n) {
        auto e = sl2_e<Int>(n);
        auto dn = dn_derivation<Int>(n);
        for (int i = 1; i <= n; ++i) {
            CHECK(e.apply(X(n, i)) == dn.apply(X(n, i)));
            CHECK(e.apply(W(n, i)) == dn.apply(W(n, i)));
        }
    }
}

TEST_CASE("Witt commutators") {
    int n = 2;
    long D = 6;
    auto mons = monomials_up_to<Int>(n, D);
    for (int k = -1; k <= 3; ++k)
        for (int r = -1; r <= 3; ++r) {
            auto lk = witt_derivation<Int>(n, k);
            auto lr = witt_derivation<Int>(n, r);
            for (auto &key : mons) {
                P f = P::monomial(n, key.first, key.second, Int(1));
                P lhs = lk.apply(lr.apply(f)) - lr.apply(lk.apply(f));
                if (k + r < -1) {
                    // only k = r = -1 lands here; the bracket is zero
                    CHECK(lhs.is_zero());
                } else {
                    auto lkr = witt_derivation<Int>(n, k + r);
                    CHECK(lhs == lkr.apply(f).scaled(Int(r - k)));
                }
            }
        }
}

TEST_CASE("sl2 and gl2 relations") {
    for (int n = 1; n <= 3; ++n) {
        auto e = sl2_e<Int>(n), f = sl2_f<Int>(n), h = sl2_h<Int>(n);
        auto dq = degq_derivation<Int>(n);
        for (auto &key : monomials_up_to<Int>(n, 6)) {
            P m = P::monomial(n, key.first, key.second, Int(1));
            CHECK(e.apply(f.apply(m)) - f.apply(e.apply(m)) == h.apply(m));
            CHECK(h.apply(e.apply(m)) - e.apply(h.apply(m)) == e.apply(m).scaled(Int(2)));
            CHECK(h.apply(f.apply(m)) - f.apply(h.apply(m)) == f.apply(m).scaled(Int(-2)));
            CHECK(dq.apply(e.apply(m)) - e.apply(dq.apply(m)) == e.apply(m).scaled(Int(2)));
            CHECK(dq.apply(f.apply(m)) - f.apply(dq.apply(m)) == f.apply(m).scaled(Int(-2)));
            CHECK(dq.apply(h.apply(m)) == h.apply(dq.apply(m)));
        }
    }
    // one-variable hand value: [e,f] = h on x^3 gives 6x^3
    auto e = sl2_e<Int>(1), f = sl2_f<Int>(1), h = sl2_h<Int>(1);
    P x3 = P::monomial(1, 0u, {3}, Int(1));
    CHECK(e.apply(f.apply(x3)) - f.apply(e.apply(x3)) == x3.scaled(Int(6)));
    CHECK(h.apply(x3) == x3.scaled(Int(6)));
    // h(w1) = 2 x2 w2 in R_2
    CHECK(sl2_h<Int>(2).apply(W(2, 1)) == X(2, 2).scaled(Int(2)) * W(2, 2));
}

TEST_CASE("phi prime") {
    CHECK(phi_prime<Int>(1, W(1, 1)) == W(2, 1) - X(2, 2) * W(2, 2));
    for (int i = 1; i <= 3; ++i)
        CHECK(phi_prime<Int>(3, X(3, i)) == X(4, i));
    // d-equivariance: phi'_n d_n = d_{n+1} phi'_n on generators
    for (int n = 1; n <= 4; ++n) {
        auto dn = dn_derivation<Int>(n);
        auto dn1 = dn_derivation<Int>(n + 1);
        for (int i = 1; i <= n; ++i) {
            CHECK(phi_prime<Int>(n, dn.apply(X(n, i))) == dn1.apply(phi_prime<Int>(n, X(n, i))));
            CHECK(phi_prime<Int>(n, dn.apply(W(n, i))) == dn1.apply(phi_prime<Int>(n, W(n, i))));
        }
    }
    // injectivity on a graded spanning set: phi' of distinct monomials stay
    // linearly independent because x-parts are preserved; verify the kernel
    // of the induced map on a slice is zero via a direct check.
    for (int n = 1; n <= 3; ++n) {
        for (auto &k : monomials_up_to<Int>(n, 4)) {
            P f = P::monomial(n, k.first, k.second, Int(1));
            CHECK(!phi_prime<Int>(n, f).is_zero());
        }
    }
}

TEST_CASE("omega map equals labeled omega") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(omega_map<Int>(n, n) == W(n, n));
        for (int i = 1; i <= n; ++i) {
            CHECK(omega_map<Int>(n, i) == labeled_omega<Int>(n, n, n - i));
            CHECK(dn_derivation<Int>(n).apply(omega_map<Int>(n, i)).is_zero());
        }
    }
    CHECK(omega_map<Int>(2, 1) == W(2, 1) - X(2, 2) * W(2, 2));
    // phi'_{1,3}(w1) = labeled_omega(3,2)
    CHECK(phi_prime_chain<Int>(1, 3, W(1, 1)) == labeled_omega<Int>(3, 3, 2));
}

TEST_CASE("dk power formula") {
    CHECK(dk_power_formula_check(2, 3).passed());
    CHECK(dk_power_formula_check(3, 3).passed());
}

TEST_CASE("p-nilpotency small cases") {
    // d(x) = x^2, d^2(x) = 2x^3, d^3(x) = 6x^4 = 0 mod 3
    auto d1 = dn_derivation<Fp>(1);
    auto x = bind_p(ExtPoly<Fp>::x(1, 1), 3);
    CHECK(d1.apply_pow(x, 3).is_zero());
    CHECK(nilpotency_check(3, 2).passed());
    CHECK(nilpotency_check(5, 4).passed());
}

TEST_CASE("shift coefficients") {
    auto a = shift_coeffs(5);
    CHECK(a[{1, 3}] == 6);
    CHECK(a[{3, 3}] == 1);
    // (x^2 d/dx)^3 = 6x^4 d/dx + 6x^5 d^2/dx^2 + x^6 d^3/dx^3
    CHECK(a[{2, 3}] == 6);
    CHECK(shift_coeffs_check(5).passed());
}

TEST_CASE("twisted derivation") {
    // twist contributes f*g_alpha on top of d_n
    auto tw = TwistedDn<Int>::preset(2, 1); // weights (-1, 0)
    P one = P::one(2);
    CHECK(tw.apply(one) == -X(2, 1));
    CHECK(tw.apply(X(2, 1)) == X(2, 1) * X(2, 1) - X(2, 1) * X(2, 1));
}
