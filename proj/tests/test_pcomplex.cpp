#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ennil/pcomplex.hpp"

#include <random>

using namespace ennil;

// Direct sum of explicit Jordan blocks, unit shift coefficients.
static PComplex<Fp> from_blocks(long p, const std::vector<Block> &blocks) {
    PComplex<Fp> c(p);
    std::map<Piece, std::vector<std::pair<int, int>>> slots; // (block idx, step)
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int t = 0; t < blocks[b].size; ++t) {
            Piece k{blocks[b].q0 + 2 * t, blocks[b].lam, blocks[b].parity};
            slots[k].push_back({static_cast<int>(b), t});
            c.pieces[k] += 1;
        }
    for (auto &[k, vec] : slots) {
        Piece up = piece_above(k);
        auto itup = slots.find(up);
        int updim = itup == slots.end() ? 0 : static_cast<int>(itup->second.size());
        Matrix<Fp> M(updim, static_cast<int>(vec.size()));
        for (size_t j = 0; j < vec.size(); ++j) {
            auto [b, t] = vec[j];
            if (t + 1 >= blocks[b].size) continue;
            for (int i = 0; i < updim; ++i)
                if (itup->second[i] == std::pair<int, int>{b, t + 1})
                    M.at(i, static_cast<int>(j)) = Fp(1, p);
        }
        if (updim > 0) c.diff[k] = std::move(M);
    }
    return c;
}

static Matrix<Fp> random_invertible(int n, long p, std::mt19937 &rng) {
    while (true) {
        Matrix<Fp> M(n, n);
        for (auto &v : M.a) v = Fp(static_cast<long long>(rng() % p), p);
        if (rank(M) == n) return M;
    }
}

static Matrix<Fp> fp_inverse(const Matrix<Fp> &A, long p) {
    int n = A.rows;
    Matrix<Fp> M(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, n + i) = Fp(1, p);
    }
    rref(M);
    Matrix<Fp> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = M.at(i, n + j);
    return inv;
}

TEST_CASE("p-nilpotency detection") {
    long p = 3;
    PComplex<Fp> zero(p);
    zero.pieces[{0, 0, 0}] = 2;
    CHECK(verify_p_nilpotent(zero));

    auto ok = from_blocks(p, {{3, 0, 0, 0}});
    CHECK(verify_p_nilpotent(ok));

    auto bad = from_blocks(p, {{4, 0, 0, 0}});
    CHECK_FALSE(verify_p_nilpotent(bad));
}

TEST_CASE("jordan blocks, basic shapes") {
    long p = 3;
    PComplex<Fp> zero(p);
    zero.pieces[{0, 0, 0}] = 1;
    zero.pieces[{2, 0, 0}] = 1;
    zero.pieces[{4, 0, 0}] = 1;
    auto bl = jordan_blocks(zero);
    REQUIRE(bl.size() == 3);
    for (auto &b : bl) CHECK(b.size == 1);

    auto two = from_blocks(p, {{2, 0, 0, 0}});
    auto bl2 = jordan_blocks(two);
    REQUIRE(bl2.size() == 1);
    CHECK(bl2[0] == Block{2, 0, 0, 0});
}

TEST_CASE("weighted shift p=5 w=3") {
    auto c = weighted_shift_complex(5, 3, 13, 0, 0, 0);
    auto bl = jordan_blocks(c);
    std::vector<Block> expect{{3, 0, 0, 0}, {5, 6, 0, 0}, {5, 16, 0, 0}};
    std::sort(expect.begin(), expect.end());
    CHECK(bl == expect);
}

TEST_CASE("jordan blocks invariant under change of basis") {
    long p = 5;
    std::mt19937 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Block> blocks;
        int nb = 2 + static_cast<int>(rng() % 3);
        for (int b = 0; b < nb; ++b)
            blocks.push_back({1 + static_cast<int>(rng() % p),
                              static_cast<long>(2 * (rng() % 3)),
                              static_cast<long>(rng() % 2) * 2,
                              static_cast<int>(rng() % 2)});
        auto c = from_blocks(p, blocks);
        // conjugate: d' = P_up d P^{-1}
        std::map<Piece, Matrix<Fp>> P, Pinv;
        for (auto &[k, d] : c.pieces) {
            P[k] = random_invertible(d, p, rng);
            Pinv[k] = fp_inverse(P[k], p);
        }
        PComplex<Fp> conj(p);
        conj.pieces = c.pieces;
        for (auto &[k, M] : c.diff) {
            Piece up = piece_above(k);
            Matrix<Fp> res = mat_mul(M, Pinv[k]);
            if (P.count(up)) res = mat_mul(P[up], res);
            conj.diff[k] = std::move(res);
        }
        std::sort(blocks.begin(), blocks.end());
        REQUIRE(jordan_blocks(conj) == blocks);
    }
}

TEST_CASE("k0 symbol values") {
    long p = 5;
    // size-p block contributes 0
    CHECK(blocks_symbol(p, {{static_cast<int>(p), 0, 0, 0}}).is_zero());
    // size-1 even block at (0,0) is 1
    CHECK(blocks_symbol(p, {{1, 0, 0, 0}}) == QLambda::from_int(p, 1));
    // size-k odd block at (q0, 2): -l^2 q^{q0} (1 + q^2 + ... + q^{2(k-1)})
    for (int k = 1; k < p; ++k) {
        long q0 = -4;
        QLambda expect(p);
        for (int s = 0; s < k; ++s)
            expect = expect + QLambda::q_power(p, q0 + 2 * s);
        expect = -(expect * QLambda::l_power(p, 2));
        CHECK(blocks_symbol(p, {{k, q0, 2, 1}}) == expect);
    }
}

TEST_CASE("k0 symbol additive over direct sums") {
    long p = 3;
    std::vector<Block> a{{2, 0, 0, 0}, {1, 4, 2, 1}};
    std::vector<Block> b{{3, -2, 0, 0}, {2, 0, 0, 1}};
    std::vector<Block> both = a;
    both.insert(both.end(), b.begin(), b.end());
    CHECK(blocks_symbol(p, both) ==
          blocks_symbol(p, a) + blocks_symbol(p, b));
    CHECK(k0_symbol(from_blocks(p, both)) == blocks_symbol(p, both));
}

TEST_CASE("weighted shift block reports") {
    // w=0: leading block size 1
    auto r0 = weighted_shift_blocks(5, 0, 11, 0, 0, 0);
    CHECK(r0.passed());
    // p=5, w=3: leading block size 3
    auto r3 = weighted_shift_blocks(5, 3, 13, 0, 0, 0);
    CHECK(r3.passed());
    // w=1: leading block size p, fully contractible
    auto r1 = weighted_shift_blocks(5, 1, 10, 0, 0, 0);
    CHECK(r1.passed());
    CHECK(k0_symbol(weighted_shift_complex(5, 1, 10, 0, 0, 0)).is_zero());
}

TEST_CASE("json round trip") {
    nlohmann::json j = {
        {"p", 3},
        {"field", "Fp"},
        {"pieces",
         {{{"q", 0}, {"lambda", 0}, {"parity", 0}, {"dim", 1}},
          {{"q", 2}, {"lambda", 0}, {"parity", 0}, {"dim", 1}}}},
        {"maps",
         {{{"from", {{"q", 0}, {"lambda", 0}, {"parity", 0}}},
           {"matrix", {{1}}}}}}};
    auto c = pcomplex_from_json<Fp>(j);
    CHECK(verify_p_nilpotent(c));
    auto bl = jordan_blocks(c);
    REQUIRE(bl.size() == 1);
    CHECK(bl[0] == Block{2, 0, 0, 0});
    auto rep = pcomplex_report(c);
    CHECK(rep.passed());
}
