#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ennil/ktheory.hpp"

using namespace ennil;

TEST_CASE("k0 operator basis values") {
    long p = 5;
    auto E = k0_op_E(p, K0Model::printed);
    // E[A_0] = 0: column 0 vanishes
    for (long i = 0; i < p; ++i) CHECK(E.a[i][0].is_zero());
    // E[A_1] = (l q^-1 - l^-1 q)[A_0]
    QLambda expect = QLambda::l_power(p, 1) * QLambda::q_power(p, -1) -
                     QLambda::l_power(p, -1) * QLambda::q_power(p, 1);
    CHECK(E.a[0][1] == expect);
    // F[A_{p-1}] = 0
    auto F = k0_op_F(p);
    for (long i = 0; i < p; ++i) CHECK(F.a[i][p - 1].is_zero());
}

TEST_CASE("verma operator basis values") {
    long p = 5;
    QLambda hw = QLambda::l_power(p, 1);
    auto E = verma_op_E(p, hw);
    for (long i = 0; i < p; ++i) CHECK(E.a[i][0].is_zero());
    auto F = verma_op_F(p);
    for (long i = 0; i < p; ++i) CHECK(F.a[i][p - 1].is_zero());
    auto K = verma_op_K(p, hw, +1);
    CHECK(K.a[1][1] ==
          QLambda::l_power(p, 1) * QLambda::q_power(p, -2));
}

TEST_CASE("small quantum group relations") {
    for (long p : {3L, 5L}) {
        for (auto model : {"K0", "Verma"}) {
            auto rep = verify_uqsl2(p, model);
            for (auto &c : rep.checks) {
                INFO("p=", p, " ", model, " ", c.name);
                CHECK(c.equal);
            }
        }
    }
}

TEST_CASE("intertwiner with the Verma module") {
    for (long p : {3L, 5L}) {
        auto rep = verify_iso(p);
        for (auto &c : rep.checks) {
            INFO("p=", p, " ", c.name);
            CHECK(c.equal);
        }
    }
}

TEST_CASE("categorified E class") {
    // n=1: (l q^-1 - l^-1 q)
    {
        auto [val, rep] = categorified_E_class(1, 3);
        QLambda expect = QLambda::l_power(3, 1) * QLambda::q_power(3, -1) -
                         QLambda::l_power(3, -1) * QLambda::q_power(3, 1);
        CHECK(val == expect);
        for (auto &c : rep.checks) {
            INFO(c.name, ": ", c.lhs, " vs ", c.rhs);
            CHECK(c.equal);
        }
    }
    // n=2, p=5
    {
        auto [val, rep] = categorified_E_class(2, 5);
        CHECK(val == k0_E_class(5, 2));
        for (auto &c : rep.checks) {
            INFO(c.name, ": ", c.lhs, " vs ", c.rhs);
            CHECK(c.equal);
        }
    }
}

TEST_CASE("d matrix consistency") {
    for (auto [n, p] : std::vector<std::pair<int, long>>{{1, 3}, {2, 3}, {2, 5}}) {
        auto rep = d_matrix_consistency(n, p, 4);
        for (auto &c : rep.checks) {
            INFO("n=", n, " p=", p, " ", c.name, ": ", c.lhs, " vs ", c.rhs);
            CHECK(c.equal);
        }
    }
}
