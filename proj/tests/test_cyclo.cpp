#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ennil/cyclo.hpp"

#include <random>

using namespace ennil;

TEST_CASE("cyclo_reduce canonical examples") {
    // relator maps to zero
    CHECK(cyclo_reduce(3, {{0, 1}, {2, 1}, {4, 1}}).is_zero());
    // q^6 = 1 for p=3, via long division oracle: q^6 - 1 = (q^2-1)*phi
    CHECK(cyclo_reduce(3, {{6, 1}}) == Cyclo::from_int(3, 1));
    CHECK(cyclo_reduce(5, {}).is_zero());
    // q^{-1} = q^{2p-1}
    CHECK(cyclo_reduce(3, {{-1, 1}}) == cyclo_reduce(3, {{5, 1}}));
}

TEST_CASE("ring axioms on random samples") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<long> de(-8, 8), dv(-3, 3);
    for (long p : {3L, 5L, 7L}) {
        for (int rep = 0; rep < 20; ++rep) {
            auto rnd = [&] {
                Cyclo x(p);
                for (int t = 0; t < 3; ++t) x.add_power(de(rng), Rat(dv(rng)));
                return x;
            };
            Cyclo a = rnd(), b = rnd(), c = rnd();
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("cyclo_invert") {
    for (long p : {3L, 5L, 7L}) {
        Cyclo one = Cyclo::from_int(p, 1);
        CHECK(cyclo_invert(one) == one);
        // q^{-1} from the gcd oracle times q is 1
        Cyclo q = Cyclo::q_power(p, 1);
        CHECK(q * cyclo_invert(q) == one);
        Cyclo qmq = Cyclo::q_power(p, 1) - Cyclo::q_power(p, -1);
        CHECK(qmq * cyclo_invert(qmq) == one);
    }
    // p=3: q^{-1} = q^5
    CHECK(cyclo_invert(Cyclo::q_power(3, 1)) == Cyclo::q_power(3, 5));
}

TEST_CASE("quantum integers") {
    for (long p : {3L, 5L, 7L}) {
        CHECK(quantum_int(p, 0).is_zero());
        CHECK(quantum_int(p, 1) == Cyclo::from_int(p, 1));
        CHECK(quantum_int(p, 2) ==
              Cyclo::q_power(p, 1) + Cyclo::q_power(p, 2 * p - 1));
        // [p](q - q^{-1}) = q^p - q^{-p}
        Cyclo qmq = Cyclo::q_power(p, 1) - Cyclo::q_power(p, -1);
        CHECK(quantum_int(p, p) * qmq ==
              Cyclo::q_power(p, p) - Cyclo::q_power(p, -p));
        // [p] itself is a zero divisor: not invertible
        CHECK_THROWS_AS((void)cyclo_invert(quantum_int(p, p)), NotInvertible);
    }
}

TEST_CASE("qlambda arithmetic") {
    long p = 5;
    QLambda a = QLambda::l_power(p, 1) * QLambda::q_power(p, -2);
    QLambda b = qlambda_invert(a);
    CHECK(a * b == QLambda::from_int(p, 1));
    CHECK((a - a).is_zero());
    CHECK(qlambda_str(QLambda::from_int(p, 1)) == "1");
}
