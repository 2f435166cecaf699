#include <doctest.h>

#include <stdexcept>

#include "ds/conics.hpp"

using namespace ds;
using namespace ds::conics;

TEST_CASE("hilbert symbol classics") {
    CHECK(hilbert_symbol(-1, -1, 2) == -1);
    CHECK(hilbert_symbol(-1, -1, kInfinitePlace) == -1);
    CHECK(hilbert_symbol(-1, -1, 3) == 1);
    CHECK(hilbert_symbol(-1, -1, 5) == 1);
    CHECK(hilbert_symbol(2, 3, 3) == -1);
    CHECK(hilbert_symbol(1, 5, 7) == 1);
    CHECK_THROWS_AS(hilbert_symbol(0, 1, 2), std::invalid_argument);
}

TEST_CASE("hilbert symbol bimultiplicativity") {
    for (i64 v : {(i64)2, (i64)3, (i64)5, (i64)7, kInfinitePlace})
        for (i64 a = -6; a <= 6; ++a)
            for (i64 b = -6; b <= 6; ++b)
                for (i64 c = -6; c <= 6; ++c) {
                    if (a == 0 || b == 0 || c == 0) continue;
                    CHECK(hilbert_symbol(a * b, c, v) == hilbert_symbol(a, c, v) * hilbert_symbol(b, c, v));
                }
}

TEST_CASE("hilbert symbol product formula") {
    for (i64 a = -10; a <= 10; ++a)
        for (i64 b = -10; b <= 10; ++b) {
            if (a == 0 || b == 0) continue;
            int prod = hilbert_symbol(a, b, kInfinitePlace) * hilbert_symbol(a, b, 2);
            for (u64 p : primes_up_to(30))
                if (p > 2) prod *= hilbert_symbol(a, b, (i64)p);
            CHECK(prod == 1);
        }
}

TEST_CASE("ramified set of the sum of three squares") {
    auto inv = conic_invariants(1, 1, 1);  // x^2 + y^2 + z^2 = 0
    std::vector<i64> expected{kInfinitePlace, 2};
    CHECK(inv.ramified == expected);
}

TEST_CASE("soluble conic has empty ramified set") {
    auto inv = conic_invariants(1, 1, -2);  // (1, 1, 1) is a point
    CHECK(inv.ramified.empty());
    CHECK(member_quadratic(inv, 7));  // split everywhere: all fields are members
    CHECK(member_quadratic(inv, -5));
}

TEST_CASE("invariants survive coefficient scaling and square parts") {
    auto inv1 = conic_invariants(1, 1, 1);
    auto inv2 = conic_invariants(4, 9, 25);
    auto inv3 = conic_invariants(3, 3, 3);
    CHECK(same_membership_sets(inv1, inv2));
    CHECK(same_membership_sets(inv1, inv3));
}

TEST_CASE("membership for x^2 + y^2 + z^2") {
    auto inv = conic_invariants(1, 1, 1);
    CHECK(member_quadratic(inv, -1));       // Q(i) splits at infinity and 2
    CHECK_FALSE(member_quadratic(inv, 7));  // real field: infinity stays ramified
    CHECK_FALSE(member_quadratic(inv, -7)); // -7 = 1 mod 8: 2 splits
    CHECK(member_quadratic(inv, -5));
    CHECK_THROWS_AS(member_quadratic(inv, 12), std::invalid_argument);
    CHECK_THROWS_AS(member_quadratic(inv, 1), std::invalid_argument);
}

TEST_CASE("brute force agrees with local membership on small data") {
    auto inv = conic_invariants(1, 1, 1);
    CHECK(brute_force_soluble(inv, -1, 5));       // (1, i, 0) style solution
    CHECK_FALSE(brute_force_soluble(inv, 7, 40)); // not a member: no point at any height

    auto inv2 = conic_invariants(1, 1, -2);
    CHECK(brute_force_soluble(inv2, 5, 5));       // rational point survives any d

    // member over Q(sqrt(-5)): search should locate a witness quickly
    CHECK(member_quadratic(inv, -5));
    CHECK(brute_force_soluble(inv, -5, 20));
}

TEST_CASE("ramified sets always have even cardinality") {
    for (i64 a = -8; a <= 8; ++a)
        for (i64 b = -8; b <= 8; ++b)
            for (i64 c : {(i64)-5, (i64)1, (i64)3}) {
                if (a == 0 || b == 0) continue;
                auto inv = conic_invariants(a, b, c);
                CHECK(inv.ramified.size() % 2 == 0);
            }
}
