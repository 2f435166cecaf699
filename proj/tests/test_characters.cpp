#include <doctest.h>

#include <cmath>

#include "ds/characters.hpp"

using namespace ds;
using namespace ds::chars;

TEST_CASE("unit group structure") {
    UnitGroup G7(7);
    CHECK(G7.order() == 6);
    UnitGroup G8(8);
    CHECK(G8.order() == 4);
    CHECK(G8.gen.size() == 2);  // (Z/8)^* = C2 x C2
    UnitGroup G9(9);
    CHECK(G9.order() == 6);
    CHECK(G9.gen.size() == 1);
    // discrete logs invert: gen^dlog(a) = a
    UnitGroup G(45);
    for (u64 a = 1; a < 45; ++a) {
        if (gcd64((i64)a, 45) != 1) {
            CHECK(G.dlog[a].empty());
            continue;
        }
        u64 v = 1;
        for (size_t i = 0; i < G.gen.size(); ++i) v = mulmod(v, powmod(G.gen[i], G.dlog[a][i], 45), 45);
        CHECK(v == a);
    }
}

TEST_CASE("character counts of fixed order") {
    CHECK(characters_of_order(7, 3, 1).size() == 2);
    CHECK(characters_of_order(5, 3, 1).empty());   // 3 does not divide phi(5)
    CHECK(characters_of_order(9, 3, 1).size() == 2);
    CHECK(characters_of_order(13, 3, 1).size() == 2);
    CHECK(characters_of_order(9, 3, 2).empty());      // phi(9) = 6 admits no order-9 character
    CHECK(characters_of_order(27, 3, 2).size() == 6);  // cyclic of order 18: phi(9) of them
    CHECK(all_characters(12).size() == 4);
}

TEST_CASE("character values are multiplicative roots of unity") {
    for (auto& chi : characters_of_order(13, 3, 1)) {
        CHECK(chi.is_primitive());
        CHECK(chi.order == 3);
        for (u64 a = 1; a < 13; ++a)
            for (u64 b = 1; b < 13; ++b) {
                auto lhs = chi.value(a * b % 13);
                auto rhs = chi.value(a) * chi.value(b);
                CHECK(std::abs(lhs - rhs) < 1e-15L);
            }
        // chi^3 trivial
        auto cube = chi.power(3);
        for (u64 a = 1; a < 13; ++a) CHECK(cube.is_trivial_on(a));
    }
}

TEST_CASE("conductor computation") {
    // the mod-9 lifts of the two mod-3... none: order-3 characters mod 9 are primitive
    for (auto& chi : characters_of_order(9, 3, 1)) CHECK(chi.conductor == 9);
    // imprimitive example: the nontrivial character mod 3 lifted to mod 21
    bool saw_imprimitive = false;
    for (auto& chi : all_characters(21))
        if (chi.order == 2 && chi.conductor == 3) saw_imprimitive = true;
    CHECK(saw_imprimitive);
}

TEST_CASE("conjugate character") {
    for (auto& chi : characters_of_order(7, 3, 1)) {
        auto bar = chi.conjugate();
        for (u64 a = 1; a < 7; ++a) CHECK(std::abs(bar.value(a) - std::conj(chi.value(a))) < 1e-15L);
    }
}

TEST_CASE("galois orbits pair conjugates") {
    auto chis = characters_of_order(7, 3, 1);
    auto orbits = galois_orbits(chis);
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].size() == 2);

    auto big = characters_of_order(31, 3, 1);
    CHECK(big.size() == 2);
    CHECK(galois_orbits(big).size() == 1);

    auto nine = characters_of_order(27, 3, 2);  // one orbit of size phi(9) = 6
    auto nine_orbits = galois_orbits(nine);
    REQUIRE(nine_orbits.size() == 1);
    CHECK(nine_orbits[0].size() == 6);
}

TEST_CASE("orthogonality of the full dual group") {
    u64 f = 11;
    auto chis = all_characters(f);
    REQUIRE(chis.size() == 10);
    for (u64 a = 2; a < f; ++a) {
        std::complex<long double> s{0.0L, 0.0L};
        for (auto& chi : chis) s += chi.value(a);
        CHECK(std::abs(s) < 1e-12L);  // column orthogonality at a != 1
    }
}
