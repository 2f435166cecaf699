#include <doctest.h>

#include "ds/modmath.hpp"

using namespace ds;

TEST_CASE("primality and sieve agree") {
    auto ps = primes_up_to(2000);
    size_t k = 0;
    for (u64 n = 2; n <= 2000; ++n) {
        bool sieved = (k < ps.size() && ps[k] == n);
        CHECK(is_prime(n) == sieved);
        if (sieved) ++k;
    }
    CHECK(k == ps.size());
}

TEST_CASE("is_prime on Miller-Rabin base values") {
    // every base used internally must itself test prime
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) CHECK(is_prime(p));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
    CHECK(is_prime(1000000007ull));
}

TEST_CASE("powmod / invmod") {
    CHECK(powmod(2, 10, 1000) == 24);
    for (u64 p : {5ull, 97ull, 1000003ull})
        for (u64 a = 1; a < 20; ++a) CHECK(mulmod(a % p == 0 ? 1 : a, invmod(a % p == 0 ? 1 : a, p), p) == 1);
}

TEST_CASE("legendre and sqrtmod") {
    u64 p = 1000003;
    int residues = 0;
    for (u64 a = 1; a < 200; ++a) {
        int chi = legendre(a, p);
        if (chi == 1) {
            ++residues;
            u64 r = sqrtmod(a, p);
            CHECK(mulmod(r, r, p) == a);
        }
    }
    CHECK(residues > 50);
}

TEST_CASE("kronecker symbol small table") {
    // (2|p) by p mod 8
    CHECK(kronecker(2, 7) == 1);
    CHECK(kronecker(2, 3) == -1);
    CHECK(kronecker(2, 5) == -1);
    CHECK(kronecker(-1, 5) == 1);
    CHECK(kronecker(-1, 7) == -1);
    // multiplicativity in the top argument
    for (i64 a = -10; a <= 10; ++a)
        for (i64 b = -10; b <= 10; ++b)
            if (a != 0 && b != 0) CHECK(kronecker(a * b, 11) == kronecker(a, 11) * kronecker(b, 11));
}

TEST_CASE("factorize round trip") {
    for (u64 n : {2ull, 60ull, 571ull, 5906ull, 999966000289ull}) {
        u64 prod = 1;
        for (auto [p, e] : factorize(n)) {
            CHECK(is_prime(p));
            for (int i = 0; i < e; ++i) prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("squarefree kernel") {
    CHECK(squarefree_kernel(12) == 3);
    CHECK(squarefree_kernel(-18) == -2);
    CHECK(squarefree_kernel(1) == 1);
    CHECK(is_squarefree(17));
    CHECK_FALSE(is_squarefree(12));
}

TEST_CASE("isqrt exactness at boundaries") {
    for (u64 n : {0ull, 1ull, 3ull, 4ull, 24ull, 25ull, 26ull, 1000000000000000000ull}) {
        u64 r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
}
