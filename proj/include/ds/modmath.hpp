#pragma once

#include <cstdint>
#include <vector>

// Shared modular arithmetic on 64-bit residues, prime sieving and small
// factorization. Moduli are assumed to fit in 63 bits; products go through
// __int128.

namespace ds {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

inline u64 addmod(u64 a, u64 b, u64 m) {
    a += b;
    if (a >= m) a -= m;
    return a;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

u64 powmod(u64 base, u64 exp, u64 m);

// Inverse of a mod m, requires gcd(a, m) = 1.
u64 invmod(u64 a, u64 m);

// Reduce a possibly negative integer into [0, m).
inline u64 umod(i64 a, u64 m) {
    i64 r = a % (i64)m;
    return r < 0 ? (u64)(r + (i64)m) : (u64)r;
}

// Legendre symbol (a|p) for odd prime p: returns -1, 0 or 1.
int legendre(u64 a, u64 p);

// Kronecker symbol (a|n), full generality (n may be negative or even).
int kronecker(i64 a, i64 n);

// Square root mod an odd prime (Tonelli-Shanks); requires (a|p) != -1.
u64 sqrtmod(u64 a, u64 p);

// Primes up to and including n.
std::vector<u64> primes_up_to(u64 n);

bool is_prime(u64 n);

// Trial-division factorization, (prime, exponent) pairs.
std::vector<std::pair<u64, int>> factorize(u64 n);

// Squarefree kernel of |n| with the sign of n preserved (n != 0).
i64 squarefree_kernel(i64 n);

bool is_squarefree(i64 n);

// Floor of sqrt for 64-bit and 128-bit arguments, exact.
u64 isqrt(u64 n);
u128 isqrt128(u128 n);

inline bool is_square(u64 n) {
    u64 r = isqrt(n);
    return r * r == n;
}

// Smallest primitive root mod an odd prime power p^k (k >= 1).
u64 primitive_root(u64 p, int k);

i64 gcd64(i64 a, i64 b);

}  // namespace ds
