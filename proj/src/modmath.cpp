#include "ds/modmath.hpp"

#include <stdexcept>

namespace ds {

u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m) {
    i64 t = 0, nt = 1;
    i64 r = (i64)m, nr = (i64)(a % m);
    while (nr != 0) {
        i64 q = r / nr;
        i64 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::domain_error("invmod: not invertible");
    return umod(t, m);
}

int legendre(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    u64 e = powmod(a, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    // strip factors of two from n
    int v2 = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v2;
    }
    if (v2 > 0) {
        if (a % 2 == 0) return 0;
        i64 am8 = ((a % 8) + 8) % 8;
        if ((v2 & 1) && (am8 == 3 || am8 == 5)) sign = -sign;
    }
    // now n odd positive; quadratic reciprocity loop
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        int v = 0;
        while (a % 2 == 0) {
            a /= 2;
            ++v;
        }
        if (v & 1) {
            i64 nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) sign = -sign;
        }
        if ((a % 4 == 3) && (n % 4 == 3)) sign = -sign;
        i64 t = a;
        a = n % t;
        n = t;
    }
    return n == 1 ? sign : 0;
}

u64 sqrtmod(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (legendre(a, p) != 1) throw std::domain_error("sqrtmod: non-residue");
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (legendre(z, p) != -1) ++z;
    u64 m = s;
    u64 c = powmod(z, q, p);
    u64 t = powmod(a, q, p);
    u64 r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 t2 = t;
        u64 i = 0;
        while (t2 != 1) {
            t2 = mulmod(t2, t2, p);
            ++i;
        }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

std::vector<u64> primes_up_to(u64 n) {
    std::vector<u64> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (u64 i = 2; i * i <= n; ++i)
        if (!comp[i])
            for (u64 j = i * i; j <= n; j += i) comp[j] = true;
    for (u64 i = 2; i <= n; ++i)
        if (!comp[i]) out.push_back(i);
    return out;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit range
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (a % n == 0) continue;
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
    std::vector<std::pair<u64, int>> out;
    for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.push_back({d, e});
        }
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

i64 squarefree_kernel(i64 n) {
    if (n == 0) throw std::domain_error("squarefree_kernel: zero");
    i64 sign = n < 0 ? -1 : 1;
    u64 m = (u64)(n < 0 ? -n : n);
    i64 k = 1;
    for (auto [p, e] : factorize(m))
        if (e & 1) k *= (i64)p;
    return sign * k;
}

bool is_squarefree(i64 n) {
    if (n == 0) return false;
    u64 m = (u64)(n < 0 ? -n : n);
    for (auto [p, e] : factorize(m))
        if (e > 1) return false;
    return true;
}

u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = (u64)__builtin_sqrtl((long double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

u128 isqrt128(u128 n) {
    if (n == 0) return 0;
    u128 r = (u128)(u64)__builtin_sqrtl((long double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

u64 primitive_root(u64 p, int k) {
    // generator mod p first
    u64 phi = p - 1;
    auto fac = factorize(phi);
    u64 g = 2;
    for (;; ++g) {
        bool ok = true;
        for (auto [q, e] : fac) {
            (void)e;
            if (powmod(g, phi / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) break;
    }
    if (k == 1) return g;
    // lift: g generates mod p^k unless g^{p-1} = 1 mod p^2
    u64 p2 = p * p;
    if (powmod(g, p - 1, p2) == 1) g += p;
    return g;
}

i64 gcd64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace ds
