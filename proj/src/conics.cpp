#include "ds/conics.hpp"

#include <algorithm>
#include <stdexcept>

namespace ds {
namespace conics {

static int eps4(i64 u) { return (int)(umod((u - 1) / 2, 2)); }
static int omega8(i64 u) { return (int)(umod((u * u - 1) / 8, 2)); }

int hilbert_symbol(i64 a, i64 b, i64 v) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
    if (v == kInfinitePlace) return (a < 0 && b < 0) ? -1 : 1;
    if (v < 2) throw std::invalid_argument("hilbert_symbol: invalid place");
    u64 p = (u64)v;
    int alpha = 0, beta = 0;
    while (a % (i64)p == 0) {
        a /= (i64)p;
        ++alpha;
    }
    while (b % (i64)p == 0) {
        b /= (i64)p;
        ++beta;
    }
    if (p == 2) {
        int e = eps4(a) * eps4(b) + alpha * omega8(b) + beta * omega8(a);
        return (e & 1) ? -1 : 1;
    }
    int sign = 1;
    if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) sign = -sign;
    if (beta & 1) sign *= kronecker(a, (i64)p);
    if (alpha & 1) sign *= kronecker(b, (i64)p);
    return sign;
}

ConicInvariants conic_invariants(i64 a, i64 b, i64 c) {
    if (a == 0 || b == 0 || c == 0) throw std::invalid_argument("conic_invariants: coefficients must be nonzero");
    a = squarefree_kernel(a);
    b = squarefree_kernel(b);
    c = squarefree_kernel(c);
    i64 g = gcd64(gcd64(a, b), c);
    a /= g;
    b /= g;
    c /= g;
    // pairwise reduction: p | a, p | b  ->  (a/p, b/p, cp), invariants preserved
    bool changed = true;
    while (changed) {
        changed = false;
        i64* co[3] = {&a, &b, &c};
        for (int i = 0; i < 3 && !changed; ++i)
            for (int j = i + 1; j < 3 && !changed; ++j) {
                i64 gij = gcd64(*co[i], *co[j]);
                if (gij > 1) {
                    i64 p = (i64)factorize((u64)gij)[0].first;
                    *co[i] /= p;
                    *co[j] /= p;
                    *co[3 - i - j] *= p;
                    changed = true;
                }
            }
    }
    ConicInvariants inv;
    inv.a = a;
    inv.b = b;
    inv.c = c;
    i64 s = -a * c, t = -b * c;
    std::vector<i64> places{kInfinitePlace, 2};
    for (auto [p, e] : factorize((u64)(a < 0 ? -a : a) * (u64)(b < 0 ? -b : b) * (u64)(c < 0 ? -c : c))) {
        (void)e;
        if (p > 2) places.push_back((i64)p);
    }
    for (i64 v : places)
        if (hilbert_symbol(s, t, v) == -1) inv.ramified.push_back(v);
    if (inv.ramified.size() % 2 != 0)
        throw std::logic_error("conic_invariants: ramified set has odd cardinality (reciprocity violated)");
    return inv;
}

bool member_quadratic(const ConicInvariants& conic, i64 d) {
    if (d == 1 || d == 0 || !is_squarefree(d))
        throw std::invalid_argument("member_quadratic: d must be squarefree and != 0, 1");
    for (i64 v : conic.ramified) {
        if (v == kInfinitePlace) {
            if (d > 0) return false;  // real quadratic field splits at infinity
        } else if (v == 2) {
            if (umod(d, 8) == 1) return false;  // 2 splits iff d = 1 mod 8
        } else {
            if (kronecker(d, v) == 1) return false;  // odd p splits iff (d|p) = +1
        }
    }
    return true;
}

bool same_membership_sets(const ConicInvariants& c1, const ConicInvariants& c2) {
    auto r1 = c1.ramified, r2 = c2.ramified;
    std::sort(r1.begin(), r1.end());
    std::sort(r2.begin(), r2.end());
    return r1 == r2;
}

// quadratic-residue table filter before the exact isqrt
static bool maybe_square(u128 n) {
    static bool m64[64], m63[63], m65[65];
    static bool init = [] {
        for (u64 i = 0; i < 64; ++i) m64[i * i % 64] = true;
        for (u64 i = 0; i < 63; ++i) m63[i * i % 63] = true;
        for (u64 i = 0; i < 65; ++i) m65[i * i % 65] = true;
        return true;
    }();
    (void)init;
    return m64[(u64)(n & 63)] && m63[(u64)(n % 63)] && m65[(u64)(n % 65)];
}

static bool is_square128(i128 n, u128& root) {
    if (n < 0 || !maybe_square((u128)n)) return false;
    root = isqrt128((u128)n);
    return (i128)(root * root) == n;
}

// exact test for z1^2 + d z2^2 = u, z1 z2 = w with |z1|, |z2| <= H
static bool solve_z(i64 d, i128 u, i128 w, i64 H) {
    if (d > 0 && u < 0) return false;  // positive-definite left side
    auto try_pair = [&](i128 z1sq, i128 z2sq) -> bool {
        if (z1sq < 0 || z2sq < 0) return false;
        u128 r1, r2;
        if (!is_square128(z1sq, r1) || !is_square128(z2sq, r2)) return false;
        if ((i64)r1 > H || (i64)r2 > H) return false;
        i128 z1 = (i128)r1, z2 = (i128)r2;
        // signs: need z1*z2 = w (one sign choice suffices up to global flip)
        if (z1 * z2 == (w < 0 ? -w : w)) {
            if (z1 * z2 == 0 && w != 0) return false;
            return z1sq + (i128)d * z2sq == u;
        }
        return false;
    };
    if (w == 0) {
        // z1 = 0 or z2 = 0
        if (u == 0) return true;  // z = (0,0)
        if (try_pair(u, 0)) return true;
        if (d != 0 && u % d == 0 && try_pair(0, u / d)) return true;
        return false;
    }
    // z2 != 0: d t^2 - u t + w^2 = 0 with t = z2^2
    i128 disc = u * u - 4 * (i128)d * w * w;
    u128 rd;
    if (!is_square128(disc, rd)) return false;
    for (int sgn = -1; sgn <= 1; sgn += 2) {
        i128 num = u + sgn * (i128)rd;
        if (num % (2 * (i128)d) != 0) continue;
        i128 t = num / (2 * (i128)d);
        if (t <= 0) continue;
        i128 z1sq = u - (i128)d * t;
        if (try_pair(z1sq, t)) return true;
    }
    return false;
}

bool brute_force_soluble(const ConicInvariants& conic, i64 d, i64 height) {
    if (height > 1000) throw std::invalid_argument("brute_force_soluble: height cutoff is 10^3");
    i64 a = conic.a, b = conic.b, c = conic.c;
    i64 H = height;
    for (i64 x1 = 0; x1 <= H; ++x1) {
        i64 x2lo = (x1 == 0) ? 0 : -H;  // x -> -x symmetry
        for (i64 x2 = x2lo; x2 <= H; ++x2) {
            i64 qx = x1 * x1 + d * x2 * x2;
            i64 rx = 2 * x1 * x2;
            for (i64 y1 = 0; y1 <= H; ++y1) {
                i64 y2lo = (y1 == 0) ? 0 : -H;  // y -> -y symmetry
                for (i64 y2 = y2lo; y2 <= H; ++y2) {
                    if (x1 == 0 && x2 == 0 && y1 == 0 && y2 == 0) continue;
                    i64 s1 = a * qx + b * (y1 * y1 + d * y2 * y2);
                    // u = -s1/c must be >= 0 when d > 0 (sign test before the divisions)
                    if (d > 0 && s1 != 0 && ((s1 < 0) == (c < 0))) continue;
                    i64 s2 = a * rx + b * 2 * y1 * y2;
                    if (s1 % c != 0 || s2 % (2 * c) != 0) continue;
                    if (solve_z(d, (i128)(-s1 / c), (i128)(-s2 / (2 * c)), H)) return true;
                }
            }
        }
    }
    return false;
}

}  // namespace conics
}  // namespace ds
