#include "ds/ecarith.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace ds {
namespace ecarith {

// ---------------------------------------------------------------- curve model

EllipticCurve::EllipticCurve(i64 a1_, i64 a2_, i64 a3_, i64 a4_, i64 a6_, u64 conductor_,
                             std::vector<BadPrime> bad_override)
    : a1(a1_), a2(a2_), a3(a3_), a4(a4_), a6(a6_), conductor(conductor_) {
    i128 b2 = (i128)a1 * a1 + 4 * (i128)a2;
    i128 b4 = 2 * (i128)a4 + (i128)a1 * a3;
    i128 b6 = (i128)a3 * a3 + 4 * (i128)a6;
    i128 b8 = (i128)a1 * a1 * a6 + 4 * (i128)a2 * a6 - (i128)a1 * a3 * a4 +
              (i128)a2 * a3 * a3 - (i128)a4 * a4;
    i128 disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    i128 c4_ = b2 * b2 - 24 * b4;
    i128 c6_ = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    auto fits = [](i128 v) { return v >= INT64_MIN && v <= INT64_MAX; };
    if (!fits(disc) || !fits(c4_) || !fits(c6_))
        throw std::overflow_error("EllipticCurve: invariants exceed 64 bits");
    discriminant = (i64)disc;
    c4 = (i64)c4_;
    c6 = (i64)c6_;
    if (discriminant == 0) throw std::invalid_argument("EllipticCurve: singular model");
    if (conductor == 0) throw std::invalid_argument("EllipticCurve: conductor required");

    u64 absd = (u64)(discriminant < 0 ? -discriminant : discriminant);
    auto dfac = factorize(absd);
    auto nfac = factorize(conductor);
    // conductor support must equal discriminant support
    for (auto [p, e] : nfac) {
        (void)e;
        if (absd % p != 0) throw std::invalid_argument("EllipticCurve: conductor prime not in discriminant");
    }
    for (auto [p, e] : dfac) {
        (void)e;
        if (conductor % p != 0) throw std::invalid_argument("EllipticCurve: discriminant prime missing from conductor");
    }

    for (auto [p, e] : nfac) {
        const BadPrime* over = nullptr;
        for (auto& b : bad_override)
            if (b.p == p) over = &b;
        if (over) {
            bad_primes.push_back(*over);
            continue;
        }
        BadPrime bp;
        bp.p = p;
        if (e >= 2) {
            bp.kind = ReductionKind::Additive;
            bp.ap = 0;
        } else if (p >= 5) {
            bool split = legendre(umod(-c6, p), p) == 1;
            bp.kind = split ? ReductionKind::SplitMult : ReductionKind::NonsplitMult;
            bp.ap = split ? 1 : -1;
        } else {
            // p = 2, 3: count nonsingular points on the long form
            u64 ns = 1;  // infinity
            for (u64 x = 0; x < p; ++x)
                for (u64 y = 0; y < p; ++y) {
                    i64 lhs = (i64)(y * y) + a1 * (i64)(x * y) + a3 * (i64)y;
                    i64 rhs = (i64)(x * x * x) + a2 * (i64)(x * x) + a4 * (i64)x + a6;
                    if (umod(lhs - rhs, p) != 0) continue;
                    // singular iff both partials vanish
                    i64 fx = a1 * (i64)y - 3 * (i64)(x * x) - 2 * a2 * (i64)x - a4;
                    i64 fy = 2 * (i64)y + a1 * (i64)x + a3;
                    if (umod(fx, p) == 0 && umod(fy, p) == 0) continue;
                    ++ns;
                }
            i64 app = (i64)p - (i64)ns;
            bp.ap = (int)app;
            bp.kind = app == 1 ? ReductionKind::SplitMult
                               : (app == -1 ? ReductionKind::NonsplitMult : ReductionKind::Additive);
        }
        bad_primes.push_back(bp);
    }
}

const BadPrime* EllipticCurve::bad_info(u64 p) const {
    for (auto& b : bad_primes)
        if (b.p == p) return &b;
    return nullptr;
}

void EllipticCurve::short_form(u64 p, u64& A, u64& B) const {
    if (p <= 3) throw std::invalid_argument("short_form: requires p > 3");
    // y^2 = x^3 - 27 c4 x - 54 c6, isomorphic over F_p for p > 3
    A = mulmod(27, umod(-c4, p), p);
    B = mulmod(54, umod(-c6, p), p);
}

std::string EllipticCurve::digest() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%lld_%lld_%lld_%lld_%lld_%llu", (long long)a1, (long long)a2,
                  (long long)a3, (long long)a4, (long long)a6, (unsigned long long)conductor);
    return buf;
}

// ---------------------------------------------------------------- group law

bool ShortCurve::on_curve(const ReducedPoint& P) const {
    if (P.infinity) return true;
    u64 lhs = mulmod(P.y, P.y, p);
    u64 rhs = addmod(mulmod(mulmod(P.x, P.x, p), P.x, p), addmod(mulmod(A, P.x, p), B, p), p);
    return lhs == rhs;
}

ReducedPoint ShortCurve::add(const ReducedPoint& P, const ReducedPoint& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    if (P.x == Q.x) {
        if (addmod(P.y, Q.y, p) == 0) return ReducedPoint{};  // P + (-P) = O
        // doubling
        u64 num = addmod(mulmod(3, mulmod(P.x, P.x, p), p), A, p);
        u64 den = mulmod(2, P.y, p);
        u64 s = mulmod(num, invmod(den, p), p);
        u64 x3 = submod(mulmod(s, s, p), addmod(P.x, P.x, p), p);
        u64 y3 = submod(mulmod(s, submod(P.x, x3, p), p), P.y, p);
        return ReducedPoint{x3, y3, false};
    }
    u64 s = mulmod(submod(Q.y, P.y, p), invmod(submod(Q.x, P.x, p), p), p);
    u64 x3 = submod(submod(mulmod(s, s, p), P.x, p), Q.x, p);
    u64 y3 = submod(mulmod(s, submod(P.x, x3, p), p), P.y, p);
    return ReducedPoint{x3, y3, false};
}

ReducedPoint ShortCurve::mul(ReducedPoint P, u64 k) const {
    ReducedPoint R{};
    while (k) {
        if (k & 1) R = add(R, P);
        P = add(P, P);
        k >>= 1;
    }
    return R;
}

static u64 xorshift(u64& s) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
}

ReducedPoint ShortCurve::random_point(u64& state) const {
    for (;;) {
        u64 x = xorshift(state) % p;
        u64 t = addmod(mulmod(mulmod(x, x, p), x, p), addmod(mulmod(A, x, p), B, p), p);
        if (t == 0) return ReducedPoint{x, 0, false};
        if (legendre(t, p) != 1) continue;
        u64 y = sqrtmod(t, p);
        if (xorshift(state) & 1) y = p - y;
        return ReducedPoint{x, y, false};
    }
}

// ---------------------------------------------------------------- counting

u64 count_points_small(const EllipticCurve& E, u64 p) {
    if (p > 3) throw std::invalid_argument("count_points_small: p must be 2 or 3");
    if (!E.is_good(p)) throw std::invalid_argument("count_points_small: bad prime");
    u64 n = 1;
    for (u64 x = 0; x < p; ++x)
        for (u64 y = 0; y < p; ++y) {
            i64 lhs = (i64)(y * y) + E.a1 * (i64)(x * y) + E.a3 * (i64)y;
            i64 rhs = (i64)(x * x * x) + E.a2 * (i64)(x * x) + E.a4 * (i64)x + E.a6;
            if (umod(lhs - rhs, p) == 0) ++n;
        }
    return n;
}

static u64 count_points_exhaustive(const ShortCurve& C) {
    u64 p = C.p;
    // quadratic residue table
    std::vector<signed char> chi(p, -1);
    chi[0] = 0;
    for (u64 i = 1; i <= (p - 1) / 2; ++i) chi[mulmod(i, i, p)] = 1;
    i64 sum = 0;
    for (u64 x = 0; x < p; ++x) {
        u64 t = addmod(mulmod(mulmod(x, x, p), x, p), addmod(mulmod(C.A, x, p), C.B, p), p);
        sum += chi[t];
    }
    return (u64)((i64)p + 1 + sum);
}

// Smallest n in [low, high] with nP = O, reduced to the exact order of P.
static u64 point_order(const ShortCurve& C, const ReducedPoint& P, u64 low, u64 high) {
    u64 width = high - low + 1;
    u64 m = isqrt(width) + 1;
    // baby steps: j -> jP for j in [0, m)
    std::unordered_map<u64, std::vector<std::pair<u64, u64>>> baby;  // x -> (j, y)
    baby.reserve(m * 2);
    ReducedPoint J{};  // 0*P
    std::vector<ReducedPoint> babies(m);
    for (u64 j = 0; j < m; ++j) {
        babies[j] = J;
        if (!J.infinity) baby[J.x].push_back({j, J.y});
        J = C.add(J, P);
    }
    ReducedPoint G = C.mul(P, m);
    ReducedPoint Q = C.mul(P, low);
    u64 found = 0;
    for (u64 i = 0; low + i * m <= high + m; ++i) {
        // looking for Q + jP = O, i.e. Q = -(jP) = (x_j, -y_j)
        if (Q.infinity) {
            found = low + i * m;  // j = 0
            break;
        }
        auto it = baby.find(Q.x);
        if (it != baby.end()) {
            bool hit = false;
            for (auto [j, y] : it->second) {
                if (Q.y == (y == 0 ? 0 : C.p - y)) {
                    found = low + i * m + j;
                    hit = true;
                    break;
                }
            }
            if (hit) break;
        }
        Q = C.add(Q, G);
    }
    if (found == 0) throw std::logic_error("point_order: no annihilator in Hasse interval");
    // reduce the annihilator to the exact order
    u64 n = found;
    for (auto [q, e] : factorize(n)) {
        (void)e;
        while (n % q == 0 && C.mul(P, n / q).infinity) n /= q;
    }
    return n;
}

u64 count_points(const EllipticCurve& E, u64 p, u64 exhaustive_threshold) {
    if (p <= 3) throw std::invalid_argument("count_points: requires p > 3 (use count_points_small)");
    if (!E.is_good(p)) throw std::invalid_argument("count_points: bad prime");
    ShortCurve C;
    C.p = p;
    E.short_form(p, C.A, C.B);
    if (p <= exhaustive_threshold) return count_points_exhaustive(C);

    u64 tmax = isqrt(4 * p);
    u64 low = p + 1 - tmax, high = p + 1 + tmax;
    u64 L = 1;
    u64 state = 0x9e3779b97f4a7c15ull ^ (p * 0x100000001b3ull) ^ (u64)E.discriminant;
    for (int attempt = 0; attempt < 16; ++attempt) {
        ReducedPoint P = C.random_point(state);
        u64 ord = point_order(C, P, low, high);
        L = std::lcm(L, ord);
        u64 k0 = (low + L - 1) / L, k1 = high / L;
        if (k0 == k1) return k0 * L;
        if (k0 > k1) throw std::logic_error("count_points: no multiple of exponent in Hasse interval");
    }
    // ambiguity persists (tiny group exponent); correctness over speed
    return count_points_exhaustive(C);
}

i64 ap(const EllipticCurve& E, u64 p) {
    if (const BadPrime* b = E.bad_info(p)) return b->ap;
    if (p <= 3) return (i64)p + 1 - (i64)count_points_small(E, p);
    return (i64)p + 1 - (i64)count_points(E, p);
}

// ---------------------------------------------------------------- a_n sieve

static u64 fnv1a(const std::string& s) {
    u64 h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {
constexpr char kMagic[4] = {'D', 'S', 'A', 'P'};
constexpr std::uint16_t kVersion = 1;
}  // namespace

bool cache_load(const std::string& path, const std::string& digest, u64 M, CoefficientTable& out) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return false;
    char magic[4];
    f.read(magic, 4);
    if (!f || std::memcmp(magic, kMagic, 4) != 0) return false;
    std::uint16_t ver = 0;
    f.read(reinterpret_cast<char*>(&ver), sizeof ver);
    if (!f || ver != kVersion) return false;
    u64 hash = 0, bound = 0;
    f.read(reinterpret_cast<char*>(&hash), sizeof hash);
    f.read(reinterpret_cast<char*>(&bound), sizeof bound);
    if (!f || hash != fnv1a(digest) || bound < M) return false;
    out.curve_digest = digest;
    out.bound = M;
    out.a.assign(M + 1, 0);
    for (u64 n = 1; n <= bound; ++n) {
        i64 v = 0;
        f.read(reinterpret_cast<char*>(&v), sizeof v);
        if (!f) return false;
        if (n <= M) out.a[n] = v;
    }
    return true;
}

void cache_store(const std::string& path, const CoefficientTable& table) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) return;  // cache is best-effort
    f.write(kMagic, 4);
    f.write(reinterpret_cast<const char*>(&kVersion), sizeof kVersion);
    u64 hash = fnv1a(table.curve_digest);
    f.write(reinterpret_cast<const char*>(&hash), sizeof hash);
    f.write(reinterpret_cast<const char*>(&table.bound), sizeof table.bound);
    for (u64 n = 1; n <= table.bound; ++n)
        f.write(reinterpret_cast<const char*>(&table.a[n]), sizeof(i64));
}

CoefficientTable an_sieve(const EllipticCurve& E, u64 M, const std::string& cache_dir) {
    CoefficientTable t;
    t.curve_digest = E.digest();
    std::string path;
    if (!cache_dir.empty()) {
        path = cache_dir + "/" + t.curve_digest + ".dsap";
        if (cache_load(path, t.curve_digest, M, t)) return t;
    }
    t.bound = M;
    t.a.assign(M + 1, 0);
    if (M >= 1) t.a[1] = 1;

    // smallest-prime-factor sieve
    std::vector<u64> spf(M + 1, 0);
    for (u64 i = 2; i <= M; ++i)
        if (spf[i] == 0)
            for (u64 j = i; j <= M; j += i)
                if (spf[j] == 0) spf[j] = i;

    for (u64 n = 2; n <= M; ++n) {
        u64 p = spf[n];
        u64 pe = p, m = n / p;
        while (m % p == 0) {
            pe *= p;
            m /= p;
        }
        if (m > 1) {
            t.a[n] = t.a[pe] * t.a[m];
            continue;
        }
        // n = p^e
        if (pe == p) {
            t.a[n] = ap(E, p);
        } else if (E.is_good(p)) {
            u64 pem1 = pe / p, pem2 = pe / (p * p);
            t.a[n] = t.a[p] * t.a[pem1] - (i64)p * t.a[pem2];
        } else {
            t.a[n] = t.a[p] * t.a[pe / p];
        }
    }
    if (!path.empty()) cache_store(path, t);
    return t;
}

// ---------------------------------------------------------------- torsion

int ell_torsion_dim(const EllipticCurve& E, u64 p, u64 ell) {
    if (!E.is_good(p)) throw std::invalid_argument("ell_torsion_dim: bad prime");
    if (p == ell) throw std::invalid_argument("ell_torsion_dim: p = ell");
    u64 N = p <= 3 ? count_points_small(E, p) : count_points(E, p);
    if (N % ell != 0) return 0;
    if ((p - 1) % ell != 0) return 1;  // full l-torsion needs mu_ell in F_p (Weil pairing)
    u64 lv = 1;
    int v = 0;
    while (N % (lv * ell) == 0) {
        lv *= ell;
        ++v;
    }
    if (v == 1) return 1;  // Sylow is Z/ell, cyclic
    if (p <= 3) return 1;  // |E(F_p)| <= 7 < ell^2 for odd ell; unreachable with v >= 2
    u64 m = N / lv;
    ShortCurve C;
    C.p = p;
    E.short_form(p, C.A, C.B);
    u64 state = 0x2545f4914f6cdd1dull ^ p ^ (ell << 32);
    // An element of order ell^v exists iff the Sylow subgroup is cyclic.
    for (int i = 0; i < 64; ++i) {
        ReducedPoint R = C.mul(C.random_point(state), m);
        int ord = 0;
        while (!R.infinity) {
            R = C.mul(R, ell);
            ++ord;
        }
        if (ord == v) return 1;  // witnessed a cyclic Sylow generator
    }
    return 2;
}

// --- polynomial helpers over F_p (dense, low degree) ---

using Poly = std::vector<u64>;  // coefficient i of x^i; normalized (no leading zeros)

static void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

static Poly pmul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = addmod(c[i + j], mulmod(a[i], b[j], p), p);
    }
    return c;
}

static Poly psub(Poly a, const Poly& b, u64 p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
    trim(a);
    return a;
}

static Poly pscale(Poly a, u64 s, u64 p) {
    for (auto& c : a) c = mulmod(c, s, p);
    trim(a);
    return a;
}

// remainder of a mod m (m monic not required)
static Poly pmod(Poly a, const Poly& m, u64 p) {
    trim(a);
    u64 lead_inv = invmod(m.back(), p);
    while (a.size() >= m.size()) {
        u64 f = mulmod(a.back(), lead_inv, p);
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[shift + i] = submod(a[shift + i], mulmod(f, m[i], p), p);
        trim(a);
    }
    return a;
}

static Poly pgcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = pscale(a, invmod(a.back(), p), p);  // monic
    return a;
}

static Poly ppowmod(Poly base, u64 e, const Poly& m, u64 p) {
    Poly r = {1};
    base = pmod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = pmod(pmul(r, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

// f_m of the division-polynomial ladder: psi_m = f_m for m odd,
// psi_m = 2y f_m for m even, on y^2 = x^3 + Ax + B.
static Poly divpoly(u64 m, u64 A, u64 B, u64 p) {
    std::vector<Poly> f(m + 3);
    u64 A2 = mulmod(A, A, p), A3 = mulmod(A2, A, p), B2 = mulmod(B, B, p);
    f[0] = {};
    f[1] = {1};
    if (m + 3 > 2) f[2] = {1};
    if (m + 3 > 3) f[3] = {umod(-(i64)A2, p), mulmod(12, B, p), mulmod(6, A, p), 0, 3};
    if (m + 3 > 4)
        f[4] = pscale({submod(0, addmod(mulmod(8, B2, p), A3, p), p),
                       umod(-(i64)mulmod(4, mulmod(A, B, p), p), p),
                       umod(-(i64)mulmod(5, A2, p), p), mulmod(20, B, p), mulmod(5, A, p), 0, 1},
                      2, p);
    Poly F = {mulmod(4, B, p), mulmod(4, A, p), 0, 4};  // (2y)^2
    Poly F2 = pmul(F, F, p);
    for (u64 k = 5; k <= m; ++k) {
        if (k & 1) {
            u64 r = (k - 1) / 2;
            Poly t1 = pmul(f[r + 2], pmul(f[r], pmul(f[r], f[r], p), p), p);
            Poly t2 = pmul(f[r - 1], pmul(f[r + 1], pmul(f[r + 1], f[r + 1], p), p), p);
            f[k] = (r % 2 == 0) ? psub(pmul(F2, t1, p), t2, p) : psub(t1, pmul(F2, t2, p), p);
        } else {
            u64 r = k / 2;
            Poly t1 = pmul(f[r + 2], pmul(f[r - 1], f[r - 1], p), p);
            Poly t2 = pmul(f[r - 2], pmul(f[r + 1], f[r + 1], p), p);
            f[k] = pmul(f[r], psub(t1, t2, p), p);
        }
    }
    return f[m];
}

int ell_torsion_dim_divpoly(const EllipticCurve& E, u64 p, u64 ell) {
    if (!E.is_good(p)) throw std::invalid_argument("ell_torsion_dim_divpoly: bad prime");
    if (p == ell || p <= 3) throw std::invalid_argument("ell_torsion_dim_divpoly: requires good p > 3, p != ell");
    u64 A, B;
    E.short_form(p, A, B);
    Poly psi = divpoly(ell, A, B, p);
    // rational x-coordinates of nonzero ell-torsion
    Poly xp = ppowmod({0, 1}, p, psi, p);
    Poly g = pgcd(psub(xp, {0, 1}, p), psi, p);
    if (g.empty() || g.size() == 1) return 0;
    // among those, x with f(x) a square gives points rational over F_p
    Poly fx = {B, A, 0, 1};
    Poly u = ppowmod(fx, (p - 1) / 2, g, p);
    Poly h = pgcd(psub(u, {1}, p), g, p);
    u64 s = h.empty() ? 0 : (u64)(h.size() - 1);
    if (s == 0) return 0;
    if (2 * s == ell - 1) return 1;
    if (2 * s == ell * ell - 1) return 2;
    throw std::logic_error("ell_torsion_dim_divpoly: inconsistent rational root count");
}

}  // namespace ecarith
}  // namespace ds
