#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ds/modmath.hpp"

// Elliptic curve arithmetic over Q and F_p: point counting, a_p / a_n sieve
// with an on-disk cache, and the l-torsion structure of E(F_p).

namespace ds {
namespace ecarith {

enum class ReductionKind { Good, SplitMult, NonsplitMult, Additive };

struct BadPrime {
    u64 p;
    ReductionKind kind;
    int ap;  // +1 split, -1 nonsplit, 0 additive
};

// Globally minimal integral Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct EllipticCurve {
    i64 a1, a2, a3, a4, a6;
    u64 conductor;
    i64 discriminant;             // computed
    i64 c4, c6;                   // computed invariants
    std::vector<BadPrime> bad_primes;

    // Derives discriminant, validates conductor support, derives bad-prime
    // data (multiplicative iff p || conductor; split via -c6 for p >= 5,
    // by nonsingular-point count for p in {2,3}).
    EllipticCurve(i64 a1_, i64 a2_, i64 a3_, i64 a4_, i64 a6_, u64 conductor_,
                  std::vector<BadPrime> bad_override = {});

    bool is_good(u64 p) const { return discriminant % (i64)p != 0; }
    const BadPrime* bad_info(u64 p) const;

    // Short-form reduction y^2 = x^3 + Ax + B mod p, valid for good p > 3.
    void short_form(u64 p, u64& A, u64& B) const;

    std::string digest() const;  // cache key over the coefficients + conductor
};

struct ReducedPoint {
    u64 x = 0, y = 0;
    bool infinity = true;
};

// #E(F_p) including the point at infinity, good p > 3. Exhaustive
// character-sum count below `exhaustive_threshold`, Hasse-interval order
// finding (BSGS on random points) above it; the two agree where both apply.
u64 count_points(const EllipticCurve& E, u64 p, u64 exhaustive_threshold = 10000);

// #E(F_p) for p in {2,3} (good) by direct enumeration on the long form.
u64 count_points_small(const EllipticCurve& E, u64 p);

// a_p for good or bad p.
i64 ap(const EllipticCurve& E, u64 p);

struct CoefficientTable {
    std::string curve_digest;
    u64 bound = 0;
    std::vector<i64> a;  // a[n] for 1 <= n <= bound; a[0] unused

    i64 at(u64 n) const { return a[n]; }
};

// Fills a_n for n <= M via multiplicativity and the Hecke recursion at prime
// powers. Uses / refreshes the binary cache in cache_dir when nonempty
// (see cache file format DSAP in the README).
CoefficientTable an_sieve(const EllipticCurve& E, u64 M, const std::string& cache_dir = "");

// Cache primitives, exposed for the format tests.
bool cache_load(const std::string& path, const std::string& digest, u64 M, CoefficientTable& out);
void cache_store(const std::string& path, const CoefficientTable& table);

// dim_{F_ell} E(F_p)[ell] in {0,1,2}; primary path = random-point Sylow
// probing. Requires good p, p != ell.
int ell_torsion_dim(const EllipticCurve& E, u64 p, u64 ell);

// Independent oracle: ell-division-polynomial root counting over F_p
// (gcd with x^p - x, then the quadratic-residue split for y-rationality).
// Requires good p > 3, p != ell.
int ell_torsion_dim_divpoly(const EllipticCurve& E, u64 p, u64 ell);

// Group law over F_p on the short form; exposed for the probing path tests.
struct ShortCurve {
    u64 p, A, B;
    ReducedPoint add(const ReducedPoint& P, const ReducedPoint& Q) const;
    ReducedPoint mul(ReducedPoint P, u64 k) const;
    bool on_curve(const ReducedPoint& P) const;
    ReducedPoint random_point(u64& state) const;
};

}  // namespace ecarith
}  // namespace ds
