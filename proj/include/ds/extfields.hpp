#pragma once

#include <optional>
#include <vector>

#include "ds/characters.hpp"
#include "ds/modmath.hpp"

// Cyclic ell-power extensions of Q represented by Galois orbits of Dirichlet
// characters: enumeration by conductor, discriminant counting, growth-exponent
// fitting, and the S-ramified Sigma-split construction.

namespace ds {
namespace extfields {

struct CyclicFieldRecord {
    u64 conductor;
    u64 degree;                       // ell^n
    u128 discriminant_norm;           // conductor-discriminant product
    chars::DirichletCharacter rep;    // orbit representative
    std::vector<u64> ramified_primes;
};

struct ExtensionCount {
    u128 bound;                                  // X
    u64 count;                                   // |F_Q(X)|
    std::vector<std::pair<u64, u64>> per_conductor;  // (f, fields with disc < X)
};

struct WrightFit {
    double slope;
    double ci_halfwidth;  // 95% half-width of the least-squares slope
    std::vector<std::pair<double, u64>> grid;  // (X, count)
};

// All primitive characters mod f of order exactly ell^n (thin wrapper kept
// for the module surface; see chars::characters_of_order).
inline std::vector<chars::DirichletCharacter> characters_of_order(u64 f, u64 ell, int n) {
    return chars::characters_of_order(f, ell, n);
}

// Degree-ell^n cyclic fields with discriminant norm < X, counted by the
// conductor formula; fields-per-conductor = primitive characters / phi(ell^n).
ExtensionCount count_cyclic_fields(u64 ell, u128 X);

// Direct enumeration cross-check for a single conductor: number of primitive
// order-ell characters mod f, by explicit character construction.
u64 primitive_order_ell_char_count(u64 f, u64 ell);

// Formula path for the same count (0 if f is not a valid conductor).
u64 primitive_order_ell_char_count_formula(u64 f, u64 ell);

// Least-squares slope of log|F(X)| against log X over the grid.
WrightFit wright_fit(u64 ell, const std::vector<u128>& X_grid);

// A character of conductor exactly prod(S) and order ell^n with chi(q) = 1
// for every finite q in sigma, by exhaustive search over local choices.
// Throws std::runtime_error if no candidate satisfies the split constraints.
chars::DirichletCharacter build_s_ramified_character(const std::vector<u64>& S,
                                                     const std::vector<u64>& sigma,
                                                     u64 ell, int n);

// Sum of (ell-1)^{|S|} over squarefree products of the given primes with
// product below X (the empty product contributes 1). Divisor-style sieve.
u64 weighted_count(const std::vector<u64>& q0_primes, u64 X, u64 ell);

// Brute-force subset enumeration oracle for weighted_count (<= 25 primes).
u64 weighted_count_bruteforce(const std::vector<u64>& q0_primes, u64 X, u64 ell);

}  // namespace extfields
}  // namespace ds
