#pragma once

#include <complex>
#include <vector>

#include "ds/modmath.hpp"

// Dirichlet characters with exact value tables: chi(a) = zeta_order^exp[a],
// exponent -1 on classes not coprime to the modulus.

namespace ds {
namespace chars {

// Cyclic decomposition of (Z/m)^* with discrete-log tables.
struct UnitGroup {
    u64 modulus;
    std::vector<u64> gen;       // generators (lifted mod m by CRT)
    std::vector<u64> gen_order; // component orders
    // dlog[a][i] = discrete log of a on component i; dlog[a] empty if gcd(a,m)>1
    std::vector<std::vector<u64>> dlog;

    explicit UnitGroup(u64 m);
    u64 order() const;
};

struct DirichletCharacter {
    u64 modulus = 1;
    u64 order = 1;               // exact order
    u64 conductor = 1;
    std::vector<i64> exp;        // exponent of zeta_order per residue; -1 sentinel

    i64 exponent_of(u64 a) const { return exp[a % modulus]; }
    std::complex<long double> value(u64 a) const;
    bool is_trivial_on(u64 a) const { return exp[a % modulus] == 0; }
    bool is_primitive() const { return conductor == modulus; }
    DirichletCharacter power(u64 k) const;       // chi^k (order divides)
    DirichletCharacter conjugate() const;
    bool operator==(const DirichletCharacter& o) const {
        return modulus == o.modulus && order == o.order && exp == o.exp;
    }
};

// Character from exponents c[i] of zeta_D at the group generators:
// chi(gen_i) = zeta_D^{c_i}. D must kill every c_i * gen_order_i.
DirichletCharacter make_character(const UnitGroup& G, u64 D, const std::vector<u64>& c);

// All primitive characters mod f of order exactly ell^n.
std::vector<DirichletCharacter> characters_of_order(u64 f, u64 ell, int n);

// All characters mod f (any order), for the randomized Gauss-sum corpus.
std::vector<DirichletCharacter> all_characters(u64 f);

// Galois orbits of a character list under chi -> chi^k, gcd(k, order) = 1.
std::vector<std::vector<size_t>> galois_orbits(const std::vector<DirichletCharacter>& chis);

}  // namespace chars
}  // namespace ds
