#pragma once

#include <vector>

#include "ds/modmath.hpp"

// Genus-zero Brauer-Severi varieties over Q: local invariants of the conic
// ax^2 + by^2 + cz^2 = 0 via Hilbert symbols, quadratic-field membership, and
// a brute-force solubility oracle over Q(sqrt(d)).

namespace ds {
namespace conics {

constexpr i64 kInfinitePlace = -1;  // marker for v = infinity

// Hilbert symbol (a, b)_v in {+1, -1}; v an odd prime, 2, or kInfinitePlace.
int hilbert_symbol(i64 a, i64 b, i64 v);

struct ConicInvariants {
    i64 a, b, c;                    // normalized coefficients
    std::vector<i64> ramified;      // places with inv_v = 1/2, kInfinitePlace for infinity
};

// Normalizes (squarefree, pairwise-reduced) and computes the ramified set;
// asserts even cardinality (reciprocity).
ConicInvariants conic_invariants(i64 a, i64 b, i64 c);

// True iff Q(sqrt(d)) splits the conic: no ramified place of the conic has a
// degree-1 completion in Q(sqrt(d)). d squarefree, d != 0, 1.
bool member_quadratic(const ConicInvariants& conic, i64 d);

bool same_membership_sets(const ConicInvariants& c1, const ConicInvariants& c2);

// One-sided search for a projective solution over Q(sqrt(d)) with coordinates
// u + v*sqrt(d), |u|, |v| <= height. height <= 10^3.
bool brute_force_soluble(const ConicInvariants& conic, i64 d, i64 height);

}  // namespace conics
}  // namespace ds
