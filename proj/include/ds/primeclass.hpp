#pragma once

#include <vector>

#include "ds/ecarith.hpp"
#include "ds/ffgroup.hpp"

// Classification of rational primes by the F_ell-dimension of the Frobenius
// fixed space on E[ell], with empirical density reporting.

namespace ds {
namespace primeclass {

struct StabilityParams {
    ecarith::EllipticCurve curve;
    u64 ell;                  // odd prime
    int n = 1;                // extensions of degree ell^n
    std::vector<u64> sigma;   // finite exclusion set; must contain ell and all bad primes

    // Validates sigma (augmenting with {ell} U bad_primes when empty).
    StabilityParams(ecarith::EllipticCurve E, u64 ell_, int n_ = 1,
                    std::vector<u64> sigma_override = {});
    bool in_sigma(u64 p) const;
    u64 ell_pow_n() const;
};

struct PrimeClassRecord {
    u64 p = 0;
    bool in_Q = false;
    bool in_P = false;
    int level = -1;      // dim E(F_p)[ell]; defined (0/1/2) only when in_Q
    u64 ap_mod_ell = 0;
};

// p prime outside sigma. in_Q <=> p = 1 mod ell^n; level = torsion dimension;
// in_P <=> in_Q and every finite u in sigma is an ell^n-th power mod p.
PrimeClassRecord classify_prime(const StabilityParams& params, u64 p);

struct DensityReport {
    u64 bound = 0;
    u64 total_primes = 0;  // primes scanned (outside sigma)
    u64 q0 = 0, q1 = 0, q2 = 0;
    u64 p0 = 0, p1 = 0;
    ffgroup::Rat64 q0_theoretical;  // delta / (ell - 1), surjective-image prediction
    double q0_zscore = 0.0;         // binomial z of the q0 count against the prediction
};

// Classifies all primes in (lo, hi] outside sigma; associative-merge chunk.
DensityReport scan_range(const StabilityParams& params, u64 lo, u64 hi,
                         std::vector<PrimeClassRecord>* records = nullptr);

DensityReport merge(const StabilityParams& params, const DensityReport& a,
                    const DensityReport& b);

// Full scan over primes <= X, X >= 10^3.
DensityReport scan(const StabilityParams& params, u64 X,
                   std::vector<PrimeClassRecord>* records = nullptr);

enum class SurjectivityVerdict { Consistent, Refuted };

// Samples (a_p mod ell, p mod ell) for good p <= sample_bound. Refutes when
// the char-poly discriminants a_p^2 - 4p are uniformly square-or-zero mod ell
// (Borel / split-Cartan pattern) or uniformly nonsquare-or-zero (nonsplit
// Cartan) over at least 30 samples. Never refutes on < 30 samples.
SurjectivityVerdict surjectivity_heuristic(const ecarith::EllipticCurve& E, u64 ell,
                                           u64 sample_bound);

// The Q0 primes <= X outside an extra exclusion set, for the weighted count.
std::vector<u64> q0_primes(const StabilityParams& params, u64 X,
                           const std::vector<u64>& exclude = {});

}  // namespace primeclass
}  // namespace ds
