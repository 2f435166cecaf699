#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ds/characters.hpp"
#include "ds/ecarith.hpp"
#include "ds/primeclass.hpp"

// Twisted central L-values by the approximate functional equation, numerical
// vanishing verdicts, N_{E,ell}(x) statistics, and the conditional stability
// scan. All analytic work in long double (80-bit mantissa on x86-64) with
// explicit truncation bounds from |a_n| <= n.

namespace ds {
namespace lfunc {

using cplx = std::complex<long double>;

// tau(chi) = sum chi(a) e^{2 pi i a / f}; chi must be primitive. The classical
// modulus identity |tau|^2 = f is asserted to 1e-8 relative.
cplx gauss_sum(const chars::DirichletCharacter& chi);

struct LValueResult {
    cplx value{0.0L, 0.0L};
    long double error_bound = 0.0L;  // rigorous truncation tail
    u64 terms = 0;
    long double theta = 1.0L;        // exponential cutoff parameter
    int root_number = 0;             // w used for the dual sum
};

// L(E, chi, 1) via the two-sided exponential sum with dual weight
// w_chi = w * chi(N) * tau(chi)^2 / f; truncated where the |a_n| <= n tail
// drops below eps. Requires gcd(f, N) = 1. w_override = 0 selects w by the
// self-consistency test of root_number().
LValueResult twisted_l_value(const ecarith::EllipticCurve& E,
                             const chars::DirichletCharacter& chi,
                             long double eps, const std::string& cache_dir = "",
                             int w_override = 0, long double theta = 1.0L);

// Sign w in {+1, -1} making the untwisted evaluation agree across two cutoff
// parameters. Throws std::runtime_error (numeric-indeterminate) when both or
// neither sign is consistent at the working precision.
int root_number(const ecarith::EllipticCurve& E, long double eps = 1e-12L,
                const std::string& cache_dir = "");

enum class Verdict { Vanishing, Nonvanishing, Indeterminate };

struct VanishingVerdict {
    u64 conductor = 0;
    size_t orbit = 0;          // orbit id within the run
    size_t index_in_orbit = 0;
    long double abs_l = 0.0L;
    long double error_bound = 0.0L;
    long double scale = 0.0L;  // cohort median |L| used for the relative test
    Verdict verdict = Verdict::Indeterminate;
};

inline constexpr long double kVanishTol = 1e-3L;
inline constexpr long double kNonvanishFloor = 1e-2L;

// Assigns verdicts relative to the median |L| over the whole cohort:
// vanishing iff |L| < 1e-3 * median, nonvanishing iff |L| > 1e-2 * median.
void assign_verdicts(std::vector<VanishingVerdict>& ledger);

struct NelResult {
    u64 count = 0;              // characters with verdict vanishing
    u64 characters = 0;         // evaluated characters
    u64 skipped = 0;            // conductors sharing a factor with N
    std::vector<VanishingVerdict> ledger;
};

// N_{E,ell}(x): order-ell characters of conductor <= x with vanishing central
// twist. Orbit coherence (all conjugates share the verdict) is asserted.
// Escalates precision once if indeterminates exceed 1% of the cohort; throws
// std::runtime_error if they still do.
NelResult n_el_count(const ecarith::EllipticCurve& E, u64 ell, u64 x,
                     long double eps = 1e-12L, const std::string& cache_dir = "",
                     int w_override = 0);

struct FieldStability {
    u64 conductor = 0;
    bool growth_predicted = false;   // some twist in the orbit vanishes (BSD-conditional)
    bool ramified_only_q0 = false;   // all tame ramified primes carry the Q0 label
};

struct StabilityReport {
    std::vector<FieldStability> fields;
    u64 stable = 0, growth = 0;
    u64 stable_among_q0_only = 0, q0_only = 0;
};

// Per-field (= per Galois orbit) verdicts up to conductor x, cross-referenced
// against the prime classification. All verdicts are BSD-conditional.
StabilityReport stability_scan(const primeclass::StabilityParams& params, u64 x,
                               long double eps = 1e-12L,
                               const std::string& cache_dir = "",
                               int w_override = 0);

}  // namespace lfunc
}  // namespace ds
