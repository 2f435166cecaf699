#include "ds/primeclass.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ds {
namespace primeclass {

StabilityParams::StabilityParams(ecarith::EllipticCurve E, u64 ell_, int n_,
                                 std::vector<u64> sigma_override)
    : curve(std::move(E)), ell(ell_), n(n_), sigma(std::move(sigma_override)) {
    if (ell < 3 || !is_prime(ell)) throw std::invalid_argument("StabilityParams: ell must be an odd prime");
    if (n < 1) throw std::invalid_argument("StabilityParams: n must be positive");
    if (sigma.empty()) {
        sigma.push_back(ell);
        for (const auto& bp : curve.bad_primes) sigma.push_back(bp.p);
    } else {
        auto has = [&](u64 p) { return std::find(sigma.begin(), sigma.end(), p) != sigma.end(); };
        if (!has(ell)) throw std::invalid_argument("StabilityParams: sigma must contain ell");
        for (const auto& bp : curve.bad_primes)
            if (!has(bp.p)) throw std::invalid_argument("StabilityParams: sigma must contain all bad primes");
    }
    std::sort(sigma.begin(), sigma.end());
    sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
    ell_pow_n();  // overflow check up front
}

bool StabilityParams::in_sigma(u64 p) const {
    return std::binary_search(sigma.begin(), sigma.end(), p);
}

u64 StabilityParams::ell_pow_n() const {
    u64 m = 1;
    for (int i = 0; i < n; ++i) {
        if (m > (u64)1 << 40) throw std::invalid_argument("StabilityParams: ell^n too large");
        m *= ell;
    }
    return m;
}

PrimeClassRecord classify_prime(const StabilityParams& params, u64 p) {
    if (params.in_sigma(p)) throw std::invalid_argument("classify_prime: p is in sigma");
    if (!is_prime(p)) throw std::invalid_argument("classify_prime: p not prime");
    PrimeClassRecord rec;
    rec.p = p;
    i64 a = ecarith::ap(params.curve, p);
    rec.ap_mod_ell = umod(a, params.ell);
    u64 m = params.ell_pow_n();
    rec.in_Q = (p % m == 1);
    if (!rec.in_Q) return rec;
    rec.level = ecarith::ell_torsion_dim(params.curve, p, params.ell);
    rec.in_P = true;
    // S-units of Z[1/sigma] are generated by -1 (automatic: ell odd) and the
    // finite primes of sigma; p in P <=> all land in the ell^n-th powers mod p
    for (u64 u : params.sigma)
        if (powmod(u % p, (p - 1) / m, p) != 1) {
            rec.in_P = false;
            break;
        }
    return rec;
}

static void finalize(const StabilityParams& params, DensityReport& r) {
    ffgroup::Rat64 delta = ffgroup::delta_theoretical(params.ell);
    r.q0_theoretical = ffgroup::Rat64(delta.num, delta.den * (i64)(params.ell - 1));
    if (r.total_primes > 0) {
        double th = (double)r.q0_theoretical.num / (double)r.q0_theoretical.den;
        double mean = th * (double)r.total_primes;
        double sd = std::sqrt((double)r.total_primes * th * (1.0 - th));
        r.q0_zscore = sd > 0 ? ((double)r.q0 - mean) / sd : 0.0;
    }
}

DensityReport scan_range(const StabilityParams& params, u64 lo, u64 hi,
                         std::vector<PrimeClassRecord>* records) {
    DensityReport r;
    r.bound = hi;
    for (u64 p : primes_up_to(hi)) {
        if (p <= lo || params.in_sigma(p)) continue;
        PrimeClassRecord rec = classify_prime(params, p);
        ++r.total_primes;
        if (rec.in_Q) {
            if (rec.level == 0) ++r.q0;
            if (rec.level == 1) ++r.q1;
            if (rec.level == 2) ++r.q2;
            if (rec.in_P) {
                if (rec.level == 0) ++r.p0;
                if (rec.level == 1) ++r.p1;
            }
        }
        if (records) records->push_back(rec);
    }
    finalize(params, r);
    return r;
}

DensityReport merge(const StabilityParams& params, const DensityReport& a,
                    const DensityReport& b) {
    DensityReport r;
    r.bound = std::max(a.bound, b.bound);
    r.total_primes = a.total_primes + b.total_primes;
    r.q0 = a.q0 + b.q0;
    r.q1 = a.q1 + b.q1;
    r.q2 = a.q2 + b.q2;
    r.p0 = a.p0 + b.p0;
    r.p1 = a.p1 + b.p1;
    finalize(params, r);
    return r;
}

DensityReport scan(const StabilityParams& params, u64 X,
                   std::vector<PrimeClassRecord>* records) {
    if (X < 1000) throw std::invalid_argument("scan: X must be >= 10^3");
    return scan_range(params, 1, X, records);
}

SurjectivityVerdict surjectivity_heuristic(const ecarith::EllipticCurve& E, u64 ell,
                                           u64 sample_bound) {
    u64 samples = 0, disc_square_or_zero = 0, disc_nonsquare_or_zero = 0;
    for (u64 p : primes_up_to(sample_bound)) {
        if (p < 5 || p == ell || !E.is_good(p)) continue;
        i64 a = ecarith::ap(E, p);
        u64 disc = umod((i128)a * a - 4 * (i128)p, ell);
        int chi = disc == 0 ? 0 : legendre(disc, ell);
        ++samples;
        if (chi >= 0) ++disc_square_or_zero;
        if (chi <= 0) ++disc_nonsquare_or_zero;
    }
    if (samples < 30) return SurjectivityVerdict::Consistent;
    // a surjective image meets both split and nonsplit semisimple classes
    if (disc_square_or_zero == samples || disc_nonsquare_or_zero == samples)
        return SurjectivityVerdict::Refuted;
    return SurjectivityVerdict::Consistent;
}

std::vector<u64> q0_primes(const StabilityParams& params, u64 X,
                           const std::vector<u64>& exclude) {
    std::vector<u64> out;
    u64 m = params.ell_pow_n();
    for (u64 p : primes_up_to(X)) {
        if (params.in_sigma(p) || p % m != 1) continue;
        if (std::find(exclude.begin(), exclude.end(), p) != exclude.end()) continue;
        if (ecarith::ell_torsion_dim(params.curve, p, params.ell) == 0) out.push_back(p);
    }
    return out;
}

}  // namespace primeclass
}  // namespace ds
