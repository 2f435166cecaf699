#include "ds/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ds {
namespace lfunc {

static const long double kPi = 3.14159265358979323846264338327950288L;

cplx gauss_sum(const chars::DirichletCharacter& chi) {
    if (!chi.is_primitive()) throw std::invalid_argument("gauss_sum: character must be primitive");
    u64 f = chi.modulus;
    if (f == 1) return cplx(1.0L, 0.0L);
    cplx tau(0.0L, 0.0L);
    for (u64 a = 1; a < f; ++a) {
        if (chi.exponent_of(a) < 0) continue;
        long double ang = 2.0L * kPi * (long double)a / (long double)f;
        tau += chi.value(a) * cplx(cosl(ang), sinl(ang));
    }
    long double rel = fabsl(std::norm(tau) - (long double)f) / (long double)f;
    if (rel > 1e-8L) throw std::logic_error("gauss_sum: |tau|^2 != f beyond tolerance");
    return tau;
}

// e^{-c(M+1)} / (1 - e^{-c}), the geometric tail of sum_{n>M} e^{-cn}
static long double tail_bound(long double c, u64 M) {
    return expl(-c * (long double)(M + 1)) / (1.0L - expl(-c));
}

static u64 terms_needed(long double c, long double eps) {
    long double M = logl(2.0L / (eps * (1.0L - expl(-c)))) / c;
    if (!(M > 0)) return 16;
    if (M > 2e8L) throw std::invalid_argument("twisted_l_value: truncation length exceeds the sieve budget");
    return (u64)M + 2;
}

static chars::DirichletCharacter trivial_character() {
    chars::DirichletCharacter chi;
    chi.modulus = 1;
    chi.order = 1;
    chi.conductor = 1;
    chi.exp = {0};
    return chi;
}

// sum_{n<=M} a_n chi(n)/n e^{-cn} with the character given by its value table
static cplx exp_sum(const ecarith::CoefficientTable& an, u64 M,
                    const std::vector<cplx>& chiv, long double c) {
    cplx s(0.0L, 0.0L);
    u64 f = chiv.size();
    long double q = expl(-c), w = q;
    for (u64 n = 1; n <= M; ++n, w *= q) {
        const cplx& ch = chiv[n % f];
        if (ch.real() == 0.0L && ch.imag() == 0.0L) continue;
        s += ch * (w * (long double)an.at(n) / (long double)n);
    }
    return s;
}

static std::vector<cplx> value_table(const chars::DirichletCharacter& chi) {
    std::vector<cplx> t(chi.modulus);
    for (u64 a = 0; a < chi.modulus; ++a)
        t[a] = chi.exponent_of(a) < 0 ? cplx(0.0L, 0.0L) : chi.value(a);
    return t;
}

static LValueResult twisted_core(const ecarith::EllipticCurve& E,
                                 const ecarith::CoefficientTable& an,
                                 const chars::DirichletCharacter& chi,
                                 long double eps, int w, long double theta) {
    u64 f = chi.modulus, N = E.conductor;
    long double sN = sqrtl((long double)N);
    long double c1 = 2.0L * kPi * theta / ((long double)f * sN);
    long double c2 = 2.0L * kPi / (theta * (long double)f * sN);
    u64 M = std::max(terms_needed(c1, eps), terms_needed(c2, eps));
    if (M > an.bound) throw std::invalid_argument("twisted_l_value: coefficient table too short");

    auto chiv = value_table(chi);
    auto chivbar = chiv;
    for (auto& z : chivbar) z = std::conj(z);

    cplx tau = gauss_sum(chi);
    cplx w_chi = (long double)w * chiv[N % f] * tau * tau / (long double)f;

    LValueResult r;
    r.terms = M;
    r.theta = theta;
    r.root_number = w;
    r.value = exp_sum(an, M, chiv, c1) + w_chi * exp_sum(an, M, chivbar, c2);
    r.error_bound = tail_bound(c1, M) + tail_bound(c2, M);
    return r;
}

int root_number(const ecarith::EllipticCurve& E, long double eps, const std::string& cache_dir) {
    auto triv = trivial_character();
    long double th1 = 1.1L, th2 = 1.3L;
    long double sN = sqrtl((long double)E.conductor);
    long double cmin = 2.0L * kPi / (std::max(th1, th2) * sN);
    u64 M = terms_needed(cmin, eps);
    auto an = ecarith::an_sieve(E, M + 16, cache_dir);
    std::vector<cplx> one{cplx(1.0L, 0.0L)};
    auto S = [&](long double th) {
        long double c = 2.0L * kPi * th / sN;
        return exp_sum(an, M, one, c).real() + 0.0L;
    };
    long double s1 = S(th1), d1 = S(1.0L / th1);
    long double s2 = S(th2), d2 = S(1.0L / th2);
    long double err = tail_bound(2.0L * kPi * th1 / sN, M) + tail_bound(2.0L * kPi / (th2 * sN), M);
    long double scale = fabsl(s1) + fabsl(d1) + 1.0L;
    long double tol = std::max(1000.0L * err, 1e-13L * scale);
    bool plus_ok = fabsl((s1 + d1) - (s2 + d2)) < tol;
    bool minus_ok = fabsl((s1 - d1) - (s2 - d2)) < tol;
    if (plus_ok == minus_ok)
        throw std::runtime_error("root_number: sign selection indeterminate at this precision");
    return plus_ok ? 1 : -1;
}

LValueResult twisted_l_value(const ecarith::EllipticCurve& E,
                             const chars::DirichletCharacter& chi,
                             long double eps, const std::string& cache_dir,
                             int w_override, long double theta) {
    if (!chi.is_primitive()) throw std::invalid_argument("twisted_l_value: character must be primitive");
    if (std::gcd(chi.modulus, E.conductor) != 1)
        throw std::invalid_argument("twisted_l_value: conductor of chi must be coprime to N");
    int w = w_override != 0 ? w_override : root_number(E, eps, cache_dir);
    long double sN = sqrtl((long double)E.conductor);
    long double cmin = 2.0L * kPi / (std::max(theta, 1.0L / theta) * (long double)chi.modulus * sN);
    u64 M = terms_needed(cmin, eps);
    auto an = ecarith::an_sieve(E, M + 16, cache_dir);
    return twisted_core(E, an, chi, eps, w, theta);
}

void assign_verdicts(std::vector<VanishingVerdict>& ledger) {
    if (ledger.empty()) return;
    std::vector<long double> mags;
    for (const auto& v : ledger) mags.push_back(v.abs_l);
    std::sort(mags.begin(), mags.end());
    long double median = mags[mags.size() / 2];
    for (auto& v : ledger) {
        v.scale = median;
        if (median < 1e-30L) {
            v.verdict = Verdict::Indeterminate;
        } else if (v.abs_l < kVanishTol * median) {
            v.verdict = Verdict::Vanishing;
        } else if (v.abs_l > kNonvanishFloor * median) {
            v.verdict = Verdict::Nonvanishing;
        } else {
            v.verdict = Verdict::Indeterminate;
        }
    }
}

NelResult n_el_count(const ecarith::EllipticCurve& E, u64 ell, u64 x,
                     long double eps, const std::string& cache_dir, int w_override) {
    if (ell < 3 || !is_prime(ell)) throw std::invalid_argument("n_el_count: ell must be an odd prime");
    u64 desk = (ell == 3) ? 10000 : 1000;
    if (x > desk) throw std::invalid_argument("n_el_count: x exceeds the desk bound");

    struct Job {
        chars::DirichletCharacter chi;
        size_t orbit, idx;
    };
    std::vector<Job> jobs;
    NelResult res;
    size_t orbit_id = 0;
    for (u64 f = 3; f <= x; ++f) {
        auto chis = chars::characters_of_order(f, ell, 1);
        if (chis.empty()) continue;
        if (std::gcd(f, E.conductor) != 1) {
            res.skipped += chis.size();
            continue;
        }
        for (const auto& orbit : chars::galois_orbits(chis)) {
            size_t idx = 0;
            for (size_t i : orbit) jobs.push_back({chis[i], orbit_id, idx++});
            ++orbit_id;
        }
    }
    if (jobs.empty()) return res;

    int w = w_override != 0 ? w_override : root_number(E, eps, cache_dir);
    long double sN = sqrtl((long double)E.conductor);
    u64 fmax = 1;
    for (const auto& j : jobs) fmax = std::max(fmax, j.chi.modulus);

    auto evaluate = [&](long double e) {
        u64 M = terms_needed(2.0L * kPi / ((long double)fmax * sN), e);
        auto an = ecarith::an_sieve(E, M + 16, cache_dir);
        std::vector<VanishingVerdict> ledger;
        for (const auto& j : jobs) {
            auto r = twisted_core(E, an, j.chi, e, w, 1.0L);
            VanishingVerdict v;
            v.conductor = j.chi.modulus;
            v.orbit = j.orbit;
            v.index_in_orbit = j.idx;
            v.abs_l = std::abs(r.value);
            v.error_bound = r.error_bound;
            ledger.push_back(v);
        }
        assign_verdicts(ledger);
        return ledger;
    };
    auto indeterminates = [](const std::vector<VanishingVerdict>& L) {
        return (u64)std::count_if(L.begin(), L.end(), [](const VanishingVerdict& v) {
            return v.verdict == Verdict::Indeterminate;
        });
    };

    res.ledger = evaluate(eps);
    if (100 * indeterminates(res.ledger) > res.ledger.size()) {
        res.ledger = evaluate(eps * 1e-3L);  // one precision escalation
        if (100 * indeterminates(res.ledger) > res.ledger.size())
            throw std::runtime_error("n_el_count: indeterminate verdicts exceed 1% after escalation");
    }

    // orbit coherence: Galois conjugates must share the verdict
    std::vector<int> orbit_verdict(orbit_id, -1);
    for (const auto& v : res.ledger) {
        int code = (int)v.verdict;
        if (orbit_verdict[v.orbit] == -1)
            orbit_verdict[v.orbit] = code;
        else if (orbit_verdict[v.orbit] != code)
            throw std::logic_error("n_el_count: Galois orbit with incoherent verdicts");
    }
    res.characters = res.ledger.size();
    for (const auto& v : res.ledger)
        if (v.verdict == Verdict::Vanishing) ++res.count;
    return res;
}

StabilityReport stability_scan(const primeclass::StabilityParams& params, u64 x,
                               long double eps, const std::string& cache_dir,
                               int w_override) {
    auto nel = n_el_count(params.curve, params.ell, x, eps, cache_dir, w_override);
    std::map<size_t, FieldStability> fields;
    for (const auto& v : nel.ledger) {
        auto& fs = fields[v.orbit];
        fs.conductor = v.conductor;
        if (v.verdict == Verdict::Vanishing) fs.growth_predicted = true;
    }
    StabilityReport rep;
    for (auto& [orbit, fs] : fields) {
        fs.ramified_only_q0 = true;
        for (auto [p, e] : factorize(fs.conductor)) {
            (void)e;
            if (params.in_sigma(p) ||
                primeclass::classify_prime(params, p).level != 0) {
                fs.ramified_only_q0 = false;
                break;
            }
        }
        if (fs.growth_predicted)
            ++rep.growth;
        else
            ++rep.stable;
        if (fs.ramified_only_q0) {
            ++rep.q0_only;
            if (!fs.growth_predicted) ++rep.stable_among_q0_only;
        }
        rep.fields.push_back(fs);
    }
    return rep;
}

}  // namespace lfunc
}  // namespace ds
