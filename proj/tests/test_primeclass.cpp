#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ds/primeclass.hpp"

using namespace ds;
using namespace ds::primeclass;

static ecarith::EllipticCurve curve_571a1() {
    return ecarith::EllipticCurve(0, -1, 1, -929, -10595, 571);
}
static ecarith::EllipticCurve curve_11a1() {
    return ecarith::EllipticCurve(0, -1, 1, -10, -20, 11);
}

TEST_CASE("parameter validation") {
    auto E = curve_571a1();
    StabilityParams params(E, 3);
    CHECK(params.in_sigma(3));
    CHECK(params.in_sigma(571));
    CHECK_FALSE(params.in_sigma(7));
    CHECK(params.ell_pow_n() == 3);
    CHECK_THROWS_AS(StabilityParams(E, 4), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(StabilityParams(E, 2), std::invalid_argument);   // not odd
    // sigma override must still cover ell and the bad primes
    CHECK_THROWS_AS(StabilityParams(E, 3, 1, std::vector<u64>{3}), std::invalid_argument);
    StabilityParams wide(E, 3, 2, {3, 571, 7});
    CHECK(wide.ell_pow_n() == 9);
    CHECK(wide.in_sigma(7));
}

TEST_CASE("classification of individual primes") {
    StabilityParams params(curve_571a1(), 3);
    CHECK_THROWS_AS(classify_prime(params, 571), std::invalid_argument);  // in sigma
    CHECK_THROWS_AS(classify_prime(params, 15), std::invalid_argument);   // composite

    auto r5 = classify_prime(params, 5);
    CHECK_FALSE(r5.in_Q);  // 5 != 1 mod 3
    CHECK(r5.level == -1);

    auto r7 = classify_prime(params, 7);
    CHECK(r7.in_Q);
    CHECK(r7.level >= 0);
    CHECK(r7.level <= 2);
    CHECK(r7.ap_mod_ell == umod(ecarith::ap(params.curve, 7), 3));
    // level consistency with the torsion oracle
    CHECK(r7.level == ecarith::ell_torsion_dim(params.curve, 7, 3));

    // in_P refines in_Q with the power condition on sigma
    auto r13 = classify_prime(params, 13);
    if (r13.in_P) CHECK(r13.in_Q);
}

TEST_CASE("in_P membership: explicit power condition") {
    StabilityParams params(curve_11a1(), 3);  // sigma = {3, 11}
    for (u64 p : {7ull, 13ull, 19ull, 31ull, 37ull, 43ull}) {
        auto rec = classify_prime(params, p);
        if (!rec.in_Q) continue;
        bool cube_all = true;
        for (u64 u : params.sigma)
            if (powmod(u % p, (p - 1) / 3, p) != 1) cube_all = false;
        CHECK(rec.in_P == cube_all);
    }
}

TEST_CASE("scan totals are consistent") {
    StabilityParams params(curve_571a1(), 3);
    auto rep = scan(params, 5000);
    CHECK(rep.bound == 5000);
    CHECK(rep.q0 + rep.q1 + rep.q2 <= rep.total_primes);
    CHECK(rep.p0 <= rep.q0);
    CHECK(rep.p1 <= rep.q1);
    CHECK(rep.q0_theoretical == ffgroup::Rat64(5, 16));  // delta(3)/(3-1) = (5/8)/2

    std::vector<PrimeClassRecord> recs;
    auto rep2 = scan(params, 5000, &recs);
    CHECK(rep2.total_primes == rep.total_primes);
    CHECK(recs.size() == rep.total_primes);
    u64 q0 = 0;
    for (auto& r : recs)
        if (r.in_Q && r.level == 0) ++q0;
    CHECK(q0 == rep.q0);
}

TEST_CASE("range scans merge associatively") {
    StabilityParams params(curve_571a1(), 3);
    auto a = scan_range(params, 0, 1000);
    auto b = scan_range(params, 1000, 3000);
    auto c = scan_range(params, 3000, 5000);
    auto left = merge(params, merge(params, a, b), c);
    auto right = merge(params, a, merge(params, b, c));
    auto whole = scan_range(params, 0, 5000);
    for (auto* r : {&left, &right}) {
        CHECK(r->total_primes == whole.total_primes);
        CHECK(r->q0 == whole.q0);
        CHECK(r->q1 == whole.q1);
        CHECK(r->q2 == whole.q2);
        CHECK(r->p0 == whole.p0);
        CHECK(r->p1 == whole.p1);
    }
}

TEST_CASE("empirical q0 density tracks the prediction") {
    StabilityParams params(curve_571a1(), 3);
    auto rep = scan(params, 20000);
    CHECK(std::abs(rep.q0_zscore) < 3.0);
}

TEST_CASE("surjectivity heuristic") {
    // 11a1 has a rational 5-isogeny: mod-5 image is Borel, heuristic refutes
    CHECK(surjectivity_heuristic(curve_11a1(), 5, 3000) == SurjectivityVerdict::Refuted);
    // 571a1 is surjective at 5
    CHECK(surjectivity_heuristic(curve_571a1(), 5, 3000) == SurjectivityVerdict::Consistent);
    // tiny sample never refutes
    CHECK(surjectivity_heuristic(curve_11a1(), 5, 50) == SurjectivityVerdict::Consistent);
}

TEST_CASE("q0_primes listing") {
    StabilityParams params(curve_571a1(), 3);
    std::vector<PrimeClassRecord> recs;
    scan(params, 3000, &recs);
    auto q0 = q0_primes(params, 3000);
    size_t k = 0;
    for (auto& r : recs)
        if (r.in_Q && r.level == 0) {
            REQUIRE(k < q0.size());
            CHECK(q0[k++] == r.p);
        }
    CHECK(k == q0.size());
    // exclusion honored
    if (!q0.empty()) {
        auto q0x = q0_primes(params, 3000, {q0[0]});
        CHECK(q0x.size() == q0.size() - 1);
    }
}
