// Command-line surface: one subcommand per library operation.
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ds/conics.hpp"
#include "ds/extfields.hpp"
#include "ds/ffgroup.hpp"
#include "ds/homspace.hpp"
#include "ds/lfunc.hpp"
#include "ds/primeclass.hpp"

using json = nlohmann::json;
using namespace ds;

static constexpr int kSchemaVersion = 1;

struct CurveOpts {
    std::vector<i64> coeffs;  // a1,a2,a3,a4,a6
    u64 conductor = 0;
    std::string name;
};

static void add_curve_opts(CLI::App* cmd, CurveOpts& c) {
    cmd->add_option("--curve", c.coeffs, "Weierstrass coefficients a1,a2,a3,a4,a6")->expected(5)->delimiter(',');
    cmd->add_option("--conductor", c.conductor, "conductor of the curve");
    cmd->add_option("--curve-name", c.name, "named curve: 571a1 | 5906b1 | 11a1");
}

static ecarith::EllipticCurve make_curve(const CurveOpts& c) {
    if (!c.name.empty()) {
        if (c.name == "571a1") return {0, -1, 1, -929, -10595, 571};
        if (c.name == "5906b1") return {1, 1, 0, -32, 58, 5906};
        if (c.name == "11a1") return {0, -1, 1, -10, -20, 11};
        throw CLI::ValidationError("--curve-name", "unknown curve name");
    }
    if (c.coeffs.size() != 5 || c.conductor == 0)
        throw CLI::ValidationError("--curve", "need --curve a1,a2,a3,a4,a6 and --conductor (or --curve-name)");
    return {c.coeffs[0], c.coeffs[1], c.coeffs[2], c.coeffs[3], c.coeffs[4], c.conductor};
}

static std::string default_cache_dir() {
    const char* env = std::getenv("DS_CACHE_DIR");
    return env ? env : "";
}

static json character_json(const chars::DirichletCharacter& chi) {
    return json{{"modulus", chi.modulus},
                {"order", chi.order},
                {"conductor", chi.conductor},
                {"exponents", chi.exp}};
}

static int run_selftest();

int main(int argc, char** argv) {
    CLI::App app{"diophantine-stability toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "config file (key = value; [subcommand] sections)");

    std::string format = "json";
    std::string cache_dir = default_cache_dir();
    unsigned workers = 1;
    app.add_option("--format", format, "output format: csv | json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--cache-dir", cache_dir, "a_n cache directory (default $DS_CACHE_DIR)");
    app.add_option("--workers", workers, "worker count knob (outputs are worker-independent)");

    // group-oracle
    auto* go = app.add_subcommand("group-oracle", "SL2(F_ell) fixed-point statistics");
    u64 go_ell = 3;
    bool go_count = false, go_delta = false;
    go->add_option("--ell", go_ell, "odd prime ell")->required();
    go->add_flag("--count-fixed", go_count, "count elements with nonzero fixed vectors");
    go->add_flag("--delta", go_delta, "print the density delta as an exact rational");

    // classify-primes / density-report
    CurveOpts cp_curve, dr_curve;
    u64 cp_ell = 3, cp_bound = 1000, dr_ell = 3, dr_bound = 100000;
    int cp_n = 1, dr_n = 1;
    std::vector<u64> cp_sigma, dr_sigma;
    auto* cp = app.add_subcommand("classify-primes", "per-prime class records up to a bound");
    add_curve_opts(cp, cp_curve);
    cp->add_option("--ell", cp_ell)->required();
    cp->add_option("--n", cp_n);
    cp->add_option("--bound", cp_bound)->required();
    cp->add_option("--sigma", cp_sigma, "sigma override (must contain ell and bad primes)");
    auto* dr = app.add_subcommand("density-report", "empirical class densities vs the prediction");
    add_curve_opts(dr, dr_curve);
    dr->add_option("--ell", dr_ell)->required();
    dr->add_option("--n", dr_n);
    dr->add_option("--bound", dr_bound)->required();
    dr->add_option("--sigma", dr_sigma);

    // extensions
    u64 ce_ell = 3, ee_ell = 3;
    u64 ce_bound = 82, ee_bound = 100;
    bool ce_fit = false;
    auto* ce = app.add_subcommand("count-extensions", "count cyclic degree-ell fields with disc < bound");
    ce->add_option("--ell", ce_ell)->required();
    ce->add_option("--bound", ce_bound)->required();
    ce->add_flag("--fit", ce_fit, "least-squares growth exponent over a decade grid up to bound");
    auto* ee = app.add_subcommand("enumerate-extensions", "per-field records up to a disc bound");
    ee->add_option("--ell", ee_ell)->required();
    ee->add_option("--bound", ee_bound)->required();

    // build-extension
    std::vector<u64> be_s, be_sigma;
    u64 be_ell = 3;
    int be_n = 1;
    auto* be = app.add_subcommand("build-extension", "S-ramified sigma-split character");
    be->add_option("--s", be_s, "ramified primes S")->required();
    be->add_option("--sigma", be_sigma, "primes that must split");
    be->add_option("--ell", be_ell)->required();
    be->add_option("--n", be_n);

    // twisted-lvalue
    CurveOpts tl_curve;
    u64 tl_f = 0, tl_ell = 0, tl_index = 0;
    double tl_eps = 1e-12;
    int tl_w = 0;
    auto* tl = app.add_subcommand("twisted-lvalue", "L(E, chi, 1) by the two-sided exponential sum");
    add_curve_opts(tl, tl_curve);
    tl->add_option("--chi-conductor", tl_f, "conductor of chi")->required();
    tl->add_option("--ell", tl_ell, "order of chi (odd prime)")->required();
    tl->add_option("--index", tl_index, "index of chi among those of this order and conductor");
    tl->add_option("--eps", tl_eps, "truncation tail target");
    tl->add_option("--root-number", tl_w, "override w in {-1, +1} (0 = self-consistency selection)");

    // nel-count / stability-scan
    CurveOpts nc_curve, ss_curve;
    u64 nc_ell = 3, nc_x = 100, ss_ell = 3, ss_x = 100;
    double nc_eps = 1e-12, ss_eps = 1e-12;
    int nc_w = 0, ss_w = 0;
    auto* nc = app.add_subcommand("nel-count", "count vanishing order-ell twists of conductor <= x");
    add_curve_opts(nc, nc_curve);
    nc->add_option("--ell", nc_ell)->required();
    nc->add_option("--x", nc_x)->required();
    nc->add_option("--eps", nc_eps);
    nc->add_option("--root-number", nc_w);
    auto* ss = app.add_subcommand("stability-scan", "per-field conditional stability verdicts");
    add_curve_opts(ss, ss_curve);
    ss->add_option("--ell", ss_ell)->required();
    ss->add_option("--x", ss_x)->required();
    ss->add_option("--eps", ss_eps);
    ss->add_option("--root-number", ss_w);

    // conic-membership
    i64 cm_a = 0, cm_b = 0, cm_c = 0, cm_d = 0;
    auto* cm = app.add_subcommand("conic-membership", "does Q(sqrt(d)) split a x^2 + b y^2 + c z^2 = 0");
    cm->add_option("a", cm_a)->required();
    cm->add_option("b", cm_b)->required();
    cm->add_option("c", cm_c)->required();
    cm->add_option("d", cm_d)->required();

    // homspace-search
    std::vector<i64> hq;
    i64 hs_d = 17, hs_h = 1000;
    auto* hs = app.add_subcommand("homspace-search", "point search on y^2 = quartic over Q(sqrt(d))");
    hs->add_option("--quartic", hq, "coefficients q4,q3,q2,q1,q0")->expected(5)->delimiter(',')->required();
    hs->add_option("--d", hs_d)->required();
    hs->add_option("--height", hs_h);

    auto* st = app.add_subcommand("selftest", "run the quick example suite across every module");
    (void)st;

    CLI11_PARSE(app, argc, argv);

    try {
        if (go->parsed()) {
            if (go_count) printf("%llu\n", (unsigned long long)ffgroup::count_sl2_with_fixed_points(go_ell));
            if (go_delta) {
                auto d = ffgroup::delta_theoretical(go_ell);
                printf("%lld/%lld\n", (long long)d.num, (long long)d.den);
            }
            if (!go_count && !go_delta) throw CLI::ValidationError("group-oracle", "pick --count-fixed or --delta");
        } else if (cp->parsed()) {
            primeclass::StabilityParams params(make_curve(cp_curve), cp_ell, cp_n, cp_sigma);
            std::vector<primeclass::PrimeClassRecord> recs;
            primeclass::scan(params, cp_bound, &recs);
            if (format == "csv") {
                printf("p,in_Q,in_P,level,ap_mod_ell\n");
                for (const auto& r : recs)
                    printf("%llu,%d,%d,%d,%llu\n", (unsigned long long)r.p, (int)r.in_Q, (int)r.in_P,
                           r.level, (unsigned long long)r.ap_mod_ell);
            } else {
                json out{{"schema_version", kSchemaVersion}, {"records", json::array()}};
                for (const auto& r : recs)
                    out["records"].push_back({{"p", r.p}, {"in_Q", r.in_Q}, {"in_P", r.in_P},
                                              {"level", r.level}, {"ap_mod_ell", r.ap_mod_ell}});
                printf("%s\n", out.dump(2).c_str());
            }
        } else if (dr->parsed()) {
            primeclass::StabilityParams params(make_curve(dr_curve), dr_ell, dr_n, dr_sigma);
            auto rep = primeclass::scan(params, dr_bound);
            json out{{"schema_version", kSchemaVersion},
                     {"bound", rep.bound},
                     {"total_primes", rep.total_primes},
                     {"q0", rep.q0}, {"q1", rep.q1}, {"q2", rep.q2},
                     {"p0", rep.p0}, {"p1", rep.p1},
                     {"q0_theoretical", std::to_string(rep.q0_theoretical.num) + "/" +
                                            std::to_string(rep.q0_theoretical.den)},
                     {"q0_zscore", rep.q0_zscore}};
            printf("%s\n", out.dump(2).c_str());
        } else if (ce->parsed()) {
            if (ce_fit) {
                std::vector<u128> grid;
                for (u128 X = 1000; X <= (u128)ce_bound; X *= 10) grid.push_back(X);
                auto fit = extfields::wright_fit(ce_ell, grid);
                json out{{"schema_version", kSchemaVersion},
                         {"slope", fit.slope},
                         {"ci_halfwidth", fit.ci_halfwidth}};
                printf("%s\n", out.dump(2).c_str());
            } else {
                auto c = extfields::count_cyclic_fields(ce_ell, ce_bound);
                printf("%llu\n", (unsigned long long)c.count);
            }
        } else if (ee->parsed()) {
            auto c = extfields::count_cyclic_fields(ee_ell, ee_bound);
            json fields = json::array();
            for (auto [f, nfields] : c.per_conductor) {
                auto chis = chars::characters_of_order(f, ee_ell, 1);
                auto orbits = chars::galois_orbits(chis);
                for (const auto& orb : orbits) {
                    u128 disc = 1;
                    for (u64 i = 0; i + 1 < ee_ell; ++i) disc *= f;
                    fields.push_back({{"conductor", f},
                                      {"degree", ee_ell},
                                      {"discriminant", (double)(long double)disc},
                                      {"orbit_representative", character_json(chis[orb[0]])}});
                }
                (void)nfields;
            }
            json out{{"schema_version", kSchemaVersion}, {"count", c.count}, {"fields", fields}};
            printf("%s\n", out.dump(2).c_str());
        } else if (be->parsed()) {
            auto chi = extfields::build_s_ramified_character(be_s, be_sigma, be_ell, be_n);
            json out{{"schema_version", kSchemaVersion}, {"character", character_json(chi)}};
            printf("%s\n", out.dump(2).c_str());
        } else if (tl->parsed()) {
            auto E = make_curve(tl_curve);
            auto chis = chars::characters_of_order(tl_f, tl_ell, 1);
            if (tl_index >= chis.size())
                throw CLI::ValidationError("--index", "no such character at this conductor/order");
            auto r = lfunc::twisted_l_value(E, chis[tl_index], (long double)tl_eps, cache_dir, tl_w);
            json out{{"schema_version", kSchemaVersion},
                     {"re", (double)r.value.real()},
                     {"im", (double)r.value.imag()},
                     {"abs", (double)std::abs(r.value)},
                     {"error_bound", (double)r.error_bound},
                     {"terms", r.terms},
                     {"root_number", r.root_number}};
            printf("%s\n", out.dump(2).c_str());
        } else if (nc->parsed()) {
            auto E = make_curve(nc_curve);
            auto r = lfunc::n_el_count(E, nc_ell, nc_x, (long double)nc_eps, cache_dir, nc_w);
            if (format == "csv") {
                printf("conductor,orbit,abs_l,error_bound,verdict\n");
                for (const auto& v : r.ledger)
                    printf("%llu,%zu,%.6Le,%.2Le,%s\n", (unsigned long long)v.conductor, v.orbit,
                           v.abs_l, v.error_bound,
                           v.verdict == lfunc::Verdict::Vanishing      ? "vanishing"
                           : v.verdict == lfunc::Verdict::Nonvanishing ? "nonvanishing"
                                                                       : "indeterminate");
            } else {
                json out{{"schema_version", kSchemaVersion},
                         {"count", r.count},
                         {"characters", r.characters},
                         {"skipped", r.skipped}};
                printf("%s\n", out.dump(2).c_str());
            }
        } else if (ss->parsed()) {
            primeclass::StabilityParams params(make_curve(ss_curve), ss_ell, 1);
            auto rep = lfunc::stability_scan(params, ss_x, (long double)ss_eps, cache_dir, ss_w);
            json fields = json::array();
            for (const auto& f : rep.fields)
                fields.push_back({{"conductor", f.conductor},
                                  {"verdict", f.growth_predicted ? "growth-predicted (conditional on BSD)"
                                                                 : "rank-stable (conditional on BSD)"},
                                  {"ramified_only_q0", f.ramified_only_q0}});
            json out{{"schema_version", kSchemaVersion},
                     {"stable", rep.stable},
                     {"growth", rep.growth},
                     {"q0_only_fields", rep.q0_only},
                     {"stable_among_q0_only", rep.stable_among_q0_only},
                     {"fields", fields}};
            printf("%s\n", out.dump(2).c_str());
        } else if (cm->parsed()) {
            auto inv = conics::conic_invariants(cm_a, cm_b, cm_c);
            bool member = conics::member_quadratic(inv, cm_d);
            json ram = json::array();
            for (i64 v : inv.ramified) ram.push_back(v == conics::kInfinitePlace ? json("inf") : json(v));
            json out{{"schema_version", kSchemaVersion}, {"ramified", ram}, {"member", member}};
            printf("%s\n", out.dump(2).c_str());
        } else if (hs->parsed()) {
            homspace::QuarticSpace space{hq[0], hq[1], hq[2], hq[3], hq[4], "cli"};
            auto pt = homspace::search_point(space, hs_d, hs_h);
            json out{{"schema_version", kSchemaVersion}, {"found", pt.has_value()}};
            if (pt) out["point"] = {{"a", pt->a}, {"b", pt->b}, {"c", pt->c}};
            printf("%s\n", out.dump(2).c_str());
        } else if (st->parsed()) {
            return run_selftest();
        }
    } catch (const CLI::Error& e) {
        fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const std::runtime_error& e) {
        fprintf(stderr, "numeric-indeterminate: %s\n", e.what());
        return 2;
    } catch (const std::logic_error& e) {
        fprintf(stderr, "internal assertion: %s\n", e.what());
        return 3;
    }
    return 0;
}

#define CHECK(cond, what)                              \
    do {                                               \
        if (cond) {                                    \
            printf("ok   %s\n", what);                 \
        } else {                                       \
            printf("FAIL %s\n", what);                 \
            ++failures;                                \
        }                                              \
    } while (0)

static int run_selftest() {
    int failures = 0;

    CHECK(ffgroup::count_sl2_with_fixed_points(3) == 9, "ffgroup: SL2(F_3) fixed-point count = 9");
    CHECK(ffgroup::delta_theoretical(3) == ffgroup::Rat64(5, 8), "ffgroup: delta(3) = 5/8");
    ffgroup::LatticeInstance li;
    li.rank = 2;
    li.k = 1;
    li.basis_S = {{1, 0}, {0, 1}};
    li.Z_basis = {{1, 0}, {0, 1}};
    CHECK(ffgroup::lattice_index(li) == 1, "ffgroup: identity lattice has index 1");

    ecarith::EllipticCurve e11(0, -1, 1, -10, -20, 11);
    u64 np = ecarith::count_points(e11, 1009);
    long long diff = (long long)np - 1010;
    CHECK(diff * diff <= 4 * 1009, "ecarith: Hasse bound at p = 1009");
    auto an = ecarith::an_sieve(e11, 12);
    CHECK(an.at(6) == an.at(2) * an.at(3), "ecarith: a_6 = a_2 a_3");

    CHECK(chars::characters_of_order(5, 3, 1).empty(), "characters: no cubic characters mod 5");
    CHECK(chars::characters_of_order(7, 3, 1).size() == 2, "characters: two cubic characters mod 7");
    CHECK(extfields::count_cyclic_fields(3, 50).count == 1, "extfields: one cubic field with disc < 50");

    primeclass::StabilityParams params(ecarith::EllipticCurve(0, -1, 1, -929, -10595, 571), 3, 1);
    CHECK(!primeclass::classify_prime(params, 5).in_Q, "primeclass: p = 2 mod 3 is outside Q");

    bool tau_ok = false;
    for (const auto& chi : chars::all_characters(5))
        if (chi.order == 2) {
            auto tau = lfunc::gauss_sum(chi);  // modulus identity asserted inside
            tau_ok = fabsl(tau.real() - sqrtl(5.0L)) < 1e-12L && fabsl(tau.imag()) < 1e-12L;
        }
    CHECK(tau_ok, "lfunc: Gauss sum of the quadratic character mod 5 is sqrt(5)");

    CHECK(conics::hilbert_symbol(1, 7, 2) == 1, "conics: (1, b)_v = +1");
    CHECK(conics::hilbert_symbol(-1, -1, conics::kInfinitePlace) == -1, "conics: (-1,-1)_inf = -1");
    CHECK(conics::conic_invariants(1, 1, -1).ramified.empty(), "conics: split conic is unramified");
    CHECK(conics::member_quadratic(conics::conic_invariants(1, 1, -1), 5), "conics: split conic, any d");

    homspace::QuadraticFieldElement w{17, homspace::bigrat(homspace::bigint(9)), homspace::bigrat{}};
    auto r = homspace::sqrt_in_quadratic_field(w);
    CHECK(r && r->u == homspace::bigrat(homspace::bigint(3)), "homspace: sqrt(9) = 3 in Q(sqrt(17))");

    if (failures == 0)
        printf("selftest: all checks passed\n");
    else
        printf("selftest: %d failures\n", failures);
    return failures == 0 ? 0 : 3;
}
