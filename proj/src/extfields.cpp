#include "ds/extfields.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ds {
namespace extfields {

u64 primitive_order_ell_char_count_formula(u64 f, u64 ell) {
    // valid conductors: squarefree products of primes = 1 mod ell, times
    // optionally ell^2 (the only wild conductor over Q for order ell).
    u64 m = f;
    u64 t = 0;  // ramified primes
    if (m % (ell * ell) == 0) {
        m /= ell * ell;
        if (m % ell == 0) return 0;
        ++t;
    }
    if (m % ell == 0) return 0;
    for (auto [p, e] : factorize(m)) {
        if (e > 1) return 0;
        if ((p - 1) % ell != 0) return 0;
        ++t;
    }
    if (t == 0) return 0;
    u64 c = 1;
    for (u64 i = 0; i < t; ++i) c *= (ell - 1);
    return c;
}

u64 primitive_order_ell_char_count(u64 f, u64 ell) {
    return (u64)chars::characters_of_order(f, ell, 1).size();
}

ExtensionCount count_cyclic_fields(u64 ell, u128 X) {
    if (X > (u128)1000000000000ull) throw std::invalid_argument("count_cyclic_fields: X exceeds 10^12");
    ExtensionCount out;
    out.bound = X;
    out.count = 0;
    // disc = f^{ell-1} < X, so f <= floor((X-1)^{1/(ell-1)})
    u64 fmax = 1;
    while (true) {
        u128 d = 1;
        bool over = false;
        for (u64 i = 0; i + 1 < ell; ++i) {
            d *= (fmax + 1);
            if (d >= X) {
                over = true;
                break;
            }
        }
        if (over) break;
        ++fmax;
    }
    // multiplicative sieve over f <= fmax: weight = (ell-1)^{t-1} fields
    // with t the number of ramified primes; valid f only.
    for (u64 f = 2; f <= fmax; ++f) {
        u64 nchi = primitive_order_ell_char_count_formula(f, ell);
        if (nchi == 0) continue;
        u64 fields = nchi / (ell - 1);
        out.count += fields;
        out.per_conductor.push_back({f, fields});
    }
    return out;
}

WrightFit wright_fit(u64 ell, const std::vector<u128>& X_grid) {
    if (X_grid.size() < 3) throw std::invalid_argument("wright_fit: need at least 3 grid points");
    long double lo = (long double)X_grid.front(), hi = (long double)X_grid.back();
    if (logl(hi) - logl(lo) < 3.0L * logl(10.0L) - 1e-9L)
        throw std::invalid_argument("wright_fit: grid must span at least 3 decades");
    WrightFit fit;
    std::vector<double> xs, ys;
    u64 prev = 0;
    for (u128 X : X_grid) {
        ExtensionCount c = count_cyclic_fields(ell, X);
        if (c.count < prev) throw std::logic_error("wright_fit: count not monotone");
        prev = c.count;
        fit.grid.push_back({(double)(long double)X, c.count});
        if (c.count == 0) continue;
        xs.push_back((double)logl((long double)X));
        ys.push_back(std::log((double)c.count));
    }
    size_t n = xs.size();
    if (n < 3) throw std::invalid_argument("wright_fit: degenerate grid (too few nonzero counts)");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    double intercept = (sy - fit.slope * sx) / n;
    double sse = 0;
    for (size_t i = 0; i < n; ++i) {
        double r = ys[i] - (fit.slope * xs[i] + intercept);
        sse += r * r;
    }
    double se = std::sqrt(sse / (n > 2 ? n - 2 : 1) / (sxx - sx * sx / n));
    fit.ci_halfwidth = 1.96 * se;
    return fit;
}

chars::DirichletCharacter build_s_ramified_character(const std::vector<u64>& S,
                                                     const std::vector<u64>& sigma,
                                                     u64 ell, int n) {
    u64 D = 1;
    for (int i = 0; i < n; ++i) D *= ell;
    u64 f = 1;
    for (u64 p : S) {
        if (!is_prime(p)) throw std::invalid_argument("build_s_ramified_character: S must contain primes");
        if ((p - 1) % D != 0)
            throw std::invalid_argument("build_s_ramified_character: p must be 1 mod ell^n");
        for (u64 q : sigma)
            if (q == p) throw std::invalid_argument("build_s_ramified_character: S and sigma overlap");
        f *= p;
    }
    if (S.empty()) throw std::invalid_argument("build_s_ramified_character: S must be nonempty");

    chars::UnitGroup G(f);
    size_t r = G.gen.size();  // one component per prime of S (all odd, squarefree f)
    // local choices: chi(gen_i) = zeta_D^{c_i} with c_i a unit multiple, so the
    // local component has exact order ell^n (total ramification at each p in S)
    std::vector<u64> units;
    for (u64 u = 1; u < D; ++u)
        if (std::gcd(u, D) == 1) units.push_back(u);
    std::vector<size_t> idx(r, 0);
    for (;;) {
        std::vector<u64> c(r);
        for (size_t i = 0; i < r; ++i) c[i] = units[idx[i]];
        chars::DirichletCharacter chi = chars::make_character(G, D, c);
        bool ok = chi.order == D && chi.conductor == f;
        if (ok)
            for (u64 q : sigma)
                if (chi.exponent_of(q % f) != 0) {
                    ok = false;
                    break;
                }
        if (ok) return chi;
        size_t i = 0;
        while (i < r && ++idx[i] == units.size()) idx[i++] = 0;
        if (i == r) break;
    }
    throw std::runtime_error("build_s_ramified_character: no Sigma-split character exists for this S");
}

u64 weighted_count(const std::vector<u64>& primes, u64 X, u64 ell) {
    // dp over integers < X supported on the given primes, squarefree
    if (X <= 1) return 0;
    std::vector<u64> f(X, 0);
    if (X > 1) f[1] = 1;
    for (u64 q : primes) {
        if (q >= X) continue;
        // iterate downward so each prime is used at most once
        for (u64 m = (X - 1) / q; m >= 1; --m) {
            if (f[m] == 0) continue;
            f[m * q] += f[m] * (ell - 1);
        }
    }
    u64 total = 0;
    for (u64 m = 1; m < X; ++m) total += f[m];
    return total;
}

u64 weighted_count_bruteforce(const std::vector<u64>& primes, u64 X, u64 ell) {
    if (primes.size() > 25) throw std::invalid_argument("weighted_count_bruteforce: too many primes");
    u64 total = 0;
    u64 nsub = 1ull << primes.size();
    for (u64 mask = 0; mask < nsub; ++mask) {
        u128 prod = 1;
        u64 weight = 1;
        bool ok = true;
        for (size_t i = 0; i < primes.size(); ++i)
            if (mask & (1ull << i)) {
                prod *= primes[i];
                weight *= (ell - 1);
                if (prod >= X) {
                    ok = false;
                    break;
                }
            }
        if (ok && prod < X) total += weight;
    }
    return total;
}

}  // namespace extfields
}  // namespace ds
