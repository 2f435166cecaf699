#include "ds/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ds {
namespace chars {

UnitGroup::UnitGroup(u64 m) : modulus(m) {
    if (m == 0) throw std::invalid_argument("UnitGroup: modulus must be positive");
    struct Comp {
        u64 pk;      // full prime power dividing m
        u64 g;       // generator mod pk
        u64 ord;
    };
    std::vector<Comp> comps;
    for (auto [p, e] : factorize(m)) {
        u64 pk = 1;
        for (int i = 0; i < e; ++i) pk *= p;
        if (p == 2) {
            if (e == 1) continue;  // trivial group
            if (e == 2) {
                comps.push_back({4, 3, 2});
            } else {
                comps.push_back({pk, pk - 1, 2});       // -1
                comps.push_back({pk, 5, pk / 4});       // 5 generates the 1 mod 4 part
            }
        } else {
            u64 g = primitive_root(p, e);
            comps.push_back({pk, g % pk, pk / p * (p - 1)});
        }
    }
    // CRT-lift each generator to mod m: g on its prime-power block, 1 elsewhere
    for (auto& c : comps) {
        u64 q = m / c.pk;
        u64 x;
        if (q == 1) {
            x = c.g % m;
        } else {
            u64 qinv = invmod(q % c.pk, c.pk);
            u64 t = mulmod(umod((i64)(c.g % c.pk) - 1, c.pk), qinv, c.pk);
            x = (u64)((1 + (u128)q * t) % m);
        }
        gen.push_back(x);
        gen_order.push_back(c.ord);
    }

    // discrete logs by walking the group
    dlog.assign(m == 1 ? 1 : m, {});
    size_t r = gen.size();
    u64 a = 1 % m;
    // iterate over all exponent tuples, maintaining the running product
    u64 total = order();
    std::vector<u64> cur(r, 0);
    for (u64 cnt = 0;; ++cnt) {
        dlog[a] = cur;
        if (cnt + 1 == total) break;
        size_t i = 0;
        for (;; ++i) {
            a = mulmod(a, gen[i], m);
            if (++cur[i] < gen_order[i]) break;
            // wrapped: multiply gen[i] once more to return to exponent 0
            // (gen[i]^ord = 1, and we already multiplied ord times in total)
            cur[i] = 0;
        }
    }
}

u64 UnitGroup::order() const {
    u64 t = 1;
    for (u64 o : gen_order) t *= o;
    return t;
}

std::complex<long double> DirichletCharacter::value(u64 a) const {
    i64 e = exp[a % modulus];
    if (e < 0) return {0.0L, 0.0L};
    long double ang = 2.0L * 3.14159265358979323846264338327950288L * (long double)e / (long double)order;
    return {cosl(ang), sinl(ang)};
}

static u64 compute_conductor(const DirichletCharacter& chi);

DirichletCharacter DirichletCharacter::power(u64 k) const {
    DirichletCharacter r = *this;
    u64 g = std::gcd(k % order, order);
    r.order = order / (g == 0 ? order : g);
    for (auto& e : r.exp)
        if (e >= 0) e = (i64)(((u128)(u64)e * k) % order);
    // renormalize exponents to the new order scale
    if (r.order != order) {
        u64 scale = order / r.order;
        for (auto& e : r.exp)
            if (e >= 0) e /= (i64)scale;
    }
    r.conductor = compute_conductor(r);
    return r;
}

DirichletCharacter DirichletCharacter::conjugate() const {
    DirichletCharacter r = *this;
    for (auto& e : r.exp)
        if (e > 0) e = (i64)order - e;
    return r;
}

static u64 compute_conductor(const DirichletCharacter& chi) {
    // smallest f | modulus with chi trivial on units = 1 mod f
    u64 m = chi.modulus;
    std::vector<u64> divs;
    for (u64 d = 1; d * d <= m; ++d)
        if (m % d == 0) {
            divs.push_back(d);
            if (d != m / d) divs.push_back(m / d);
        }
    std::sort(divs.begin(), divs.end());
    for (u64 f : divs) {
        bool ok = true;
        for (u64 a = 1 % m; a < m; a += f) {
            if (a % f != 1 % f) continue;
            if (chi.exp[a] > 0) {
                ok = false;
                break;
            }
        }
        // the loop above only visits a = 1, 1+f, ... ; that is exactly a = 1 mod f
        if (ok) return f;
    }
    return m;
}

DirichletCharacter make_character(const UnitGroup& G, u64 D, const std::vector<u64>& c) {
    if (c.size() != G.gen.size()) throw std::invalid_argument("make_character: exponent count mismatch");
    DirichletCharacter chi;
    chi.modulus = G.modulus;
    u64 m = G.modulus;
    chi.exp.assign(m == 1 ? 1 : m, -1);
    for (u64 a = 0; a < (m == 1 ? 1 : m); ++a) {
        if (m == 1) {
            chi.exp[a] = 0;
            continue;
        }
        if (std::gcd(a, m) != 1) continue;
        u128 e = 0;
        for (size_t i = 0; i < c.size(); ++i) e += (u128)c[i] * G.dlog[a][i];
        chi.exp[a] = (i64)(e % D);
    }
    // exact order = D / gcd of all exponents with D
    u64 g = D;
    for (auto e : chi.exp)
        if (e > 0) g = std::gcd(g, (u64)e);
    chi.order = (g == D) ? 1 : D / g;
    if (chi.order != D) {
        u64 scale = D / chi.order;
        for (auto& e : chi.exp)
            if (e > 0) e /= (i64)scale;
    }
    chi.conductor = compute_conductor(chi);
    return chi;
}

std::vector<DirichletCharacter> characters_of_order(u64 f, u64 ell, int n) {
    u64 D = 1;
    for (int i = 0; i < n; ++i) D *= ell;
    UnitGroup G(f);
    std::vector<DirichletCharacter> out;
    size_t r = G.gen.size();
    // chi(gen_i) must be a gcd(D, ord_i)-th root of unity
    std::vector<u64> step(r), count(r);
    for (size_t i = 0; i < r; ++i) {
        u64 g = std::gcd(D, G.gen_order[i]);
        step[i] = D / g;
        count[i] = g;
    }
    std::vector<u64> idx(r, 0);
    for (;;) {
        std::vector<u64> c(r);
        for (size_t i = 0; i < r; ++i) c[i] = idx[i] * step[i];
        DirichletCharacter chi = make_character(G, D, c);
        if (chi.order == D && chi.conductor == f) out.push_back(std::move(chi));
        size_t i = 0;
        while (i < r && ++idx[i] == count[i]) idx[i++] = 0;
        if (i == r) break;
    }
    return out;
}

std::vector<DirichletCharacter> all_characters(u64 f) {
    UnitGroup G(f);
    u64 D = 1;
    for (u64 o : G.gen_order) D = std::lcm(D, o);
    std::vector<DirichletCharacter> out;
    size_t r = G.gen.size();
    std::vector<u64> idx(r, 0);
    for (;;) {
        std::vector<u64> c(r);
        for (size_t i = 0; i < r; ++i) c[i] = idx[i] * (D / G.gen_order[i]);
        out.push_back(make_character(G, D, c));
        size_t i = 0;
        while (i < r && ++idx[i] == G.gen_order[i]) idx[i++] = 0;
        if (i == r || r == 0) break;
    }
    return out;
}

std::vector<std::vector<size_t>> galois_orbits(const std::vector<DirichletCharacter>& chis) {
    std::vector<std::vector<size_t>> orbits;
    std::vector<bool> used(chis.size(), false);
    for (size_t i = 0; i < chis.size(); ++i) {
        if (used[i]) continue;
        std::vector<size_t> orb{i};
        used[i] = true;
        for (u64 k = 2; k < chis[i].order; ++k) {
            if (std::gcd(k, chis[i].order) != 1) continue;
            DirichletCharacter p = chis[i];
            for (auto& e : p.exp)
                if (e >= 0) e = (i64)(((u128)(u64)e * k) % p.order);
            for (size_t j = 0; j < chis.size(); ++j)
                if (!used[j] && chis[j].exp == p.exp && chis[j].modulus == p.modulus) {
                    used[j] = true;
                    orb.push_back(j);
                }
        }
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

}  // namespace chars
}  // namespace ds
