#include "ds/homspace.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace ds {
namespace homspace {

using boost::multiprecision::sqrt;

static bool is_square_big(const bigint& n, bigint& root) {
    if (n < 0) return false;
    root = sqrt(n);
    return root * root == n;
}

static bool is_square_rat(const bigrat& r, bigrat& root) {
    if (r.numerator() < 0) return false;
    bigint rn, rd;
    if (!is_square_big(r.numerator(), rn) || !is_square_big(r.denominator(), rd)) return false;
    root = bigrat(rn, rd);
    return true;
}

std::optional<QuadraticFieldElement> sqrt_in_quadratic_field(const QuadraticFieldElement& w) {
    i64 d = w.d;
    // nb: boost::rational<cpp_int> must not be ==-compared against int
    // literals (the reversed free operator== self-recurses); test numerators
    if (w.v.numerator() == 0) {
        bigrat s;
        if (is_square_rat(w.u, s)) return QuadraticFieldElement{d, s, bigrat{}};
        bigrat t2 = w.u / bigrat(bigint(d));
        if (is_square_rat(t2, s)) return QuadraticFieldElement{d, bigrat{}, s};
        return std::nullopt;
    }
    // (s + t sqrt d)^2 = u + v sqrt d: s^2 + d t^2 = u, 2 s t = v
    // => s^2 = (u +- sqrt(u^2 - d v^2)) / 2, both branches exact-tested
    bigrat n2 = w.u * w.u - bigrat(d) * w.v * w.v;
    bigrat nrm;
    if (!is_square_rat(n2, nrm)) return std::nullopt;
    for (int sgn = 1; sgn >= -1; sgn -= 2) {
        bigrat s2 = (w.u + (sgn > 0 ? nrm : -nrm)) / 2;
        if (s2.numerator() <= 0) continue;
        bigrat s;
        if (!is_square_rat(s2, s)) continue;
        bigrat t = w.v / (2 * s);
        return QuadraticFieldElement{d, s, t};
    }
    return std::nullopt;
}

// (a + b sqrt d)^k as integer pairs, k <= 4
static void powers_big(const bigint& a, const bigint& b, i64 d, bigint A[5], bigint B[5]) {
    A[0] = 1;
    B[0] = 0;
    for (int k = 1; k <= 4; ++k) {
        A[k] = A[k - 1] * a + B[k - 1] * b * d;
        B[k] = A[k - 1] * b + B[k - 1] * a;
    }
}

// q(x) c^4 = U + V sqrt d for x = (a + b sqrt d)/c, exact
static void quartic_value(const QuarticSpace& q, i64 a, i64 b, i64 c, i64 d, bigint& U, bigint& V) {
    bigint A[5], B[5];
    powers_big(a, b, d, A, B);
    const i64 qc[5] = {q.q0, q.q1, q.q2, q.q3, q.q4};
    U = 0;
    V = 0;
    bigint cp = 1;
    // term i: q_i x^i c^{4-i}; iterate i = 4 down to 0 accumulating c powers
    for (int i = 4; i >= 0; --i) {
        U += qc[i] * A[i] * cp;
        V += qc[i] * B[i] * cp;
        cp *= c;
    }
}

// real roots of the quartic by Durand-Kerner on the complex companion iteration
static std::vector<double> real_roots(const QuarticSpace& q) {
    double cs[5] ={(double)q.q4, (double)q.q3, (double)q.q2, (double)q.q1, (double)q.q0};
    int deg = 0;
    while (deg < 4 && cs[deg] == 0.0) ++deg;
    int n = 4 - deg;
    if (n == 0) return {};
    std::vector<std::complex<double>> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = cs[deg + i] / cs[deg];
    std::vector<std::complex<double>> z(n);
    std::complex<double> seed(0.4, 0.9);
    z[0] = seed;
    for (int i = 1; i < n; ++i) z[i] = z[i - 1] * seed;
    for (int it = 0; it < 200; ++it) {
        for (int i = 0; i < n; ++i) {
            std::complex<double> val = 0.0;
            for (int j = 0; j <= n; ++j) val = val * z[i] + c[j];
            std::complex<double> den = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= (z[i] - z[j]);
            z[i] -= val / den;
        }
    }
    std::vector<double> out;
    for (auto& r : z)
        if (std::abs(r.imag()) < 1e-7 * (1.0 + std::abs(r.real()))) out.push_back(r.real());
    std::sort(out.begin(), out.end());
    return out;
}

// closed intervals (widened) where q >= 0, clamped to [-bound, bound]
static std::vector<std::pair<double, double>> positive_intervals(const QuarticSpace& q, double bound) {
    auto ev = [&](double x) {
        return ((((double)q.q4 * x + q.q3) * x + q.q2) * x + q.q1) * x + q.q0;
    };
    std::vector<double> cuts = real_roots(q);
    cuts.insert(cuts.begin(), -bound);
    cuts.push_back(bound);
    std::vector<std::pair<double, double>> out;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        double lo = std::max(cuts[i], -bound), hi = std::min(cuts[i + 1], bound);
        if (lo >= hi) continue;
        if (ev((lo + hi) / 2) >= 0) {
            // widen to absorb root-finding error
            double pad = 1e-6 * (1.0 + std::max(std::abs(lo), std::abs(hi)));
            out.push_back({lo - pad, hi + pad});
        }
    }
    // merge overlapping
    std::vector<std::pair<double, double>> merged;
    for (auto& iv : out) {
        if (!merged.empty() && iv.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, iv.second);
        else
            merged.push_back(iv);
    }
    return merged;
}

std::optional<QuarticPoint> search_point(const QuarticSpace& space, i64 d, i64 height) {
    if (height > 10000) throw std::invalid_argument("search_point: height cutoff is 10^4");
    if (d == 0 || d == 1 || !is_squarefree(d)) throw std::invalid_argument("search_point: invalid d");
    if (d < 0) throw std::invalid_argument("search_point: real quadratic fields only");
    double sd = std::sqrt((double)d);
    double xbound = (1.0 + sd) * (double)height + 1.0;
    auto ivs = positive_intervals(space, xbound);

    struct Hit {
        i64 a, b, c;
    };
    std::optional<Hit> best;

    auto exact_check = [&](i64 a, i64 b, i64 c) -> bool {
        bigint U, V;
        quartic_value(space, a, b, c, d, U, V);
        QuadraticFieldElement w{d, bigrat(U), bigrat(V)};
        return sqrt_in_quadratic_field(w).has_value();
    };
    auto qd = [&](double x) {
        return ((((double)space.q4 * x + space.q3) * x + space.q2) * x + space.q1) * x + space.q0;
    };
    // admissible c-range for the x_+ embedding against one interval
    auto c_range = [&](double tp, double lo, double hi, i64& clo, i64& chi) -> bool {
        clo = 1;
        chi = height;
        if (lo - 1e-12 <= tp && tp <= hi + 1e-12) return true;  // x -> 0 limit inside, or tp = 0
        if (tp > 0) {
            if (hi <= 1e-12) return false;
            clo = std::max<i64>(1, (i64)std::ceil(tp / hi - 1e-9));
            if (lo > 1e-12) chi = std::min<i64>(height, (i64)std::floor(tp / lo + 1e-9));
        } else {
            if (lo >= -1e-12) return false;
            clo = std::max<i64>(1, (i64)std::ceil(tp / lo - 1e-9));
            if (hi < -1e-12) chi = std::min<i64>(height, (i64)std::floor(tp / hi + 1e-9));
        }
        return clo <= chi;
    };

    auto candidate = [&](i64 a, i64 b, i64 c) {
        if (a == 0 && b == 0 && c != 1) return;  // x = 0 only in reduced form
        double xm = ((double)a - (double)b * sd) / (double)c;
        if (qd(xm) < -1e-6 * (1.0 + std::abs(qd(xm)))) return;
        double xp = ((double)a + (double)b * sd) / (double)c;
        if (qd(xp) < -1e-6 * (1.0 + std::abs(qd(xp)))) return;
        if (gcd64(gcd64(a, b), c) != 1) return;
        if (best && !(a < best->a || (a == best->a && (b < best->b || (b == best->b && c < best->c)))))
            return;
        if (exact_check(a, b, c)) best = Hit{a, b, c};
    };

    // shells of increasing h = max(|a|,|b|,c); the first nonempty shell holds
    // the enumeration-order minimum, resolved lexicographically inside it
    for (i64 h = 1; h <= height && !best; ++h) {
        // interior pairs, c = h forced: invert the interval to an a-band per b
        for (i64 b = -h + 1; b < h; ++b) {
            for (auto& iv : ivs) {
                double t = (double)b * sd;
                i64 alo = (i64)std::ceil((double)h * iv.first - t) - 1;
                i64 ahi = (i64)std::floor((double)h * iv.second - t) + 1;
                alo = std::max(alo, -h + 1);
                ahi = std::min(ahi, h - 1);
                for (i64 a = alo; a <= ahi; ++a) candidate(a, b, h);
            }
        }
        // border pairs (|a| = h or |b| = h): sparse c-loop from the interval
        auto border_pair = [&](i64 a, i64 b) {
            double tp = (double)a + (double)b * sd;
            for (auto& iv : ivs) {
                i64 clo, chi;
                if (!c_range(tp, iv.first, iv.second, clo, chi)) continue;
                chi = std::min(chi, h);
                for (i64 c = clo; c <= chi; ++c) candidate(a, b, c);
            }
        };
        for (i64 b = -h; b <= h; ++b) {
            border_pair(h, b);
            border_pair(-h, b);
        }
        for (i64 a = -h + 1; a < h; ++a) {
            border_pair(a, h);
            border_pair(a, -h);
        }
    }
    if (!best) return std::nullopt;
    bigint U, V;
    quartic_value(space, best->a, best->b, best->c, d, U, V);
    bigint c4 = bigint(best->c);
    c4 = c4 * c4 * c4 * c4;
    QuadraticFieldElement qx{d, bigrat(bigint(best->a), bigint(best->c)), bigrat(bigint(best->b), bigint(best->c))};
    QuadraticFieldElement qval{d, bigrat(U, c4), bigrat(V, c4)};
    auto y = sqrt_in_quadratic_field(qval);
    if (!y) throw std::logic_error("search_point: exact recheck failed");
    return QuarticPoint{best->a, best->b, best->c, qx, *y};
}

const std::array<QuarticSpace, 3>& spaces_571a1() {
    static const std::array<QuarticSpace, 3> spaces = {{
        {-19, 112, -142, -68, -7, "X1"},
        {-16, -82, -52, 136, -44, "X2"},
        {-1, -26, -148, 274, -111, "X3"},
    }};
    return spaces;
}

Table571 table_571a1(i64 height) {
    if (height < 100) throw std::invalid_argument("table_571a1: height must be >= 100");
    static const i64 ds[3] = {17, 41, 89};
    Table571 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto pt = search_point(spaces_571a1()[i], ds[j], height);
            t.points[i][j] = pt;
            t.outcome[i][j] = pt ? TableEntry::Found : TableEntry::NotFoundUpToHeight;
            if (i == j && !pt)
                throw std::runtime_error("table_571a1: diagonal entry not found; increase the height bound");
        }
    return t;
}

}  // namespace homspace
}  // namespace ds
