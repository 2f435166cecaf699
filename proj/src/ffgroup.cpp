#include "ds/ffgroup.hpp"

#include <stdexcept>
#include <string>

namespace ds {
namespace ffgroup {

MatrixGF::MatrixGF(u64 ell_, int n_) : ell(ell_), n(n_) {
    if (n < 2 || n > 4) throw std::invalid_argument("MatrixGF: n must be in [2,4]");
    if (ell < 3 || !is_prime(ell)) throw std::invalid_argument("MatrixGF: ell must be an odd prime");
    e.fill(0);
}

MatrixGF MatrixGF::identity(u64 ell, int n) {
    MatrixGF m(ell, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatrixGF MatrixGF::from_rows(u64 ell, std::vector<std::vector<i64>> rows) {
    MatrixGF m(ell, (int)rows.size());
    for (int i = 0; i < m.n; ++i) {
        if ((int)rows[i].size() != m.n) throw std::invalid_argument("MatrixGF: ragged rows");
        for (int j = 0; j < m.n; ++j) m.at(i, j) = umod(rows[i][j], ell);
    }
    return m;
}

MatrixGF MatrixGF::operator*(const MatrixGF& o) const {
    MatrixGF r(ell, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            u64 s = 0;
            for (int k = 0; k < n; ++k) s = addmod(s, mulmod(at(i, k), o.at(k, j), ell), ell);
            r.at(i, j) = s;
        }
    return r;
}

bool MatrixGF::operator==(const MatrixGF& o) const {
    if (ell != o.ell || n != o.n) return false;
    for (int i = 0; i < n * n; ++i)
        if (e[i] != o.e[i]) return false;
    return true;
}

u64 MatrixGF::det() const {
    // row reduction over F_ell
    MatrixGF m = *this;
    u64 d = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = submod(0, d, ell);
        }
        u64 pv = m.at(col, col);
        d = mulmod(d, pv, ell);
        u64 inv = invmod(pv, ell);
        for (int r = col + 1; r < n; ++r) {
            u64 f = mulmod(m.at(r, col), inv, ell);
            if (f == 0) continue;
            for (int j = col; j < n; ++j)
                m.at(r, j) = submod(m.at(r, j), mulmod(f, m.at(col, j), ell), ell);
        }
    }
    return d;
}

u64 MatrixGF::trace() const {
    u64 t = 0;
    for (int i = 0; i < n; ++i) t = addmod(t, at(i, i), ell);
    return t;
}

int fixed_space_dim(const MatrixGF& m) {
    // rank of (m - 1); kernel dim = n - rank
    MatrixGF a = m;
    for (int i = 0; i < a.n; ++i) a.at(i, i) = submod(a.at(i, i), 1, a.ell);
    int rank = 0;
    int n = a.n;
    u64 ell = a.ell;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (a.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(rank, j));
        u64 inv = invmod(a.at(rank, col), ell);
        for (int r = rank + 1; r < n; ++r) {
            u64 f = mulmod(a.at(r, col), inv, ell);
            if (f == 0) continue;
            for (int j = col; j < n; ++j)
                a.at(r, j) = submod(a.at(r, j), mulmod(f, a.at(rank, j), ell), ell);
        }
        ++rank;
    }
    return n - rank;
}

static void check_sl2_cutoff(u64 ell) {
    if (ell > 17) throw std::invalid_argument("SL2 enumeration cutoff is ell <= 17");
    if (ell < 3 || !is_prime(ell)) throw std::invalid_argument("ell must be an odd prime");
}

u64 sl2_order(u64 ell) { return ell * (ell * ell - 1); }

u64 count_sl2_with_fixed_points(u64 ell) {
    check_sl2_cutoff(ell);
    // g has a nonzero fixed vector iff det(g - 1) = 0 iff tr(g) = 2 (det 1).
    // Count exhaustively anyway: that is the point of the oracle.
    u64 count = 0;
    MatrixGF g(ell, 2);
    for (u64 a = 0; a < ell; ++a)
        for (u64 b = 0; b < ell; ++b)
            for (u64 c = 0; c < ell; ++c)
                for (u64 d = 0; d < ell; ++d) {
                    if (submod(mulmod(a, d, ell), mulmod(b, c, ell), ell) != 1) continue;
                    g.at(0, 0) = a;
                    g.at(0, 1) = b;
                    g.at(1, 0) = c;
                    g.at(1, 1) = d;
                    if (fixed_space_dim(g) >= 1) ++count;
                }
    return count;
}

Rat64::Rat64(i64 n, i64 d) {
    if (d == 0) throw std::invalid_argument("Rat64: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i64 g = gcd64(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

Rat64 delta_theoretical(u64 ell) {
    check_sl2_cutoff(ell);
    u64 fixed = count_sl2_with_fixed_points(ell);
    u64 order = sl2_order(ell);
    return Rat64((i64)(order - fixed), (i64)order);
}

MatrixGF find_tau(u64 ell, int target_dim) {
    check_sl2_cutoff(ell);
    if (target_dim != 0 && target_dim != 1)
        throw std::invalid_argument("find_tau: target_dim must be 0 or 1");
    MatrixGF g(ell, 2);
    for (u64 a = 0; a < ell; ++a)
        for (u64 b = 0; b < ell; ++b)
            for (u64 c = 0; c < ell; ++c)
                for (u64 d = 0; d < ell; ++d) {
                    if (submod(mulmod(a, d, ell), mulmod(b, c, ell), ell) != 1) continue;
                    g.at(0, 0) = a;
                    g.at(0, 1) = b;
                    g.at(1, 0) = c;
                    g.at(1, 1) = d;
                    if (fixed_space_dim(g) == target_dim) return g;
                }
    throw std::logic_error("find_tau: no element found");  // unreachable for ell >= 3
}

u64 lattice_index(const LatticeInstance& inst) {
    int r = inst.rank;
    if (r < 1 || r > 4) throw std::invalid_argument("lattice_index: rank must be in [1,4]");
    if ((int)inst.basis_S.size() != r || (int)inst.Z_basis.size() != r)
        throw std::invalid_argument("lattice_index: need rank vectors in each basis");

    // Solve Z * C = S for C, fraction-free over Q with __int128.
    // Columns of Z/S are the basis vectors.
    i128 Z[4][4], S[4][4];
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Z[i][j] = inst.Z_basis[j][i];
            S[i][j] = inst.basis_S[j][i];
        }
    // Gaussian elimination on [Z | S] tracking the running denominator.
    i128 den = 1;
    for (int col = 0; col < r; ++col) {
        int piv = -1;
        for (int row = col; row < r; ++row)
            if (Z[row][col] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) throw std::domain_error("lattice_index: Z_basis is singular (index infinite)");
        if (piv != col) {
            for (int j = 0; j < r; ++j) {
                std::swap(Z[piv][j], Z[col][j]);
                std::swap(S[piv][j], S[col][j]);
            }
            den = -den;
        }
        i128 pv = Z[col][col];
        for (int row = 0; row < r; ++row) {
            if (row == col) continue;
            i128 f = Z[row][col];
            if (f == 0) continue;
            for (int j = 0; j < r; ++j) {
                Z[row][j] = Z[row][j] * pv - f * Z[col][j];
                S[row][j] = S[row][j] * pv - f * S[col][j];
            }
        }
    }
    // Now Z is diagonal; C[i][j] = S[i][j] / Z[i][i]. det(C) = det(S') / prod(Z[i][i]).
    // Check integrality of C (S contained in the Z lattice).
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (S[i][j] % Z[i][i] != 0)
                throw std::domain_error("lattice_index: basis_S not contained in span(Z_basis)");
    i128 C[4][4];
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) C[i][j] = S[i][j] / Z[i][i];
    (void)den;
    // det(C) by expansion (r <= 4)
    auto det = [&](auto&& self, i128 m[4][4], int n) -> i128 {
        if (n == 1) return m[0][0];
        i128 acc = 0;
        i128 sub[4][4];
        for (int c = 0; c < n; ++c) {
            for (int i = 1; i < n; ++i) {
                int jj = 0;
                for (int j = 0; j < n; ++j) {
                    if (j == c) continue;
                    sub[i - 1][jj++] = m[i][j];
                }
            }
            i128 term = m[0][c] * self(self, sub, n - 1);
            acc += (c & 1) ? -term : term;
        }
        return acc;
    };
    i128 d = det(det, C, r);
    if (d < 0) d = -d;
    if (d == 0) throw std::domain_error("lattice_index: basis_S not linearly independent");
    // bound r! k^r
    i128 bound = 1;
    for (int i = 2; i <= r; ++i) bound *= i;
    for (int i = 0; i < r; ++i) bound *= inst.k;
    if (d > bound) throw std::logic_error("lattice_index: index exceeds r! k^r bound");
    return (u64)d;
}

u64 torus_fiber_count(const TorusCharacterPair& tp) {
    u64 ell = tp.ell;
    int r = tp.r;
    if (ell > 13 || r > 4) throw std::invalid_argument("torus_fiber_count: cutoff exceeded");
    if ((int)tp.chi1.size() != r || (int)tp.chi2.size() != r)
        throw std::invalid_argument("torus_fiber_count: exponent vectors must have length r");
    double pts = 1;
    for (int i = 0; i < r; ++i) pts *= (double)(ell - 1);
    if (pts > 1e6) throw std::invalid_argument("torus_fiber_count: (ell-1)^r cutoff exceeded");
    // rank-2 requirement: some 2x2 minor of (chi1; chi2) nonzero
    bool rank2 = false;
    for (int i = 0; i < r && !rank2; ++i)
        for (int j = i + 1; j < r; ++j)
            if (tp.chi1[i] * tp.chi2[j] - tp.chi1[j] * tp.chi2[i] != 0) {
                rank2 = true;
                break;
            }
    if (!rank2) throw std::invalid_argument("torus_fiber_count: chi1, chi2 not of rank 2");

    u64 g = primitive_root(ell, 1);
    // precompute g^e for residue exponents
    std::vector<u64> pow_g(ell - 1);
    pow_g[0] = 1;
    for (u64 i = 1; i < ell - 1; ++i) pow_g[i] = mulmod(pow_g[i - 1], g, ell);
    auto chi_val = [&](const std::vector<i64>& chi, const std::vector<u64>& elog) {
        i64 e = 0;
        for (int i = 0; i < r; ++i) e += chi[i] * (i64)elog[i];
        return pow_g[umod(e, ell - 1)];
    };
    std::vector<u64> elog(r, 0);
    u64 count = 0;
    for (;;) {
        if (chi_val(tp.chi1, elog) == tp.a1 % ell && chi_val(tp.chi2, elog) == tp.a2 % ell) ++count;
        int i = 0;
        while (i < r && ++elog[i] == ell - 1) elog[i++] = 0;
        if (i == r) break;
    }
    u128 bound = (u128)2 * tp.k * tp.k;
    for (int i = 0; i < r - 2; ++i) bound *= (ell - 1);
    if ((u128)count > bound) throw std::logic_error("torus_fiber_count: bound 2k^2(ell-1)^{r-2} violated");
    return count;
}

}  // namespace ffgroup
}  // namespace ds
