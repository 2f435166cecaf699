#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ds/modmath.hpp"

// Exact arithmetic over F_ell for small matrices, plus exhaustive oracles for
// the fixed-space statistics and the lattice/torus counting bounds.

namespace ds {
namespace ffgroup {

// n x n matrix over F_ell, 2 <= n <= 4, entries reduced into [0, ell).
struct MatrixGF {
    u64 ell = 3;
    int n = 2;
    std::array<u64, 16> e{};  // row-major, only the n*n prefix is used

    MatrixGF() = default;
    MatrixGF(u64 ell_, int n_);
    static MatrixGF identity(u64 ell, int n);
    static MatrixGF from_rows(u64 ell, std::vector<std::vector<i64>> rows);

    u64& at(int i, int j) { return e[i * n + j]; }
    u64 at(int i, int j) const { return e[i * n + j]; }

    MatrixGF operator*(const MatrixGF& o) const;
    bool operator==(const MatrixGF& o) const;
    u64 det() const;
    u64 trace() const;
};

// dim over F_ell of ker(m - 1), by row reduction.
int fixed_space_dim(const MatrixGF& m);

// Exhaustive |{g in SL2(F_ell) : fixed_space_dim(g) >= 1}|; ell <= 17.
u64 count_sl2_with_fixed_points(u64 ell);

u64 sl2_order(u64 ell);  // ell(ell^2 - 1)

// Exact rational, small numerator/denominator. Normalized, den > 0.
struct Rat64 {
    i64 num = 0;
    i64 den = 1;
    Rat64() = default;
    Rat64(i64 n, i64 d);
    bool operator==(const Rat64& o) const { return num == o.num && den == o.den; }
};

// 1 - count_sl2_with_fixed_points(ell)/|SL2(F_ell)|; equals 1 - ell/(ell^2-1).
Rat64 delta_theoretical(u64 ell);

// An element of SL2(F_ell) with the requested fixed-space dimension (0 or 1).
MatrixGF find_tau(u64 ell, int target_dim);

// Lattice Y = span(basis_S) inside Z = span(Z_basis); coordinates of S in the
// Z basis are the k-bounded data of the index bound.
struct LatticeInstance {
    int rank = 2;
    int k = 1;
    std::vector<std::vector<i64>> basis_S;   // rank vectors of length rank
    std::vector<std::vector<i64>> Z_basis;   // rank vectors of length rank
};

// [Z:Y] as |det| of the change-of-basis matrix expressing S in the Z basis,
// solved exactly over Q. Throws if S is not inside span(Z_basis) or the index
// is infinite; asserts index <= rank! * k^rank.
u64 lattice_index(const LatticeInstance& inst);

struct TorusCharacterPair {
    u64 ell = 5;
    int r = 2;
    int k = 1;
    std::vector<i64> chi1, chi2;  // exponent vectors of length r
    u64 a1 = 1, a2 = 1;           // targets in F_ell^*
};

// Exhaustive |{t in (F_ell^*)^r : chi1(t)=a1, chi2(t)=a2}|, with the
// 2k^2(ell-1)^{r-2} bound asserted. Cutoff (ell-1)^r <= 10^6.
u64 torus_fiber_count(const TorusCharacterPair& tp);

}  // namespace ffgroup
}  // namespace ds
