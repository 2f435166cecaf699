#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ds/ffgroup.hpp"

using namespace ds;
using namespace ds::ffgroup;

TEST_CASE("matrix arithmetic basics") {
    auto I = MatrixGF::identity(7, 2);
    auto m = MatrixGF::from_rows(7, {{1, 2}, {3, 4}});
    CHECK((m * I == m));
    CHECK((I * m == m));
    CHECK(m.det() == umod(1 * 4 - 2 * 3, 7));
    CHECK(m.trace() == 5);
    auto m2 = m * m;
    CHECK(m2.at(0, 0) == umod(1 * 1 + 2 * 3, 7));
    CHECK(m2.at(0, 1) == umod(1 * 2 + 2 * 4, 7));
}

TEST_CASE("fixed space dimensions") {
    CHECK(fixed_space_dim(MatrixGF::identity(5, 2)) == 2);
    // unipotent: one-dimensional fixed space
    CHECK(fixed_space_dim(MatrixGF::from_rows(5, {{1, 1}, {0, 1}})) == 1);
    // -I over F_5 fixes only 0
    CHECK(fixed_space_dim(MatrixGF::from_rows(5, {{4, 0}, {0, 4}})) == 0);
}

TEST_CASE("fixed-point count in SL2") {
    CHECK(count_sl2_with_fixed_points(3) == 9);
    CHECK(count_sl2_with_fixed_points(5) == 25);
    CHECK(count_sl2_with_fixed_points(7) == 49);
    CHECK(sl2_order(5) == 120);
}

TEST_CASE("density of fixed-point-free elements") {
    CHECK(delta_theoretical(3) == Rat64(5, 8));
    CHECK(delta_theoretical(5) == Rat64(19, 24));
    CHECK(delta_theoretical(7) == Rat64(41, 48));
}

TEST_CASE("find_tau returns the requested dimension") {
    for (u64 ell : {3, 5, 7, 11}) {
        for (int dim : {0, 1}) {
            auto t = find_tau(ell, dim);
            CHECK(t.det() == 1);
            CHECK(fixed_space_dim(t) == dim);
        }
    }
}

TEST_CASE("lattice index small examples") {
    LatticeInstance inst;
    inst.rank = 2;
    inst.k = 2;
    inst.Z_basis = {{1, 0}, {0, 1}};
    inst.basis_S = {{2, 0}, {0, 2}};
    CHECK(lattice_index(inst) == 4);
    inst.basis_S = {{1, 1}, {1, -1}};
    CHECK(lattice_index(inst) == 2);
}

TEST_CASE("lattice index bound over random instances") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        LatticeInstance inst;
        inst.rank = 2 + (int)(rng() % 3);
        inst.k = 1 + (int)(rng() % 4);
        int r = inst.rank;
        inst.Z_basis.assign(r, std::vector<i64>(r, 0));
        for (int i = 0; i < r; ++i) inst.Z_basis[i][i] = 1;
        // S-vectors = rows of a k-bounded integer matrix; retry until invertible
        u64 idx = 0;
        for (int attempt = 0; attempt < 50; ++attempt) {
            inst.basis_S.assign(r, std::vector<i64>(r));
            for (auto& row : inst.basis_S)
                for (auto& x : row) x = (i64)(rng() % (2 * inst.k + 1)) - inst.k;
            try {
                idx = lattice_index(inst);
                break;
            } catch (const std::exception&) {
                continue;  // singular draw
            }
        }
        if (idx == 0) continue;
        u64 bound = 1;
        for (int i = 2; i <= r; ++i) bound *= (u64)i;
        for (int i = 0; i < r; ++i) bound *= (u64)inst.k;
        CHECK(idx <= bound);
    }
}

TEST_CASE("torus fiber count matches hand computation") {
    TorusCharacterPair tp;
    tp.ell = 5;
    tp.r = 2;
    tp.k = 1;
    tp.chi1 = {1, 0};
    tp.chi2 = {0, 1};
    tp.a1 = 1;
    tp.a2 = 1;
    // independent coordinates: unique solution t = (1, 1)
    CHECK(torus_fiber_count(tp) == 1);
    tp.chi2 = {1, 1};  // t1 = 1 and t1 t2 = 1 force t = (1, 1)
    CHECK(torus_fiber_count(tp) == 1);
    // one free coordinate in rank 3
    TorusCharacterPair tq;
    tq.ell = 5;
    tq.r = 3;
    tq.k = 1;
    tq.chi1 = {1, 0, 0};
    tq.chi2 = {0, 1, 0};
    tq.a1 = 1;
    tq.a2 = 1;
    CHECK(torus_fiber_count(tq) == 4);  // t3 ranges over F_5^*
}

TEST_CASE("torus fiber rejects rank-deficient character pairs") {
    TorusCharacterPair tp;
    tp.ell = 5;
    tp.r = 2;
    tp.k = 1;
    tp.chi1 = {1, 0};
    tp.chi2 = {2, 0};
    CHECK_THROWS_AS(torus_fiber_count(tp), std::invalid_argument);
}
