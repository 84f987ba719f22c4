#include "pbw/linalg.hpp"

#include <gtest/gtest.h>

#include "pbw/scalar.hpp"
#include "test_util.hpp"

using namespace pbw;

namespace {

const PrimeField F101(101);

template <class F>
SparseVec<typename F::Scalar> vec(const F& field, std::initializer_list<long long> vals) {
    SparseVec<typename F::Scalar> v;
    int i = 0;
    for (long long x : vals) {
        v.push(i++, field(x));
    }
    return v;
}

template <class F>
SparseMatrix<typename F::Scalar> dense(const F& field,
                                       std::initializer_list<std::initializer_list<long long>> rows,
                                       int cols) {
    SparseMatrix<typename F::Scalar> m(cols);
    for (auto& r : rows)
        m.add_row(vec(field, r));
    return m;
}

// Independent oracle: dense Gaussian elimination rank.
template <class K>
int dense_rank(std::vector<std::vector<K>> a) {
    int rank = 0;
    size_t rows = a.size();
    if (rows == 0)
        return 0;
    size_t cols = a[0].size();
    for (size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
        size_t piv = rows;
        for (size_t r = static_cast<size_t>(rank); r < rows; ++r)
            if (!a[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv == rows)
            continue;
        std::swap(a[static_cast<size_t>(rank)], a[piv]);
        K inv = a[static_cast<size_t>(rank)][c].inverse();
        for (size_t cc = 0; cc < cols; ++cc)
            a[static_cast<size_t>(rank)][cc] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == static_cast<size_t>(rank) || a[r][c].is_zero())
                continue;
            K f = a[r][c];
            for (size_t cc = 0; cc < cols; ++cc)
                a[r][cc] -= f * a[static_cast<size_t>(rank)][cc];
        }
        ++rank;
    }
    return rank;
}

TEST(Linalg, KernelOfZeroAndIdentity) {
    // 1x1 zero matrix: kernel is the whole space
    SparseMatrix<Fp> z(1);
    z.add_row(SparseVec<Fp>{});
    auto kz = left_kernel(z, F101(1));
    EXPECT_EQ(kz.rows(), 1);
    EXPECT_EQ(*kz.row(0).at(0), F101(1));

    auto id = dense(F101, {{1, 0}, {0, 1}}, 2);
    EXPECT_EQ(left_kernel(id, F101(1)).rows(), 0);
}

TEST(Linalg, RankNullityFuzzedAgainstDenseOracle) {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> dim(1, 8), val(0, 100);
    for (int it = 0; it < 300; ++it) {
        int r = dim(rng), c = dim(rng);
        SparseMatrix<Fp> m(c);
        std::vector<std::vector<Fp>> d(static_cast<size_t>(r),
                                       std::vector<Fp>(static_cast<size_t>(c)));
        for (int i = 0; i < r; ++i) {
            SparseVec<Fp> row;
            for (int j = 0; j < c; ++j) {
                Fp x = F101(val(rng) < 60 ? 0 : val(rng));
                d[static_cast<size_t>(i)][static_cast<size_t>(j)] = x;
                row.push(j, x);
            }
            m.add_row(std::move(row));
        }
        auto rr = rref(m);
        auto ker = left_kernel(m, F101(1));
        EXPECT_EQ(rr.rank(), dense_rank(d));
        EXPECT_EQ(rr.rank() + ker.rows(), r);
        // kernel rows annihilate the matrix
        for (const auto& kv : ker.row_list()) {
            SparseVec<Fp> img;
            for (const auto& [ri, coef] : kv.ent)
                img.axpy(coef, m.row(ri));
            EXPECT_TRUE(img.is_zero());
        }
    }
}

TEST(Linalg, RrefIsDeterministicAndCanonical) {
    auto m1 = dense(F101, {{2, 4, 6}, {1, 3, 5}, {0, 1, 2}}, 3);
    auto m2 = dense(F101, {{1, 3, 5}, {0, 2, 4}, {2, 4, 6}}, 3); // same row space
    EXPECT_EQ(rref(m1).mat, rref(m2).mat);
    EXPECT_EQ(rref(m1).mat, rref(rref(m1).mat).mat);
}

TEST(Subspace, BasicOperations) {
    auto e1 = Subspace<Fp>::span(dense(F101, {{1, 0, 0}}, 3));
    auto e2 = Subspace<Fp>::span(dense(F101, {{0, 1, 0}}, 3));
    EXPECT_EQ(intersect(e1, e1), e1);
    EXPECT_TRUE(intersect(e1, e2).is_zero());
    EXPECT_EQ(sum(e1, e2).dim(), 2);
    EXPECT_TRUE(e1.member(vec(F101, {5, 0, 0})));
    EXPECT_FALSE(e1.member(vec(F101, {5, 1, 0})));
    Subspace<Fp> other(4);
    EXPECT_THROW(intersect(e1, other), Error);
}

TEST(Subspace, DimensionFormulaFuzzed) {
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> dim(1, 7), nrows(1, 4), val(0, 100);
    for (int it = 0; it < 300; ++it) {
        int n = dim(rng);
        auto sample = [&] {
            SparseMatrix<Fp> m(n);
            int r = nrows(rng);
            for (int i = 0; i < r; ++i) {
                SparseVec<Fp> row;
                for (int j = 0; j < n; ++j)
                    row.push(j, F101(val(rng) < 50 ? 0 : val(rng)));
                m.add_row(std::move(row));
            }
            return Subspace<Fp>::span(m);
        };
        auto u = sample(), w = sample();
        auto i = intersect(u, w), s = sum(u, w);
        EXPECT_EQ(s.dim() + i.dim(), u.dim() + w.dim());
        EXPECT_TRUE(u.contains(i));
        EXPECT_TRUE(w.contains(i));
        EXPECT_TRUE(s.contains(u));
        EXPECT_TRUE(s.contains(w));
    }
}

TEST(Subspace, IntersectionMatchesEnumerationOverGF2) {
    PrimeField F2(2);
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> bit(0, 1);
    const int n = 5;
    for (int it = 0; it < 100; ++it) {
        auto sample = [&] {
            SparseMatrix<Fp> m(n);
            for (int i = 0; i < 2; ++i) {
                SparseVec<Fp> row;
                for (int j = 0; j < n; ++j)
                    row.push(j, F2(bit(rng)));
                m.add_row(std::move(row));
            }
            return Subspace<Fp>::span(m);
        };
        auto u = sample(), w = sample();
        auto inter = intersect(u, w);
        // enumerate all 2^n vectors; count members of both subspaces
        long count = 0;
        for (int mask = 0; mask < (1 << n); ++mask) {
            SparseVec<Fp> v;
            for (int j = 0; j < n; ++j)
                if (mask & (1 << j))
                    v.push(j, F2(1));
            if (u.member(v) && w.member(v)) {
                ++count;
                EXPECT_TRUE(inter.member(v));
            }
        }
        EXPECT_EQ(count, 1L << inter.dim());
    }
}

TEST(Subspace, RationalExactness) {
    RationalField Q;
    auto m = dense(Q, {{2, 4, 1}, {3, 6, 0}}, 3);
    auto s = Subspace<Rational>::span(m);
    EXPECT_EQ(s.dim(), 2);
    // scaling rows must not change the subspace
    auto m2 = dense(Q, {{4, 8, 2}, {1, 2, 0}}, 3);
    EXPECT_EQ(s, Subspace<Rational>::span(m2));
}

} // namespace
