#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "fixtures.hpp"
#include "spreadcodec/fq_matrix.hpp"

using namespace spreadcodec;
using namespace spreadcodec::testing;

namespace {

FqMatrix random_matrix(Residue p, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    FqMatrix m(p, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Residue>(rng() % p);
    return m;
}

FqMatrix random_invertible(Residue p, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        FqMatrix m = random_matrix(p, n, n, rng);
        if (rank(m) == n) return m;
    }
}

// det(xI - M) by cofactor expansion with polynomial entries.
using P = std::vector<long>;

P padd(P a, const P& b, long sign, long p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] + sign * b[i]) % p + p) % p;
    return a;
}

P pmul(const P& a, const P& b, long p) {
    P r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

P cofactor_det(const std::vector<std::vector<P>>& m, long p) {
    if (m.size() == 1) return m[0][0];
    P total{0};
    for (std::size_t c = 0; c < m.size(); ++c) {
        std::vector<std::vector<P>> minor;
        for (std::size_t r = 1; r < m.size(); ++r) {
            std::vector<P> row;
            for (std::size_t k = 0; k < m.size(); ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        total = padd(total, pmul(m[0][c], cofactor_det(minor, p), p), c % 2 ? -1 : 1, p);
    }
    return total;
}

Poly oracle_charpoly(const FqMatrix& m) {
    const long p = m.characteristic();
    std::vector<std::vector<P>> entries(m.rows(), std::vector<P>(m.rows()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j)
            entries[i][j] = i == j ? P{(p - m(i, j)) % p, 1} : P{(p - m(i, j)) % p};
    P d = cofactor_det(entries, p);
    Poly out(d.begin(), d.end());
    out.resize(m.rows() + 1, 0);
    return out;
}

}  // namespace

TEST(FqMatrix, IdentityProduct) {
    std::mt19937_64 rng(1);
    const FqMatrix a = random_matrix(3, 4, 5, rng);
    EXPECT_EQ(FqMatrix::identity(3, 4) * a, a);
    EXPECT_EQ(a * FqMatrix::identity(3, 5), a);
}

TEST(FqMatrix, CompanionCubeIsIdentity) {
    const FqMatrix p = example_companion();
    EXPECT_EQ(p * p * p, FqMatrix::identity(2, 2));
    EXPECT_EQ(power(p, 3), FqMatrix::identity(2, 2));
}

TEST(FqMatrix, InverseOfIsometry) {
    const FqMatrix a = example_isometry();
    EXPECT_EQ(inverse(a) * a, FqMatrix::identity(2, 4));
    EXPECT_THROW(inverse(FqMatrix::from_rows(2, {{1, 1}, {1, 1}})), std::domain_error);
}

TEST(FqMatrix, InverseRandom) {
    std::mt19937_64 rng(2);
    for (Residue p : {2u, 3u, 7u}) {
        for (int t = 0; t < 20; ++t) {
            const FqMatrix m = random_invertible(p, 6, rng);
            EXPECT_EQ(m * inverse(m), FqMatrix::identity(p, 6));
        }
    }
}

TEST(FqMatrix, RrefExamples) {
    const RrefResult id = rref(FqMatrix::identity(2, 3));
    EXPECT_EQ(id.reduced, FqMatrix::identity(2, 3));
    EXPECT_EQ(id.rank, 3u);

    const RrefResult swap = rref(FqMatrix::from_rows(2, {{0, 1, 1, 0}, {1, 0, 0, 0}}));
    EXPECT_EQ(swap.reduced, FqMatrix::from_rows(2, {{1, 0, 0, 0}, {0, 1, 1, 0}}));
    EXPECT_EQ(swap.rank, 2u);

    const RrefResult ones = rref(FqMatrix::from_rows(2, {{1, 1}, {1, 1}}));
    EXPECT_EQ(ones.reduced, FqMatrix::from_rows(2, {{1, 1}, {0, 0}}));
    EXPECT_EQ(ones.rank, 1u);
}

TEST(FqMatrix, RrefIsIdempotentAndCanonical) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 50; ++t) {
        const FqMatrix m = random_matrix(3, 3, 6, rng);
        const RrefResult r = rref(m);
        EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
        // Left-multiplying by an invertible matrix does not change the row space.
        const FqMatrix x = random_invertible(3, 3, rng);
        EXPECT_EQ(rref(x * m).reduced, r.reduced);
    }
}

TEST(FqMatrix, MatrixOrder) {
    EXPECT_EQ(matrix_order(FqMatrix::identity(2, 4)), 1u);
    EXPECT_EQ(matrix_order(example_companion()), 3u);
    EXPECT_EQ(matrix_order(example_generator()), 15u);
    EXPECT_THROW(matrix_order(FqMatrix(2, 2, 2)), std::domain_error);
}

TEST(FqMatrix, MatrixOrderMatchesRepeatedMultiplication) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        const FqMatrix m = random_invertible(2, 5, rng);
        FqMatrix cur = m;
        u64 k = 1;
        while (cur != FqMatrix::identity(2, 5)) {
            cur = cur * m;
            ++k;
        }
        EXPECT_EQ(matrix_order(m), k);
    }
}

TEST(FqMatrix, OrderDividesFieldGroupOrderForIrreducibleCharpoly) {
    std::mt19937_64 rng(19);
    int checked = 0;
    for (Residue p : {2u, 3u}) {
        const std::size_t n = p == 2 ? 6 : 4;
        const u64 bound = static_cast<u64>(ipow(p, static_cast<unsigned>(n))) - 1;
        while (checked < (p == 2 ? 40 : 80)) {
            const FqMatrix m = random_matrix(p, n, n, rng);
            if (!is_irreducible(charpoly(m), p)) continue;
            EXPECT_EQ(bound % matrix_order(m), 0u);
            ++checked;
        }
    }
}

TEST(FqMatrix, CompanionExamples) {
    EXPECT_EQ(companion_matrix({1, 1, 1}, 2), example_companion());
    EXPECT_EQ(companion_matrix({1, 1, 0, 0, 1}, 2), example_generator());
    EXPECT_EQ(companion_matrix({1, 1}, 2), FqMatrix::from_rows(2, {{1}}));
    EXPECT_THROW(companion_matrix({1, 2}, 3), std::invalid_argument);
    EXPECT_THROW(companion_matrix({1}, 2), std::invalid_argument);
}

TEST(FqMatrix, CharpolyOfCompanionRecoversPolynomial) {
    for (Residue p : {2u, 3u}) {
        for (unsigned deg = 1; deg <= 12; ++deg) {
            std::uint64_t count = 1;
            for (unsigned i = 0; i < deg; ++i) count *= p;
            for (std::uint64_t c = 0; c < count; ++c) {
                Poly f = digits_of(c, deg, p);
                f.push_back(1);
                ASSERT_EQ(charpoly(companion_matrix(f, p)), f) << format_poly(f);
            }
        }
    }
}

TEST(FqMatrix, CharpolyExamples) {
    EXPECT_EQ(charpoly(FqMatrix::identity(2, 2)), (Poly{1, 0, 1}));
    EXPECT_EQ(charpoly(example_generator()), (Poly{1, 1, 0, 0, 1}));
}

TEST(FqMatrix, CharpolyMatchesCofactorOracle) {
    std::mt19937_64 rng(12);
    for (Residue p : {2u, 3u, 5u}) {
        for (std::size_t n = 1; n <= 5; ++n) {
            for (int t = 0; t < 15; ++t) {
                const FqMatrix m = random_matrix(p, n, n, rng);
                ASSERT_EQ(charpoly(m), oracle_charpoly(m)) << format_matrix(m);
            }
        }
    }
}

TEST(FqMatrix, SimilaritySelf) {
    const FqMatrix p = example_generator();
    const auto t = similarity_to(p, p);
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(inverse(*t) * p * *t, p);
}

TEST(FqMatrix, SimilarityOfConjugates) {
    std::mt19937_64 rng(21);
    for (Residue p : {2u, 3u}) {
        const FqMatrix c = companion_matrix(find_irreducible(p, 5, true), p);
        for (int trial = 0; trial < 10; ++trial) {
            const FqMatrix x = random_invertible(p, 5, rng);
            const FqMatrix q = x * c * inverse(x);
            const auto t = similarity_to(c, q);
            ASSERT_TRUE(t.has_value());
            EXPECT_EQ(inverse(*t) * c * *t, q);
        }
    }
}

TEST(FqMatrix, NotSimilarWhenCharpolysDiffer) {
    EXPECT_FALSE(similarity_to(companion_matrix({1, 1, 0, 0, 1}, 2), companion_matrix({1, 0, 0, 1, 1}, 2)).has_value());
}

TEST(FqMatrix, SimilarityRejectsNonCyclic) {
    const FqMatrix i = FqMatrix::identity(2, 3);
    EXPECT_THROW(similarity_to(i, i), std::domain_error);
}

TEST(FqMatrix, TextRoundTrip) {
    std::mt19937_64 rng(6);
    const FqMatrix m = random_matrix(5, 3, 4, rng);
    std::stringstream ss;
    write_matrix(ss, m);
    EXPECT_EQ(read_matrix(ss), m);
    std::stringstream bad("2 1 2\n1 2\n");
    EXPECT_THROW(read_matrix(bad), std::invalid_argument);
}

TEST(FqMatrix, DimensionMismatchThrows) {
    EXPECT_THROW(FqMatrix(2, 2, 3) * FqMatrix(2, 2, 3), std::invalid_argument);
    EXPECT_THROW(FqMatrix(2, 2, 2) + FqMatrix(3, 2, 2), std::invalid_argument);
}
