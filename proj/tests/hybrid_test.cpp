#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fixtures.hpp"
#include "spreadcodec/hybrid.hpp"

using namespace spreadcodec;
using namespace spreadcodec::testing;

namespace {

SubspaceCode desarguesian_s1() { return enumerate_spread(SpreadContext(2, 2, 2)); }

SubspaceCode orbit_s2() {
    return build_orbit(Subspace::from_rows(example_seed_rows()), example_generator()).second;
}

FqMatrix random_invertible(Residue p, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        FqMatrix m(p, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Residue>(rng() % p);
        if (rank(m) == n) return m;
    }
}

}  // namespace

TEST(Isometry, KnownTransform) {
    EXPECT_TRUE(verify_isometry(desarguesian_s1(), orbit_s2(), example_isometry()));
    EXPECT_TRUE(verify_isometry(desarguesian_s1(), desarguesian_s1(), FqMatrix::identity(2, 4)));
    EXPECT_FALSE(verify_isometry(desarguesian_s1(), orbit_s2(), FqMatrix::identity(2, 4)));
    EXPECT_THROW(verify_isometry(desarguesian_s1(), orbit_s2(), FqMatrix::identity(2, 3)), std::invalid_argument);
}

TEST(Isometry, PreservesDistance) {
    const FqMatrix a = example_isometry();
    const auto planes = enumerate_grassmannian(2, 2, 4);
    for (const auto& u : planes)
        for (const auto& v : planes) EXPECT_EQ(subspace_distance(u, v), subspace_distance(u.transformed(a), v.transformed(a)));
}

TEST(EmbedRoot, Examples) {
    const FieldContext f16 = FieldContext::standard(2, 4);
    const FieldElem gamma = embed_subfield_root(f16, {1, 1, 1});
    EXPECT_EQ(gamma, f16.pow(f16.generator(), 5));
    EXPECT_EQ(gamma.coeffs, (std::vector<Residue>{0, 1, 1, 0}));
    EXPECT_TRUE(f16.evaluate({1, 1, 1}, gamma).is_zero());

    EXPECT_EQ(embed_subfield_root(f16, {1, 1}), f16.one());

    const FieldContext f64 = FieldContext::standard(2, 6);
    const FieldElem g6 = embed_subfield_root(f64, {1, 1, 1});
    EXPECT_TRUE(f64.evaluate({1, 1, 1}, g6).is_zero());
    EXPECT_EQ(g6, f64.pow(f64.generator(), 21));

    EXPECT_THROW(embed_subfield_root(f16, {1, 1, 0, 1}), std::domain_error);  // degree 3 does not divide 4
}

TEST(HybridCodec, BuildsAtAllParameterSets) {
    for (auto [q, k, n] : std::vector<std::tuple<Residue, std::size_t, std::size_t>>{
             {2, 2, 4}, {2, 2, 6}, {2, 3, 6}, {3, 2, 4}, {2, 4, 8}, {2, 1, 3}}) {
        const HybridCodec codec = HybridCodec::build(q, k, n);
        const SpreadContext& s1 = codec.spread();
        const SubspaceCode code1 = enumerate_spread(s1);
        EXPECT_TRUE(verify_isometry(code1, codec.channel_code(), codec.transform()));
        EXPECT_EQ(codec.transform() * codec.transform_inverse(), FqMatrix::identity(q, n));
        EXPECT_TRUE(is_spread(codec.channel_code()).ok);
        std::set<Subspace> image;
        for (u64 i = 1; i <= codec.message_count(); ++i) {
            const Subspace c = enc5(i, codec);
            ASSERT_TRUE(codec.channel_code().index_of(c).has_value());
            EXPECT_EQ(dec5(c, codec), i);
            image.insert(c);
        }
        EXPECT_EQ(image.size(), codec.channel_code().size());
    }
}

TEST(HybridCodec, AcceptsPrintedTransform) {
    const HybridCodec codec(SpreadContext(2, 2, 2), FieldContext::standard(2, 4), example_isometry());
    for (u64 i = 1; i <= 5; ++i) EXPECT_EQ(dec5(enc5(i, codec), codec), i);
    EXPECT_THROW(HybridCodec(SpreadContext(2, 2, 2), FieldContext::standard(2, 4), FqMatrix::identity(2, 4)),
                 std::invalid_argument);
}

TEST(HybridCodec, RejectsNonCodewords) {
    const HybridCodec codec = HybridCodec::build(2, 2, 4);
    EXPECT_THROW(enc5(0, codec), std::out_of_range);
    EXPECT_THROW(enc5(6, codec), std::out_of_range);
    int rejected = 0;
    for (const auto& plane : enumerate_grassmannian(2, 2, 4)) {
        if (codec.channel_code().index_of(plane)) continue;
        EXPECT_THROW(dec5(plane, codec), std::domain_error);
        ++rejected;
    }
    EXPECT_EQ(rejected, 30);
}

TEST(HybridCodec, ErasureRecoveryExhaustive) {
    const HybridCodec codec = HybridCodec::build(2, 2, 4);
    for (u64 i = 1; i <= codec.message_count(); ++i) {
        const Subspace c = enc5(i, codec);
        for (std::size_t r = 0; r < c.dim(); ++r) {
            const Subspace erased = Subspace::from_rows(submatrix_rows(c.basis(), 1 - r, 1));
            const DecodeResult d = min_distance_decode(codec.channel_code(), erased);
            EXPECT_EQ(dec5(codec.channel_code()[d.index], codec), i);
        }
    }
}

TEST(HybridCodec, TextRoundTrip) {
    const HybridCodec codec = HybridCodec::build(2, 3, 6);
    std::stringstream ss;
    write_codec(ss, codec);
    const std::string text = ss.str();
    const HybridCodec back = read_codec(ss);
    EXPECT_EQ(back.transform(), codec.transform());
    std::stringstream again;
    write_codec(again, back);
    EXPECT_EQ(again.str(), text);
}

TEST(Conjugacy, SelfAndConstructed) {
    const FqMatrix p = example_generator();
    const auto self = groups_conjugate(p, p);
    ASSERT_TRUE(self.has_value());
    EXPECT_EQ(inverse(self->transform) * power(p, self->exponent) * self->transform, p);

    std::mt19937_64 rng(31);
    for (int t = 0; t < 5; ++t) {
        const FqMatrix x = random_invertible(2, 4, rng);
        const FqMatrix q = x * power(p, 7) * inverse(x);
        const auto c = groups_conjugate(p, q);
        ASSERT_TRUE(c.has_value());
        EXPECT_EQ(inverse(c->transform) * power(p, c->exponent) * c->transform, q);
    }
}

TEST(Conjugacy, DifferentOrders) {
    const FqMatrix p = example_generator();
    EXPECT_FALSE(groups_conjugate(p, power(p, 3)).has_value());
}

TEST(Conjugacy, CodecGeneratorIsConjugateToCompanion) {
    // The codec orbit generator and the x^4 + x + 1 companion generate conjugate groups.
    const HybridCodec codec = HybridCodec::build(2, 2, 4);
    const FqMatrix g2 = codec.orbit().generator();
    const auto c = groups_conjugate(g2, example_generator());
    ASSERT_TRUE(c.has_value());
}
