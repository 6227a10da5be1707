#pragma once

// Hybrid spread codec: messages are encoded in a Desarguesian spread S1 and
// transmitted as codewords of the primitive cyclic orbit spread S2 = S1 A.
// The channel side can use orbit-code decoders while message decoding stays a
// field division instead of a discrete logarithm.

#include <iosfwd>
#include <optional>

#include "spreadcodec/finite_field.hpp"
#include "spreadcodec/fq_matrix.hpp"
#include "spreadcodec/orbit_codes.hpp"
#include "spreadcodec/spread_codes.hpp"
#include "spreadcodec/subspace.hpp"

namespace spreadcodec {

/// Root gamma of p_alpha in F_{q^n}, the first beta^(s (q^n-1)/(q^k-1)) with
/// gcd(s, q^k-1) = 1 that vanishes. Throws std::domain_error when p_alpha has
/// no root of that form (not primitive, or degree not dividing n).
FieldElem embed_subfield_root(const FieldContext& ctx_n, const Poly& p_alpha);

struct Isometry {
    FqMatrix transform;
    OrbitContext orbit;
};

/// A with S1 A = S2, S2 the orbit of the subfield seed under the companion
/// matrix of ctx_n's modulus. Row l*k + t of A is gamma^t b_l, where
/// b_1..b_m is an F_{q^k}-basis of F_{q^n} picked greedily from 1, beta, beta^2, ...
/// Verifies the set equality before returning; throws std::logic_error if it fails.
Isometry build_isometry(const SpreadContext& s1, const FieldContext& ctx_n);

/// True iff c -> c A is a bijection from s1 onto s2. Throws
/// std::invalid_argument on dimension mismatch.
bool verify_isometry(const SubspaceCode& s1, const SubspaceCode& s2, const FqMatrix& a);

class HybridCodec {
public:
    /// Builds the isometry from scratch.
    HybridCodec(SpreadContext spread, FieldContext field_n);

    /// Uses a given A (for example from a stored bundle); throws
    /// std::invalid_argument unless A is invertible and S1 A = S2.
    HybridCodec(SpreadContext spread, FieldContext field_n, FqMatrix transform);

    /// Default moduli for (q, k, n) unless given.
    static HybridCodec build(Residue q, std::size_t k, std::size_t n, std::optional<Poly> modulus_k = std::nullopt,
                             std::optional<Poly> modulus_n = std::nullopt);

    const SpreadContext& spread() const { return spread_; }
    const FieldContext& field_n() const { return field_n_; }
    const OrbitContext& orbit() const { return orbit_; }
    const SubspaceCode& channel_code() const { return channel_code_; }
    const FqMatrix& transform() const { return transform_; }
    const FqMatrix& transform_inverse() const { return transform_inv_; }
    u64 message_count() const { return spread_.message_count(); }

private:
    HybridCodec(SpreadContext spread, FieldContext field_n, Isometry iso);

    SpreadContext spread_;
    FieldContext field_n_;
    OrbitContext orbit_;
    SubspaceCode channel_code_;
    FqMatrix transform_;
    FqMatrix transform_inv_;
};

/// canonical(enc2(i) A), a codeword of S2.
Subspace enc5(u64 i, const HybridCodec& codec);

/// dec2(canonical(V A^-1)). Throws std::domain_error when V A^-1 is not a
/// codeword of the Desarguesian spread.
u64 dec5(const Subspace& codeword, const HybridCodec& codec);

struct Conjugacy {
    u64 exponent;       // j with Q = T^-1 P^j T
    FqMatrix transform; // T
};

/// Searches generators P^j of <P>, gcd(j, ord P) = 1, for one similar to Q.
/// nullopt when the groups have different orders or no generator matches.
std::optional<Conjugacy> groups_conjugate(const FqMatrix& p_mat, const FqMatrix& q_mat);

/// Spread parameters, both moduli, then A and A^-1 in matrix text format.
void write_codec(std::ostream& out, const HybridCodec& codec);
HybridCodec read_codec(std::istream& in);

}  // namespace spreadcodec
