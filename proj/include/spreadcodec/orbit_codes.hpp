#pragma once

// Cyclic orbit codes C = { U Q^i }, Q an invertible n x n matrix.
//
// Cosets of the stabilizer of U in <Q> are exactly the exponent classes
// modulo the orbit length N_U, so messages are exponents 0 <= i < N_U and the
// stabilizer is represented only through its index N_U.

#include <iosfwd>
#include <optional>
#include <utility>

#include "spreadcodec/finite_field.hpp"
#include "spreadcodec/fq_matrix.hpp"
#include "spreadcodec/subspace.hpp"

namespace spreadcodec {

/// Orbits longer than this are not enumerated or walked.
inline constexpr u64 kOrbitWalkLimit = u64{1} << 20;

class OrbitContext {
public:
    /// Computes ord(Q), its factorization and the orbit length of U. Throws
    /// std::domain_error for singular Q, std::invalid_argument on size mismatch.
    OrbitContext(Subspace seed, FqMatrix generator);

    const FqMatrix& generator() const { return generator_; }
    const Subspace& seed() const { return seed_; }
    u64 group_order() const { return group_order_; }
    const Factorization& group_order_factors() const { return factors_; }
    u64 orbit_length() const { return orbit_length_; }

    /// F_{q^n} with Q as multiplication by x, present when Q is the companion
    /// matrix of a primitive polynomial.
    const std::optional<FieldContext>& field_view() const { return field_view_; }

private:
    Subspace seed_;
    FqMatrix generator_;
    u64 group_order_ = 0;
    Factorization factors_;
    u64 orbit_length_ = 0;
    std::optional<FieldContext> field_view_;
};

/// Least d > 0 with U Q^d = U, tested over the divisors of ord(Q) ascending.
u64 orbit_order(const Subspace& seed, const FqMatrix& generator);

/// Context plus the codewords U, UQ, UQ^2, ... in exponent order.
std::pair<OrbitContext, SubspaceCode> build_orbit(const Subspace& seed, const FqMatrix& generator);

/// U Q^exponent for any exponent, without a message range check.
Subspace orbit_element(const OrbitContext& ctx, u128 exponent);

/// Message i in [0, N_U) to U Q^i.
Subspace enc4(u64 i, const OrbitContext& ctx);

/// Inverse of enc4. Uses discrete logarithms in the field view when present,
/// otherwise walks the orbit. Throws std::domain_error if V is not in the orbit.
u64 dec4(const Subspace& codeword, const OrbitContext& ctx);

/// Inverse of enc4 by stepping through the orbit.
u64 dec4_walk(const Subspace& codeword, const OrbitContext& ctx);

/// The subfield F_{q^k} inside F_{q^n} as a k-dimensional subspace of F_q^n:
/// rows are gamma^0 .. gamma^{k-1}, gamma = beta^((q^n-1)/(q^k-1)). Its orbit
/// under the companion matrix of ctx_n's modulus is a spread.
Subspace build_subfield_seed(const FieldContext& ctx_n, std::size_t k);

/// Coordinates of a field element as a vector of F_q^n, and back.
std::vector<Residue> field_to_vector(const FieldElem& a);
FieldElem vector_to_field(std::span<const Residue> v, const FieldContext& ctx);

/// Generator matrix block, seed basis block, then "N <ord(Q)>" and "N_U <orbit length>".
void write_orbit_context(std::ostream& out, const OrbitContext& ctx);
OrbitContext read_orbit_context(std::istream& in);

}  // namespace spreadcodec
