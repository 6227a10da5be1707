#pragma once

// Desarguesian spread codes in G_q(k, n), n = k*m.
//
// Messages are points of the projective space over F_{q^k} of dimension m-1
// (normalized vectors in F_{q^k}^m), or integers 1..(q^n-1)/(q^k-1) mapped
// onto those points. A point is lifted to a k-dimensional subspace of F_q^n by
// replacing each coordinate a = sum u_i alpha^i with the k x k block
// sum u_i P^i, P the companion matrix of alpha's minimal polynomial.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spreadcodec/finite_field.hpp"
#include "spreadcodec/fq_matrix.hpp"
#include "spreadcodec/subspace.hpp"

namespace spreadcodec {

/// Base-q expansion: sum u_i q^i. Throws std::overflow_error beyond 64 bits.
u64 phi(std::span<const Residue> digits, Residue q);

/// Inverse of phi with t digits; throws std::out_of_range when x >= q^t.
std::vector<Residue> phi_inv(u64 x, std::size_t t, Residue q);

struct ProjPoint {
    std::vector<FieldElem> coords;

    bool operator==(const ProjPoint&) const = default;
};

class SpreadContext {
public:
    /// Defaults the modulus to the smallest primitive polynomial of degree k.
    /// A supplied modulus must be primitive of degree k.
    SpreadContext(Residue q, std::size_t k, std::size_t m, std::optional<Poly> modulus = std::nullopt);

    Residue q() const { return field_.characteristic(); }
    std::size_t k() const { return k_; }
    std::size_t m() const { return m_; }
    std::size_t n() const { return k_ * m_; }
    const Poly& modulus() const { return field_.modulus(); }
    const FieldContext& field() const { return field_; }
    const FqMatrix& companion() const { return companion_; }

    /// P^i for 0 <= i < k.
    const FqMatrix& companion_power(std::size_t i) const { return powers_.at(i); }

    /// (q^n - 1)/(q^k - 1) = sum_{j<m} q^{jk}.
    u64 message_count() const { return message_count_; }

    /// sum_{j<y} q^{jk}: messages consumed by points with at least m - y leading zeros.
    u64 prefix_count(std::size_t y) const { return prefix_.at(y); }

private:
    std::size_t k_;
    std::size_t m_;
    FieldContext field_;
    FqMatrix companion_;
    std::vector<FqMatrix> powers_;
    std::vector<u64> prefix_;
    u64 message_count_ = 0;
};

/// Divides by the first nonzero coordinate. Throws std::domain_error for the zero vector.
ProjPoint normalize(const ProjPoint& point, const SpreadContext& ctx);

bool is_normalized(const ProjPoint& point, const SpreadContext& ctx);

/// Reads a vector of F_q^n as m field elements (blocks of k) and normalizes it.
ProjPoint point_from_vector(std::span<const Residue> v, const SpreadContext& ctx);

Subspace enc1(const ProjPoint& point, const SpreadContext& ctx);

/// Left inverse of enc1, read off the first RREF basis row.
ProjPoint dec1(const Subspace& codeword, const SpreadContext& ctx);

/// Bijection {1..message_count} -> normalized points: message 1 is (0,...,0,1),
/// the next q^k messages are (0,...,0,1,*), and so on.
ProjPoint f_index(u64 i, const SpreadContext& ctx);
u64 f_index_inv(const ProjPoint& point, const SpreadContext& ctx);

Subspace enc2(u64 i, const SpreadContext& ctx);
u64 dec2(const Subspace& codeword, const SpreadContext& ctx);

/// enc2 over the whole message range, in message order.
SubspaceCode enumerate_spread(const SpreadContext& ctx);

/// Comma-separated coordinates, each the low-to-high coefficient digits, e.g. "10,01".
std::string format_point(const ProjPoint& point);
ProjPoint parse_point(const std::string& text, const SpreadContext& ctx);

}  // namespace spreadcodec
