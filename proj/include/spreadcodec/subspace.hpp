#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spreadcodec/fq_matrix.hpp"

namespace spreadcodec {

/// A point of the Grassmannian G_q(k, n), stored as its RREF basis, so two
/// Subspace values are equal exactly when they are the same subspace.
class Subspace {
public:
    Subspace() = default;

    /// Canonical form of the row space; throws std::invalid_argument when the
    /// rows are linearly dependent.
    static Subspace from_rows(const FqMatrix& rows);

    /// Row space of any matrix, dependent rows dropped.
    static Subspace span_of(const FqMatrix& rows);

    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient() const { return basis_.cols(); }
    Residue characteristic() const { return basis_.characteristic(); }
    const FqMatrix& basis() const { return basis_; }

    bool contains(std::span<const Residue> v) const;

    /// Canonical form of U*A.
    Subspace transformed(const FqMatrix& a) const;

    /// All q^k - 1 nonzero vectors, ordered by the base-q index of their
    /// coordinates relative to the RREF basis.
    std::vector<std::vector<Residue>> nonzero_vectors() const;

    bool operator==(const Subspace&) const = default;
    auto operator<=>(const Subspace&) const = default;

private:
    explicit Subspace(FqMatrix basis) : basis_(std::move(basis)) {}

    FqMatrix basis_;
};

inline Subspace canonicalize(const FqMatrix& rows) { return Subspace::from_rows(rows); }

std::size_t intersection_dim(const Subspace& u, const Subspace& v);

/// dim U + dim V - 2 dim(U ∩ V).
std::size_t subspace_distance(const Subspace& u, const Subspace& v);

/// Every k-dimensional subspace of F_p^n, in lexicographic order of RREF bases.
std::vector<Subspace> enumerate_grassmannian(Residue p, std::size_t k, std::size_t n);

/// Constant-dimension code: distinct subspaces sharing (k, n, p).
class SubspaceCode {
public:
    SubspaceCode() = default;
    explicit SubspaceCode(std::vector<Subspace> codewords, std::string label = {});

    const std::vector<Subspace>& codewords() const { return codewords_; }
    const Subspace& operator[](std::size_t i) const { return codewords_[i]; }
    std::size_t size() const { return codewords_.size(); }
    std::size_t dim() const { return codewords_.empty() ? 0 : codewords_.front().dim(); }
    std::size_t ambient() const { return codewords_.empty() ? 0 : codewords_.front().ambient(); }
    Residue characteristic() const { return codewords_.empty() ? 2 : codewords_.front().characteristic(); }
    const std::string& label() const { return label_; }

    std::optional<std::size_t> index_of(const Subspace& s) const;

private:
    std::vector<Subspace> codewords_;
    std::vector<std::size_t> sorted_;  // indices ordered by codeword, for lookup
    std::string label_;
};

/// Throws std::invalid_argument for codes with fewer than two codewords.
std::size_t code_min_distance(const SubspaceCode& code);

enum class SpreadFailure { none, empty, intersection, coverage, cardinality };

struct SpreadVerdict {
    bool ok = false;
    SpreadFailure failure = SpreadFailure::none;
    std::string detail;
    std::vector<Residue> witness_vector;          // uncovered or shared vector
    std::optional<std::pair<std::size_t, std::size_t>> witness_pair;  // intersecting codewords
};

/// Largest q^n the coverage scan in is_spread accepts.
inline constexpr u64 kSpreadScanLimit = u64{1} << 24;

/// Checks trivial pairwise intersection, coverage of every nonzero vector, and
/// cardinality (q^n-1)/(q^k-1), reporting the first axiom that fails.
/// Throws std::length_error when q^n exceeds kSpreadScanLimit.
SpreadVerdict is_spread(const SubspaceCode& code);

struct DecodeResult {
    std::size_t index = 0;
    std::size_t distance = 0;
    std::size_t ties = 0;  // other codewords at the same minimal distance
};

/// Nearest codeword in subspace distance, lowest index on ties.
DecodeResult min_distance_decode(const SubspaceCode& code, const Subspace& received);

/// Header "k n p count", then each codeword's RREF basis in matrix text format.
void write_code(std::ostream& out, const SubspaceCode& code);
SubspaceCode read_code(std::istream& in);

}  // namespace spreadcodec
