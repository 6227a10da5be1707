#pragma once

// Dense matrices over a prime field F_p.
//
// Vectors are rows and act on the right (v -> vM), so a subspace spanned by
// the rows of U maps to the row space of U*A.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spreadcodec/finite_field.hpp"

namespace spreadcodec {

class FqMatrix {
public:
    FqMatrix() = default;
    FqMatrix(Residue p, std::size_t rows, std::size_t cols);
    FqMatrix(Residue p, std::size_t rows, std::size_t cols, std::vector<Residue> entries);

    static FqMatrix identity(Residue p, std::size_t n);
    static FqMatrix from_rows(Residue p, const std::vector<std::vector<Residue>>& rows);

    Residue characteristic() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Residue operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Residue& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    std::span<const Residue> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    std::span<Residue> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    const std::vector<Residue>& entries() const { return entries_; }

    bool operator==(const FqMatrix&) const = default;
    auto operator<=>(const FqMatrix&) const = default;

private:
    Residue p_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Residue> entries_;
};

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
FqMatrix operator+(const FqMatrix& a, const FqMatrix& b);

/// Row vector times matrix.
std::vector<Residue> vec_mul(std::span<const Residue> v, const FqMatrix& m);

/// Rows of a followed by rows of b.
FqMatrix vstack(const FqMatrix& a, const FqMatrix& b);

FqMatrix submatrix_rows(const FqMatrix& m, std::size_t first, std::size_t count);

struct RrefResult {
    FqMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; zero rows are kept at the bottom.
RrefResult rref(const FqMatrix& m);
std::size_t rank(const FqMatrix& m);

/// Gauss-Jordan inverse. Throws std::domain_error for singular input.
FqMatrix inverse(const FqMatrix& m);

FqMatrix power(const FqMatrix& m, u128 exponent);

/// Least t > 0 with M^t = I, by repeated multiplication up to cap. A matrix
/// whose characteristic polynomial is primitive of degree n has order p^n - 1
/// and is answered without iterating. Throws std::domain_error if singular,
/// std::runtime_error if the cap is exceeded.
u64 matrix_order(const FqMatrix& m, u64 cap = u64{1} << 22);

/// Monic characteristic polynomial det(xI - M), via Hessenberg reduction.
Poly charpoly(const FqMatrix& m);

/// Companion matrix of a monic polynomial: ones on the superdiagonal, last row
/// holds -c_0 .. -c_{e-1}. For f = minimal polynomial of a, v -> vP is
/// multiplication by a in the basis 1, a, ..., a^{e-1}.
FqMatrix companion_matrix(const Poly& f, Residue p);

/// Rows v, vM, ..., vM^{n-1}.
FqMatrix krylov_rows(std::span<const Residue> v, const FqMatrix& m);

/// Invertible T with Q = T^-1 P T, or nullopt when the characteristic
/// polynomials differ. Both matrices must be cyclic (minimal polynomial equal
/// to characteristic polynomial); throws std::domain_error when no standard
/// basis vector generates a full-rank Krylov basis.
std::optional<FqMatrix> similarity_to(const FqMatrix& p_mat, const FqMatrix& q_mat);

/// Header "p rows cols" then one line per row, entries separated by spaces.
std::string format_matrix(const FqMatrix& m);
void write_matrix(std::ostream& out, const FqMatrix& m);
FqMatrix read_matrix(std::istream& in);

}  // namespace spreadcodec
