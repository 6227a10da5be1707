#pragma once

// Matrices from the worked G_2(2,4) example shared by several suites, plus
// small brute-force helpers that deliberately avoid the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "spreadcodec/fq_matrix.hpp"
#include "spreadcodec/subspace.hpp"

namespace spreadcodec::testing {

// Companion matrix of x^2 + x + 1 over F_2.
inline FqMatrix example_companion() { return FqMatrix::from_rows(2, {{0, 1}, {1, 1}}); }

// Generator of the cyclic orbit spread in G_2(2,4) (companion of x^4 + x + 1).
inline FqMatrix example_generator() {
    return FqMatrix::from_rows(2, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0}});
}

inline FqMatrix example_seed_rows() { return FqMatrix::from_rows(2, {{1, 0, 0, 0}, {0, 1, 1, 0}}); }

// Isometry from the Desarguesian spread onto the orbit spread.
inline FqMatrix example_isometry() {
    return FqMatrix::from_rows(2, {{1, 0, 0, 0}, {0, 1, 1, 0}, {1, 1, 0, 0}, {0, 1, 0, 1}});
}

inline std::vector<Residue> digits_of(std::uint64_t index, std::size_t n, Residue p) {
    std::vector<Residue> v(n);
    for (auto& x : v) {
        x = static_cast<Residue>(index % p);
        index /= p;
    }
    return v;
}

// All vectors of the row space, by enumerating every coefficient combination.
inline std::vector<std::vector<Residue>> brute_span(const FqMatrix& rows) {
    const Residue p = rows.characteristic();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < rows.rows(); ++i) count *= p;
    std::vector<std::vector<Residue>> out;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const auto coeffs = digits_of(idx, rows.rows(), p);
        std::vector<Residue> v(rows.cols(), 0);
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            for (std::size_t c = 0; c < rows.cols(); ++c) v[c] = static_cast<Residue>((v[c] + coeffs[r] * rows(r, c)) % p);
        }
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace spreadcodec::testing
