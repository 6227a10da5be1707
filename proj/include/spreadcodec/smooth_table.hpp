#pragma once

// Smoothness of the group orders 2^n - 1, which decides how cheap
// Pohlig-Hellman discrete logarithms (and hence orbit-code message decoding)
// are in F_{2^n}.

#include <optional>
#include <span>
#include <vector>

#include "spreadcodec/number_theory.hpp"

namespace spreadcodec {

struct SmoothRow {
    unsigned n = 0;
    Factorization factors;  // of 2^n - 1
    u128 max_p = 1;
    unsigned max_e = 0;
    u128 max_weighted = 0;  // max over i of max(e_i n, e_i p_i)
    u128 bound = 0;         // n^2
    bool smooth = false;    // max_p <= n^2
};

/// Throws std::out_of_range unless 1 <= n <= 64.
SmoothRow smooth_row(unsigned n);

/// Reference row: n, largest prime, largest exponent, max(e_i n, e_i p_i), n^2.
struct ReferenceSmoothRow {
    unsigned n;
    u64 max_p;
    unsigned max_e;
    u64 max_weighted;
    u64 bound;
};

/// The commonly tabulated n <= 60 for which 2^n - 1 is n^2-smooth, with the
/// values as tabulated (row 6 lists max_e = 3 although 63 = 3^2 * 7).
std::span<const ReferenceSmoothRow> reference_smooth_rows();

struct SmoothComparison {
    SmoothRow derived;
    std::optional<ReferenceSmoothRow> reference;
    bool max_p_differs = false;
    bool max_e_differs = false;
    bool max_weighted_differs = false;

    bool discrepancy() const { return max_p_differs || max_e_differs || max_weighted_differs; }
};

SmoothComparison compare_with_reference(unsigned n);

}  // namespace spreadcodec
