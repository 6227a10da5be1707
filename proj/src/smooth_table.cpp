#include "spreadcodec/smooth_table.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace spreadcodec {

namespace {

constexpr std::array<ReferenceSmoothRow, 17> kReferenceRows{{
    {6, 7, 3, 18, 36},
    {8, 17, 1, 17, 64},
    {9, 73, 1, 73, 81},
    {10, 31, 1, 31, 100},
    {11, 89, 1, 89, 121},
    {12, 13, 2, 24, 144},
    {14, 127, 1, 127, 196},
    {15, 151, 1, 151, 225},
    {18, 73, 3, 73, 324},
    {20, 41, 2, 41, 400},
    {21, 337, 2, 337, 441},
    {24, 241, 2, 241, 576},
    {28, 127, 1, 127, 784},
    {30, 331, 2, 331, 900},
    {36, 109, 3, 109, 1296},
    {48, 673, 2, 673, 2304},
    {60, 1321, 2, 1321, 3600},
}};

}  // namespace

SmoothRow smooth_row(unsigned n) {
    if (n < 1 || n > 64) throw std::out_of_range("smooth_row: n must be in 1..64, got " + std::to_string(n));
    SmoothRow row;
    row.n = n;
    row.factors = factorize((u128{1} << n) - 1);
    for (const auto& [p, e] : row.factors) {
        row.max_p = std::max(row.max_p, p);
        row.max_e = std::max(row.max_e, e);
        row.max_weighted = std::max(row.max_weighted, std::max(u128{e} * n, u128{e} * p));
    }
    row.bound = u128{n} * n;
    row.smooth = row.max_p <= row.bound;
    return row;
}

std::span<const ReferenceSmoothRow> reference_smooth_rows() { return kReferenceRows; }

SmoothComparison compare_with_reference(unsigned n) {
    SmoothComparison cmp;
    cmp.derived = smooth_row(n);
    auto it = std::find_if(kReferenceRows.begin(), kReferenceRows.end(), [n](const auto& r) { return r.n == n; });
    if (it == kReferenceRows.end()) return cmp;
    cmp.reference = *it;
    cmp.max_p_differs = cmp.derived.max_p != it->max_p;
    cmp.max_e_differs = cmp.derived.max_e != it->max_e;
    cmp.max_weighted_differs = cmp.derived.max_weighted != it->max_weighted;
    return cmp;
}

}  // namespace spreadcodec
