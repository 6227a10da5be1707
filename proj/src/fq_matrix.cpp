#include "spreadcodec/fq_matrix.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "residue_ops.hpp"

namespace spreadcodec {

using detail::add_res;
using detail::mul_res;
using detail::sub_res;

namespace {

void require_same_field(const FqMatrix& a, const FqMatrix& b) {
    if (a.characteristic() != b.characteristic()) throw std::invalid_argument("matrices over different fields");
}

}  // namespace

FqMatrix::FqMatrix(Residue p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

FqMatrix::FqMatrix(Residue p, std::size_t rows, std::size_t cols, std::vector<Residue> entries)
    : p_(p), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) throw std::invalid_argument("matrix entry count does not match dimensions");
    for (Residue c : entries_) {
        if (c >= p) throw std::invalid_argument("matrix entry out of range");
    }
}

FqMatrix FqMatrix::identity(Residue p, std::size_t n) {
    FqMatrix out(p, n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

FqMatrix FqMatrix::from_rows(Residue p, const std::vector<std::vector<Residue>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Residue> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("ragged matrix rows");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return FqMatrix(p, rows.size(), cols, std::move(entries));
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    const Residue p = a.characteristic();
    FqMatrix out(p, a.rows(), b.cols());
    std::vector<u64> acc(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const u64 aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + aik * b(k, j)) % p;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = static_cast<Residue>(acc[j]);
    }
    return out;
}

FqMatrix operator+(const FqMatrix& a, const FqMatrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum dimension mismatch");
    FqMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = add_res(a(i, j), b(i, j), a.characteristic());
    }
    return out;
}

std::vector<Residue> vec_mul(std::span<const Residue> v, const FqMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix dimension mismatch");
    const Residue p = m.characteristic();
    std::vector<u64> acc(m.cols(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) acc[j] = (acc[j] + static_cast<u64>(v[k]) * m(k, j)) % p;
    }
    return {acc.begin(), acc.end()};
}

FqMatrix vstack(const FqMatrix& a, const FqMatrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    std::vector<Residue> entries = a.entries();
    entries.insert(entries.end(), b.entries().begin(), b.entries().end());
    return FqMatrix(a.characteristic(), a.rows() + b.rows(), a.cols(), std::move(entries));
}

FqMatrix submatrix_rows(const FqMatrix& m, std::size_t first, std::size_t count) {
    if (first + count > m.rows()) throw std::out_of_range("row range outside matrix");
    std::vector<Residue> entries(m.entries().begin() + first * m.cols(),
                                 m.entries().begin() + (first + count) * m.cols());
    return FqMatrix(m.characteristic(), count, m.cols(), std::move(entries));
}

RrefResult rref(const FqMatrix& m) {
    const Residue p = m.characteristic();
    RrefResult out{m, 0, {}};
    FqMatrix& r = out.reduced;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < r.rows() && r(sel, col) == 0) ++sel;
        if (sel == r.rows()) continue;
        if (sel != pivot_row) {
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(sel, j), r(pivot_row, j));
        }
        const Residue inv = mod_inverse(r(pivot_row, col), p);
        if (inv != 1) {
            for (std::size_t j = col; j < r.cols(); ++j) r(pivot_row, j) = mul_res(r(pivot_row, j), inv, p);
        }
        for (std::size_t i = 0; i < r.rows(); ++i) {
            const Residue f = r(i, col);
            if (i == pivot_row || f == 0) continue;
            for (std::size_t j = col; j < r.cols(); ++j) r(i, j) = sub_res(r(i, j), mul_res(f, r(pivot_row, j), p), p);
        }
        out.pivots.push_back(col);
        ++pivot_row;
    }
    out.rank = pivot_row;
    return out;
}

std::size_t rank(const FqMatrix& m) { return rref(m).rank; }

FqMatrix inverse(const FqMatrix& m) {
    if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const Residue p = m.characteristic();
    FqMatrix aug(p, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const RrefResult red = rref(aug);
    if (red.rank < n || red.pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
    FqMatrix out(p, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) = red.reduced(i, n + j);
    }
    return out;
}

FqMatrix power(const FqMatrix& m, u128 exponent) {
    if (!m.square()) throw std::invalid_argument("power of a non-square matrix");
    FqMatrix result = FqMatrix::identity(m.characteristic(), m.rows());
    FqMatrix base = m;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return result;
}

u64 matrix_order(const FqMatrix& m, u64 cap) {
    if (!m.square()) throw std::invalid_argument("order of a non-square matrix");
    const std::size_t n = m.rows();
    if (rank(m) < n) throw std::domain_error("singular matrix has no multiplicative order");
    const Residue p = m.characteristic();
    // Group order p^n - 1 must fit in 64 bits for the shortcut.
    if (n > 0 && static_cast<double>(n) * std::log2(static_cast<double>(p)) <= 64.0) {
        const u128 group_order = ipow(p, static_cast<unsigned>(n)) - 1;
        if (group_order <= ~u64{0} && is_primitive(charpoly(m), p)) return static_cast<u64>(group_order);
    }
    const FqMatrix id = FqMatrix::identity(p, n);
    FqMatrix acc = m;
    for (u64 t = 1; t <= cap; ++t) {
        if (acc == id) return t;
        acc = acc * m;
    }
    throw std::runtime_error("matrix order exceeds cap " + std::to_string(cap));
}

Poly charpoly(const FqMatrix& m) {
    if (!m.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    const Residue p = m.characteristic();
    FqMatrix h = m;

    // Similarity reduction to upper Hessenberg form.
    for (std::size_t col = 1; col + 1 < n; ++col) {
        std::size_t sel = col;
        while (sel < n && h(sel, col - 1) == 0) ++sel;
        if (sel == n) continue;
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(sel, j), h(col, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h(i, sel), h(i, col));
        }
        const Residue inv = mod_inverse(h(col, col - 1), p);
        for (std::size_t i = col + 1; i < n; ++i) {
            const Residue u = mul_res(h(i, col - 1), inv, p);
            if (u == 0) continue;
            for (std::size_t j = 0; j < n; ++j) h(i, j) = sub_res(h(i, j), mul_res(u, h(col, j), p), p);
            for (std::size_t r = 0; r < n; ++r) h(r, col) = add_res(h(r, col), mul_res(u, h(r, i), p), p);
        }
    }

    // chars[j] = characteristic polynomial of the leading j x j block.
    std::vector<Poly> chars(n + 1);
    chars[0] = Poly{1};
    for (std::size_t mm = 1; mm <= n; ++mm) {
        const Poly& prev = chars[mm - 1];
        Poly cur(mm + 1, 0);
        const Residue diag = h(mm - 1, mm - 1);
        for (std::size_t d = 0; d < prev.size(); ++d) {
            cur[d + 1] = add_res(cur[d + 1], prev[d], p);
            cur[d] = sub_res(cur[d], mul_res(diag, prev[d], p), p);
        }
        Residue t = 1;
        for (std::size_t i = 1; i < mm; ++i) {
            t = mul_res(t, h(mm - i, mm - i - 1), p);
            const Residue coef = mul_res(t, h(mm - i - 1, mm - 1), p);
            if (coef == 0) continue;
            const Poly& lower = chars[mm - i - 1];
            for (std::size_t d = 0; d < lower.size(); ++d) cur[d] = sub_res(cur[d], mul_res(coef, lower[d], p), p);
        }
        chars[mm] = std::move(cur);
    }
    return chars[n];
}

FqMatrix companion_matrix(const Poly& f, Residue p) {
    const int deg = poly_degree(f);
    if (deg < 1) throw std::invalid_argument("companion matrix needs a polynomial of degree >= 1");
    if (f[deg] != 1) throw std::invalid_argument("companion matrix needs a monic polynomial");
    const std::size_t e = static_cast<std::size_t>(deg);
    FqMatrix out(p, e, e);
    for (std::size_t i = 0; i + 1 < e; ++i) out(i, i + 1) = 1;
    for (std::size_t j = 0; j < e; ++j) out(e - 1, j) = sub_res(0, f[j] % p, p);
    return out;
}

FqMatrix krylov_rows(std::span<const Residue> v, const FqMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<Residue> entries;
    entries.reserve(n * n);
    std::vector<Residue> cur(v.begin(), v.end());
    for (std::size_t i = 0; i < n; ++i) {
        entries.insert(entries.end(), cur.begin(), cur.end());
        cur = vec_mul(cur, m);
    }
    return FqMatrix(m.characteristic(), n, n, std::move(entries));
}

namespace {

FqMatrix cyclic_krylov_basis(const FqMatrix& m) {
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Residue> e(n, 0);
        e[i] = 1;
        FqMatrix k = krylov_rows(e, m);
        if (rank(k) == n) return k;
    }
    throw std::domain_error("no standard basis vector is cyclic for the matrix");
}

}  // namespace

std::optional<FqMatrix> similarity_to(const FqMatrix& p_mat, const FqMatrix& q_mat) {
    require_same_field(p_mat, q_mat);
    if (!p_mat.square() || !q_mat.square() || p_mat.rows() != q_mat.rows())
        throw std::invalid_argument("similarity_to needs square matrices of equal size");
    if (charpoly(p_mat) != charpoly(q_mat)) return std::nullopt;
    // K_P P K_P^-1 and K_Q Q K_Q^-1 are the same companion matrix.
    const FqMatrix kp = cyclic_krylov_basis(p_mat);
    const FqMatrix kq = cyclic_krylov_basis(q_mat);
    return inverse(kp) * kq;
}

void write_matrix(std::ostream& out, const FqMatrix& m) {
    out << m.characteristic() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
}

std::string format_matrix(const FqMatrix& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

FqMatrix read_matrix(std::istream& in) {
    long long p = 0, rows = -1, cols = -1;
    if (!(in >> p >> rows >> cols) || p < 2 || rows < 0 || cols < 0)
        throw std::invalid_argument("malformed matrix header, expected 'p rows cols'");
    std::vector<Residue> entries(static_cast<std::size_t>(rows * cols));
    for (auto& e : entries) {
        long long v = -1;
        if (!(in >> v) || v < 0 || v >= p) throw std::invalid_argument("malformed or out-of-range matrix entry");
        e = static_cast<Residue>(v);
    }
    return FqMatrix(static_cast<Residue>(p), static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                    std::move(entries));
}

}  // namespace spreadcodec
