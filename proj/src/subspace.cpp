#include "spreadcodec/subspace.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace spreadcodec {

namespace {

FqMatrix nonzero_rows(const RrefResult& red) {
    return submatrix_rows(red.reduced, 0, red.rank);
}

void require_same_ambient(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient() || u.characteristic() != v.characteristic())
        throw std::invalid_argument("subspaces live in different ambient spaces");
}

u64 vector_index(std::span<const Residue> v, Residue p) {
    u64 index = 0;
    for (std::size_t i = v.size(); i-- > 0;) index = index * p + v[i];
    return index;
}

std::vector<Residue> vector_from_index(u64 index, std::size_t n, Residue p) {
    std::vector<Residue> v(n);
    for (auto& c : v) {
        c = static_cast<Residue>(index % p);
        index /= p;
    }
    return v;
}

std::string format_vector(std::span<const Residue> v) {
    std::string out;
    for (Residue c : v) out += std::to_string(c);
    return out;
}

}  // namespace

Subspace Subspace::from_rows(const FqMatrix& rows) {
    const RrefResult red = rref(rows);
    if (red.rank != rows.rows())
        throw std::invalid_argument("rows are linearly dependent: rank " + std::to_string(red.rank) + " < " +
                                    std::to_string(rows.rows()));
    return Subspace(red.reduced);
}

Subspace Subspace::span_of(const FqMatrix& rows) { return Subspace(nonzero_rows(rref(rows))); }

bool Subspace::contains(std::span<const Residue> v) const {
    if (v.size() != ambient()) throw std::invalid_argument("vector length does not match ambient dimension");
    const FqMatrix stacked = vstack(basis_, FqMatrix(characteristic(), 1, v.size(), {v.begin(), v.end()}));
    return rank(stacked) == dim();
}

Subspace Subspace::transformed(const FqMatrix& a) const {
    if (a.rows() != ambient() || !a.square()) throw std::invalid_argument("transform size does not match ambient space");
    return from_rows(basis_ * a);
}

std::vector<std::vector<Residue>> Subspace::nonzero_vectors() const {
    const Residue p = characteristic();
    const u64 count = static_cast<u64>(ipow(p, static_cast<unsigned>(dim())));
    std::vector<std::vector<Residue>> out;
    out.reserve(count - 1);
    for (u64 idx = 1; idx < count; ++idx) out.push_back(vec_mul(vector_from_index(idx, dim(), p), basis_));
    return out;
}

std::size_t intersection_dim(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v);
    return u.dim() + v.dim() - rank(vstack(u.basis(), v.basis()));
}

std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
    return u.dim() + v.dim() - 2 * intersection_dim(u, v);
}

std::vector<Subspace> enumerate_grassmannian(Residue p, std::size_t k, std::size_t n) {
    if (k > n) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
    std::vector<Subspace> out;
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;

    while (true) {
        // Free positions: right of each row's pivot, outside pivot columns.
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = pivots[r] + 1; c < n; ++c) {
                if (!std::binary_search(pivots.begin(), pivots.end(), c)) free.emplace_back(r, c);
            }
        }
        std::vector<Residue> values(free.size(), 0);
        while (true) {
            FqMatrix m(p, k, n);
            for (std::size_t r = 0; r < k; ++r) m(r, pivots[r]) = 1;
            for (std::size_t i = 0; i < free.size(); ++i) m(free[i].first, free[i].second) = values[i];
            out.push_back(Subspace::from_rows(m));
            std::size_t i = 0;
            while (i < values.size() && ++values[i] == p) values[i++] = 0;
            if (i == values.size()) break;
        }

        // Next k-combination of columns.
        std::size_t i = k;
        while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++pivots[i - 1];
        for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

SubspaceCode::SubspaceCode(std::vector<Subspace> codewords, std::string label)
    : codewords_(std::move(codewords)), label_(std::move(label)) {
    for (const auto& c : codewords_) {
        const auto& first = codewords_.front();
        if (c.dim() != first.dim() || c.ambient() != first.ambient() || c.characteristic() != first.characteristic())
            throw std::invalid_argument("codewords of a constant-dimension code must share (k, n, p)");
    }
    sorted_.resize(codewords_.size());
    for (std::size_t i = 0; i < sorted_.size(); ++i) sorted_[i] = i;
    std::sort(sorted_.begin(), sorted_.end(), [&](auto a, auto b) { return codewords_[a] < codewords_[b]; });
    for (std::size_t i = 1; i < sorted_.size(); ++i) {
        if (codewords_[sorted_[i - 1]] == codewords_[sorted_[i]])
            throw std::invalid_argument("duplicate codeword at index " + std::to_string(sorted_[i]));
    }
}

std::optional<std::size_t> SubspaceCode::index_of(const Subspace& s) const {
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), s,
                               [&](std::size_t idx, const Subspace& key) { return codewords_[idx] < key; });
    if (it != sorted_.end() && codewords_[*it] == s) return *it;
    return std::nullopt;
}

std::size_t code_min_distance(const SubspaceCode& code) {
    if (code.size() < 2) throw std::invalid_argument("minimum distance needs at least two codewords");
    std::size_t best = ~std::size_t{0};
    for (std::size_t i = 0; i < code.size(); ++i) {
        for (std::size_t j = i + 1; j < code.size(); ++j) best = std::min(best, subspace_distance(code[i], code[j]));
    }
    return best;
}

SpreadVerdict is_spread(const SubspaceCode& code) {
    SpreadVerdict verdict;
    if (code.size() == 0 || code.dim() == 0) {
        verdict.failure = SpreadFailure::empty;
        verdict.detail = "code is empty or zero-dimensional";
        return verdict;
    }
    const Residue p = code.characteristic();
    const std::size_t n = code.ambient();
    const u128 space = ipow(p, static_cast<unsigned>(n));
    if (space > kSpreadScanLimit) throw std::length_error("is_spread: q^n too large for the coverage scan");

    // owner[v] = 1 + index of the codeword covering v, 0 if uncovered.
    std::vector<std::uint32_t> owner(static_cast<std::size_t>(space), 0);
    for (std::size_t c = 0; c < code.size(); ++c) {
        for (const auto& v : code[c].nonzero_vectors()) {
            auto& slot = owner[vector_index(v, p)];
            if (slot != 0) {
                verdict.failure = SpreadFailure::intersection;
                verdict.witness_pair = std::make_pair(std::size_t{slot - 1}, c);
                verdict.witness_vector = v;
                verdict.detail = "codewords " + std::to_string(slot - 1) + " and " + std::to_string(c) +
                                 " share vector " + format_vector(v);
                return verdict;
            }
            slot = static_cast<std::uint32_t>(c + 1);
        }
    }
    for (u64 idx = 1; idx < static_cast<u64>(space); ++idx) {
        if (owner[idx] == 0) {
            verdict.failure = SpreadFailure::coverage;
            verdict.witness_vector = vector_from_index(idx, n, p);
            verdict.detail = "vector " + format_vector(verdict.witness_vector) + " is not covered";
            return verdict;
        }
    }
    const u128 expected = (space - 1) / (ipow(p, static_cast<unsigned>(code.dim())) - 1);
    if (expected != code.size()) {
        verdict.failure = SpreadFailure::cardinality;
        verdict.detail = "cardinality " + std::to_string(code.size()) + " != " + to_string(expected);
        return verdict;
    }
    verdict.ok = true;
    return verdict;
}

DecodeResult min_distance_decode(const SubspaceCode& code, const Subspace& received) {
    if (code.size() == 0) throw std::invalid_argument("cannot decode against an empty code");
    DecodeResult best{0, subspace_distance(code[0], received), 0};
    for (std::size_t i = 1; i < code.size(); ++i) {
        const std::size_t d = subspace_distance(code[i], received);
        if (d < best.distance) {
            best = {i, d, 0};
        } else if (d == best.distance) {
            ++best.ties;
        }
    }
    return best;
}

void write_code(std::ostream& out, const SubspaceCode& code) {
    out << code.dim() << ' ' << code.ambient() << ' ' << code.characteristic() << ' ' << code.size() << '\n';
    for (const auto& c : code.codewords()) write_matrix(out, c.basis());
}

SubspaceCode read_code(std::istream& in) {
    long long k = -1, n = -1, p = 0, count = -1;
    if (!(in >> k >> n >> p >> count) || k < 0 || n < 0 || p < 2 || count < 0)
        throw std::invalid_argument("malformed code header, expected 'k n p count'");
    std::vector<Subspace> codewords;
    codewords.reserve(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i) {
        const FqMatrix m = read_matrix(in);
        if (static_cast<long long>(m.rows()) != k || static_cast<long long>(m.cols()) != n ||
            m.characteristic() != static_cast<Residue>(p))
            throw std::invalid_argument("codeword block does not match code header");
        Subspace s = Subspace::from_rows(m);
        if (s.basis() != m) throw std::invalid_argument("codeword block is not in reduced row echelon form");
        codewords.push_back(std::move(s));
    }
    return SubspaceCode(std::move(codewords));
}

}  // namespace spreadcodec
