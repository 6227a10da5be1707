#include "spreadcodec/hybrid.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace spreadcodec {

namespace {

FqMatrix field_rows(const std::vector<FieldElem>& elems, Residue p, std::size_t n) {
    FqMatrix out(p, elems.size(), n);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) = elems[i].coeffs[j];
    }
    return out;
}

void check_compatible(const SpreadContext& s1, const FieldContext& ctx_n) {
    if (s1.q() != ctx_n.characteristic() || s1.n() != ctx_n.degree())
        throw std::invalid_argument("spread parameters do not match the field F_{q^n}");
    if (!ctx_n.primitive()) throw std::invalid_argument("F_{q^n} modulus must be primitive");
}

OrbitContext subfield_orbit(const SpreadContext& s1, const FieldContext& ctx_n) {
    return OrbitContext(build_subfield_seed(ctx_n, s1.k()), companion_matrix(ctx_n.modulus(), ctx_n.characteristic()));
}

std::string expect_tag(std::istream& in, const std::string& tag) {
    std::string key, value;
    if (!(in >> key) || key != tag) throw std::invalid_argument("codec bundle: expected '" + tag + "'");
    if (!(in >> value)) throw std::invalid_argument("codec bundle: missing value for '" + tag + "'");
    return value;
}

}  // namespace

FieldElem embed_subfield_root(const FieldContext& ctx_n, const Poly& p_alpha) {
    const int k = poly_degree(p_alpha);
    if (k < 1 || ctx_n.degree() % static_cast<unsigned>(k) != 0)
        throw std::domain_error("subfield polynomial degree must divide n");
    const u64 sub_order = static_cast<u64>(ipow(ctx_n.characteristic(), static_cast<unsigned>(k)) - 1);
    const u64 cofactor = ctx_n.group_order() / sub_order;
    const FieldElem base = ctx_n.pow(ctx_n.generator(), cofactor);
    for (u64 s = 1; s <= sub_order; ++s) {
        if (gcd(s, sub_order) != 1) continue;
        const FieldElem gamma = ctx_n.pow(base, s);
        if (ctx_n.evaluate(p_alpha, gamma).is_zero()) return gamma;
    }
    throw std::domain_error("polynomial " + format_poly(p_alpha) + " has no primitive root in F_{q^n}");
}

Isometry build_isometry(const SpreadContext& s1, const FieldContext& ctx_n) {
    check_compatible(s1, ctx_n);
    const Residue q = s1.q();
    const std::size_t k = s1.k(), n = s1.n();
    const FieldElem gamma = embed_subfield_root(ctx_n, s1.modulus());

    // Greedy F_{q^k}-basis: keep beta^j when it leaves the F_{q^k}-span so far.
    std::vector<FieldElem> rows;
    FqMatrix span(q, 0, n);
    FieldElem candidate = ctx_n.one();
    for (std::size_t j = 0; j < n && rows.size() < n; ++j) {
        std::vector<FieldElem> block;
        FieldElem cur = candidate;
        for (std::size_t t = 0; t < k; ++t) {
            block.push_back(cur);
            cur = ctx_n.mul(cur, gamma);
        }
        const FqMatrix extended = vstack(span, field_rows(block, q, n));
        if (rank(extended) == span.rows() + k) {
            span = extended;
            rows.insert(rows.end(), block.begin(), block.end());
        }
        candidate = ctx_n.mul(candidate, ctx_n.generator());
    }
    if (rows.size() != n) throw std::logic_error("build_isometry: greedy basis search did not reach dimension n");

    Isometry iso{field_rows(rows, q, n), subfield_orbit(s1, ctx_n)};
    const SubspaceCode s2 = build_orbit(iso.orbit.seed(), iso.orbit.generator()).second;
    if (!verify_isometry(enumerate_spread(s1), s2, iso.transform))
        throw std::logic_error("build_isometry: constructed transform does not map S1 onto S2");
    return iso;
}

bool verify_isometry(const SubspaceCode& s1, const SubspaceCode& s2, const FqMatrix& a) {
    if (!a.square() || a.rows() != s1.ambient() || s1.ambient() != s2.ambient() ||
        s1.characteristic() != s2.characteristic() || a.characteristic() != s1.characteristic())
        throw std::invalid_argument("verify_isometry: dimension mismatch");
    if (s1.size() != s2.size() || rank(a) != a.rows()) return false;
    std::vector<bool> hit(s2.size(), false);
    for (const auto& c : s1.codewords()) {
        const auto idx = s2.index_of(c.transformed(a));
        if (!idx || hit[*idx]) return false;
        hit[*idx] = true;
    }
    return true;
}

HybridCodec::HybridCodec(SpreadContext spread, FieldContext field_n, Isometry iso)
    : spread_(std::move(spread)),
      field_n_(std::move(field_n)),
      orbit_(std::move(iso.orbit)),
      channel_code_(build_orbit(orbit_.seed(), orbit_.generator()).second),
      transform_(std::move(iso.transform)),
      transform_inv_(inverse(transform_)) {}

HybridCodec::HybridCodec(SpreadContext spread, FieldContext field_n)
    : HybridCodec(spread, field_n, build_isometry(spread, field_n)) {}

HybridCodec::HybridCodec(SpreadContext spread, FieldContext field_n, FqMatrix transform)
    : HybridCodec(spread, field_n, [&] {
          check_compatible(spread, field_n);
          if (!transform.square() || transform.rows() != spread.n() || rank(transform) != spread.n())
              throw std::invalid_argument("isometry must be an invertible n x n matrix");
          return Isometry{std::move(transform), subfield_orbit(spread, field_n)};
      }()) {
    if (!verify_isometry(enumerate_spread(spread_), channel_code_, transform_))
        throw std::invalid_argument("given matrix does not map the Desarguesian spread onto the orbit spread");
}

HybridCodec HybridCodec::build(Residue q, std::size_t k, std::size_t n, std::optional<Poly> modulus_k,
                               std::optional<Poly> modulus_n) {
    if (k == 0 || n % k != 0) throw std::invalid_argument("k must divide n");
    SpreadContext spread(q, k, n / k, std::move(modulus_k));
    FieldContext field_n = modulus_n ? FieldContext(q, std::move(*modulus_n)) : FieldContext::standard(q, static_cast<unsigned>(n));
    return HybridCodec(std::move(spread), std::move(field_n));
}

Subspace enc5(u64 i, const HybridCodec& codec) { return enc2(i, codec.spread()).transformed(codec.transform()); }

u64 dec5(const Subspace& codeword, const HybridCodec& codec) {
    const SpreadContext& s1 = codec.spread();
    if (codeword.dim() != s1.k() || codeword.ambient() != s1.n() || codeword.characteristic() != s1.q())
        throw std::domain_error("dec5: subspace does not live in G_q(k, n)");
    const Subspace back = codeword.transformed(codec.transform_inverse());
    const ProjPoint point = dec1(back, s1);
    if (enc1(point, s1) != back) throw std::domain_error("dec5: subspace is not a codeword of the orbit spread");
    return f_index_inv(point, s1);
}

std::optional<Conjugacy> groups_conjugate(const FqMatrix& p_mat, const FqMatrix& q_mat) {
    if (!p_mat.square() || !q_mat.square() || p_mat.rows() != q_mat.rows() ||
        p_mat.characteristic() != q_mat.characteristic())
        throw std::invalid_argument("groups_conjugate: matrices must be square of equal size over one field");
    const u64 order = matrix_order(p_mat);
    if (matrix_order(q_mat) != order) return std::nullopt;
    const Poly target = charpoly(q_mat);
    for (u64 j = 1; j <= order; ++j) {
        if (gcd(j, order) != 1) continue;
        const FqMatrix pj = power(p_mat, j);
        if (charpoly(pj) != target) continue;
        if (auto t = similarity_to(pj, q_mat)) return Conjugacy{j, std::move(*t)};
    }
    return std::nullopt;
}

void write_codec(std::ostream& out, const HybridCodec& codec) {
    const SpreadContext& s = codec.spread();
    out << "q " << s.q() << '\n';
    out << "k " << s.k() << '\n';
    out << "n " << s.n() << '\n';
    out << "modulus_k " << format_poly(s.modulus()) << '\n';
    out << "modulus_n " << format_poly(codec.field_n().modulus()) << '\n';
    out << "A\n";
    write_matrix(out, codec.transform());
    out << "A_inv\n";
    write_matrix(out, codec.transform_inverse());
}

HybridCodec read_codec(std::istream& in) {
    const Residue q = static_cast<Residue>(std::stoul(expect_tag(in, "q")));
    const std::size_t k = std::stoul(expect_tag(in, "k"));
    const std::size_t n = std::stoul(expect_tag(in, "n"));
    Poly mod_k = parse_poly(expect_tag(in, "modulus_k"), q);
    Poly mod_n = parse_poly(expect_tag(in, "modulus_n"), q);
    std::string tag;
    if (!(in >> tag) || tag != "A") throw std::invalid_argument("codec bundle: expected 'A'");
    FqMatrix a = read_matrix(in);
    if (!(in >> tag) || tag != "A_inv") throw std::invalid_argument("codec bundle: expected 'A_inv'");
    const FqMatrix a_inv = read_matrix(in);
    if (k == 0 || n % k != 0) throw std::invalid_argument("codec bundle: k must divide n");

    HybridCodec codec(SpreadContext(q, k, n / k, std::move(mod_k)), FieldContext(q, std::move(mod_n)), std::move(a));
    if (codec.transform_inverse() != a_inv) throw std::invalid_argument("codec bundle: A_inv is not the inverse of A");
    return codec;
}

}  // namespace spreadcodec
