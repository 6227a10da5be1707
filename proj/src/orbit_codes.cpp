#include "spreadcodec/orbit_codes.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace spreadcodec {

namespace {

u64 orbit_order_with(const Subspace& seed, const FqMatrix& generator, const Factorization& factors) {
    for (u128 d : divisors(factors)) {
        if (seed.transformed(power(generator, d)) == seed) return static_cast<u64>(d);
    }
    throw std::logic_error("orbit_order: no divisor of ord(Q) stabilizes the seed");
}

void check_generator(const Subspace& seed, const FqMatrix& generator) {
    if (!generator.square() || generator.rows() != seed.ambient() ||
        generator.characteristic() != seed.characteristic())
        throw std::invalid_argument("generator must be an n x n matrix over the seed's field");
}

std::optional<FieldContext> companion_field_view(const FqMatrix& generator) {
    const Poly f = charpoly(generator);
    const Residue p = generator.characteristic();
    if (generator.rows() == 0 || companion_matrix(f, p) != generator || !is_primitive(f, p)) return std::nullopt;
    return FieldContext(p, f);
}

}  // namespace

OrbitContext::OrbitContext(Subspace seed, FqMatrix generator) : seed_(std::move(seed)), generator_(std::move(generator)) {
    check_generator(seed_, generator_);
    group_order_ = matrix_order(generator_);
    factors_ = factorize(group_order_);
    orbit_length_ = orbit_order_with(seed_, generator_, factors_);
    field_view_ = companion_field_view(generator_);
}

u64 orbit_order(const Subspace& seed, const FqMatrix& generator) {
    check_generator(seed, generator);
    return orbit_order_with(seed, generator, factorize(matrix_order(generator)));
}

std::pair<OrbitContext, SubspaceCode> build_orbit(const Subspace& seed, const FqMatrix& generator) {
    OrbitContext ctx(seed, generator);
    if (ctx.orbit_length() > kOrbitWalkLimit) throw std::length_error("orbit too long to enumerate");
    std::vector<Subspace> codewords;
    codewords.reserve(ctx.orbit_length());
    Subspace cur = ctx.seed();
    for (u64 i = 0; i < ctx.orbit_length(); ++i) {
        codewords.push_back(cur);
        cur = cur.transformed(ctx.generator());
    }
    if (cur != ctx.seed()) throw std::logic_error("orbit did not close after N_U steps");
    return {std::move(ctx), SubspaceCode(std::move(codewords), "orbit")};
}

Subspace orbit_element(const OrbitContext& ctx, u128 exponent) {
    return ctx.seed().transformed(power(ctx.generator(), exponent));
}

Subspace enc4(u64 i, const OrbitContext& ctx) {
    if (i >= ctx.orbit_length())
        throw std::out_of_range("message " + std::to_string(i) + " outside 0.." + std::to_string(ctx.orbit_length() - 1));
    return orbit_element(ctx, i);
}

u64 dec4_walk(const Subspace& codeword, const OrbitContext& ctx) {
    if (ctx.orbit_length() > kOrbitWalkLimit) throw std::length_error("orbit too long to walk");
    Subspace cur = ctx.seed();
    for (u64 i = 0; i < ctx.orbit_length(); ++i) {
        if (cur == codeword) return i;
        cur = cur.transformed(ctx.generator());
    }
    throw std::domain_error("subspace is not in the orbit");
}

u64 dec4(const Subspace& codeword, const OrbitContext& ctx) {
    if (codeword.dim() != ctx.seed().dim() || codeword.ambient() != ctx.seed().ambient() ||
        codeword.characteristic() != ctx.seed().characteristic())
        throw std::domain_error("subspace is not in the orbit: shape mismatch");
    if (!ctx.field_view()) return dec4_walk(codeword, ctx);
    if (codeword.dim() == 0) return 0;

    const FieldContext& field = *ctx.field_view();
    const DiscreteLog log_beta(field, field.generator());
    const FieldElem w = vector_to_field(codeword.basis().row(0), field);
    for (const auto& u : ctx.seed().nonzero_vectors()) {
        const u64 d = log_beta(field.div(w, vector_to_field(u, field))) % ctx.orbit_length();
        if (orbit_element(ctx, d) == codeword) return d;
    }
    throw std::domain_error("subspace is not in the orbit");
}

Subspace build_subfield_seed(const FieldContext& ctx_n, std::size_t k) {
    const unsigned n = ctx_n.degree();
    if (k == 0 || n % k != 0) throw std::invalid_argument("subfield degree k must divide n");
    const u64 sub_order = static_cast<u64>(ipow(ctx_n.characteristic(), static_cast<unsigned>(k)) - 1);
    const FieldElem gamma = ctx_n.pow(ctx_n.generator(), ctx_n.group_order() / sub_order);
    FqMatrix rows(ctx_n.characteristic(), k, n);
    FieldElem cur = ctx_n.one();
    for (std::size_t i = 0; i < k; ++i) {
        for (unsigned j = 0; j < n; ++j) rows(i, j) = cur.coeffs[j];
        cur = ctx_n.mul(cur, gamma);
    }
    return Subspace::from_rows(rows);
}

std::vector<Residue> field_to_vector(const FieldElem& a) { return a.coeffs; }

FieldElem vector_to_field(std::span<const Residue> v, const FieldContext& ctx) { return ctx.from_coeffs(v); }

void write_orbit_context(std::ostream& out, const OrbitContext& ctx) {
    write_matrix(out, ctx.generator());
    write_matrix(out, ctx.seed().basis());
    out << "N " << ctx.group_order() << '\n';
    out << "N_U " << ctx.orbit_length() << '\n';
}

OrbitContext read_orbit_context(std::istream& in) {
    const FqMatrix generator = read_matrix(in);
    const FqMatrix seed_rows = read_matrix(in);
    std::string tag_n, tag_nu;
    u64 n = 0, nu = 0;
    if (!(in >> tag_n >> n >> tag_nu >> nu) || tag_n != "N" || tag_nu != "N_U")
        throw std::invalid_argument("malformed orbit context: expected 'N <int>' and 'N_U <int>'");
    const Subspace seed = Subspace::from_rows(seed_rows);
    if (seed.basis() != seed_rows) throw std::invalid_argument("orbit seed block is not in reduced row echelon form");
    OrbitContext ctx(seed, generator);
    if (ctx.group_order() != n || ctx.orbit_length() != nu)
        throw std::invalid_argument("orbit context orders do not match the generator and seed");
    return ctx;
}

}  // namespace spreadcodec
