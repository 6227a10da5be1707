#include "spreadcodec/spread_codes.hpp"

#include <sstream>
#include <stdexcept>

#include "residue_ops.hpp"

namespace spreadcodec {

namespace {

FieldContext make_subfield(Residue q, std::size_t k, std::size_t m, std::optional<Poly> modulus) {
    if (k == 0 || m == 0) throw std::invalid_argument("spread parameters need k >= 1 and m >= 1");
    if (!modulus) return FieldContext::standard(q, static_cast<unsigned>(k));
    FieldContext field(q, std::move(*modulus));
    if (field.degree() != k) throw std::invalid_argument("spread modulus must have degree k");
    if (!field.primitive()) throw std::invalid_argument("spread modulus must be primitive");
    return field;
}

void check_point_shape(const ProjPoint& point, const SpreadContext& ctx) {
    if (point.coords.size() != ctx.m()) throw std::invalid_argument("point must have m coordinates");
    for (const auto& c : point.coords) ctx.field().check(c);
}

}  // namespace

u64 phi(std::span<const Residue> digits, Residue q) {
    u128 x = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= q) throw std::invalid_argument("phi: digit out of range");
        x = x * q + digits[i];
        if (x > ~u64{0}) throw std::overflow_error("phi: value exceeds 64 bits");
    }
    return static_cast<u64>(x);
}

std::vector<Residue> phi_inv(u64 x, std::size_t t, Residue q) {
    std::vector<Residue> digits(t);
    for (auto& d : digits) {
        d = static_cast<Residue>(x % q);
        x /= q;
    }
    if (x != 0) throw std::out_of_range("phi_inv: value does not fit in the requested number of digits");
    return digits;
}

SpreadContext::SpreadContext(Residue q, std::size_t k, std::size_t m, std::optional<Poly> modulus)
    : k_(k), m_(m), field_(make_subfield(q, k, m, std::move(modulus))) {
    companion_ = companion_matrix(field_.modulus(), q);
    powers_.push_back(FqMatrix::identity(q, k_));
    for (std::size_t i = 1; i < k_; ++i) powers_.push_back(powers_.back() * companion_);

    const u128 block = ipow(q, static_cast<unsigned>(k_));
    u128 sum = 0, term = 1;
    prefix_.push_back(0);
    for (std::size_t j = 0; j < m_; ++j) {
        sum += term;
        if (sum > ~u64{0}) throw std::invalid_argument("spread too large: message count exceeds 64 bits");
        prefix_.push_back(static_cast<u64>(sum));
        if (j + 1 < m_) term *= block;
    }
    message_count_ = prefix_.back();
}

ProjPoint normalize(const ProjPoint& point, const SpreadContext& ctx) {
    check_point_shape(point, ctx);
    const FieldContext& f = ctx.field();
    for (const auto& c : point.coords) {
        if (c.is_zero()) continue;
        const FieldElem scale = f.inv(c);
        ProjPoint out;
        out.coords.reserve(point.coords.size());
        for (const auto& x : point.coords) out.coords.push_back(f.mul(x, scale));
        return out;
    }
    throw std::domain_error("the zero vector is not a projective point");
}

bool is_normalized(const ProjPoint& point, const SpreadContext& ctx) {
    check_point_shape(point, ctx);
    for (const auto& c : point.coords) {
        if (!c.is_zero()) return c == ctx.field().one();
    }
    return false;
}

ProjPoint point_from_vector(std::span<const Residue> v, const SpreadContext& ctx) {
    if (v.size() != ctx.n()) throw std::invalid_argument("vector length must be n = k*m");
    ProjPoint point;
    point.coords.reserve(ctx.m());
    for (std::size_t l = 0; l < ctx.m(); ++l) point.coords.push_back(ctx.field().from_coeffs(v.subspan(l * ctx.k(), ctx.k())));
    return normalize(point, ctx);
}

Subspace enc1(const ProjPoint& point, const SpreadContext& ctx) {
    check_point_shape(point, ctx);
    const std::size_t k = ctx.k();
    const Residue q = ctx.q();
    FqMatrix lifted(q, k, ctx.n());
    bool nonzero = false;
    for (std::size_t l = 0; l < ctx.m(); ++l) {
        const auto& coeffs = point.coords[l].coeffs;
        for (std::size_t i = 0; i < k; ++i) {
            if (coeffs[i] == 0) continue;
            nonzero = true;
            const FqMatrix& pw = ctx.companion_power(i);
            for (std::size_t r = 0; r < k; ++r) {
                for (std::size_t c = 0; c < k; ++c) {
                    Residue& slot = lifted(r, l * k + c);
                    slot = detail::add_res(slot, detail::mul_res(coeffs[i], pw(r, c), q), q);
                }
            }
        }
    }
    if (!nonzero) throw std::domain_error("enc1: the zero vector is not a projective point");
    return Subspace::from_rows(lifted);
}

ProjPoint dec1(const Subspace& codeword, const SpreadContext& ctx) {
    if (codeword.dim() != ctx.k() || codeword.ambient() != ctx.n() || codeword.characteristic() != ctx.q())
        throw std::invalid_argument("dec1: codeword does not live in G_q(k, n) of this spread");
    return point_from_vector(codeword.basis().row(0), ctx);
}

ProjPoint f_index(u64 i, const SpreadContext& ctx) {
    if (i < 1 || i > ctx.message_count())
        throw std::out_of_range("message " + std::to_string(i) + " outside 1.." + std::to_string(ctx.message_count()));
    const std::size_t m = ctx.m();
    std::size_t y = 1;
    while (ctx.prefix_count(y) < i) ++y;
    const std::size_t leading_zeros = m - y;
    const std::size_t tail = y - 1;
    const std::vector<Residue> digits = phi_inv(i - ctx.prefix_count(y - 1) - 1, tail * ctx.k(), ctx.q());

    ProjPoint point;
    point.coords.reserve(m);
    for (std::size_t l = 0; l < leading_zeros; ++l) point.coords.push_back(ctx.field().zero());
    point.coords.push_back(ctx.field().one());
    for (std::size_t l = 0; l < tail; ++l) {
        point.coords.push_back(ctx.field().from_coeffs(std::span(digits).subspan(l * ctx.k(), ctx.k())));
    }
    return point;
}

u64 f_index_inv(const ProjPoint& point, const SpreadContext& ctx) {
    if (!is_normalized(point, ctx)) throw std::invalid_argument("f_index_inv: point is not normalized");
    std::size_t leading_zeros = 0;
    while (point.coords[leading_zeros].is_zero()) ++leading_zeros;
    const std::size_t tail = ctx.m() - leading_zeros - 1;
    std::vector<Residue> digits;
    digits.reserve(tail * ctx.k());
    for (std::size_t l = leading_zeros + 1; l < ctx.m(); ++l) {
        const auto& c = point.coords[l].coeffs;
        digits.insert(digits.end(), c.begin(), c.end());
    }
    return ctx.prefix_count(tail) + phi(digits, ctx.q()) + 1;
}

Subspace enc2(u64 i, const SpreadContext& ctx) { return enc1(f_index(i, ctx), ctx); }

u64 dec2(const Subspace& codeword, const SpreadContext& ctx) { return f_index_inv(dec1(codeword, ctx), ctx); }

SubspaceCode enumerate_spread(const SpreadContext& ctx) {
    std::vector<Subspace> codewords;
    codewords.reserve(ctx.message_count());
    for (u64 i = 1; i <= ctx.message_count(); ++i) codewords.push_back(enc2(i, ctx));
    return SubspaceCode(std::move(codewords), "desarguesian");
}

std::string format_point(const ProjPoint& point) {
    std::string out;
    for (std::size_t l = 0; l < point.coords.size(); ++l) {
        if (l) out += ',';
        for (Residue c : point.coords[l].coeffs) {
            if (c > 9) throw std::invalid_argument("format_point: digit strings need q <= 10");
            out += static_cast<char>('0' + c);
        }
    }
    return out;
}

ProjPoint parse_point(const std::string& text, const SpreadContext& ctx) {
    ProjPoint point;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.size() != ctx.k()) throw std::invalid_argument("point coordinate must have k digits: '" + item + "'");
        std::vector<Residue> coeffs;
        for (char ch : item) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("point coordinate must be digits: '" + item + "'");
            coeffs.push_back(static_cast<Residue>(ch - '0'));
        }
        point.coords.push_back(ctx.field().from_coeffs(coeffs));
    }
    check_point_shape(point, ctx);
    return point;
}

}  // namespace spreadcodec
