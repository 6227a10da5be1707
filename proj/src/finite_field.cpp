#include "spreadcodec/finite_field.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "residue_ops.hpp"

namespace spreadcodec {

namespace {

using detail::add_res;
using detail::mul_res;
using detail::sub_res;

Poly monic(Poly f, Residue p) {
    poly_trim(f);
    if (f.empty()) return f;
    const Residue lead_inv = mod_inverse(f.back(), p);
    for (auto& c : f) c = mul_res(c, lead_inv, p);
    return f;
}

Poly poly_sub(Poly a, const Poly& b, Residue p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub_res(a[i], b[i], p);
    poly_trim(a);
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, Residue p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add_res(out[i + j], mul_res(a[i], b[j], p), p);
    }
    poly_trim(out);
    return out;
}

const Poly kX = {0, 1};

}  // namespace

int poly_degree(const Poly& f) {
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i] != 0) return static_cast<int>(i);
    }
    return -1;
}

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Residue mod_inverse(Residue a, Residue p) {
    if (a % p == 0) throw std::domain_error("zero has no inverse mod p");
    return static_cast<Residue>(pow_mod(a, p - 2, p));
}

Poly poly_mod(Poly a, const Poly& modulus, Residue p) {
    const int dm = poly_degree(modulus);
    if (dm < 0) throw std::invalid_argument("poly_mod: zero modulus");
    poly_trim(a);
    const Residue lead_inv = mod_inverse(modulus[dm], p);
    for (int i = poly_degree(a); i >= dm; --i) {
        const Residue c = mul_res(a[i], lead_inv, p);
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) a[i - dm + j] = sub_res(a[i - dm + j], mul_res(c, modulus[j], p), p);
    }
    poly_trim(a);
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus, Residue p) {
    return poly_mod(poly_mul(a, b, p), modulus, p);
}

Poly poly_powmod(const Poly& base, u128 exponent, const Poly& modulus, Residue p) {
    Poly result = poly_mod(Poly{1}, modulus, p);
    Poly b = poly_mod(base, modulus, p);
    while (exponent > 0) {
        if (exponent & 1) result = poly_mulmod(result, b, modulus, p);
        b = poly_mulmod(b, b, modulus, p);
        exponent >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, Residue p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a), p);
}

bool is_irreducible(const Poly& f_in, Residue p) {
    const Poly f = monic(f_in, p);
    const int n = poly_degree(f);
    if (n < 1) return false;
    if (n == 1) return true;

    // frobenius[j] = x^(p^j) mod f
    std::vector<Poly> frobenius(n + 1);
    frobenius[0] = poly_mod(kX, f, p);
    for (int j = 1; j <= n; ++j) frobenius[j] = poly_powmod(frobenius[j - 1], p, f, p);
    if (frobenius[n] != frobenius[0]) return false;

    for (const auto& [r, _] : factorize(static_cast<u128>(n))) {
        const Poly diff = poly_sub(frobenius[n / static_cast<int>(r)], frobenius[0], p);
        if (poly_degree(poly_gcd(f, diff, p)) != 0) return false;
    }
    return true;
}

bool is_primitive(const Poly& f_in, Residue p) {
    if (!is_irreducible(f_in, p)) return false;
    const Poly f = monic(f_in, p);
    const unsigned e = static_cast<unsigned>(poly_degree(f));
    const Poly x = poly_mod(kX, f, p);
    if (x.empty()) return false;
    const u128 order = ipow(p, e) - 1;
    for (const auto& [r, _] : factorize(order)) {
        if (poly_powmod(x, order / r, f, p) == Poly{1}) return false;
    }
    return true;
}

Poly find_irreducible(Residue p, unsigned e, bool require_primitive) {
    if (!is_prime(p)) throw std::invalid_argument("find_irreducible: characteristic must be prime");
    if (e < 1) throw std::invalid_argument("find_irreducible: degree must be at least 1");
    Poly candidate(e + 1, 0);
    candidate[e] = 1;
    while (true) {
        if (require_primitive ? is_primitive(candidate, p) : is_irreducible(candidate, p)) return candidate;
        unsigned i = 0;
        while (i < e && ++candidate[i] == p) candidate[i++] = 0;
        if (i == e) throw std::logic_error("find_irreducible: search space exhausted");
    }
}

std::string format_poly(const Poly& f) {
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f[i]);
    }
    return out;
}

Poly parse_poly(const std::string& text, Residue p) {
    Poly f;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const u128 c = parse_u128(item);
        if (c >= p) throw std::invalid_argument("polynomial coefficient out of range: " + item);
        f.push_back(static_cast<Residue>(c));
    }
    if (f.empty()) throw std::invalid_argument("empty polynomial");
    return f;
}

bool FieldElem::is_zero() const {
    for (Residue c : coeffs) {
        if (c) return false;
    }
    return true;
}

FieldContext::FieldContext(Residue p, Poly modulus) : p_(p), modulus_(std::move(modulus)) {
    if (p_ >= (1u << 31) || !is_prime(p_)) throw std::invalid_argument("field characteristic must be a prime below 2^31");
    for (Residue c : modulus_) {
        if (c >= p_) throw std::invalid_argument("modulus coefficient out of range");
    }
    poly_trim(modulus_);
    const int deg = poly_degree(modulus_);
    if (deg < 1 || modulus_.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
    e_ = static_cast<unsigned>(deg);
    if (!is_irreducible(modulus_, p_)) throw std::invalid_argument("modulus " + format_poly(modulus_) + " is reducible");

    const u128 size = ipow(p_, e_);
    if (size > ((u128)1 << 64)) throw std::invalid_argument("field too large: p^e must not exceed 2^64");
    group_order_ = static_cast<u64>(size - 1);
    factors_ = factorize(group_order_);

    const FieldElem x = generator();
    primitive_ = !x.is_zero();
    for (const auto& [r, _] : factors_) {
        if (primitive_ && pow_unchecked(x, group_order_ / r) == one()) primitive_ = false;
    }
}

FieldContext FieldContext::standard(Residue p, unsigned e) {
    return FieldContext(p, find_irreducible(p, e, true));
}

FieldElem FieldContext::zero() const { return FieldElem{std::vector<Residue>(e_, 0)}; }

FieldElem FieldContext::one() const { return constant(1); }

FieldElem FieldContext::constant(Residue c) const {
    FieldElem out = zero();
    out.coeffs[0] = c % p_;
    return out;
}

FieldElem FieldContext::generator() const {
    FieldElem out = zero();
    if (e_ == 1)
        out.coeffs[0] = sub_res(0, modulus_[0], p_);
    else
        out.coeffs[1] = 1;
    return out;
}

FieldElem FieldContext::from_coeffs(std::span<const Residue> coeffs) const {
    FieldElem out{std::vector<Residue>(coeffs.begin(), coeffs.end())};
    check(out);
    return out;
}

void FieldContext::check(const FieldElem& a) const {
    if (a.coeffs.size() != e_) throw std::invalid_argument("field element does not belong to this context (length)");
    for (Residue c : a.coeffs) {
        if (c >= p_) throw std::invalid_argument("field element does not belong to this context (coefficient)");
    }
}

FieldElem FieldContext::add(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    FieldElem out = a;
    for (unsigned i = 0; i < e_; ++i) out.coeffs[i] = add_res(a.coeffs[i], b.coeffs[i], p_);
    return out;
}

FieldElem FieldContext::sub(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    FieldElem out = a;
    for (unsigned i = 0; i < e_; ++i) out.coeffs[i] = sub_res(a.coeffs[i], b.coeffs[i], p_);
    return out;
}

FieldElem FieldContext::neg(const FieldElem& a) const { return sub(zero(), a); }

FieldElem FieldContext::mul_unchecked(const FieldElem& a, const FieldElem& b) const {
    std::vector<u64> prod(2 * e_ - 1, 0);
    // Sums of up to 2e products of residues fit in 64 bits for all but huge p;
    // then one reduction per coefficient suffices.
    const bool lazy = static_cast<u128>(p_ - 1) * (p_ - 1) * (2 * e_) < (u128{1} << 64);
    const auto reduce = [&](u64& x) {
        if (!lazy) x %= p_;
    };
    for (unsigned i = 0; i < e_; ++i) {
        const u64 ai = a.coeffs[i];
        if (ai == 0) continue;
        for (unsigned j = 0; j < e_; ++j) {
            prod[i + j] += ai * b.coeffs[j];
            reduce(prod[i + j]);
        }
    }
    // x^e = -(m_0 + ... + m_{e-1} x^{e-1})
    for (unsigned i = 2 * e_ - 1; i-- > e_;) {
        const u64 c = prod[i] % p_;
        if (c == 0) continue;
        for (unsigned j = 0; j < e_; ++j) {
            prod[i - e_ + j] += c * (p_ - modulus_[j]);
            reduce(prod[i - e_ + j]);
        }
    }
    FieldElem out;
    out.coeffs.resize(e_);
    for (unsigned i = 0; i < e_; ++i) out.coeffs[i] = static_cast<Residue>(prod[i] % p_);
    return out;
}

FieldElem FieldContext::mul(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    return mul_unchecked(a, b);
}

FieldElem FieldContext::inv(const FieldElem& a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("zero has no multiplicative inverse");
    // Extended Euclid: track s with s * a = r (mod modulus).
    Poly r0 = modulus_, r1 = a.coeffs;
    poly_trim(r1);
    Poly s0, s1{1};
    while (poly_degree(r1) > 0) {
        Poly q;
        Poly rem = r0;
        const int d1 = poly_degree(r1);
        const Residue lead_inv = mod_inverse(r1[d1], p_);
        q.assign(std::max(0, poly_degree(rem) - d1) + 1, 0);
        for (int i = poly_degree(rem); i >= d1; --i) {
            const Residue c = mul_res(rem[i], lead_inv, p_);
            q[i - d1] = c;
            for (int j = 0; j <= d1; ++j) rem[i - d1 + j] = sub_res(rem[i - d1 + j], mul_res(c, r1[j], p_), p_);
        }
        poly_trim(rem);
        poly_trim(q);
        Poly s2 = poly_sub(s0, poly_mul(q, s1, p_), p_);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    const Residue c = mod_inverse(r1[0], p_);
    FieldElem out = zero();
    const Poly s = poly_mod(s1, modulus_, p_);
    for (std::size_t i = 0; i < s.size(); ++i) out.coeffs[i] = mul_res(s[i], c, p_);
    return out;
}

FieldElem FieldContext::div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

FieldElem FieldContext::pow_unchecked(FieldElem a, u128 exponent) const {
    FieldElem result = one();
    while (exponent > 0) {
        if (exponent & 1) result = mul_unchecked(result, a);
        exponent >>= 1;
        if (exponent) a = mul_unchecked(a, a);
    }
    return result;
}

FieldElem FieldContext::pow(const FieldElem& a, u128 exponent) const {
    check(a);
    return pow_unchecked(a, exponent);
}

u64 FieldContext::element_order(const FieldElem& a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("zero has no multiplicative order");
    const FieldElem unit = one();
    u64 t = group_order_;
    for (const auto& [prime, exponent] : factors_) {
        const u64 r = static_cast<u64>(prime);
        for (unsigned i = 0; i < exponent; ++i) t /= r;
        FieldElem x = pow_unchecked(a, t);
        while (x != unit) {
            x = pow_unchecked(x, r);
            t *= r;
        }
    }
    return t;
}

FieldElem FieldContext::evaluate(const Poly& f, const FieldElem& at) const {
    check(at);
    FieldElem acc = zero();
    for (std::size_t i = f.size(); i-- > 0;) {
        acc = mul_unchecked(acc, at);
        acc.coeffs[0] = add_res(acc.coeffs[0], f[i] % p_, p_);
    }
    return acc;
}

u64 FieldContext::to_index(const FieldElem& a) const {
    check(a);
    u64 index = 0;
    for (unsigned i = e_; i-- > 0;) index = index * p_ + a.coeffs[i];
    return index;
}

FieldElem FieldContext::from_index(u64 index) const {
    if (static_cast<u128>(index) > group_order_) throw std::out_of_range("field element index out of range");
    FieldElem out = zero();
    for (unsigned i = 0; i < e_; ++i) {
        out.coeffs[i] = static_cast<Residue>(index % p_);
        index /= p_;
    }
    return out;
}

namespace {

// Inverse of a modulo m for coprime a, m < 2^64.
u128 inverse_mod(u128 a, u128 m) {
    __int128 old_r = static_cast<__int128>(a), r = static_cast<__int128>(m);
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    __int128 inv = old_s % static_cast<__int128>(m);
    if (inv < 0) inv += static_cast<__int128>(m);
    return static_cast<u128>(inv);
}

}  // namespace

DiscreteLog::DiscreteLog(const FieldContext& ctx, const FieldElem& g) : ctx_(ctx), g_(g) {
    ctx_.check(g_);
    order_ = ctx_.element_order(g_);
    for (const PrimePower& factor : ctx_.group_order_factors()) {
        Component c;
        c.r = static_cast<u64>(factor.prime);
        u64 rest = order_;
        while (rest % c.r == 0) {
            rest /= c.r;
            ++c.a;
        }
        if (c.a == 0) continue;
        c.ra = static_cast<u64>(ipow(c.r, c.a));
        c.g_inv = ctx_.inv(ctx_.pow(g_, order_ / c.ra));

        c.m = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(c.r))));
        if (c.m > (u64{1} << 26)) throw std::runtime_error("discrete_log: prime factor too large for baby-step giant-step");
        const FieldElem gamma = ctx_.pow(g_, order_ / c.r);
        c.baby.reserve(c.m);
        FieldElem step = ctx_.one();
        for (u64 j = 0; j < c.m; ++j) {
            c.baby.emplace(ctx_.to_index(step), j);
            step = ctx_.mul(step, gamma);
        }
        c.giant = ctx_.inv(step);
        parts_.push_back(std::move(c));
    }
}

std::optional<u64> DiscreteLog::subgroup_log(const Component& c, const FieldElem& target) const {
    FieldElem y = target;
    for (u64 i = 0; i <= c.m; ++i) {
        if (auto it = c.baby.find(ctx_.to_index(y)); it != c.baby.end()) {
            const u128 d = static_cast<u128>(i) * c.m + it->second;
            return static_cast<u64>(d % c.r);
        }
        y = ctx_.mul(y, c.giant);
    }
    return std::nullopt;
}

u64 DiscreteLog::operator()(const FieldElem& h) const {
    ctx_.check(h);
    if (h.is_zero()) throw std::domain_error("discrete_log: zero is not a power of any element");

    u128 x = 0;
    u128 modulus = 1;
    for (const Component& c : parts_) {
        // Work inside the subgroup of order r^a: solve (g^(N/r^a))^x_c = h^(N/r^a) digit by digit.
        const FieldElem h_c = ctx_.pow(h, order_ / c.ra);
        u64 x_c = 0;
        u64 r_power = 1;
        for (unsigned j = 0; j < c.a; ++j) {
            const FieldElem shifted = ctx_.mul(ctx_.pow(c.g_inv, x_c), h_c);
            const FieldElem target = ctx_.pow(shifted, c.ra / (r_power * c.r));
            const auto d = subgroup_log(c, target);
            if (!d) throw std::domain_error("discrete_log: element is not in the subgroup generated by g");
            x_c += *d * r_power;
            r_power *= c.r;
        }

        // CRT: extend x (mod modulus) to also satisfy x = x_c (mod r^a).
        const u128 diff = (static_cast<u128>(x_c) + c.ra - x % c.ra) % c.ra;
        const u128 t = mul_mod(diff, inverse_mod(modulus % c.ra, c.ra), c.ra);
        x += modulus * t;
        modulus *= c.ra;
    }

    const u64 result = static_cast<u64>(x % order_);
    if (ctx_.pow(g_, result) != h) throw std::domain_error("discrete_log: element is not in the subgroup generated by g");
    return result;
}

u64 discrete_log(const FieldElem& g, const FieldElem& h, const FieldContext& ctx) { return DiscreteLog(ctx, g)(h); }

}  // namespace spreadcodec
