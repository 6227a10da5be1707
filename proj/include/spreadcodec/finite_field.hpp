#pragma once

// Prime fields F_p and extension fields F_{p^e} in polynomial basis.
//
// Polynomials over F_p are coefficient vectors, lowest degree first. Field
// elements are residues modulo a monic irreducible modulus of degree e, so a
// FieldElem always carries exactly e coefficients.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "spreadcodec/number_theory.hpp"

namespace spreadcodec {

using Residue = std::uint32_t;
using Poly = std::vector<Residue>;

/// Degree of a polynomial; -1 for the zero polynomial.
int poly_degree(const Poly& f);

/// Drops leading zero coefficients.
void poly_trim(Poly& f);

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus, Residue p);
Poly poly_mod(Poly a, const Poly& modulus, Residue p);
Poly poly_powmod(const Poly& base, u128 exponent, const Poly& modulus, Residue p);
Poly poly_gcd(Poly a, Poly b, Residue p);

/// Rabin's test: x^(p^e) = x mod f and gcd(x^(p^(e/r)) - x, f) = 1 for every prime r | e.
bool is_irreducible(const Poly& f, Residue p);

/// Irreducible, and the residue of x has multiplicative order p^e - 1.
bool is_primitive(const Poly& f, Residue p);

/// Smallest monic irreducible (or primitive) polynomial of degree e. Candidates
/// are scanned as base-p counters over the lower coefficients with the
/// constant term as least significant digit, so x^4 + x + 1 precedes x^4 + x^3 + 1.
Poly find_irreducible(Residue p, unsigned e, bool require_primitive);

/// "1,1,1" for x^2 + x + 1.
std::string format_poly(const Poly& f);
Poly parse_poly(const std::string& text, Residue p);

Residue mod_inverse(Residue a, Residue p);

struct FieldElem {
    std::vector<Residue> coeffs;

    bool is_zero() const;
    bool operator==(const FieldElem&) const = default;
};

class FieldContext {
public:
    /// Validates that p is prime and modulus is monic irreducible over F_p with p^e <= 2^64.
    FieldContext(Residue p, Poly modulus);

    /// F_{p^e} over the smallest primitive modulus.
    static FieldContext standard(Residue p, unsigned e);

    Residue characteristic() const { return p_; }
    unsigned degree() const { return e_; }
    const Poly& modulus() const { return modulus_; }
    bool primitive() const { return primitive_; }
    u64 group_order() const { return group_order_; }
    const Factorization& group_order_factors() const { return factors_; }

    FieldElem zero() const;
    FieldElem one() const;
    /// Residue class of x; a generator of the multiplicative group when primitive().
    FieldElem generator() const;
    FieldElem constant(Residue c) const;
    FieldElem from_coeffs(std::span<const Residue> coeffs) const;

    /// Throws std::invalid_argument if a does not belong to this field.
    void check(const FieldElem& a) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem div(const FieldElem& a, const FieldElem& b) const;
    FieldElem pow(const FieldElem& a, u128 exponent) const;

    /// Least t > 0 with a^t = 1, walked down from the group order's factorization.
    u64 element_order(const FieldElem& a) const;

    FieldElem evaluate(const Poly& f, const FieldElem& at) const;

    /// Base-p integer with the constant coefficient least significant.
    u64 to_index(const FieldElem& a) const;
    FieldElem from_index(u64 index) const;

    bool operator==(const FieldContext& other) const {
        return p_ == other.p_ && modulus_ == other.modulus_;
    }

private:
    FieldElem mul_unchecked(const FieldElem& a, const FieldElem& b) const;
    FieldElem pow_unchecked(FieldElem a, u128 exponent) const;

    Residue p_;
    unsigned e_;
    Poly modulus_;
    bool primitive_ = false;
    u64 group_order_ = 0;
    Factorization factors_;
};

/// Logarithms to a fixed base g, by Pohlig-Hellman over the prime factors of
/// ord(g) with baby-step giant-step in each prime-order subgroup. The tables
/// are built once, so repeated queries against one base are cheap.
class DiscreteLog {
public:
    /// Throws std::runtime_error when a prime factor of ord(g) exceeds 2^52.
    DiscreteLog(const FieldContext& ctx, const FieldElem& g);

    u64 base_order() const { return order_; }

    /// Unique i in [0, ord(g)) with g^i = h. Throws std::domain_error when
    /// h = 0 or h is not a power of g.
    u64 operator()(const FieldElem& h) const;

private:
    struct Component {
        u64 r = 0;         // prime
        unsigned a = 0;    // exponent in ord(g)
        u64 ra = 0;        // r^a
        FieldElem g_inv;   // (g^(N/r^a))^-1, order r^a
        FieldElem giant;   // gamma^-m, gamma = g^(N/r) of order r
        u64 m = 0;
        std::unordered_map<u64, u64> baby;  // index(gamma^j) -> j
    };

    std::optional<u64> subgroup_log(const Component& c, const FieldElem& target) const;

    FieldContext ctx_;
    FieldElem g_;
    u64 order_ = 0;
    std::vector<Component> parts_;
};

/// One-shot form of DiscreteLog.
u64 discrete_log(const FieldElem& g, const FieldElem& h, const FieldContext& ctx);

}  // namespace spreadcodec
