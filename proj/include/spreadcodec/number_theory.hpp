#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spreadcodec {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct PrimePower {
    u128 prime;
    unsigned exponent;

    bool operator==(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

std::string to_string(u128 value);

/// Parses a non-negative base-10 integer; throws std::invalid_argument on junk or overflow.
u128 parse_u128(const std::string& text);

u128 mul_mod(u128 a, u128 b, u128 mod);
u128 pow_mod(u128 base, u128 exponent, u128 mod);
u128 gcd(u128 a, u128 b);

/// Checked integer power; throws std::overflow_error if the result exceeds 128 bits.
u128 ipow(u128 base, unsigned exponent);

/// Deterministic Miller-Rabin. Exact for all inputs below 3.3e24 and
/// overwhelmingly reliable (first 20 prime bases) above.
bool is_prime(u128 n);

/// Exact prime factorization, primes ascending. factorize(1) is empty.
/// Trial division up to 2^16, then Pollard rho (Brent) on the cofactor.
Factorization factorize(u128 n);

u128 recompose(const Factorization& factors);

/// All positive divisors of the factored number, ascending.
std::vector<u128> divisors(const Factorization& factors);

/// "p^e" terms joined by a middle dot, e.g. "3^2·7^1". Empty product prints as "1".
std::string format_factorization(const Factorization& factors);

}  // namespace spreadcodec
