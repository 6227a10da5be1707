#include "spreadcodec/number_theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace spreadcodec {

namespace {

constexpr u128 kU64Limit = (u128)1 << 64;

u128 add_mod(u128 a, u128 b, u128 mod) {
    return a >= mod - b ? a - (mod - b) : a + b;
}

u128 pollard_brent(u128 n, u128 c) {
    auto step = [&](u128 x) { return add_mod(mul_mod(x, x, n), c, n); };
    u128 y = 2, g = 1, r = 1, q = 1, x = 0, ys = 0;
    constexpr u128 batch = 128;
    while (g == 1) {
        x = y;
        for (u128 i = 0; i < r; ++i) y = step(y);
        u128 k = 0;
        while (k < r && g == 1) {
            ys = y;
            const u128 limit = std::min(batch, r - k);
            for (u128 i = 0; i < limit; ++i) {
                y = step(y);
                q = mul_mod(q, x > y ? x - y : y - x, n);
            }
            g = gcd(q, n);
            k += batch;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = step(ys);
            g = gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void split(u128 n, std::vector<u128>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    for (u128 c = 1;; ++c) {
        const u128 d = pollard_brent(n, c);
        if (d != n && d != 1) {
            split(d, primes);
            split(n / d, primes);
            return;
        }
    }
}

}  // namespace

std::string to_string(u128 value) {
    if (value == 0) return "0";
    std::string out;
    while (value > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

u128 parse_u128(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer");
    u128 value = 0;
    const u128 max = ~(u128)0;
    for (char ch : text) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("not a non-negative integer: '" + text + "'");
        const unsigned digit = static_cast<unsigned>(ch - '0');
        if (value > (max - digit) / 10) throw std::invalid_argument("integer too large: '" + text + "'");
        value = value * 10 + digit;
    }
    return value;
}

u128 mul_mod(u128 a, u128 b, u128 mod) {
    a %= mod;
    b %= mod;
    if (a < kU64Limit && b < kU64Limit) return (a * b) % mod;
    u128 result = 0;
    while (b > 0) {
        if (b & 1) result = add_mod(result, a, mod);
        a = add_mod(a, a, mod);
        b >>= 1;
    }
    return result;
}

u128 pow_mod(u128 base, u128 exponent, u128 mod) {
    if (mod == 1) return 0;
    u128 result = 1;
    base %= mod;
    while (exponent > 0) {
        if (exponent & 1) result = mul_mod(result, base, mod);
        base = mul_mod(base, base, mod);
        exponent >>= 1;
    }
    return result;
}

u128 gcd(u128 a, u128 b) {
    while (b != 0) {
        const u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 ipow(u128 base, unsigned exponent) {
    u128 result = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        if (base != 0 && result > (~(u128)0) / base) throw std::overflow_error("integer power exceeds 128 bits");
        result *= base;
    }
    return result;
}

bool is_prime(u128 n) {
    static constexpr unsigned kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
    if (n < 2) return false;
    for (unsigned b : kBases) {
        if (n % b == 0) return n == b;
    }
    u128 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (unsigned b : kBases) {
        u128 x = pow_mod(b, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Factorization factorize(u128 n) {
    if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
    std::vector<u128> primes;
    for (u128 d = 2; d < (1u << 16) && d * d <= n; d += (d == 2 ? 1 : 2)) {
        while (n % d == 0) {
            primes.push_back(d);
            n /= d;
        }
    }
    split(n, primes);
    std::sort(primes.begin(), primes.end());

    Factorization out;
    for (u128 p : primes) {
        if (!out.empty() && out.back().prime == p)
            ++out.back().exponent;
        else
            out.push_back({p, 1});
    }
    return out;
}

u128 recompose(const Factorization& factors) {
    u128 value = 1;
    for (const auto& [prime, exponent] : factors) value *= ipow(prime, exponent);
    return value;
}

std::vector<u128> divisors(const Factorization& factors) {
    std::vector<u128> out{1};
    for (const auto& [prime, exponent] : factors) {
        const std::size_t base = out.size();
        u128 power = 1;
        for (unsigned e = 1; e <= exponent; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_factorization(const Factorization& factors) {
    if (factors.empty()) return "1";
    std::string out;
    for (const auto& [prime, exponent] : factors) {
        if (!out.empty()) out += "·";
        out += to_string(prime) + "^" + std::to_string(exponent);
    }
    return out;
}

}  // namespace spreadcodec
