#pragma once

// Exact integer kernels shared by every other module: primality,
// factorization, Kronecker symbols and the checked 128-bit helpers used
// wherever a product of two 64-bit values can appear.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ambiguous {

__extension__ typedef __int128 int128;
__extension__ typedef unsigned __int128 uint128;

/// Narrow a 128-bit intermediate back to 64 bits, throwing on overflow.
std::int64_t checked_narrow(int128 v, const char* what = "integer");

/// floor(sqrt(n)) for n >= 0.
std::uint64_t isqrt(std::uint64_t n);

/// Floor division and the matching nonnegative remainder for b != 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t b);

/// Extended gcd: returns g = gcd(a, b) >= 0 with x*a + y*b = g.
struct Bezout {
    std::int64_t g;
    std::int64_t x;
    std::int64_t y;
};
Bezout xgcd(std::int64_t a, std::int64_t b);

bool is_prime(std::uint64_t n);

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    bool operator==(const PrimePower&) const = default;
};

class Factorization {
public:
    Factorization(std::int64_t value, int sign, std::vector<PrimePower> factors);

    std::int64_t value() const { return value_; }
    int sign() const { return sign_; }
    const std::vector<PrimePower>& factors() const& { return factors_; }
    std::vector<PrimePower> factors() && { return std::move(factors_); }

    /// Multiply the factorization back out; equals value().
    std::int64_t product() const;

    std::vector<std::uint64_t> primes() const;
    bool squarefree() const;

private:
    std::int64_t value_;
    int sign_;
    std::vector<PrimePower> factors_;
};

/// Factor a nonzero integer. Throws std::invalid_argument on 0.
Factorization factorize(std::int64_t n);

/// Kronecker symbol (a|n), including n <= 0 and even n.
int kronecker(std::int64_t a, std::int64_t n);

/// p-adic valuation of a nonzero integer, and the cofactor with p removed.
struct Valuation {
    unsigned exponent;
    std::int64_t unit;
};
Valuation split_valuation(std::int64_t n, std::uint64_t p);

bool is_squarefree(std::int64_t n);

}  // namespace ambiguous
