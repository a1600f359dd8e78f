#include "ambiguous/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace ambiguous {

std::int64_t checked_narrow(int128 v, const char* what)
{
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error(std::string(what) + " exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (static_cast<uint128>(r) * r > n) {
        --r;
    }
    while (static_cast<uint128>(r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t b)
{
    std::int64_t r = a % b;
    if (r < 0) {
        r += (b < 0 ? -b : b);
    }
    return r;
}

Bezout xgcd(std::int64_t a, std::int64_t b)
{
    std::int64_t old_r = a, r = b;
    std::int64_t old_x = 1, x = 0;
    std::int64_t old_y = 0, y = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_x - q * x;
        old_x = x;
        x = t;
        t = old_y - q * y;
        old_y = y;
        y = t;
    }
    if (old_r < 0) {
        return {-old_r, -old_x, -old_y};
    }
    return {old_r, old_x, old_y};
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool miller_rabin_round(std::uint64_t n, std::uint64_t d, unsigned r, std::uint64_t a)
{
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (unsigned i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

// Brent's variant of Pollard rho; n must be odd and composite.
std::uint64_t rho_split(std::uint64_t n)
{
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        const std::uint64_t m = 128;
        std::uint64_t r = 1;
        auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) {
                y = f(y);
            }
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& out)
{
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = rho_split(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    static constexpr std::array<std::uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13,
                                                               17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : kWitnesses) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // The first twelve primes are a deterministic witness set below 3.3e24.
    for (std::uint64_t a : kWitnesses) {
        if (!miller_rabin_round(n, d, r, a)) {
            return false;
        }
    }
    return true;
}

Factorization::Factorization(std::int64_t value, int sign, std::vector<PrimePower> factors)
    : value_(value), sign_(sign), factors_(std::move(factors))
{
}

std::int64_t Factorization::product() const
{
    int128 acc = sign_;
    for (const auto& [p, e] : factors_) {
        for (unsigned i = 0; i < e; ++i) {
            acc *= p;
        }
    }
    return checked_narrow(acc, "factorization product");
}

std::vector<std::uint64_t> Factorization::primes() const
{
    std::vector<std::uint64_t> out;
    out.reserve(factors_.size());
    for (const auto& pp : factors_) {
        out.push_back(pp.prime);
    }
    return out;
}

bool Factorization::squarefree() const
{
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
}

Factorization factorize(std::int64_t n)
{
    if (n == 0) {
        throw std::invalid_argument("factorize: zero has no factorization");
    }
    const int sign = n < 0 ? -1 : 1;
    std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(n)
                            : static_cast<std::uint64_t>(n);

    std::map<std::uint64_t, unsigned> found;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
        while (m % p == 0) {
            ++found[p];
            m /= p;
        }
    }
    // Wheel mod 30 trial division; whatever survives goes to rho.
    static constexpr std::array<std::uint64_t, 8> kWheel{4, 2, 4, 2, 4, 6, 2, 6};
    constexpr std::uint64_t kTrialLimit = 1 << 16;
    std::uint64_t p = 7;
    for (std::size_t i = 0; p <= kTrialLimit && p * p <= m; p += kWheel[i++ % kWheel.size()]) {
        while (m % p == 0) {
            ++found[p];
            m /= p;
        }
    }
    factor_into(m, found);

    std::vector<PrimePower> factors;
    factors.reserve(found.size());
    for (const auto& [prime, exp] : found) {
        factors.push_back({prime, exp});
    }
    return Factorization(n, sign, std::move(factors));
}

int kronecker(std::int64_t a_in, std::int64_t n_in)
{
    // Work in 128 bits so negating INT64_MIN is harmless.
    int128 a = a_in;
    int128 b = n_in;
    if (b == 0) {
        return (a == 1 || a == -1) ? 1 : 0;
    }
    if (a % 2 == 0 && b % 2 == 0) {
        return 0;
    }
    static constexpr int kTab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    int k = 1;
    while (b % 2 == 0) {
        b /= 2;
        int am8 = static_cast<int>(((a % 8) + 8) % 8);
        k *= kTab2[am8];
    }
    if (b < 0) {
        b = -b;
        if (a < 0) {
            k = -k;
        }
    }
    // b is odd and positive: Jacobi symbol loop.
    a %= b;
    if (a < 0) {
        a += b;
    }
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            int bm8 = static_cast<int>(b % 8);
            if (bm8 == 3 || bm8 == 5) {
                k = -k;
            }
        }
        std::swap(a, b);
        if (a % 4 == 3 && b % 4 == 3) {
            k = -k;
        }
        a %= b;
    }
    return b == 1 ? k : 0;
}

Valuation split_valuation(std::int64_t n, std::uint64_t p)
{
    if (n == 0) {
        throw std::invalid_argument("split_valuation: zero");
    }
    const auto sp = static_cast<std::int64_t>(p);
    unsigned e = 0;
    while (n % sp == 0) {
        n /= sp;
        ++e;
    }
    return {e, n};
}

bool is_squarefree(std::int64_t n)
{
    return factorize(n).squarefree();
}

}  // namespace ambiguous
