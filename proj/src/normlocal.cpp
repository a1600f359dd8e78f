#include "ambiguous/normlocal.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "ambiguous/arith.hpp"

namespace ambiguous {

std::string_view to_string(CycleKind kind)
{
    return kind == CycleKind::Ordinary ? "ordinary" : "narrow";
}

CycleKind parse_cycle_kind(std::string_view text)
{
    if (text == "ordinary") {
        return CycleKind::Ordinary;
    }
    if (text == "narrow") {
        return CycleKind::Narrow;
    }
    throw ValidationError("unknown cycle '" + std::string(text) + "'");
}

CycleChoice CycleChoice::make(CycleKind requested, const FundamentalDiscriminant& d)
{
    const bool nonsplit = d.infinite_behavior() == InfiniteBehavior::NonSplit;
    // With no real places on K the only stable real cycle is the empty one.
    const CycleKind kind = nonsplit ? CycleKind::Ordinary : requested;
    const bool restriction = kind == CycleKind::Narrow;
    return CycleChoice(kind, requested, restriction, nonsplit);
}

namespace {

std::int64_t parse_int(std::string_view s)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ValidationError("not an integer: '" + std::string(s) + "'");
    }
    return v;
}

// Integer Hilbert symbol; bilinearity handles rationals.
int hilbert_int(std::int64_t a, std::int64_t b, std::uint64_t p)
{
    if (p == 0) {
        return (a < 0 && b < 0) ? -1 : 1;
    }
    const auto [alpha, u] = split_valuation(a, p);
    const auto [beta, v] = split_valuation(b, p);
    if (p == 2) {
        // (-1)^(eps(u) eps(v) + alpha omega(v) + beta omega(u))
        auto eps = [](std::int64_t x) { return static_cast<int>(mod_floor(x, 4) == 3); };
        auto omega = [](std::int64_t x) {
            const std::int64_t r = mod_floor(x, 8);
            return static_cast<int>(r == 3 || r == 5);
        };
        const int e = eps(u) * eps(v) + static_cast<int>(alpha % 2) * omega(v) +
                      static_cast<int>(beta % 2) * omega(u);
        return e % 2 == 0 ? 1 : -1;
    }
    const auto sp = static_cast<std::int64_t>(p);
    int result = 1;
    // (-1)^(alpha beta (p-1)/2)
    if ((alpha * beta) % 2 == 1 && mod_floor(sp, 4) == 3) {
        result = -result;
    }
    if (beta % 2 == 1) {
        result *= kronecker(u, sp);
    }
    if (alpha % 2 == 1) {
        result *= kronecker(v, sp);
    }
    return result;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (num == 0 || den == 0) {
        throw ValidationError("rational must be nonzero with nonzero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::parse(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_int(text));
    }
    return Rational(parse_int(std::string_view(text).substr(0, slash)),
                    parse_int(std::string_view(text).substr(slash + 1)));
}

Place Place::prime(std::uint64_t p)
{
    if (!is_prime(p)) {
        throw ValidationError(std::to_string(p) + " is not a prime place");
    }
    return Place(p);
}

Place Place::parse(const std::string& text)
{
    if (text == "inf" || text == "infinity" || text == "oo") {
        return infinity();
    }
    const std::int64_t p = parse_int(text);
    if (p <= 0) {
        throw ValidationError(text + " is not a prime place");
    }
    return prime(static_cast<std::uint64_t>(p));
}

std::string Place::to_string() const
{
    return is_infinite() ? std::string("inf") : std::to_string(p_);
}

int hilbert_symbol(std::int64_t a, std::int64_t b, Place v)
{
    if (a == 0 || b == 0) {
        throw ValidationError("hilbert symbol of zero");
    }
    return hilbert_int(a, b, v.prime_value());
}

int hilbert_symbol(const Rational& a, const Rational& b, Place v)
{
    // a = n/d is n*d up to the square d^2.
    const std::uint64_t p = v.prime_value();
    return hilbert_int(a.num(), b.num(), p) * hilbert_int(a.num(), b.den(), p) *
           hilbert_int(a.den(), b.num(), p) * hilbert_int(a.den(), b.den(), p);
}

std::vector<Place> relevant_places(const Rational& a, const Rational& b)
{
    std::set<std::uint64_t> primes{2};
    for (std::int64_t n : {a.num(), a.den(), b.num(), b.den()}) {
        for (std::uint64_t p : factorize(n).primes()) {
            primes.insert(p);
        }
    }
    std::vector<Place> out{Place::infinity()};
    for (std::uint64_t p : primes) {
        out.push_back(Place::prime(p));
    }
    return out;
}

bool is_local_norm(const Rational& q, const FundamentalDiscriminant& d, Place v)
{
    return hilbert_symbol(q, Rational(d.value()), v) == 1;
}

bool is_global_norm(const Rational& q, const FundamentalDiscriminant& d)
{
    // Away from these places both entries are units at an odd prime.
    const auto places = relevant_places(q, Rational(d.value()));
    return std::all_of(places.begin(), places.end(),
                       [&](Place v) { return is_local_norm(q, d, v); });
}

UnitNormIndexResult unit_norm_index(const FundamentalDiscriminant& d, const CycleChoice& cycle)
{
    const bool minus_one = is_global_norm(Rational(-1), d);
    if (cycle.base_cycle_has_infinity()) {
        return {1, 1, minus_one};
    }
    return {2, minus_one ? 1U : 2U, minus_one};
}

std::uint64_t local_norm_index_product(const FundamentalDiscriminant& d)
{
    std::uint64_t product = 1;
    for (std::uint64_t p : d.ramified_primes()) {
        product *= d.ramification_index(p);
    }
    return product;
}

}  // namespace ambiguous
