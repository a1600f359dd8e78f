#pragma once

// Local and global norm questions for K = Q(sqrt D) over Q. A rational q is
// a norm from K exactly when it is a local norm at every place (the Hasse
// norm theorem for cyclic extensions), and q is a local norm at v exactly
// when the Hilbert symbol (q, D)_v is +1.

#include <cstdint>
#include <string>
#include <vector>

#include "ambiguous/cycle.hpp"
#include "ambiguous/quadform.hpp"

namespace ambiguous {

/// Nonzero rational with positive denominator, kept in lowest terms.
class Rational {
public:
    Rational(std::int64_t num, std::int64_t den = 1);
    /// Parses "n" or "n/d".
    static Rational parse(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool operator==(const Rational&) const = default;

private:
    std::int64_t num_;
    std::int64_t den_;
};

/// A place of Q: a prime p or the real place.
class Place {
public:
    static Place infinity() { return Place(0); }
    /// Throws ValidationError when p is not prime.
    static Place prime(std::uint64_t p);
    /// Parses "inf" or a prime.
    static Place parse(const std::string& text);

    bool is_infinite() const { return p_ == 0; }
    std::uint64_t prime_value() const { return p_; }
    std::string to_string() const;

    auto operator<=>(const Place&) const = default;

private:
    explicit Place(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;  // 0 encodes the real place
};

/// (a, b)_v in {+1, -1}.
int hilbert_symbol(std::int64_t a, std::int64_t b, Place v);
int hilbert_symbol(const Rational& a, const Rational& b, Place v);

/// The places where (a, b)_v can differ from +1: infinity, 2, and the odd
/// primes dividing a numerator or denominator. Sorted, infinity first.
std::vector<Place> relevant_places(const Rational& a, const Rational& b);

bool is_local_norm(const Rational& q, const FundamentalDiscriminant& d, Place v);
bool is_global_norm(const Rational& q, const FundamentalDiscriminant& d);

struct UnitNormIndexResult {
    /// #(units of Q positive at the base cycle): 2 for {+1,-1}, 1 for {+1}.
    unsigned base_unit_group_order;
    unsigned index;
    bool minus_one_is_global_norm;
};

UnitNormIndexResult unit_norm_index(const FundamentalDiscriminant& d, const CycleChoice& cycle);

/// prod over finite places of e(v), i.e. 2^t.
std::uint64_t local_norm_index_product(const FundamentalDiscriminant& d);

}  // namespace ambiguous
