#include "ambiguous/pell.hpp"

#include <map>
#include <utility>

#include "ambiguous/arith.hpp"

namespace ambiguous {

SurdExpansion surd_expansion(const FundamentalDiscriminant& disc)
{
    const std::int64_t d = disc.value();
    if (d <= 0) {
        throw ValidationError("surd expansion needs a positive discriminant, got " +
                              std::to_string(d));
    }
    // omega = (P + sqrt(radicand)) / Q with Q | radicand - P^2.
    std::int64_t radicand = d;
    std::int64_t p = 1;
    std::int64_t q = 2;
    if (d % 4 == 0) {
        radicand = d / 4;
        p = 0;
        q = 1;
    }
    const auto root = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(radicand)));

    std::vector<std::int64_t> quotients;
    std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> seen;
    for (;;) {
        auto [it, inserted] = seen.emplace(std::make_pair(p, q), quotients.size());
        if (!inserted) {
            SurdExpansion out;
            out.discriminant = d;
            const auto start = static_cast<std::ptrdiff_t>(it->second);
            out.preperiod.assign(quotients.begin(), quotients.begin() + start);
            out.period.assign(quotients.begin() + start, quotients.end());
            return out;
        }
        // Q > 0 throughout, so floor((P + sqrt r)/Q) = floor((P + isqrt r)/Q).
        const std::int64_t a = floor_div(p + root, q);
        quotients.push_back(a);
        p = a * q - p;
        q = checked_narrow((static_cast<int128>(radicand) - static_cast<int128>(p) * p) / q,
                           "continued fraction denominator");
    }
}

SurdExpansion surd_expansion(std::int64_t d)
{
    return surd_expansion(FundamentalDiscriminant::make(d));
}

int fundamental_unit_norm(const FundamentalDiscriminant& d)
{
    return surd_expansion(d).period_length() % 2 == 1 ? -1 : 1;
}

int fundamental_unit_norm(std::int64_t d)
{
    return fundamental_unit_norm(FundamentalDiscriminant::make(d));
}

}  // namespace ambiguous
