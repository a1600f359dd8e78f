#pragma once

#include <cstdint>
#include <vector>

#include "ambiguous/quadform.hpp"

namespace ambiguous {

/// Continued fraction of omega_D, the generator of the maximal order:
/// sqrt(D/4) when D = 0 mod 4, (1 + sqrt D)/2 when D = 1 mod 4.
struct SurdExpansion {
    std::int64_t discriminant = 0;
    std::vector<std::int64_t> preperiod;
    std::vector<std::int64_t> period;

    std::size_t period_length() const { return period.size(); }
};

/// Exact expansion via the (P, Q) recurrence; the period is minimal.
/// Throws ValidationError unless D > 0 is fundamental.
SurdExpansion surd_expansion(const FundamentalDiscriminant& d);
SurdExpansion surd_expansion(std::int64_t d);

/// Norm of the fundamental unit: -1 exactly when the period is odd.
int fundamental_unit_norm(const FundamentalDiscriminant& d);
int fundamental_unit_norm(std::int64_t d);

}  // namespace ambiguous
