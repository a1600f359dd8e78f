#pragma once

// Both sides of the ambiguous class number formula for K = Q(sqrt D)/Q:
//
//   #Cl(K, c~)^G = #Cl(Q, c) * prod_v e(v) / ([K:Q] * [o(c)^x : o(c)^x  cap  N(K^x)])
//
// The left side is counted directly in the form class group; the right side
// only uses ramification and the Hilbert-symbol decision of whether -1 is a
// norm. The norm class group order is reported separately as
// #Cl(Q, c, O) / [K:Q].

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "ambiguous/cycle.hpp"
#include "ambiguous/normlocal.hpp"
#include "ambiguous/quadform.hpp"

namespace ambiguous {

inline constexpr unsigned kExtensionDegree = 2;

/// Raised when an identity that must hold exactly is violated.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

struct RemarkCheck {
    bool applicable = false;
    /// Set only when applicable.
    std::optional<bool> holds;
};

struct ChevalleyReport {
    std::int64_t discriminant = 0;
    unsigned ramified_count = 0;
    CycleChoice cycle;
    std::uint64_t class_number = 0;  // #Cl(K, c~)
    std::uint64_t lhs_ambiguous = 0;
    std::uint64_t rhs_formula = 0;
    std::uint64_t norm_group_order = 0;
    std::uint64_t base_class_number = 0;
    std::uint64_t ramification_product = 0;
    unsigned unit_index = 0;
    unsigned degree = kExtensionDegree;
    std::optional<int> unit_norm_sign;  // empty for D < 0
    std::uint64_t one_minus_sigma_order = 0;
    RemarkCheck remark;
    bool match = false;
};

/// #Cl(Q, c). Always 1: h(Q) = 1, and for c = {inf} the elementary count
/// h * 2^1 / [{+-1} : {+1}] is again 1.
std::uint64_t base_class_number(const CycleChoice& cycle);

std::uint64_t rhs_ambiguous_number(const FundamentalDiscriminant& d, const CycleChoice& cycle);
std::uint64_t norm_group_order(const FundamentalDiscriminant& d, const CycleChoice& cycle);

RemarkCheck remark_decomposition_check(const CycleClassGroup& g);
RemarkCheck remark_decomposition_check(const FundamentalDiscriminant& d, const CycleChoice& cycle);

ChevalleyReport verify(const FormClassGroup& narrow, const CycleChoice& cycle);
ChevalleyReport verify(const FundamentalDiscriminant& d, CycleKind kind,
                       std::int64_t bound = kDefaultDiscriminantBound);

}  // namespace ambiguous
