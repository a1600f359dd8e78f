#pragma once

#include <cstdint>
#include <string_view>

namespace ambiguous {

class FundamentalDiscriminant;

/// The Galois-stable real cycle on K = Q(sqrt D).
///   Ordinary: the empty cycle, giving the usual class group.
///   Narrow:   every real place of K, giving the narrow class group.
enum class CycleKind { Ordinary, Narrow };

std::string_view to_string(CycleKind kind);
CycleKind parse_cycle_kind(std::string_view text);

/// A cycle on K together with the cycle it induces on Q.
///
/// The induced cycle is the restriction of the chosen cycle, joined with the
/// real place of Q whenever that place does not split in K (D < 0). Only the
/// real place of Q can appear, so the induced cycle is either empty or {inf}.
/// K has no real places when D < 0, so both kinds collapse there and a Narrow
/// request is normalized to Ordinary.
class CycleChoice {
public:
    static CycleChoice make(CycleKind requested, const FundamentalDiscriminant& d);

    CycleKind kind() const { return kind_; }
    CycleKind requested() const { return requested_; }
    bool normalized() const { return kind_ != requested_; }

    /// Restriction to Q of the cycle on K.
    bool restriction_has_infinity() const { return restriction_has_infinity_; }
    /// The real place of Q fails to split in K.
    bool infinity_nonsplit() const { return infinity_nonsplit_; }
    /// Whether the induced base cycle on Q contains the real place.
    bool base_cycle_has_infinity() const
    {
        return restriction_has_infinity_ || infinity_nonsplit_;
    }

    bool operator==(const CycleChoice&) const = default;

private:
    CycleChoice(CycleKind kind, CycleKind requested, bool restriction, bool nonsplit)
        : kind_(kind), requested_(requested), restriction_has_infinity_(restriction),
          infinity_nonsplit_(nonsplit)
    {
    }

    CycleKind kind_;
    CycleKind requested_;
    bool restriction_has_infinity_;
    bool infinity_nonsplit_;
};

}  // namespace ambiguous
