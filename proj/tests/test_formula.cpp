#include <doctest.h>

#include "ambiguous/formula.hpp"
#include "oracle.hpp"

using namespace ambiguous;

namespace {

FundamentalDiscriminant disc(std::int64_t d) { return FundamentalDiscriminant::make(d); }
CycleChoice cycle(CycleKind k, std::int64_t d) { return CycleChoice::make(k, disc(d)); }

}  // namespace

TEST_CASE("base_class_number")
{
    CHECK(base_class_number(cycle(CycleKind::Ordinary, 12)) == 1);   // empty base cycle
    CHECK(base_class_number(cycle(CycleKind::Ordinary, -23)) == 1);  // {inf}
    CHECK(base_class_number(cycle(CycleKind::Narrow, 12)) == 1);
}

TEST_CASE("rhs_ambiguous_number")
{
    CHECK(rhs_ambiguous_number(disc(-420), cycle(CycleKind::Ordinary, -420)) == 8);
    CHECK(rhs_ambiguous_number(disc(12), cycle(CycleKind::Narrow, 12)) == 2);
    CHECK(rhs_ambiguous_number(disc(12), cycle(CycleKind::Ordinary, 12)) == 1);
    CHECK(rhs_ambiguous_number(disc(40), cycle(CycleKind::Ordinary, 40)) == 2);

    SUBCASE("genus count 2^(t-1), or 2^(t-2) when -1 is not a norm")
    {
        for (std::int64_t d = -3000; d <= 3000; ++d) {
            if (!FundamentalDiscriminant::is_fundamental(d)) {
                continue;
            }
            const auto fd = disc(d);
            const std::uint64_t full = 1ULL << (fd.ramified_count() - 1);
            REQUIRE(rhs_ambiguous_number(fd, cycle(CycleKind::Narrow, d)) == full);
            const bool halved = d > 0 && !is_global_norm(Rational(-1), fd);
            REQUIRE(rhs_ambiguous_number(fd, cycle(CycleKind::Ordinary, d)) ==
                    (halved ? full / 2 : full));
        }
    }
}

TEST_CASE("norm_group_order")
{
    CHECK(norm_group_order(disc(-23), cycle(CycleKind::Ordinary, -23)) == 1);
    CHECK(norm_group_order(disc(8), cycle(CycleKind::Ordinary, 8)) == 1);
    CHECK(norm_group_order(disc(-4), cycle(CycleKind::Ordinary, -4)) == 1);
    CHECK(norm_group_order(disc(-420), cycle(CycleKind::Ordinary, -420)) == 8);
}

TEST_CASE("remark_decomposition_check")
{
    // h(-39) = 4, cyclic, per the oracle.
    CHECK(oracle::structure(oracle::orders(oracle::group(-39))) == std::vector<std::uint64_t>{4});

    const auto r23 = remark_decomposition_check(disc(-23), cycle(CycleKind::Ordinary, -23));
    CHECK(r23.applicable);
    CHECK(r23.holds == true);
    const auto r420 = remark_decomposition_check(disc(-420), cycle(CycleKind::Ordinary, -420));
    CHECK(r420.applicable);
    CHECK(r420.holds == true);
    const auto r39 = remark_decomposition_check(disc(-39), cycle(CycleKind::Ordinary, -39));
    CHECK_FALSE(r39.applicable);
    CHECK_FALSE(r39.holds.has_value());
}

TEST_CASE("verify")
{
    const auto r20 = verify(disc(-20), CycleKind::Ordinary);
    CHECK(r20.lhs_ambiguous == 2);
    CHECK(r20.rhs_formula == 2);
    CHECK(r20.norm_group_order == 2);
    CHECK(r20.match);
    CHECK_FALSE(r20.unit_norm_sign.has_value());

    const auto r5 = verify(disc(5), CycleKind::Narrow);
    CHECK(r5.lhs_ambiguous == 1);
    CHECK(r5.rhs_formula == 1);
    CHECK(r5.match);
    CHECK(r5.unit_norm_sign == -1);

    const auto r60 = verify(disc(60), CycleKind::Narrow);
    CHECK(r60.ramification_product == 8);
    CHECK(r60.lhs_ambiguous == 4);
    CHECK(r60.rhs_formula == 4);
    CHECK(r60.match);

    const auto r40 = verify(disc(40), CycleKind::Ordinary);
    CHECK(r40.lhs_ambiguous == 2);
    CHECK(r40.unit_index == 1);

    const auto narrow_neg = verify(disc(-23), CycleKind::Narrow);
    CHECK(narrow_neg.cycle.kind() == CycleKind::Ordinary);
    CHECK(narrow_neg.cycle.normalized());
    CHECK(narrow_neg.class_number == 3);
    CHECK(narrow_neg.lhs_ambiguous == 1);

    CHECK_THROWS_AS(verify(disc(-1000003), CycleKind::Ordinary, 1000000), BoundExceeded);

    SUBCASE("report invariants over a range")
    {
        for (std::int64_t d = -2000; d <= 2000; ++d) {
            if (!FundamentalDiscriminant::is_fundamental(d)) {
                continue;
            }
            for (CycleKind k : {CycleKind::Ordinary, CycleKind::Narrow}) {
                const auto r = verify(disc(d), k);
                REQUIRE(r.rhs_formula * r.degree * r.unit_index ==
                        r.base_class_number * r.ramification_product);
                REQUIRE(r.match == (r.lhs_ambiguous == r.rhs_formula &&
                                    r.lhs_ambiguous == r.norm_group_order));
                REQUIRE(r.match);
                REQUIRE(r.lhs_ambiguous * r.one_minus_sigma_order == r.class_number);
                if (r.remark.applicable) {
                    REQUIRE(r.remark.holds == true);
                }
            }
        }
    }
}
