#include <doctest.h>

#include <sstream>

#include "ambiguous/sweep.hpp"

using namespace ambiguous;

namespace {

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST_CASE("config validation")
{
    SweepConfig c;
    c.min_d = 10;
    c.max_d = 5;
    CHECK_THROWS_AS(validate(c), ValidationError);
    c.min_d = -2000000;
    c.max_d = 5;
    CHECK_THROWS_AS(validate(c), BoundExceeded);
    c.bound = kMaxDiscriminant;
    CHECK_NOTHROW(validate(c));
    c = SweepConfig{};
    c.jobs = 0;
    CHECK_THROWS_AS(validate(c), ValidationError);
    CHECK(parse_cycle_selection("both") == CycleSelection::Both);
    CHECK_THROWS_AS(parse_cycle_selection("all"), ValidationError);
    CHECK(parse_output_format("csv") == OutputFormat::Csv);
    CHECK_THROWS_AS(parse_output_format("xml"), ValidationError);
}

TEST_CASE("cycles_for collapses narrow for imaginary fields")
{
    const auto neg = FundamentalDiscriminant::make(-23);
    const auto pos = FundamentalDiscriminant::make(12);
    CHECK(cycles_for(neg, CycleSelection::Both).size() == 1);
    CHECK(cycles_for(neg, CycleSelection::Narrow).front().kind() == CycleKind::Ordinary);
    CHECK(cycles_for(pos, CycleSelection::Both).size() == 2);
    CHECK(cycles_for(pos, CycleSelection::Narrow).front().kind() == CycleKind::Narrow);
}

TEST_CASE("sweeps")
{
    SUBCASE("negative range, ordinary")
    {
        SweepConfig c;
        c.min_d = -100;
        c.max_d = -3;
        c.cycles = CycleSelection::Ordinary;
        std::ostringstream out;
        const auto s = run_sweep(c, out);
        CHECK(s.all_match());
        CHECK(s.verified + s.skipped == 98);
        const auto lines = lines_of(out.str());
        CHECK(lines.size() == s.verified);
        std::int64_t prev = -101;
        for (const auto& line : lines) {
            const auto r = record_from_json(nlohmann::json::parse(line));
            CHECK(r.match);
            CHECK(r.d > prev);
            CHECK_FALSE(r.eps_norm.has_value());
            prev = r.d;
        }
    }
    SUBCASE("positive range, both cycles")
    {
        SweepConfig c;
        c.min_d = 5;
        c.max_d = 100;
        std::ostringstream out;
        const auto s = run_sweep(c, out);
        CHECK(s.all_match());
        const auto lines = lines_of(out.str());
        CHECK(lines.size() == s.verified);
        const auto first = record_from_json(nlohmann::json::parse(lines.at(0)));
        const auto second = record_from_json(nlohmann::json::parse(lines.at(1)));
        CHECK(first.d == 5);
        CHECK(first.cycle == "ordinary");
        CHECK(second.d == 5);
        CHECK(second.cycle == "narrow");
        CHECK(first.eps_norm == -1);
    }
    SUBCASE("output does not depend on the worker count")
    {
        SweepConfig c;
        c.min_d = -6000;
        c.max_d = 6000;
        std::ostringstream one, four;
        run_sweep(c, one);
        c.jobs = 4;
        run_sweep(c, four);
        CHECK(one.str() == four.str());
    }
    SUBCASE("csv layout")
    {
        SweepConfig c;
        c.min_d = -30;
        c.max_d = 30;
        c.format = OutputFormat::Csv;
        std::ostringstream out;
        const auto s = run_sweep(c, out);
        const auto lines = lines_of(out.str());
        REQUIRE(lines.size() == s.verified + 1);
        CHECK(lines[0] == "D,t,cycle,h,lhs,rhs,norm_group_order,unit_index,eps_norm,"
                          "remark_applicable,remark_holds,match");
        const auto r = record_from_csv(lines[1]);
        CHECK(r.d == -24);
        CHECK_FALSE(r.eps_norm.has_value());
    }
}

TEST_CASE("record schema")
{
    const auto reports = verify_discriminant(FundamentalDiscriminant::make(-39),
                                             CycleSelection::Both, kDefaultDiscriminantBound);
    REQUIRE(reports.size() == 1);
    const auto rec = to_record(reports.front());
    const auto j = to_json(rec);
    CHECK(j.dump() ==
          R"({"D":-39,"t":2,"cycle":"ordinary","h":4,"lhs":2,"rhs":2,"norm_group_order":2,)"
          R"("unit_index":1,"eps_norm":null,"remark_applicable":false,"remark_holds":null,"match":true})");

    // Round trips for every record in a mixed range, both encodings.
    for (const auto& r : verify_discriminant(FundamentalDiscriminant::make(136),
                                             CycleSelection::Both, kDefaultDiscriminantBound)) {
        const auto record = to_record(r);
        CHECK(record_from_json(nlohmann::json::parse(to_json(record).dump())) == record);
        CHECK(record_from_csv(to_csv(record)) == record);
    }
    CHECK(record_from_csv(to_csv(rec)) == rec);

    auto broken = nlohmann::json::parse(j.dump());
    broken.erase("lhs");
    CHECK_THROWS_AS(record_from_json(broken), ValidationError);
    broken = nlohmann::json::parse(j.dump());
    broken["cycle"] = "wide";
    CHECK_THROWS_AS(record_from_json(broken), ValidationError);
    broken = nlohmann::json::parse(j.dump());
    broken["h"] = "four";
    CHECK_THROWS_AS(record_from_json(broken), ValidationError);
    CHECK_THROWS_AS(record_from_csv("1,2,3"), ValidationError);
}
