#pragma once

// Batch verification over a discriminant range, and the record format the
// CLI writes. Records are emitted in (D, cycle) order whatever the number of
// workers.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ambiguous/formula.hpp"

namespace ambiguous {

enum class CycleSelection { Ordinary, Narrow, Both };
enum class OutputFormat { JsonLines, Csv };

CycleSelection parse_cycle_selection(const std::string& text);
OutputFormat parse_output_format(const std::string& text);

struct SweepConfig {
    std::int64_t min_d = -100;
    std::int64_t max_d = 100;
    CycleSelection cycles = CycleSelection::Both;
    OutputFormat format = OutputFormat::JsonLines;
    std::optional<std::string> output_path;
    unsigned jobs = 1;
    bool fail_fast = false;
    std::int64_t bound = kDefaultDiscriminantBound;
};

/// Throws ValidationError for an empty range or zero jobs, BoundExceeded
/// when the range leaves [-bound, bound].
void validate(const SweepConfig& config);

/// One output line. Null fields are n/a: eps_norm for D < 0, remark_holds
/// when the remark does not apply.
struct SweepRecord {
    std::int64_t d = 0;
    unsigned t = 0;
    std::string cycle;
    std::uint64_t h = 0;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    std::uint64_t norm_group_order = 0;
    unsigned unit_index = 0;
    std::optional<int> eps_norm;
    bool remark_applicable = false;
    std::optional<bool> remark_holds;
    bool match = false;

    bool operator==(const SweepRecord&) const = default;
};

SweepRecord to_record(const ChevalleyReport& report);

nlohmann::ordered_json to_json(const SweepRecord& record);
/// Throws ValidationError when the object does not follow the record schema.
SweepRecord record_from_json(const nlohmann::json& j);

const std::vector<std::string>& record_columns();
std::string csv_header();
std::string to_csv(const SweepRecord& record);
SweepRecord record_from_csv(const std::string& line);

struct SweepSummary {
    std::uint64_t verified = 0;
    std::uint64_t mismatched = 0;
    std::uint64_t skipped = 0;
    std::uint64_t remark_applicable = 0;
    std::uint64_t remark_failed = 0;
    bool stopped_early = false;

    bool all_match() const { return mismatched == 0 && remark_failed == 0; }
    std::string to_string() const;
};

/// The distinct cycles to verify for one discriminant (Narrow collapses into
/// Ordinary when D < 0).
std::vector<CycleChoice> cycles_for(const FundamentalDiscriminant& d, CycleSelection selection);

/// Reports for one discriminant, in cycle order.
std::vector<ChevalleyReport> verify_discriminant(const FundamentalDiscriminant& d,
                                                 CycleSelection selection,
                                                 std::int64_t bound);

/// Run the sweep and write records to `out` (ignores config.output_path).
SweepSummary run_sweep(const SweepConfig& config, std::ostream& out);

}  // namespace ambiguous
