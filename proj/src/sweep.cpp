#include "ambiguous/sweep.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace ambiguous {

namespace {

// Discriminants handed to the worker pool at a time; bounds memory use.
constexpr std::int64_t kBlockSize = 4096;

const std::vector<std::string> kColumns{"D",          "t",    "cycle",
                                        "h",          "lhs",  "rhs",
                                        "norm_group_order", "unit_index", "eps_norm",
                                        "remark_applicable", "remark_holds", "match"};

template <typename T>
T field(const nlohmann::json& j, const std::string& key)
{
    if (!j.contains(key)) {
        throw ValidationError("record is missing '" + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("record field '" + key + "': " + e.what());
    }
}

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

bool parse_bool(const std::string& s)
{
    if (s == "true") {
        return true;
    }
    if (s == "false") {
        return false;
    }
    throw ValidationError("expected true/false, got '" + s + "'");
}

}  // namespace

CycleSelection parse_cycle_selection(const std::string& text)
{
    if (text == "ordinary") {
        return CycleSelection::Ordinary;
    }
    if (text == "narrow") {
        return CycleSelection::Narrow;
    }
    if (text == "both") {
        return CycleSelection::Both;
    }
    throw ValidationError("unknown cycle selection '" + text + "'");
}

OutputFormat parse_output_format(const std::string& text)
{
    if (text == "jsonl" || text == "json-lines") {
        return OutputFormat::JsonLines;
    }
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    throw ValidationError("unknown output format '" + text + "'");
}

void validate(const SweepConfig& config)
{
    if (config.min_d > config.max_d) {
        throw ValidationError("--min must not exceed --max");
    }
    if (config.jobs == 0) {
        throw ValidationError("--jobs must be positive");
    }
    const std::int64_t widest = std::max(config.min_d < 0 ? -config.min_d : config.min_d,
                                         config.max_d < 0 ? -config.max_d : config.max_d);
    if (widest > config.bound) {
        throw BoundExceeded("range reaches |D| = " + std::to_string(widest) +
                            ", above the bound " + std::to_string(config.bound));
    }
}

SweepRecord to_record(const ChevalleyReport& report)
{
    SweepRecord r;
    r.d = report.discriminant;
    r.t = report.ramified_count;
    r.cycle = std::string(to_string(report.cycle.kind()));
    r.h = report.class_number;
    r.lhs = report.lhs_ambiguous;
    r.rhs = report.rhs_formula;
    r.norm_group_order = report.norm_group_order;
    r.unit_index = report.unit_index;
    r.eps_norm = report.unit_norm_sign;
    r.remark_applicable = report.remark.applicable;
    r.remark_holds = report.remark.holds;
    r.match = report.match;
    return r;
}

nlohmann::ordered_json to_json(const SweepRecord& r)
{
    nlohmann::ordered_json j;
    j["D"] = r.d;
    j["t"] = r.t;
    j["cycle"] = r.cycle;
    j["h"] = r.h;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["norm_group_order"] = r.norm_group_order;
    j["unit_index"] = r.unit_index;
    j["eps_norm"] = r.eps_norm ? nlohmann::ordered_json(*r.eps_norm) : nullptr;
    j["remark_applicable"] = r.remark_applicable;
    j["remark_holds"] = r.remark_holds ? nlohmann::ordered_json(*r.remark_holds) : nullptr;
    j["match"] = r.match;
    return j;
}

SweepRecord record_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || j.size() != kColumns.size()) {
        throw ValidationError("record must be an object with exactly " +
                              std::to_string(kColumns.size()) + " fields");
    }
    SweepRecord r;
    r.d = field<std::int64_t>(j, "D");
    r.t = field<unsigned>(j, "t");
    r.cycle = field<std::string>(j, "cycle");
    if (r.cycle != "ordinary" && r.cycle != "narrow") {
        throw ValidationError("record cycle must be ordinary or narrow");
    }
    r.h = field<std::uint64_t>(j, "h");
    r.lhs = field<std::uint64_t>(j, "lhs");
    r.rhs = field<std::uint64_t>(j, "rhs");
    r.norm_group_order = field<std::uint64_t>(j, "norm_group_order");
    r.unit_index = field<unsigned>(j, "unit_index");
    if (!j.at("eps_norm").is_null()) {
        r.eps_norm = field<int>(j, "eps_norm");
    }
    r.remark_applicable = field<bool>(j, "remark_applicable");
    if (!j.at("remark_holds").is_null()) {
        r.remark_holds = field<bool>(j, "remark_holds");
    }
    r.match = field<bool>(j, "match");
    return r;
}

const std::vector<std::string>& record_columns() { return kColumns; }

std::string csv_header()
{
    std::string out;
    for (std::size_t i = 0; i < kColumns.size(); ++i) {
        out += (i ? "," : "") + kColumns[i];
    }
    return out;
}

std::string to_csv(const SweepRecord& r)
{
    std::ostringstream os;
    os << r.d << ',' << r.t << ',' << r.cycle << ',' << r.h << ',' << r.lhs << ',' << r.rhs
       << ',' << r.norm_group_order << ',' << r.unit_index << ',';
    if (r.eps_norm) {
        os << *r.eps_norm;
    }
    os << ',' << bool_text(r.remark_applicable) << ',';
    if (r.remark_holds) {
        os << bool_text(*r.remark_holds);
    }
    os << ',' << bool_text(r.match);
    return os.str();
}

SweepRecord record_from_csv(const std::string& line)
{
    const auto cells = split_csv(line);
    if (cells.size() != kColumns.size()) {
        throw ValidationError("csv record needs " + std::to_string(kColumns.size()) +
                              " cells, got " + std::to_string(cells.size()));
    }
    try {
        SweepRecord r;
        r.d = std::stoll(cells[0]);
        r.t = static_cast<unsigned>(std::stoul(cells[1]));
        r.cycle = cells[2];
        r.h = std::stoull(cells[3]);
        r.lhs = std::stoull(cells[4]);
        r.rhs = std::stoull(cells[5]);
        r.norm_group_order = std::stoull(cells[6]);
        r.unit_index = static_cast<unsigned>(std::stoul(cells[7]));
        if (!cells[8].empty()) {
            r.eps_norm = std::stoi(cells[8]);
        }
        r.remark_applicable = parse_bool(cells[9]);
        if (!cells[10].empty()) {
            r.remark_holds = parse_bool(cells[10]);
        }
        r.match = parse_bool(cells[11]);
        return r;
    } catch (const std::logic_error& e) {
        throw ValidationError(std::string("csv record: ") + e.what());
    }
}

std::string SweepSummary::to_string() const
{
    std::ostringstream os;
    os << "summary: verified=" << verified << " mismatched=" << mismatched
       << " skipped=" << skipped << " remark_applicable=" << remark_applicable
       << " remark_failed=" << remark_failed;
    if (stopped_early) {
        os << " (stopped early)";
    }
    return os.str();
}

std::vector<CycleChoice> cycles_for(const FundamentalDiscriminant& d, CycleSelection selection)
{
    std::vector<CycleChoice> out;
    auto add = [&](CycleKind kind) {
        const auto choice = CycleChoice::make(kind, d);
        for (const auto& existing : out) {
            if (existing.kind() == choice.kind()) {
                return;
            }
        }
        out.push_back(choice);
    };
    if (selection != CycleSelection::Narrow) {
        add(CycleKind::Ordinary);
    }
    if (selection != CycleSelection::Ordinary) {
        add(CycleKind::Narrow);
    }
    return out;
}

std::vector<ChevalleyReport> verify_discriminant(const FundamentalDiscriminant& d,
                                                 CycleSelection selection,
                                                 std::int64_t bound)
{
    const auto narrow = FormClassGroup::narrow(d, bound);
    std::vector<ChevalleyReport> out;
    for (const auto& cycle : cycles_for(d, selection)) {
        out.push_back(verify(narrow, cycle));
    }
    return out;
}

SweepSummary run_sweep(const SweepConfig& config, std::ostream& out)
{
    validate(config);
    SweepSummary summary;
    if (config.format == OutputFormat::Csv) {
        out << csv_header() << '\n';
    }

    for (std::int64_t lo = config.min_d; lo <= config.max_d; lo += kBlockSize) {
        const std::int64_t hi = std::min(config.max_d, lo + kBlockSize - 1);
        std::vector<FundamentalDiscriminant> jobs;
        for (std::int64_t d = lo; d <= hi; ++d) {
            if (FundamentalDiscriminant::is_fundamental(d)) {
                jobs.push_back(FundamentalDiscriminant::make(d));
            } else {
                ++summary.skipped;
            }
        }

        std::vector<std::vector<ChevalleyReport>> results(jobs.size());
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (std::size_t i = next++; i < jobs.size(); i = next++) {
                try {
                    results[i] = verify_discriminant(jobs[i], config.cycles, config.bound);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                    next = jobs.size();
                }
            }
        };
        const unsigned workers =
            static_cast<unsigned>(std::min<std::size_t>(config.jobs, std::max<std::size_t>(1, jobs.size())));
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < workers; ++w) {
            pool.emplace_back(worker);
        }
        worker();
        for (auto& t : pool) {
            t.join();
        }
        if (failure) {
            std::rethrow_exception(failure);
        }

        for (const auto& reports : results) {
            for (const auto& report : reports) {
                const SweepRecord record = to_record(report);
                if (config.format == OutputFormat::Csv) {
                    out << to_csv(record) << '\n';
                } else {
                    out << to_json(record).dump() << '\n';
                }
                ++summary.verified;
                if (!report.match) {
                    ++summary.mismatched;
                }
                if (report.remark.applicable) {
                    ++summary.remark_applicable;
                    if (!report.remark.holds.value_or(false)) {
                        ++summary.remark_failed;
                    }
                }
            }
        }
        if (config.fail_fast && !summary.all_match()) {
            summary.stopped_early = hi < config.max_d;
            break;
        }
        if (hi == config.max_d) {
            break;
        }
    }
    return summary;
}

}  // namespace ambiguous
