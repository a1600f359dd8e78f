// ambiguous: verify the ambiguous class number formula for quadratic fields.
//
//   ambiguous verify --min -1000 --max 1000 --cycle both --format jsonl
//   ambiguous classgroup -- -23
//   ambiguous hilbert -- -1 -1 all
//   ambiguous pell 40
//
// Exit codes: 0 success, 1 usage or I/O error, 2 verification mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ambiguous/formula.hpp"
#include "ambiguous/normlocal.hpp"
#include "ambiguous/pell.hpp"
#include "ambiguous/quadform.hpp"
#include "ambiguous/sweep.hpp"

namespace {

using namespace ambiguous;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

ordered_json forms_json(const std::vector<QuadraticForm>& forms)
{
    ordered_json arr = ordered_json::array();
    for (const auto& f : forms) {
        arr.push_back({f.a, f.b, f.c});
    }
    return arr;
}

ordered_json group_json(const FormClassGroup& narrow, const CycleChoice& cycle)
{
    const CycleClassGroup group(narrow, cycle.kind());
    std::vector<QuadraticForm> reps;
    for (ClassIndex x : group.elements()) {
        reps.push_back(narrow.representative(x));
    }
    std::vector<QuadraticForm> fixed;
    for (ClassIndex x : group.ambiguous_classes()) {
        fixed.push_back(narrow.representative(x));
    }
    const auto report = verify(narrow, cycle);

    ordered_json j;
    j["cycle"] = std::string(to_string(cycle.kind()));
    j["h"] = group.size();
    j["elementary_divisors"] = group_structure(group);
    j["classes"] = forms_json(reps);
    j["ambiguous"] = forms_json(fixed);
    j["one_minus_sigma_order"] = report.one_minus_sigma_order;
    j["rhs"] = report.rhs_formula;
    j["match"] = report.match;
    return j;
}

int run_verify(SweepConfig config)
{
    validate(config);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (config.output_path) {
        file.open(*config.output_path);
        if (!file) {
            std::cerr << "error: cannot open " << *config.output_path << " for writing\n";
            return kExitUsage;
        }
        out = &file;
    }
    const SweepSummary summary = run_sweep(config, *out);
    out->flush();
    if (!*out) {
        std::cerr << "error: failed writing records\n";
        return kExitUsage;
    }
    std::cerr << summary.to_string() << '\n';
    return summary.all_match() ? kExitOk : kExitMismatch;
}

int run_classgroup(std::int64_t d_value, CycleSelection selection, std::int64_t bound)
{
    const auto d = FundamentalDiscriminant::make(d_value);
    const auto narrow = FormClassGroup::narrow(d, bound);
    ordered_json j;
    j["D"] = d.value();
    j["t"] = d.ramified_count();
    j["ramified_primes"] = d.ramified_primes();
    if (d.real()) {
        j["eps_norm"] = fundamental_unit_norm(d);
    } else {
        j["eps_norm"] = nullptr;
    }
    j["groups"] = ordered_json::array();
    bool all_match = true;
    for (const auto& cycle : cycles_for(d, selection)) {
        auto g = group_json(narrow, cycle);
        all_match = all_match && g["match"].get<bool>();
        j["groups"].push_back(std::move(g));
    }
    std::cout << j.dump(2) << '\n';
    return all_match ? kExitOk : kExitMismatch;
}

int run_hilbert(const std::string& a_text, const std::string& b_text,
                const std::string& place_text)
{
    const auto a = Rational::parse(a_text);
    const auto b = Rational::parse(b_text);
    if (place_text != "all") {
        const auto v = Place::parse(place_text);
        std::cout << "(" << a_text << ", " << b_text << ")_" << v.to_string() << " = "
                  << hilbert_symbol(a, b, v) << '\n';
        return kExitOk;
    }
    int product = 1;
    for (const auto& v : relevant_places(a, b)) {
        const int s = hilbert_symbol(a, b, v);
        product *= s;
        std::cout << "(" << a_text << ", " << b_text << ")_" << v.to_string() << " = " << s
                  << '\n';
    }
    std::cout << "product = " << product << '\n';
    return kExitOk;
}

int run_pell(std::int64_t d_value)
{
    const auto d = FundamentalDiscriminant::make(d_value);
    const auto cf = surd_expansion(d);
    ordered_json j;
    j["D"] = d.value();
    j["preperiod"] = cf.preperiod;
    j["period"] = cf.period;
    j["period_length"] = cf.period_length();
    j["eps_norm"] = fundamental_unit_norm(d);
    j["minus_one_is_norm"] = is_global_norm(Rational(-1), d);
    std::cout << j.dump() << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Verify the ambiguous class number formula for quadratic fields"};
    app.require_subcommand(1);

    SweepConfig config;
    std::string cycle_text = "both";
    std::string format_text = "jsonl";
    std::string out_path;
    bool allow_large = false;
    auto* verify_cmd = app.add_subcommand("verify", "Sweep a discriminant range");
    verify_cmd->add_option("--min", config.min_d, "Smallest D")->required();
    verify_cmd->add_option("--max", config.max_d, "Largest D")->required();
    verify_cmd->add_option("--cycle", cycle_text, "ordinary|narrow|both");
    verify_cmd->add_option("--format", format_text, "jsonl|csv");
    verify_cmd->add_option("--out", out_path, "Write records to PATH instead of stdout");
    verify_cmd->add_option("--jobs", config.jobs, "Worker threads");
    verify_cmd->add_flag("--fail-fast", config.fail_fast, "Stop after the first mismatch");
    verify_cmd->add_flag("--allow-large", allow_large,
                         "Lift the default |D| <= 10^6 bound (slow)");

    std::int64_t class_d = 0;
    std::string class_cycle = "both";
    bool class_large = false;
    auto* class_cmd = app.add_subcommand("classgroup", "Class group of one discriminant");
    class_cmd->add_option("D", class_d, "Fundamental discriminant")->required();
    class_cmd->add_option("--cycle", class_cycle, "ordinary|narrow|both");
    class_cmd->add_flag("--allow-large", class_large, "Lift the default |D| bound");

    std::string ha, hb, hplace;
    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert symbol (a, b)_v");
    hilbert_cmd->add_option("a", ha, "Nonzero rational a")->required();
    hilbert_cmd->add_option("b", hb, "Nonzero rational b")->required();
    hilbert_cmd->add_option("place", hplace, "prime, inf, or all")->required();

    std::int64_t pell_d = 0;
    auto* pell_cmd = app.add_subcommand("pell", "Continued fraction and unit norm");
    pell_cmd->add_option("D", pell_d, "Positive fundamental discriminant")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify_cmd) {
            config.cycles = parse_cycle_selection(cycle_text);
            config.format = parse_output_format(format_text);
            if (!out_path.empty()) {
                config.output_path = out_path;
            }
            if (allow_large) {
                config.bound = kMaxDiscriminant;
            }
            return run_verify(config);
        }
        if (*class_cmd) {
            return run_classgroup(class_d, parse_cycle_selection(class_cycle),
                                  class_large ? kMaxDiscriminant : kDefaultDiscriminantBound);
        }
        if (*hilbert_cmd) {
            return run_hilbert(ha, hb, hplace);
        }
        if (*pell_cmd) {
            return run_pell(pell_d);
        }
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
