#include "ambiguous/formula.hpp"

#include <algorithm>
#include <string>

#include "ambiguous/pell.hpp"

namespace ambiguous {

namespace {

std::uint64_t exact_quotient(std::uint64_t num, std::uint64_t den, const char* what)
{
    if (den == 0 || num % den != 0) {
        throw InternalInconsistency(std::string(what) + ": " + std::to_string(num) +
                                    " is not divisible by " + std::to_string(den));
    }
    return num / den;
}

}  // namespace

std::uint64_t base_class_number(const CycleChoice& cycle)
{
    constexpr std::uint64_t kClassNumberOfQ = 1;
    if (!cycle.base_cycle_has_infinity()) {
        return kClassNumberOfQ;
    }
    // h * 2^{#real places in c} / [o^x : o(c)^x] with o^x = {+-1}, o(c)^x = {+1}.
    return exact_quotient(kClassNumberOfQ * 2, 2, "base class number");
}

std::uint64_t rhs_ambiguous_number(const FundamentalDiscriminant& d, const CycleChoice& cycle)
{
    const std::uint64_t num = base_class_number(cycle) * local_norm_index_product(d);
    const std::uint64_t den = kExtensionDegree * unit_norm_index(d, cycle).index;
    return exact_quotient(num, den, "ambiguous class number formula");
}

std::uint64_t norm_group_order(const FundamentalDiscriminant& d, const CycleChoice& cycle)
{
    // #Cl(Q, c, O) = #Cl(Q, c) * #(o^x / N(O^x)) / #(o(c)^x / (o(c)^x cap N(O^x)))
    const std::uint64_t relative = exact_quotient(
        base_class_number(cycle) * local_norm_index_product(d), unit_norm_index(d, cycle).index,
        "relative class group order");
    return exact_quotient(relative, kExtensionDegree, "norm class group order");
}

RemarkCheck remark_decomposition_check(const CycleClassGroup& g)
{
    const auto image = g.one_minus_sigma_image();
    RemarkCheck out;
    out.applicable = image.size() % 2 == 1;
    if (!out.applicable) {
        return out;
    }
    // Squaring maps the image of 1 - sigma bijectively onto itself.
    std::vector<ClassIndex> squared;
    squared.reserve(image.size());
    for (ClassIndex x : image) {
        squared.push_back(g.square(x));
    }
    std::sort(squared.begin(), squared.end());
    const bool bijective =
        std::unique(squared.begin(), squared.end()) == squared.end() && squared == image;

    // Internal direct sum: trivial intersection and orders multiply out.
    const auto fixed = g.ambiguous_classes();
    std::vector<ClassIndex> common;
    std::set_intersection(fixed.begin(), fixed.end(), image.begin(), image.end(),
                          std::back_inserter(common));
    const bool trivial_meet = common.size() == 1 && common.front() == g.identity();
    const bool orders = fixed.size() * image.size() == g.size();

    out.holds = bijective && trivial_meet && orders;
    return out;
}

RemarkCheck remark_decomposition_check(const FundamentalDiscriminant& d, const CycleChoice& cycle)
{
    const auto narrow = FormClassGroup::narrow(d);
    return remark_decomposition_check(CycleClassGroup(narrow, cycle.kind()));
}

ChevalleyReport verify(const FormClassGroup& narrow, const CycleChoice& cycle)
{
    const FundamentalDiscriminant& d = narrow.discriminant();
    const CycleClassGroup group(narrow, cycle.kind());

    ChevalleyReport r{.cycle = cycle, .unit_norm_sign = std::nullopt, .remark = {}};
    r.discriminant = d.value();
    r.ramified_count = d.ramified_count();
    r.class_number = group.size();
    r.lhs_ambiguous = group.ambiguous_classes().size();
    r.one_minus_sigma_order = group.one_minus_sigma_image().size();
    r.base_class_number = base_class_number(cycle);
    r.ramification_product = local_norm_index_product(d);
    r.unit_index = unit_norm_index(d, cycle).index;
    r.rhs_formula = rhs_ambiguous_number(d, cycle);
    r.norm_group_order = norm_group_order(d, cycle);
    if (d.real()) {
        r.unit_norm_sign = fundamental_unit_norm(d);
    }
    r.remark = remark_decomposition_check(group);
    r.match = r.lhs_ambiguous == r.rhs_formula && r.lhs_ambiguous == r.norm_group_order;
    return r;
}

ChevalleyReport verify(const FundamentalDiscriminant& d, CycleKind kind, std::int64_t bound)
{
    const auto narrow = FormClassGroup::narrow(d, bound);
    return verify(narrow, CycleChoice::make(kind, d));
}

}  // namespace ambiguous
