#include "ambiguous/quadform.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ambiguous/arith.hpp"

namespace ambiguous {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c)
{
    return std::gcd(std::gcd(a, b), c);
}

// Rebuild c from (a, b) and the discriminant; the caller guarantees
// 4a | b^2 - D.
std::int64_t third_coefficient(int128 a, int128 b, std::int64_t d)
{
    int128 num = b * b - d;
    if (num % (4 * a) != 0) {
        throw std::logic_error("quadratic form: 4a does not divide b^2 - D");
    }
    return checked_narrow(num / (4 * a), "form coefficient c");
}

void validate(const QuadraticForm& f, std::int64_t d)
{
    if (f.discriminant() != d) {
        throw ValidationError("form " + to_string(f) + " does not have discriminant " +
                              std::to_string(d));
    }
    if (!f.primitive()) {
        throw ValidationError("form " + to_string(f) + " is not primitive");
    }
    if (d < 0 && f.a <= 0) {
        throw ValidationError("form " + to_string(f) + " is not positive definite");
    }
}

QuadraticForm reduce_definite(QuadraticForm f, std::int64_t d)
{
    for (;;) {
        // Normalize b into (-a, a].
        if (!(-f.a < f.b && f.b <= f.a)) {
            std::int64_t k = floor_div(f.a - f.b, 2 * f.a);
            int128 nb = static_cast<int128>(f.b) + static_cast<int128>(2) * k * f.a;
            f.b = checked_narrow(nb, "form coefficient b");
            f.c = third_coefficient(f.a, f.b, d);
        }
        if (f.a > f.c) {
            f = {f.c, -f.b, f.a};
            continue;
        }
        if (f.a == f.c && f.b < 0) {
            f.b = -f.b;
        }
        return f;
    }
}

// The unique r = -b mod 2|c| in the window used by rho for indefinite forms.
std::int64_t rho_remainder(std::int64_t b, std::int64_t c, std::int64_t s)
{
    const std::int64_t twice_c = 2 * abs64(c);
    const std::int64_t lo = abs64(c) > s ? -abs64(c) + 1 : s - twice_c + 1;
    return lo + mod_floor(-b - lo, twice_c);
}

}  // namespace

unsigned FundamentalDiscriminant::ramification_index(std::uint64_t p) const
{
    return std::binary_search(ramified_.begin(), ramified_.end(), p) ? 2U : 1U;
}

bool FundamentalDiscriminant::is_fundamental(std::int64_t d)
{
    if (d == 0 || d == 1 || d > kMaxDiscriminant || d < -kMaxDiscriminant) {
        return false;
    }
    const std::int64_t r = mod_floor(d, 4);
    if (r == 1) {
        return is_squarefree(d);
    }
    if (r == 0) {
        const std::int64_t m = d / 4;
        const std::int64_t mr = mod_floor(m, 4);
        return (mr == 2 || mr == 3) && is_squarefree(m);
    }
    return false;
}

FundamentalDiscriminant FundamentalDiscriminant::make(std::int64_t d)
{
    if (!is_fundamental(d)) {
        throw ValidationError(std::to_string(d) + " is not a fundamental discriminant");
    }
    return FundamentalDiscriminant(d, factorize(d).primes());
}

std::int64_t QuadraticForm::discriminant() const
{
    int128 disc = static_cast<int128>(b) * b - static_cast<int128>(4) * a * c;
    return checked_narrow(disc, "discriminant");
}

bool QuadraticForm::primitive() const
{
    return gcd3(a, b, c) == 1;
}

std::int64_t QuadraticForm::evaluate(std::int64_t x, std::int64_t y) const
{
    int128 v = static_cast<int128>(a) * x * x + static_cast<int128>(b) * x * y +
               static_cast<int128>(c) * y * y;
    return checked_narrow(v, "form value");
}

std::ostream& operator<<(std::ostream& os, const QuadraticForm& f)
{
    return os << '(' << f.a << ", " << f.b << ", " << f.c << ')';
}

std::string to_string(const QuadraticForm& f)
{
    std::ostringstream os;
    os << f;
    return os.str();
}

std::size_t QuadraticFormHash::operator()(const QuadraticForm& f) const noexcept
{
    std::size_t h = std::hash<std::int64_t>{}(f.a);
    h ^= std::hash<std::int64_t>{}(f.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::int64_t>{}(f.c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

bool is_reduced_definite(const QuadraticForm& f)
{
    if (f.a <= 0 || !(abs64(f.b) <= f.a && f.a <= f.c)) {
        return false;
    }
    if ((abs64(f.b) == f.a || f.a == f.c) && f.b < 0) {
        return false;
    }
    return true;
}

bool is_reduced_indefinite(const QuadraticForm& f, std::int64_t d)
{
    const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(d)));
    const std::int64_t twice_a = 2 * abs64(f.a);
    return f.b > 0 && f.b <= s && twice_a + f.b >= s + 1 && twice_a - f.b <= s;
}

QuadraticForm rho_indefinite(const QuadraticForm& f, std::int64_t d)
{
    const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(d)));
    const std::int64_t r = rho_remainder(f.b, f.c, s);
    return {f.c, r, third_coefficient(f.c, r, d)};
}

QuadraticForm reduce(const QuadraticForm& f, std::int64_t d)
{
    validate(f, d);
    if (d < 0) {
        return reduce_definite(f, d);
    }
    QuadraticForm g = f;
    // Each rho step shrinks |a| geometrically until the form is reduced.
    for (int step = 0; step < 4096; ++step) {
        if (is_reduced_indefinite(g, d)) {
            return g;
        }
        g = rho_indefinite(g, d);
    }
    throw std::logic_error("indefinite reduction did not terminate for " + to_string(f));
}

std::vector<QuadraticForm> rho_cycle(const QuadraticForm& f, std::int64_t d)
{
    if (!is_reduced_indefinite(f, d)) {
        throw ValidationError("rho_cycle needs a reduced indefinite form, got " + to_string(f));
    }
    std::vector<QuadraticForm> cycle{f};
    for (QuadraticForm g = rho_indefinite(f, d); g != f; g = rho_indefinite(g, d)) {
        cycle.push_back(g);
    }
    return cycle;
}

QuadraticForm compose_forms(const QuadraticForm& f, const QuadraticForm& g, std::int64_t d)
{
    // e = gcd(a1, a2, (b1 + b2)/2) = u a1 + v a2 + w (b1 + b2)/2
    const std::int64_t s = (f.b + g.b) / 2;
    const Bezout first = xgcd(f.a, g.a);
    const Bezout second = xgcd(first.g, s);
    const std::int64_t e = second.g;
    const int128 v = static_cast<int128>(second.x) * first.y;
    const int128 w = second.y;

    const int128 a3 = static_cast<int128>(f.a / e) * (g.a / e);
    int128 b3 = static_cast<int128>(g.b) +
                2 * static_cast<int128>(g.a / e) * (v * ((f.b - g.b) / 2) - w * g.c);
    const int128 m = 2 * (a3 < 0 ? -a3 : a3);
    b3 %= m;
    if (b3 < 0) {
        b3 += m;
    }
    if (b3 > m / 2) {
        b3 -= m;
    }
    QuadraticForm out{checked_narrow(a3, "composite a"), checked_narrow(b3, "composite b"), 0};
    out.c = third_coefficient(out.a, out.b, d);
    return out;
}

QuadraticForm principal_form(std::int64_t d)
{
    const std::int64_t b = mod_floor(d, 2);
    return {1, b, (b * b - d) / 4};
}

QuadraticForm negative_norm_form(std::int64_t d)
{
    const std::int64_t b = mod_floor(d, 2);
    return {-1, b, (d - b * b) / 4};
}

FormClassGroup FormClassGroup::narrow(const FundamentalDiscriminant& disc, std::int64_t bound)
{
    const std::int64_t d = disc.value();
    if (abs64(d) > bound) {
        throw BoundExceeded("|D| = " + std::to_string(abs64(d)) + " exceeds the bound " +
                            std::to_string(bound));
    }
    FormClassGroup group(disc);

    if (d < 0) {
        // Reduced definite forms: |b| <= a <= c, so 3a^2 <= |D|.
        const std::int64_t nd = -d;
        for (std::int64_t a = 1; 3 * a * a <= nd; ++a) {
            for (std::int64_t b = -a + 1; b <= a; ++b) {
                if (((b - d) & 1) != 0) {
                    continue;
                }
                const std::int64_t num = b * b - d;
                if (num % (4 * a) != 0) {
                    continue;
                }
                const std::int64_t c = num / (4 * a);
                if (c < a || (c == a && b < 0) || gcd3(a, b, c) != 1) {
                    continue;
                }
                group.classes_.push_back({a, b, c});
            }
        }
        std::sort(group.classes_.begin(), group.classes_.end());
        for (std::size_t i = 0; i < group.classes_.size(); ++i) {
            group.lookup_.emplace(group.classes_[i], i);
        }
    } else {
        const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(d)));
        std::vector<QuadraticForm> reduced;
        for (std::int64_t b = 2 - (d & 1); b <= s; b += 2) {
            const std::int64_t n = (d - b * b) / 4;
            const std::int64_t lo = std::max<std::int64_t>(1, (s + 2 - b) / 2);
            const std::int64_t hi = (s + b) / 2;
            for (std::int64_t m = lo; m <= hi; ++m) {
                if (n % m != 0 || gcd3(m, b, n / m) != 1) {
                    continue;
                }
                reduced.push_back({m, b, -(n / m)});
                reduced.push_back({-m, b, n / m});
            }
        }
        std::sort(reduced.begin(), reduced.end());

        std::unordered_map<QuadraticForm, std::size_t, QuadraticFormHash> cycle_of;
        std::vector<std::vector<QuadraticForm>> cycles;
        for (const auto& f : reduced) {
            if (cycle_of.count(f) != 0) {
                continue;
            }
            auto cyc = rho_cycle(f, d);
            for (const auto& g : cyc) {
                cycle_of.emplace(g, cycles.size());
            }
            cycles.push_back(std::move(cyc));
        }
        if (cycle_of.size() != reduced.size()) {
            throw std::logic_error("rho cycles left the set of reduced forms");
        }

        // Canonical representative: lexicographically least form on the cycle.
        std::vector<std::pair<QuadraticForm, std::size_t>> canon;
        canon.reserve(cycles.size());
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            canon.emplace_back(*std::min_element(cycles[i].begin(), cycles[i].end()), i);
        }
        std::sort(canon.begin(), canon.end());
        std::vector<std::size_t> class_of_cycle(cycles.size());
        for (std::size_t k = 0; k < canon.size(); ++k) {
            group.classes_.push_back(canon[k].first);
            class_of_cycle[canon[k].second] = k;
        }
        for (const auto& [f, cyc] : cycle_of) {
            group.lookup_.emplace(f, class_of_cycle[cyc]);
        }
    }

    group.principal_ = group.class_of(principal_form(d));
    return group;
}

ClassIndex FormClassGroup::class_of(const QuadraticForm& f) const
{
    const QuadraticForm r = reduce(f, disc_.value());
    auto it = lookup_.find(r);
    if (it == lookup_.end()) {
        throw std::logic_error("reduced form " + to_string(r) + " missing from class table");
    }
    return ClassIndex{it->second};
}

ClassIndex FormClassGroup::compose(ClassIndex x, ClassIndex y) const
{
    return class_of(compose_forms(representative(x), representative(y), disc_.value()));
}

ClassIndex FormClassGroup::galois_apply(ClassIndex x) const
{
    return class_of(representative(x).opposite());
}

ClassIndex FormClassGroup::power(ClassIndex x, std::uint64_t n) const
{
    ClassIndex result = principal_;
    ClassIndex base = x;
    while (n > 0) {
        if (n & 1) {
            result = compose(result, base);
        }
        base = compose(base, base);
        n >>= 1;
    }
    return result;
}

std::optional<ClassIndex> FormClassGroup::negative_norm_class() const
{
    if (!disc_.real()) {
        return std::nullopt;
    }
    return class_of(negative_norm_form(disc_.value()));
}

CycleClassGroup::CycleClassGroup(const FormClassGroup& narrow, CycleKind kind)
    : narrow_(&narrow), kind_(kind)
{
    const std::size_t n = narrow.size();
    canonical_.resize(n);
    std::optional<ClassIndex> delta;
    if (kind == CycleKind::Ordinary) {
        delta = narrow.negative_norm_class();
    }
    if (delta && *delta != narrow.principal()) {
        kernel_order_ = 2;
        for (std::size_t i = 0; i < n; ++i) {
            const ClassIndex x{i};
            canonical_[i] = std::min(x, narrow.compose(x, *delta));
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            canonical_[i] = ClassIndex{i};
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (canonical_[i].value == i) {
            elements_.push_back(ClassIndex{i});
        }
    }
    if (elements_.size() * kernel_order_ != n) {
        throw std::logic_error("negative-norm class does not have order 2");
    }
}

ClassIndex CycleClassGroup::compose(ClassIndex x, ClassIndex y) const
{
    return canonical(narrow_->compose(x, y));
}

ClassIndex CycleClassGroup::galois_apply(ClassIndex x) const
{
    return canonical(narrow_->galois_apply(x));
}

std::size_t CycleClassGroup::order_of(ClassIndex x) const
{
    const ClassIndex one = identity();
    x = canonical(x);
    std::size_t order = 1;
    for (ClassIndex y = x; y != one; y = compose(y, x)) {
        ++order;
        if (order > size()) {
            throw std::logic_error("element order exceeds group order");
        }
    }
    return order;
}

std::vector<ClassIndex> CycleClassGroup::ambiguous_classes() const
{
    std::vector<ClassIndex> out;
    for (ClassIndex x : elements_) {
        if (galois_apply(x) == x) {
            out.push_back(x);
        }
    }
    return out;
}

std::vector<ClassIndex> CycleClassGroup::one_minus_sigma_image() const
{
    std::vector<ClassIndex> out;
    out.reserve(elements_.size());
    for (ClassIndex x : elements_) {
        out.push_back(square(x));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t ambiguous_count(const FormClassGroup& g, CycleKind kind)
{
    return CycleClassGroup(g, kind).ambiguous_classes().size();
}

std::size_t ambiguous_count(const FundamentalDiscriminant& d, const CycleChoice& cycle)
{
    return ambiguous_count(FormClassGroup::narrow(d), cycle.kind());
}

std::size_t one_minus_sigma_image_order(const FormClassGroup& g, CycleKind kind)
{
    return CycleClassGroup(g, kind).one_minus_sigma_image().size();
}

std::size_t one_minus_sigma_image_order(const FundamentalDiscriminant& d,
                                        const CycleChoice& cycle)
{
    return one_minus_sigma_image_order(FormClassGroup::narrow(d), cycle.kind());
}

std::vector<std::uint64_t> group_structure(const CycleClassGroup& g)
{
    const std::size_t n = g.size();
    std::vector<std::size_t> orders;
    orders.reserve(n);
    for (ClassIndex x : g.elements()) {
        orders.push_back(g.order_of(x));
    }

    // For each prime p | n, count N_k = #{x : ord(x) | p^k}. Then
    // log_p(N_k / N_{k-1}) is the number of cyclic factors with p-part >= p^k.
    std::vector<std::vector<unsigned>> exponents_by_prime;
    std::vector<std::uint64_t> primes;
    if (n > 1) {
        for (const auto& pp : factorize(static_cast<std::int64_t>(n)).factors()) {
            const std::uint64_t p = pp.prime;
            std::vector<unsigned> at_least;  // at_least[k-1] = #factors with exponent >= k
            std::size_t prev = 1;
            std::uint64_t pk = 1;
            for (unsigned k = 1; k <= pp.exponent; ++k) {
                pk *= p;
                const auto count = static_cast<std::size_t>(
                    std::count_if(orders.begin(), orders.end(),
                                  [pk](std::size_t o) { return pk % o == 0; }));
                std::size_t ratio = count / prev;
                unsigned m = 0;
                while (ratio > 1) {
                    ratio /= p;
                    ++m;
                }
                if (m == 0) {
                    break;
                }
                at_least.push_back(m);
                prev = count;
            }
            // Exponent of the j-th largest cyclic p-factor.
            std::vector<unsigned> exps(at_least.empty() ? 0 : at_least.front(), 0);
            for (unsigned m : at_least) {
                for (unsigned j = 0; j < m; ++j) {
                    ++exps[j];
                }
            }
            primes.push_back(p);
            exponents_by_prime.push_back(std::move(exps));
        }
    }

    std::size_t rank = 0;
    for (const auto& e : exponents_by_prime) {
        rank = std::max(rank, e.size());
    }
    std::vector<std::uint64_t> factors(rank, 1);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const auto& e = exponents_by_prime[i];
        for (std::size_t j = 0; j < e.size(); ++j) {
            for (unsigned k = 0; k < e[j]; ++k) {
                factors[rank - 1 - j] *= primes[i];
            }
        }
    }
    std::uint64_t product = 1;
    for (auto f : factors) {
        product *= f;
    }
    if (product != n) {
        throw std::logic_error("invariant factors do not multiply to the group order");
    }
    return factors;
}

std::vector<std::uint64_t> group_structure(const FormClassGroup& g)
{
    return group_structure(CycleClassGroup(g, CycleKind::Narrow));
}

}  // namespace ambiguous
