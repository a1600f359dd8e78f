#pragma once

// Binary quadratic forms of fundamental discriminant D and the form class
// group they generate. For D < 0 only positive definite forms are used; for
// D > 0 the full group of proper equivalence classes is the narrow class
// group of Q(sqrt D), and the ordinary class group is its quotient by the
// class of forms representing -1.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ambiguous/cycle.hpp"

namespace ambiguous {

/// Default cap on |D| for anything that enumerates classes.
inline constexpr std::int64_t kDefaultDiscriminantBound = 1'000'000;
/// Hard cap: every intermediate of composition and reduction stays in 128 bits.
inline constexpr std::int64_t kMaxDiscriminant = 1'000'000'000'000'000LL;

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BoundExceeded : std::out_of_range {
    using std::out_of_range::out_of_range;
};

enum class InfiniteBehavior { Split, NonSplit };

class FundamentalDiscriminant {
public:
    /// Throws ValidationError unless d is a fundamental discriminant.
    static FundamentalDiscriminant make(std::int64_t d);
    static bool is_fundamental(std::int64_t d);

    std::int64_t value() const { return value_; }
    const std::vector<std::uint64_t>& ramified_primes() const { return ramified_; }
    unsigned ramified_count() const { return static_cast<unsigned>(ramified_.size()); }
    InfiniteBehavior infinite_behavior() const
    {
        return value_ > 0 ? InfiniteBehavior::Split : InfiniteBehavior::NonSplit;
    }
    bool real() const { return value_ > 0; }
    /// e(v) of the finite place p.
    unsigned ramification_index(std::uint64_t p) const;

    bool operator==(const FundamentalDiscriminant& o) const { return value_ == o.value_; }

private:
    FundamentalDiscriminant(std::int64_t d, std::vector<std::uint64_t> ramified)
        : value_(d), ramified_(std::move(ramified))
    {
    }

    std::int64_t value_;
    std::vector<std::uint64_t> ramified_;
};

struct QuadraticForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t discriminant() const;
    bool primitive() const;
    /// The opposite form (a, -b, c).
    QuadraticForm opposite() const { return {a, -b, c}; }
    /// Value at (x, y).
    std::int64_t evaluate(std::int64_t x, std::int64_t y) const;

    auto operator<=>(const QuadraticForm&) const = default;
};

std::ostream& operator<<(std::ostream& os, const QuadraticForm& f);
std::string to_string(const QuadraticForm& f);

struct QuadraticFormHash {
    std::size_t operator()(const QuadraticForm& f) const noexcept;
};

/// Reduced-form predicates for the two signatures.
bool is_reduced_definite(const QuadraticForm& f);
bool is_reduced_indefinite(const QuadraticForm& f, std::int64_t d);

/// One rho step (c, r, (r^2 - D)/4c) with the indefinite normalization of r.
QuadraticForm rho_indefinite(const QuadraticForm& f, std::int64_t d);

/// D < 0: the unique reduced form equivalent to f.
/// D > 0: a reduced form in the rho cycle of f.
/// Throws ValidationError for non-primitive forms, a discriminant other than
/// d, or a non-positive-definite form when d < 0.
QuadraticForm reduce(const QuadraticForm& f, std::int64_t d);

/// The full rho cycle of a reduced indefinite form, starting at f.
std::vector<QuadraticForm> rho_cycle(const QuadraticForm& f, std::int64_t d);

/// Dirichlet composition of two primitive forms of discriminant d. The
/// result is not reduced.
QuadraticForm compose_forms(const QuadraticForm& f, const QuadraticForm& g, std::int64_t d);

/// The principal form (1, b, (b^2 - D)/4), b = D mod 2.
QuadraticForm principal_form(std::int64_t d);
/// The form (-1, b, (D - b^2)/4), b = D mod 2; it represents -1.
QuadraticForm negative_norm_form(std::int64_t d);

struct ClassIndex {
    std::size_t value = 0;
    auto operator<=>(const ClassIndex&) const = default;
};

/// The narrow form class group of a fundamental discriminant: one canonical
/// reduced representative per proper equivalence class, plus a lookup table
/// from every reduced form to its class. Immutable once built.
class FormClassGroup {
public:
    /// Enumerate the classes. Throws BoundExceeded when |D| > bound.
    static FormClassGroup narrow(const FundamentalDiscriminant& d,
                                 std::int64_t bound = kDefaultDiscriminantBound);

    const FundamentalDiscriminant& discriminant() const { return disc_; }
    std::size_t size() const { return classes_.size(); }
    const std::vector<QuadraticForm>& representatives() const { return classes_; }
    const QuadraticForm& representative(ClassIndex i) const { return classes_.at(i.value); }
    ClassIndex principal() const { return principal_; }

    /// Class of an arbitrary primitive form of the right discriminant.
    ClassIndex class_of(const QuadraticForm& f) const;
    ClassIndex compose(ClassIndex x, ClassIndex y) const;
    /// Action of the nontrivial automorphism: the class of the opposite form.
    ClassIndex galois_apply(ClassIndex x) const;
    ClassIndex power(ClassIndex x, std::uint64_t n) const;
    /// Class of forms representing -1 (only for D > 0).
    std::optional<ClassIndex> negative_norm_class() const;
    /// Total number of reduced forms across all classes.
    std::size_t reduced_form_count() const { return lookup_.size(); }

private:
    explicit FormClassGroup(FundamentalDiscriminant d) : disc_(std::move(d)) {}

    FundamentalDiscriminant disc_;
    std::vector<QuadraticForm> classes_;
    std::unordered_map<QuadraticForm, std::size_t, QuadraticFormHash> lookup_;
    ClassIndex principal_{};
};

/// Cl(K, cycle) realized on top of the narrow group: the narrow group itself
/// for Narrow (or D < 0), its quotient by the negative-norm class otherwise.
/// Elements are canonical coset representatives of the underlying group.
class CycleClassGroup {
public:
    CycleClassGroup(const FormClassGroup& narrow, CycleKind kind);

    const FormClassGroup& narrow() const { return *narrow_; }
    CycleKind kind() const { return kind_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<ClassIndex>& elements() const { return elements_; }
    ClassIndex identity() const { return canonical(narrow_->principal()); }
    /// Order of the subgroup collapsed by the quotient (1 or 2).
    std::size_t kernel_order() const { return kernel_order_; }

    ClassIndex canonical(ClassIndex x) const { return canonical_[x.value]; }
    ClassIndex compose(ClassIndex x, ClassIndex y) const;
    ClassIndex galois_apply(ClassIndex x) const;
    ClassIndex square(ClassIndex x) const { return compose(x, x); }
    std::size_t order_of(ClassIndex x) const;

    /// Classes fixed by the Galois action.
    std::vector<ClassIndex> ambiguous_classes() const;
    /// The image of 1 - sigma, i.e. the subgroup of squares.
    std::vector<ClassIndex> one_minus_sigma_image() const;

private:
    const FormClassGroup* narrow_;
    CycleKind kind_;
    std::size_t kernel_order_ = 1;
    std::vector<ClassIndex> canonical_;
    std::vector<ClassIndex> elements_;
};

std::size_t ambiguous_count(const FormClassGroup& g, CycleKind kind);
std::size_t ambiguous_count(const FundamentalDiscriminant& d, const CycleChoice& cycle);

std::size_t one_minus_sigma_image_order(const FormClassGroup& g, CycleKind kind);
std::size_t one_minus_sigma_image_order(const FundamentalDiscriminant& d,
                                        const CycleChoice& cycle);

/// Invariant factors d1 | d2 | ... with product equal to the group order.
std::vector<std::uint64_t> group_structure(const CycleClassGroup& g);
std::vector<std::uint64_t> group_structure(const FormClassGroup& g);

}  // namespace ambiguous
