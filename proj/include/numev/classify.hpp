#pragma once

/**
 * Conditions (1)-(8) on a family of S-probabilities and the classes built
 * from them.
 *
 *   (1) 0,1 in P
 *   (2) p in P  =>  1-p in P
 *   (3) p ^ q = 0                          =>  p+q in P
 *   (4) p _|_ q                            =>  p+q in P
 *   (5) p _|_ q _|_ r _|_ p                =>  p+q+r in P
 *   (6) p ^ q = 0                          =>  p+q = sup_P(p,q) in P
 *   (7) p _|_ q, q _|_ r, p ^ r = 0        =>  p+q+r in P
 *   (8) p _|_ q, q _|_ r, p ^ r = 0        =>  p+q+r <= 1
 *
 * Failing verdicts carry the first offending tuple. Tuples are scanned in
 * two passes over index order: first tuples of pairwise distinct,
 * non-constant members, then all remaining tuples.
 */

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numev/family.hpp"

namespace numev {

enum class Condition { C1 = 1, C2, C3, C4, C5, C6, C7, C8 };

inline constexpr std::array<Condition, 8> kAllConditions = {
    Condition::C1, Condition::C2, Condition::C3, Condition::C4,
    Condition::C5, Condition::C6, Condition::C7, Condition::C8};

int condition_number(Condition c) noexcept;

struct ConditionVerdict {
    Condition condition = Condition::C1;
    bool holds = true;
    /// Offending members, in the roles the condition names them (p, q, r).
    std::vector<Event> witness;
    /// The raw sum the condition is about, when one was formed.
    std::optional<PointwiseVector> sum;
    /// For (6): the supremum inside P, if it exists.
    std::optional<Event> supremum;
    /// Short machine tag: "missing-zero", "sum-not-member", "sum-exceeds-one", ...
    std::string reason;
};

ConditionVerdict check_condition(const EventFamily& family, Condition c);

/// (6) with the pointwise maximum in place of the supremum inside P.
ConditionVerdict check_condition6_pointwise(const EventFamily& family);

/// 0, 1, or values on both sides of 1/2.
bool is_varying(const Event& p);

enum class ClassFlag {
    Specific,
    VeeSpecific,
    Structured,
    WeaklyStructured,
    Gfe,
    Algebra,
    BooleanPoset,
    Orthoposet,
    Complemented,
    AllVarying,
    ConcreteLogicForm,
    Lattice,
    BooleanAlgebra,
    InfimumFaithful,
    Orthomodular,
};

inline constexpr std::array<ClassFlag, 15> kAllFlags = {
    ClassFlag::Specific,     ClassFlag::VeeSpecific,     ClassFlag::Structured,
    ClassFlag::WeaklyStructured, ClassFlag::Gfe,         ClassFlag::Algebra,
    ClassFlag::BooleanPoset, ClassFlag::Orthoposet,      ClassFlag::Complemented,
    ClassFlag::AllVarying,   ClassFlag::ConcreteLogicForm, ClassFlag::Lattice,
    ClassFlag::BooleanAlgebra, ClassFlag::InfimumFaithful, ClassFlag::Orthomodular};

std::string_view flag_name(ClassFlag f) noexcept;
/// Accepts snake_case names and the class aliases C1..C4.
std::optional<ClassFlag> parse_flag(std::string_view name);

/// Pass/fail plus the offending members when it fails.
struct PropertyVerdict {
    bool holds = true;
    std::vector<Event> witness;
    std::string reason;
};

/// Requires (1) and (2); throws PreconditionError otherwise.
PropertyVerdict check_complemented(const EventFamily& family);
bool is_complemented(const EventFamily& family);
bool is_orthoposet(const EventFamily& family);
/// Disjoint pairs are orthogonal. Requires (1) and (2).
PropertyVerdict check_boolean_poset(const EventFamily& family);
bool is_boolean_poset(const EventFamily& family);
/// Both De Morgan laws for every pair whose supremum (infimum) exists.
/// Requires (1) and (2).
PropertyVerdict demorgan_check(const EventFamily& family);
PropertyVerdict check_concrete_logic_form(const EventFamily& family);
bool is_concrete_logic_form(const EventFamily& family);
bool is_gfe(const EventFamily& family);
bool is_algebra(const EventFamily& family);
bool is_specific(const EventFamily& family);
PropertyVerdict check_lattice(const EventFamily& family);
bool is_lattice(const EventFamily& family);
/// max(p,q) in P for all p,q. Requires a structured concrete-logic family.
bool lattice_criterion(const EventFamily& family);
/// p <= q  =>  q = p v (p' ^ q), all extrema inside P. Requires an orthoposet.
PropertyVerdict check_orthomodular(const EventFamily& family);
bool is_orthomodular(const EventFamily& family);
PropertyVerdict check_boolean_algebra(const EventFamily& family);
bool is_boolean_algebra(const EventFamily& family);
bool all_varying(const EventFamily& family);

struct ClassificationReport {
    std::array<ConditionVerdict, 8> conditions;
    /// Indexed by ClassFlag.
    std::array<bool, kAllFlags.size()> flags{};
    /// Set only when the family is structured and in concrete-logic form.
    std::optional<bool> lattice_criterion;
    /// (6) read with the pointwise maximum, for comparison with the official flag.
    ConditionVerdict condition6_pointwise;
    /// Failures of proven implications between the flags; empty unless buggy.
    std::vector<std::string> internal_errors;

    bool flag(ClassFlag f) const { return flags[static_cast<std::size_t>(f)]; }
    const ConditionVerdict& condition(Condition c) const {
        return conditions[static_cast<std::size_t>(condition_number(c) - 1)];
    }
};

ClassificationReport classify(const EventFamily& family);

}  // namespace numev
