#pragma once

/**
 * States on bounded posets with an antitone involution, and the two
 * constructions linking them to families of S-probabilities:
 *
 *  - canonical_states(F): one state s_x(p) = p(x) per point x of S;
 *  - build_representation(P, T): the family {u -> (t(u))_t} over the
 *    state set T, which is specific when T is full and uniform.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "numev/family.hpp"

namespace numev {

class AbstractBoundedPoset {
public:
    using Index = std::size_t;

    /// `order` may list any generating pairs (a <= b); its reflexive and
    /// transitive closure is taken. Throws ValidationError if the result is
    /// not a bounded poset with an antitone involution.
    AbstractBoundedPoset(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& order,
                         const std::vector<std::pair<std::string, std::string>>& involution,
                         const std::string& bottom, const std::string& top);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(Index i) const { return labels_[i]; }
    std::optional<Index> index_of(const std::string& label) const;

    bool leq(Index a, Index b) const { return leq_[a * size() + b]; }
    Index involution(Index i) const { return involution_[i]; }
    Index bottom() const noexcept { return bottom_; }
    Index top() const noexcept { return top_; }

    /// The only common lower bound is the bottom.
    bool disjoint(Index a, Index b) const;
    std::optional<Index> meet(Index a, Index b) const;
    std::optional<Index> join(Index a, Index b) const;

private:
    AbstractBoundedPoset() = default;
    friend AbstractBoundedPoset poset_of(const EventFamily& family);
    void validate() const;

    std::vector<std::string> labels_;
    std::vector<char> leq_;
    std::vector<Index> involution_;
    Index bottom_ = 0;
    Index top_ = 0;
};

/// The family's own order, complement and bounds; labels are the events'
/// printed forms and indices coincide with the family's. Requires (1),(2).
AbstractBoundedPoset poset_of(const EventFamily& family);

/// One row per named state; rows[s][i] is the value of state s at element i.
struct StateTable {
    std::vector<std::string> names;
    std::vector<std::vector<Rational>> rows;

    std::size_t size() const noexcept { return rows.size(); }
};

/// Throws ValidationError unless every row assigns a value in [0,1] to
/// every element of the poset.
void validate_table(const AbstractBoundedPoset& poset, const StateTable& table);

struct AxiomVerdict {
    bool holds = true;
    /// Element labels of the first violation.
    std::vector<std::string> witness;
    std::string reason;
};

struct StateVerdict {
    AxiomVerdict s1, s2, s3, s4;
    /// Only set by check_pseudostate.
    std::optional<AxiomVerdict> s5;

    bool holds() const {
        return s1.holds && s2.holds && s3.holds && s4.holds && (!s5 || s5->holds);
    }
};

/// Axioms (S1)-(S4) for a single state given as one value per element.
StateVerdict check_specific_state(const AbstractBoundedPoset& poset, std::span<const Rational> state);
/// (S1)-(S5). Throws PreconditionError if some disjoint pair has no join.
StateVerdict check_pseudostate(const AbstractBoundedPoset& poset, std::span<const Rational> state);

struct FullnessVerdict {
    bool holds = true;
    /// (p, q) with s(p) <= s(q) for every state but not p <= q.
    std::optional<std::pair<std::string, std::string>> pair;
};

struct UniformityVerdict {
    bool holds = true;
    /// Disjoint pair with no common additivity witness.
    std::optional<std::pair<std::string, std::string>> pair;
    /// The value row a shared witness would need: (s(p) + s(q))_s.
    std::optional<PointwiseVector> required;
};

FullnessVerdict check_full(const AbstractBoundedPoset& poset, const StateTable& table);
bool is_full(const AbstractBoundedPoset& poset, const StateTable& table);
UniformityVerdict check_uniform(const AbstractBoundedPoset& poset, const StateTable& table);
bool is_uniform(const AbstractBoundedPoset& poset, const StateTable& table);

/// s_x(p) = p(x) for each state label x of the family.
StateTable canonical_states(const EventFamily& family);

struct ConcreteRepresentation {
    EventFamily carrier;
    /// element_map[i] is the image of poset element i.
    std::vector<Event> element_map;
};

/// f(u)(t) = t(u). Throws PreconditionError naming the offending element or
/// pair unless every row is a specific state and the table is full and uniform.
ConcreteRepresentation build_representation(const AbstractBoundedPoset& poset, const StateTable& table);

/// Bijection onto the family's events that preserves and reflects order and
/// maps the involution to complementation.
bool is_isomorphism(const AbstractBoundedPoset& poset, const EventFamily& family,
                    std::span<const Event> element_map);

/// All {0,1}-valued specific states on the family, in enumeration order.
StateTable two_valued_states(const EventFamily& family);

/// The representation over all two-valued specific states, when they form a
/// full set; nullopt otherwise (or when (1),(2) fail).
std::optional<ConcreteRepresentation> two_valued_representation(const EventFamily& family);

struct Theorem4Check {
    bool vee_specific = false;
    bool sums_are_joins = false;
    bool full_pseudostates = false;
    bool agree() const { return vee_specific == (sums_are_joins && full_pseudostates); }
};

/// Compares membership in the vee-specific class with the state-based
/// description: disjoint sums are joins and the canonical states form a full
/// set of pseudostates.
Theorem4Check check_theorem4_shape(const EventFamily& family);

}  // namespace numev
