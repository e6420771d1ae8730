#pragma once

/**
 * A finite set P of S-probabilities over a shared, labelled state set.
 *
 * Events are kept sorted in canonical (lexicographic) order and indexed by
 * position. Order relation, complement map, disjointness and all pairwise
 * infima/suprema taken inside P are computed once at construction; the
 * object is immutable afterwards and safe to share between threads.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "numev/event.hpp"

namespace numev {

class EventFamily {
public:
    using Index = std::size_t;

    /// Sorts the events canonically. Throws ArityError on mismatched arity
    /// and ValidationError on duplicates or duplicate state labels.
    EventFamily(std::vector<std::string> states, std::vector<Event> events);
    /// States labelled "s1".."sN".
    static EventFamily with_default_states(std::size_t arity, std::vector<Event> events);

    std::size_t arity() const noexcept { return states_.size(); }
    std::size_t size() const noexcept { return events_.size(); }
    const std::vector<std::string>& states() const noexcept { return states_; }
    const std::vector<Event>& events() const noexcept { return events_; }
    const Event& event(Index i) const { return events_[i]; }

    std::optional<Index> index_of(const Event& e) const;
    bool contains(const Event& e) const { return index_of(e).has_value(); }
    /// Membership for a raw sum; coordinates above 1 are never members.
    std::optional<Index> index_of(const PointwiseVector& v) const;

    std::optional<Index> zero_index() const noexcept { return zero_; }
    std::optional<Index> one_index() const noexcept { return one_; }
    /// Index of 1 - p when it is a member.
    std::optional<Index> complement_index(Index i) const;

    bool leq(Index a, Index b) const { return leq_[a * size() + b]; }
    /// Every common lower bound inside P is the constant 0.
    bool disjoint(Index a, Index b) const { return disjoint_[a * size() + b]; }
    std::optional<Index> meet(Index a, Index b) const;
    std::optional<Index> join(Index a, Index b) const;

    /// Throws PreconditionError if e is not a member.
    Index require_member(const Event& e) const;

    friend bool operator==(const EventFamily& a, const EventFamily& b) {
        return a.states_ == b.states_ && a.events_ == b.events_;
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    void build_caches();

    std::vector<std::string> states_;
    std::vector<Event> events_;
    std::optional<Index> zero_;
    std::optional<Index> one_;
    std::vector<std::size_t> complement_;
    std::vector<char> leq_;
    std::vector<char> disjoint_;
    std::vector<std::size_t> meet_;
    std::vector<std::size_t> join_;
};

/// All members x with x <= p and x <= q, in canonical order.
std::vector<Event> lower_bounds(const EventFamily& family, const Event& p, const Event& q);
/// All members x with p <= x and q <= x, in canonical order.
std::vector<Event> upper_bounds(const EventFamily& family, const Event& p, const Event& q);
/// Greatest lower bound inside the family; nullopt when it does not exist.
std::optional<Event> infimum_in(const EventFamily& family, const Event& p, const Event& q);
/// Least upper bound inside the family; nullopt when it does not exist.
std::optional<Event> supremum_in(const EventFamily& family, const Event& p, const Event& q);
bool is_disjoint(const EventFamily& family, const Event& p, const Event& q);

}  // namespace numev
