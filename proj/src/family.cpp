#include "numev/family.hpp"

#include <algorithm>
#include <set>

#include "numev/error.hpp"

namespace numev {

EventFamily::EventFamily(std::vector<std::string> states, std::vector<Event> events)
    : states_(std::move(states)), events_(std::move(events)) {
    if (states_.empty()) throw ValidationError("state set must be nonempty");
    if (std::set<std::string>(states_.begin(), states_.end()).size() != states_.size())
        throw ValidationError("duplicate state label");
    for (const auto& e : events_) require_same_arity(states_.size(), e.arity());
    std::sort(events_.begin(), events_.end());
    auto dup = std::adjacent_find(events_.begin(), events_.end());
    if (dup != events_.end()) throw ValidationError("duplicate event " + dup->str());
    build_caches();
}

EventFamily EventFamily::with_default_states(std::size_t arity, std::vector<Event> events) {
    std::vector<std::string> states;
    for (std::size_t i = 0; i < arity; ++i) states.push_back("s" + std::to_string(i + 1));
    return EventFamily(std::move(states), std::move(events));
}

void EventFamily::build_caches() {
    const std::size_t n = size();
    zero_ = index_of(Event::zero(arity()));
    one_ = index_of(Event::one(arity()));

    complement_.assign(n, kNone);
    for (Index i = 0; i < n; ++i)
        if (auto c = index_of(complement(events_[i]))) complement_[i] = *c;

    leq_.assign(n * n, 0);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) leq_[a * n + b] = numev::leq(events_[a], events_[b]);

    disjoint_.assign(n * n, 0);
    meet_.assign(n * n, kNone);
    join_.assign(n * n, kNone);
    for (Index a = 0; a < n; ++a) {
        for (Index b = a; b < n; ++b) {
            bool only_zero = true;
            std::size_t lo = kNone;
            std::size_t hi = kNone;
            for (Index x = 0; x < n; ++x) {
                if (leq(x, a) && leq(x, b)) {
                    if (!events_[x].is_zero()) only_zero = false;
                    if (lo == kNone || leq(lo, x)) lo = x;
                }
                if (leq(a, x) && leq(b, x)) {
                    if (hi == kNone || leq(x, hi)) hi = x;
                }
            }
            // lo/hi are maximal/minimal candidates; they are extrema only if
            // they dominate every other bound.
            if (lo != kNone) {
                for (Index x = 0; x < n; ++x)
                    if (leq(x, a) && leq(x, b) && !leq(x, lo)) {
                        lo = kNone;
                        break;
                    }
            }
            if (hi != kNone) {
                for (Index x = 0; x < n; ++x)
                    if (leq(a, x) && leq(b, x) && !leq(hi, x)) {
                        hi = kNone;
                        break;
                    }
            }
            disjoint_[a * n + b] = disjoint_[b * n + a] = only_zero;
            meet_[a * n + b] = meet_[b * n + a] = lo;
            join_[a * n + b] = join_[b * n + a] = hi;
        }
    }
}

std::optional<EventFamily::Index> EventFamily::index_of(const Event& e) const {
    if (e.arity() != arity()) return std::nullopt;
    auto it = std::lower_bound(events_.begin(), events_.end(), e);
    if (it == events_.end() || *it != e) return std::nullopt;
    return static_cast<Index>(it - events_.begin());
}

std::optional<EventFamily::Index> EventFamily::index_of(const PointwiseVector& v) const {
    auto e = v.as_event();
    if (!e) return std::nullopt;
    return index_of(*e);
}

std::optional<EventFamily::Index> EventFamily::complement_index(Index i) const {
    if (complement_[i] == kNone) return std::nullopt;
    return complement_[i];
}

std::optional<EventFamily::Index> EventFamily::meet(Index a, Index b) const {
    const auto m = meet_[a * size() + b];
    if (m == kNone) return std::nullopt;
    return m;
}

std::optional<EventFamily::Index> EventFamily::join(Index a, Index b) const {
    const auto j = join_[a * size() + b];
    if (j == kNone) return std::nullopt;
    return j;
}

EventFamily::Index EventFamily::require_member(const Event& e) const {
    auto i = index_of(e);
    if (!i) throw PreconditionError("event " + e.str() + " is not a member of the family");
    return *i;
}

std::vector<Event> lower_bounds(const EventFamily& family, const Event& p, const Event& q) {
    const auto a = family.require_member(p);
    const auto b = family.require_member(q);
    std::vector<Event> out;
    for (EventFamily::Index x = 0; x < family.size(); ++x)
        if (family.leq(x, a) && family.leq(x, b)) out.push_back(family.event(x));
    return out;
}

std::vector<Event> upper_bounds(const EventFamily& family, const Event& p, const Event& q) {
    const auto a = family.require_member(p);
    const auto b = family.require_member(q);
    std::vector<Event> out;
    for (EventFamily::Index x = 0; x < family.size(); ++x)
        if (family.leq(a, x) && family.leq(b, x)) out.push_back(family.event(x));
    return out;
}

std::optional<Event> infimum_in(const EventFamily& family, const Event& p, const Event& q) {
    auto m = family.meet(family.require_member(p), family.require_member(q));
    if (!m) return std::nullopt;
    return family.event(*m);
}

std::optional<Event> supremum_in(const EventFamily& family, const Event& p, const Event& q) {
    auto j = family.join(family.require_member(p), family.require_member(q));
    if (!j) return std::nullopt;
    return family.event(*j);
}

bool is_disjoint(const EventFamily& family, const Event& p, const Event& q) {
    return family.disjoint(family.require_member(p), family.require_member(q));
}

}  // namespace numev
