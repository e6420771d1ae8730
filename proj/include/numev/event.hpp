#pragma once

/**
 * Numerical events: functions S -> [0,1] over an ordered finite state set,
 * stored as one exact rational per state.
 *
 * `<` on Event is the lexicographic canonical order used for sorting and
 * deterministic reports. The order of functions is `leq`.
 */

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "numev/rational.hpp"

namespace numev {

class Event;

/// Coordinatewise nonnegative values with no upper bound (raw sums).
class PointwiseVector {
public:
    PointwiseVector() = default;
    explicit PointwiseVector(std::vector<Rational> values);

    std::size_t arity() const noexcept { return values_.size(); }
    const Rational& operator[](std::size_t i) const { return values_[i]; }
    std::span<const Rational> values() const noexcept { return values_; }

    /// True iff every coordinate is at most 1.
    bool bounded_by_one() const noexcept;
    /// The same values as an Event, or nullopt when some coordinate exceeds 1.
    std::optional<Event> as_event() const;

    std::string str() const;

    friend bool operator==(const PointwiseVector&, const PointwiseVector&) = default;

private:
    std::vector<Rational> values_;
};

class Event {
public:
    Event() = default;
    /// Throws RangeError if some value exceeds 1.
    explicit Event(std::vector<Rational> values);
    Event(std::initializer_list<Rational> values) : Event(std::vector<Rational>(values)) {}

    static Event constant(std::size_t arity, const Rational& value);
    static Event zero(std::size_t arity) { return constant(arity, Rational::zero()); }
    static Event one(std::size_t arity) { return constant(arity, Rational::one()); }

    std::size_t arity() const noexcept { return values_.size(); }
    const Rational& operator[](std::size_t i) const { return values_[i]; }
    std::span<const Rational> values() const noexcept { return values_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// Every value is 0 or 1.
    bool is_two_valued() const noexcept;

    /// "(a,b,...)"
    std::string str() const;

    friend bool operator==(const Event&, const Event&) = default;
    friend std::strong_ordering operator<=>(const Event& a, const Event& b);

private:
    std::vector<Rational> values_;
};

std::ostream& operator<<(std::ostream& os, const Event& e);
std::ostream& operator<<(std::ostream& os, const PointwiseVector& v);

/// p <= q in the order of functions.
bool leq(const Event& p, const Event& q);
/// 1 - p.
Event complement(const Event& p);
/// p <= 1 - q.
bool is_orthogonal(const Event& p, const Event& q);

PointwiseVector pointwise_sum(std::span<const Event> events);
PointwiseVector pointwise_sum(std::initializer_list<Event> events);
/// p - q; requires q <= p, throws RangeError otherwise.
PointwiseVector pointwise_diff(const Event& p, const Event& q);
Event pointwise_min(const Event& p, const Event& q);
Event pointwise_max(const Event& p, const Event& q);
Event pointwise_product(const Event& p, const Event& q);

/// Throws ArityError unless both have the same arity.
void require_same_arity(std::size_t a, std::size_t b);

}  // namespace numev
