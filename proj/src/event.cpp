#include "numev/event.hpp"

#include <algorithm>
#include <ostream>

#include "numev/error.hpp"

namespace numev {

namespace {

std::string join_values(std::span<const Rational> values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += values[i].str();
    }
    out += ')';
    return out;
}

template <typename Op>
Event zip(const Event& p, const Event& q, Op op) {
    require_same_arity(p.arity(), q.arity());
    std::vector<Rational> out;
    out.reserve(p.arity());
    for (std::size_t i = 0; i < p.arity(); ++i) out.push_back(op(p[i], q[i]));
    return Event(std::move(out));
}

}  // namespace

void require_same_arity(std::size_t a, std::size_t b) {
    if (a != b)
        throw ArityError("arity mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

PointwiseVector::PointwiseVector(std::vector<Rational> values) : values_(std::move(values)) {}

bool PointwiseVector::bounded_by_one() const noexcept {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Rational& v) { return v <= Rational::one(); });
}

std::optional<Event> PointwiseVector::as_event() const {
    if (!bounded_by_one()) return std::nullopt;
    return Event(values_);
}

std::string PointwiseVector::str() const { return join_values(values_); }

Event::Event(std::vector<Rational> values) : values_(std::move(values)) {
    for (const auto& v : values_)
        if (v > Rational::one()) throw RangeError("event value " + v.str() + " exceeds 1");
}

Event Event::constant(std::size_t arity, const Rational& value) {
    return Event(std::vector<Rational>(arity, value));
}

bool Event::is_zero() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v.is_zero(); });
}

bool Event::is_one() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v.is_one(); });
}

bool Event::is_two_valued() const noexcept {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Rational& v) { return v.is_zero() || v.is_one(); });
}

std::string Event::str() const { return join_values(values_); }

std::strong_ordering operator<=>(const Event& a, const Event& b) {
    return std::lexicographical_compare_three_way(a.values_.begin(), a.values_.end(),
                                                  b.values_.begin(), b.values_.end());
}

std::ostream& operator<<(std::ostream& os, const Event& e) { return os << e.str(); }
std::ostream& operator<<(std::ostream& os, const PointwiseVector& v) { return os << v.str(); }

bool leq(const Event& p, const Event& q) {
    require_same_arity(p.arity(), q.arity());
    for (std::size_t i = 0; i < p.arity(); ++i)
        if (p[i] > q[i]) return false;
    return true;
}

Event complement(const Event& p) {
    std::vector<Rational> out;
    out.reserve(p.arity());
    for (const auto& v : p.values()) out.push_back(Rational::one() - v);
    return Event(std::move(out));
}

bool is_orthogonal(const Event& p, const Event& q) {
    require_same_arity(p.arity(), q.arity());
    for (std::size_t i = 0; i < p.arity(); ++i)
        if (p[i] + q[i] > Rational::one()) return false;
    return true;
}

PointwiseVector pointwise_sum(std::span<const Event> events) {
    if (events.empty()) throw std::invalid_argument("pointwise_sum of an empty list");
    std::vector<Rational> out(events.front().values().begin(), events.front().values().end());
    for (const auto& e : events.subspan(1)) {
        require_same_arity(out.size(), e.arity());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += e[i];
    }
    return PointwiseVector(std::move(out));
}

PointwiseVector pointwise_sum(std::initializer_list<Event> events) {
    return pointwise_sum(std::span<const Event>(events.begin(), events.size()));
}

PointwiseVector pointwise_diff(const Event& p, const Event& q) {
    require_same_arity(p.arity(), q.arity());
    std::vector<Rational> out;
    out.reserve(p.arity());
    for (std::size_t i = 0; i < p.arity(); ++i) out.push_back(p[i] - q[i]);
    return PointwiseVector(std::move(out));
}

Event pointwise_min(const Event& p, const Event& q) {
    return zip(p, q, [](const Rational& a, const Rational& b) { return std::min(a, b); });
}

Event pointwise_max(const Event& p, const Event& q) {
    return zip(p, q, [](const Rational& a, const Rational& b) { return std::max(a, b); });
}

Event pointwise_product(const Event& p, const Event& q) {
    return zip(p, q, [](const Rational& a, const Rational& b) { return a * b; });
}

}  // namespace numev
