#include "numev/states.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "numev/classify.hpp"
#include "numev/error.hpp"

namespace numev {

namespace {

using Index = AbstractBoundedPoset::Index;

constexpr std::size_t kMaxTwoValuedOrbits = 24;

AxiomVerdict violated(std::vector<std::string> witness, std::string reason) {
    return {false, std::move(witness), std::move(reason)};
}

std::string pair_text(const AbstractBoundedPoset& p, Index a, Index b) {
    return "(" + p.label(a) + ", " + p.label(b) + ")";
}

StateVerdict check_state(const AbstractBoundedPoset& P, std::span<const Rational> s, bool pseudo) {
    if (s.size() != P.size()) throw ValidationError("state does not assign every element");
    StateVerdict v;
    if (!s[P.bottom()].is_zero())
        v.s1 = violated({P.label(P.bottom())}, "bottom-not-zero");
    else if (!s[P.top()].is_one())
        v.s1 = violated({P.label(P.top())}, "top-not-one");

    for (Index p = 0; p < P.size() && v.s2.holds; ++p)
        if (s[P.involution(p)] != Rational::one() - s[p])
            v.s2 = violated({P.label(p), P.label(P.involution(p))}, "complement-not-one-minus");

    for (Index p = 0; p < P.size() && v.s3.holds; ++p)
        for (Index q = 0; q < P.size() && v.s3.holds; ++q)
            if (P.leq(p, q) && s[p] > s[q]) v.s3 = violated({P.label(p), P.label(q)}, "not-monotone");

    for (Index p = 0; p < P.size() && v.s4.holds; ++p)
        for (Index q = 0; q < P.size() && v.s4.holds; ++q) {
            if (!P.disjoint(p, q)) continue;
            const Rational target = s[p] + s[q];
            bool found = false;
            for (Index r = 0; r < P.size() && !found; ++r)
                found = P.leq(p, r) && P.leq(q, r) && s[r] == target;
            if (!found) v.s4 = violated({P.label(p), P.label(q)}, "no-additive-upper-bound");
        }

    if (pseudo) {
        AxiomVerdict s5;
        for (Index p = 0; p < P.size() && s5.holds; ++p)
            for (Index q = 0; q < P.size() && s5.holds; ++q) {
                if (!P.disjoint(p, q)) continue;
                const auto j = P.join(p, q);
                if (!j)
                    throw PreconditionError("pseudostate needs the join of disjoint pair " +
                                            pair_text(P, p, q));
                if (s[*j] != s[p] + s[q]) s5 = violated({P.label(p), P.label(q)}, "join-not-additive");
            }
        v.s5 = s5;
    }
    return v;
}

}  // namespace

AbstractBoundedPoset::AbstractBoundedPoset(
    std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& order,
    const std::vector<std::pair<std::string, std::string>>& involution, const std::string& bottom,
    const std::string& top)
    : labels_(std::move(elements)) {
    if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size())
        throw ValidationError("duplicate element label");
    auto require = [&](const std::string& label, const std::string& where) {
        auto i = index_of(label);
        if (!i) throw ValidationError("unknown element '" + label + "' in " + where);
        return *i;
    };
    const std::size_t n = size();
    leq_.assign(n * n, 0);
    for (Index i = 0; i < n; ++i) leq_[i * n + i] = 1;
    for (const auto& [a, b] : order) leq_[require(a, "order") * n + require(b, "order")] = 1;
    for (Index k = 0; k < n; ++k)
        for (Index i = 0; i < n; ++i)
            if (leq_[i * n + k])
                for (Index j = 0; j < n; ++j)
                    if (leq_[k * n + j]) leq_[i * n + j] = 1;

    involution_.assign(n, static_cast<Index>(-1));
    for (const auto& [a, b] : involution) {
        const Index i = require(a, "involution");
        const Index j = require(b, "involution");
        if (involution_[i] != static_cast<Index>(-1) && involution_[i] != j)
            throw ValidationError("involution maps '" + a + "' twice");
        involution_[i] = j;
    }
    for (Index i = 0; i < n; ++i)
        if (involution_[i] == static_cast<Index>(-1))
            throw ValidationError("involution undefined on '" + labels_[i] + "'");
    bottom_ = require(bottom, "bottom");
    top_ = require(top, "top");
    validate();
}

void AbstractBoundedPoset::validate() const {
    const std::size_t n = size();
    for (Index a = 0; a < n; ++a)
        for (Index b = a + 1; b < n; ++b)
            if (leq(a, b) && leq(b, a))
                throw ValidationError("order is not antisymmetric on " + pair_text(*this, a, b));
    for (Index x = 0; x < n; ++x) {
        if (!leq(bottom_, x)) throw ValidationError("bottom is not below '" + labels_[x] + "'");
        if (!leq(x, top_)) throw ValidationError("top is not above '" + labels_[x] + "'");
        if (involution(involution(x)) != x)
            throw ValidationError("involution is not self-inverse at '" + labels_[x] + "'");
    }
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (leq(a, b) && !leq(involution(b), involution(a)))
                throw ValidationError("involution is not antitone on " + pair_text(*this, a, b));
    if (involution(bottom_) != top_) throw ValidationError("involution does not map bottom to top");
}

std::optional<Index> AbstractBoundedPoset::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Index>(it - labels_.begin());
}

bool AbstractBoundedPoset::disjoint(Index a, Index b) const {
    for (Index x = 0; x < size(); ++x)
        if (x != bottom_ && leq(x, a) && leq(x, b)) return false;
    return true;
}

std::optional<Index> AbstractBoundedPoset::meet(Index a, Index b) const {
    for (Index m = 0; m < size(); ++m) {
        if (!leq(m, a) || !leq(m, b)) continue;
        bool greatest = true;
        for (Index x = 0; x < size() && greatest; ++x)
            if (leq(x, a) && leq(x, b) && !leq(x, m)) greatest = false;
        if (greatest) return m;
    }
    return std::nullopt;
}

std::optional<Index> AbstractBoundedPoset::join(Index a, Index b) const {
    for (Index j = 0; j < size(); ++j) {
        if (!leq(a, j) || !leq(b, j)) continue;
        bool least = true;
        for (Index x = 0; x < size() && least; ++x)
            if (leq(a, x) && leq(b, x) && !leq(j, x)) least = false;
        if (least) return j;
    }
    return std::nullopt;
}

AbstractBoundedPoset poset_of(const EventFamily& f) {
    if (!check_condition(f, Condition::C1).holds || !check_condition(f, Condition::C2).holds)
        throw PreconditionError("poset extraction requires conditions (1) and (2)");
    AbstractBoundedPoset p;
    const std::size_t n = f.size();
    for (const auto& e : f.events()) p.labels_.push_back(e.str());
    p.leq_.resize(n * n);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) p.leq_[a * n + b] = f.leq(a, b);
    for (Index i = 0; i < n; ++i) p.involution_.push_back(*f.complement_index(i));
    p.bottom_ = *f.zero_index();
    p.top_ = *f.one_index();
    return p;
}

void validate_table(const AbstractBoundedPoset& P, const StateTable& T) {
    if (T.names.size() != T.rows.size()) throw ValidationError("state names and rows differ in number");
    if (std::set<std::string>(T.names.begin(), T.names.end()).size() != T.names.size())
        throw ValidationError("duplicate state name");
    for (std::size_t s = 0; s < T.rows.size(); ++s) {
        if (T.rows[s].size() != P.size())
            throw ValidationError("state '" + T.names[s] + "' does not assign every element");
        for (const auto& v : T.rows[s])
            if (v > Rational::one())
                throw ValidationError("state '" + T.names[s] + "' has value " + v.str() + " above 1");
    }
}

StateVerdict check_specific_state(const AbstractBoundedPoset& P, std::span<const Rational> s) {
    return check_state(P, s, false);
}

StateVerdict check_pseudostate(const AbstractBoundedPoset& P, std::span<const Rational> s) {
    return check_state(P, s, true);
}

FullnessVerdict check_full(const AbstractBoundedPoset& P, const StateTable& T) {
    validate_table(P, T);
    for (Index p = 0; p < P.size(); ++p)
        for (Index q = 0; q < P.size(); ++q) {
            if (P.leq(p, q)) continue;
            const bool dominated = std::all_of(T.rows.begin(), T.rows.end(),
                                               [&](const auto& row) { return row[p] <= row[q]; });
            if (dominated) return {false, std::make_pair(P.label(p), P.label(q))};
        }
    return {};
}

bool is_full(const AbstractBoundedPoset& P, const StateTable& T) { return check_full(P, T).holds; }

UniformityVerdict check_uniform(const AbstractBoundedPoset& P, const StateTable& T) {
    validate_table(P, T);
    for (Index p = 0; p < P.size(); ++p)
        for (Index q = 0; q < P.size(); ++q) {
            if (!P.disjoint(p, q)) continue;
            std::vector<Rational> required;
            for (const auto& row : T.rows) required.push_back(row[p] + row[q]);
            bool found = false;
            for (Index r = 0; r < P.size() && !found; ++r) {
                if (!P.leq(p, r) || !P.leq(q, r)) continue;
                found = true;
                for (std::size_t s = 0; s < T.rows.size() && found; ++s)
                    found = T.rows[s][r] == required[s];
            }
            if (!found)
                return {false, std::make_pair(P.label(p), P.label(q)), PointwiseVector(std::move(required))};
        }
    return {};
}

bool is_uniform(const AbstractBoundedPoset& P, const StateTable& T) { return check_uniform(P, T).holds; }

StateTable canonical_states(const EventFamily& f) {
    StateTable t;
    t.names = f.states();
    t.rows.resize(f.arity());
    for (std::size_t x = 0; x < f.arity(); ++x)
        for (const auto& e : f.events()) t.rows[x].push_back(e[x]);
    return t;
}

namespace {

std::vector<Event> images(const AbstractBoundedPoset& P, const StateTable& T) {
    std::vector<Event> out;
    out.reserve(P.size());
    for (Index u = 0; u < P.size(); ++u) {
        std::vector<Rational> v;
        v.reserve(T.size());
        for (const auto& row : T.rows) v.push_back(row[u]);
        out.emplace_back(std::move(v));
    }
    return out;
}

}  // namespace

ConcreteRepresentation build_representation(const AbstractBoundedPoset& P, const StateTable& T) {
    validate_table(P, T);
    for (std::size_t s = 0; s < T.size(); ++s) {
        const auto v = check_specific_state(P, T.rows[s]);
        if (!v.holds())
            throw PreconditionError("state '" + T.names[s] + "' is not a specific state");
    }
    if (auto full = check_full(P, T); !full.holds)
        throw PreconditionError("state table is not full: pair (" + full.pair->first + ", " +
                                full.pair->second + ")");
    if (auto uni = check_uniform(P, T); !uni.holds)
        throw PreconditionError("state table is not uniform: pair (" + uni.pair->first + ", " +
                                uni.pair->second + ") needs r = " + uni.required->str());
    auto map = images(P, T);
    EventFamily carrier(T.names, map);
    return {std::move(carrier), std::move(map)};
}

bool is_isomorphism(const AbstractBoundedPoset& P, const EventFamily& F, std::span<const Event> map) {
    if (map.size() != P.size() || F.size() != P.size()) return false;
    std::vector<std::size_t> idx;
    std::vector<char> hit(F.size(), 0);
    for (const auto& e : map) {
        auto i = F.index_of(e);
        if (!i || hit[*i]) return false;
        hit[*i] = 1;
        idx.push_back(*i);
    }
    for (Index a = 0; a < P.size(); ++a) {
        if (F.complement_index(idx[a]) != idx[P.involution(a)]) return false;
        for (Index b = 0; b < P.size(); ++b)
            if (P.leq(a, b) != F.leq(idx[a], idx[b])) return false;
    }
    return true;
}

StateTable two_valued_states(const EventFamily& f) {
    const auto P = poset_of(f);
    std::vector<std::pair<Index, Index>> orbits;
    std::vector<char> seen(P.size(), 0);
    for (Index i = 0; i < P.size(); ++i) {
        if (seen[i]) continue;
        const Index c = P.involution(i);
        if (c == i) return {};  // s(p) = 1 - s(p) has no {0,1} solution
        seen[i] = seen[c] = 1;
        if (i != P.bottom() && i != P.top()) orbits.emplace_back(i, c);
    }
    if (orbits.size() > kMaxTwoValuedOrbits) throw PreconditionError("too many elements for two-valued state search");

    StateTable t;
    std::vector<Rational> row(P.size());
    row[P.bottom()] = Rational::zero();
    row[P.top()] = Rational::one();
    const std::uint64_t combos = std::uint64_t{1} << orbits.size();
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
        for (std::size_t k = 0; k < orbits.size(); ++k) {
            const bool bit = mask >> k & 1u;
            row[orbits[k].first] = bit ? Rational::one() : Rational::zero();
            row[orbits[k].second] = bit ? Rational::zero() : Rational::one();
        }
        if (!check_specific_state(P, row).holds()) continue;
        t.names.push_back("t" + std::to_string(t.rows.size() + 1));
        t.rows.push_back(row);
    }
    return t;
}

std::optional<ConcreteRepresentation> two_valued_representation(const EventFamily& f) {
    if (!check_condition(f, Condition::C1).holds || !check_condition(f, Condition::C2).holds)
        return std::nullopt;
    const auto P = poset_of(f);
    const auto T = two_valued_states(f);
    if (!is_full(P, T)) return std::nullopt;
    auto map = images(P, T);
    EventFamily carrier(T.names, map);
    return ConcreteRepresentation{std::move(carrier), std::move(map)};
}

Theorem4Check check_theorem4_shape(const EventFamily& f) {
    Theorem4Check r;
    const bool base = check_condition(f, Condition::C1).holds && check_condition(f, Condition::C2).holds;
    r.vee_specific = base && check_condition(f, Condition::C3).holds && check_condition(f, Condition::C6).holds;
    if (!base) return r;

    r.sums_are_joins = true;
    for (std::size_t a = 0; a < f.size() && r.sums_are_joins; ++a)
        for (std::size_t b = 0; b < f.size() && r.sums_are_joins; ++b) {
            if (!f.disjoint(a, b)) continue;
            const auto sum = f.index_of(pointwise_sum({f.event(a), f.event(b)}));
            r.sums_are_joins = sum && f.join(a, b) == sum;
        }

    const auto P = poset_of(f);
    const auto T = canonical_states(f);
    try {
        r.full_pseudostates = is_full(P, T) && std::all_of(T.rows.begin(), T.rows.end(), [&](const auto& row) {
                                  return check_pseudostate(P, row).holds();
                              });
    } catch (const PreconditionError&) {
        r.full_pseudostates = false;
    }
    return r;
}

}  // namespace numev
