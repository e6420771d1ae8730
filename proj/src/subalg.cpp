#include "numev/subalg.hpp"

#include <algorithm>
#include <cstdint>

#include "numev/classify.hpp"
#include "numev/error.hpp"

namespace numev {

namespace {

using Index = EventFamily::Index;

constexpr std::size_t kMaxOracleOrbits = 24;
constexpr std::size_t kMaxChosen = 24;

}  // namespace

bool commutes(const EventFamily& f, Index p, Index q) {
    const auto qc = f.complement_index(q);
    if (!qc) return false;
    const auto a = f.meet(p, q);
    const auto b = f.meet(p, *qc);
    if (!a || !b) return false;
    const auto j = f.join(*a, *b);
    return j && *j == p;
}

bool commutes(const EventFamily& f, const Event& p, const Event& q) {
    return commutes(f, f.require_member(p), f.require_member(q));
}

bool is_infimum_faithful(const EventFamily& f) {
    for (Index p = 0; p < f.size(); ++p)
        for (Index q = 0; q < f.size(); ++q)
            if (f.meet(p, q).has_value() != commutes(f, p, q)) return false;
    return true;
}

ProductCriterionResult product_criterion(const EventFamily& f, std::span<const Event> chosen) {
    if (chosen.empty()) throw PreconditionError("product criterion needs at least one element");
    if (chosen.size() > kMaxChosen) throw PreconditionError("too many chosen elements");
    for (const auto& e : f.events())
        if (!e.is_two_valued())
            throw PreconditionError("product criterion requires {0,1}-valued events; " + e.str() +
                                    " is not");
    for (const auto& e : chosen) f.require_member(e);
    if (!check_condition(f, Condition::C1).holds || !check_condition(f, Condition::C2).holds ||
        !check_condition(f, Condition::C7).holds)
        throw PreconditionError("product criterion requires a structured family");

    const std::uint32_t subsets = std::uint32_t{1} << chosen.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        std::optional<Event> product;
        std::vector<Event> members;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            if (!(mask >> i & 1u)) continue;
            members.push_back(chosen[i]);
            product = product ? pointwise_product(*product, chosen[i]) : chosen[i];
        }
        if (!f.contains(*product)) return {false, std::move(members), product};
    }
    return {};
}

std::optional<std::vector<Event>> boolean_subalgebra_oracle(const EventFamily& f,
                                                            std::span<const Event> chosen) {
    const auto zero = f.zero_index();
    const auto one = f.one_index();
    if (!zero || !one) return std::nullopt;

    // Q is complement-closed, so it is a union of complement orbits {p, p'}.
    std::vector<std::vector<Index>> orbits;
    std::vector<std::size_t> orbit_of(f.size(), static_cast<std::size_t>(-1));
    for (Index i = 0; i < f.size(); ++i) {
        if (orbit_of[i] != static_cast<std::size_t>(-1)) continue;
        const auto c = f.complement_index(i);
        if (!c) continue;
        orbit_of[i] = orbit_of[*c] = orbits.size();
        orbits.push_back(i == *c ? std::vector<Index>{i} : std::vector<Index>{i, *c});
    }

    std::vector<char> required(orbits.size(), 0);
    required[orbit_of[*zero]] = 1;
    for (const auto& e : chosen) {
        const Index i = f.require_member(e);
        if (orbit_of[i] == static_cast<std::size_t>(-1)) return std::nullopt;
        required[orbit_of[i]] = 1;
    }
    std::vector<std::size_t> optional_orbits;
    for (std::size_t o = 0; o < orbits.size(); ++o)
        if (!required[o]) optional_orbits.push_back(o);
    if (optional_orbits.size() > kMaxOracleOrbits)
        throw PreconditionError("subalgebra search space too large");

    std::vector<std::vector<Index>> candidates;
    const std::uint64_t combos = std::uint64_t{1} << optional_orbits.size();
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
        std::vector<Index> q;
        for (std::size_t o = 0; o < orbits.size(); ++o) {
            bool take = required[o];
            if (!take) {
                const auto pos = std::find(optional_orbits.begin(), optional_orbits.end(), o) -
                                 optional_orbits.begin();
                take = mask >> pos & 1u;
            }
            if (take) q.insert(q.end(), orbits[o].begin(), orbits[o].end());
        }
        std::sort(q.begin(), q.end());
        candidates.push_back(std::move(q));
    }
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    for (const auto& q : candidates) {
        std::vector<char> in_q(f.size(), 0);
        for (auto i : q) in_q[i] = 1;
        bool closed = true;
        for (std::size_t a = 0; a < q.size() && closed; ++a)
            for (std::size_t b = a + 1; b < q.size() && closed; ++b) {
                const auto m = f.meet(q[a], q[b]);
                closed = m && in_q[*m];
            }
        if (!closed) continue;
        std::vector<Event> members;
        for (auto i : q) members.push_back(f.event(i));
        if (is_boolean_algebra(EventFamily(f.states(), members))) return members;
    }
    return std::nullopt;
}

}  // namespace numev
