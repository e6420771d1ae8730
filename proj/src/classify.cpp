#include "numev/classify.hpp"

#include <algorithm>

#include "numev/error.hpp"
#include "numev/subalg.hpp"

namespace numev {

namespace {

using Index = EventFamily::Index;

bool is_constant_member(const EventFamily& f, Index i) {
    return f.event(i).is_zero() || f.event(i).is_one();
}

template <std::size_t K>
bool advance(std::array<Index, K>& t, std::size_t n) {
    for (std::size_t pos = K; pos-- > 0;) {
        if (++t[pos] < n) return true;
        t[pos] = 0;
    }
    return false;
}

/// First K-tuple (in index order) for which `fails` holds. Tuples of
/// pairwise distinct non-constant members are scanned before the rest.
template <std::size_t K, typename Fails>
std::optional<std::array<Index, K>> first_failure(const EventFamily& f, Fails fails) {
    const std::size_t n = f.size();
    if (n == 0) return std::nullopt;
    for (int pass = 0; pass < 2; ++pass) {
        std::array<Index, K> t{};
        do {
            bool proper = true;
            for (std::size_t a = 0; a < K && proper; ++a) {
                if (is_constant_member(f, t[a])) proper = false;
                for (std::size_t b = a + 1; b < K && proper; ++b)
                    if (t[a] == t[b]) proper = false;
            }
            if (proper == (pass == 0) && fails(t)) return t;
        } while (advance(t, n));
    }
    return std::nullopt;
}

std::vector<char> orthogonality(const EventFamily& f) {
    const std::size_t n = f.size();
    std::vector<char> orth(n * n);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) orth[a * n + b] = is_orthogonal(f.event(a), f.event(b));
    return orth;
}

template <std::size_t K>
std::vector<Event> events_of(const EventFamily& f, const std::array<Index, K>& t) {
    std::vector<Event> out;
    for (auto i : t) out.push_back(f.event(i));
    return out;
}

template <std::size_t K>
PointwiseVector sum_of(const EventFamily& f, const std::array<Index, K>& t) {
    auto ev = events_of(f, t);
    return pointwise_sum(std::span<const Event>(ev));
}

bool bounded_involutive(const EventFamily& f) {
    if (!f.zero_index() || !f.one_index()) return false;
    for (Index i = 0; i < f.size(); ++i)
        if (!f.complement_index(i)) return false;
    return true;
}

void require_bounded_involutive(const EventFamily& f, const char* what) {
    if (!bounded_involutive(f))
        throw PreconditionError(std::string(what) + " requires conditions (1) and (2)");
}

ConditionVerdict fail(Condition c, std::vector<Event> witness, std::string reason,
                      std::optional<PointwiseVector> sum = std::nullopt) {
    ConditionVerdict v{c, false, std::move(witness), std::move(sum), std::nullopt, std::move(reason)};
    return v;
}

ConditionVerdict check_pair_sum(const EventFamily& f, Condition c, const std::vector<char>& rel) {
    const std::size_t n = f.size();
    auto t = first_failure<2>(f, [&](const std::array<Index, 2>& t) {
        return rel[t[0] * n + t[1]] && !f.index_of(sum_of(f, t));
    });
    if (!t) return {c};
    return fail(c, events_of(f, *t), "sum-not-member", sum_of(f, *t));
}

ConditionVerdict check_chain(const EventFamily& f, Condition c, bool membership) {
    const std::size_t n = f.size();
    const auto orth = orthogonality(f);
    auto t = first_failure<3>(f, [&](const std::array<Index, 3>& t) {
        if (!orth[t[0] * n + t[1]] || !orth[t[1] * n + t[2]] || !f.disjoint(t[0], t[2])) return false;
        const auto s = sum_of(f, t);
        return membership ? !f.index_of(s) : !s.bounded_by_one();
    });
    if (!t) return {c};
    return fail(c, events_of(f, *t), membership ? "sum-not-member" : "sum-exceeds-one",
                sum_of(f, *t));
}

ConditionVerdict check_disjoint_sum_is_bound(const EventFamily& f, Condition c, bool use_supremum) {
    std::optional<Event> sup;
    std::string reason;
    auto t = first_failure<2>(f, [&](const std::array<Index, 2>& t) {
        if (!f.disjoint(t[0], t[1])) return false;
        const auto s = sum_of(f, t);
        const auto member = f.index_of(s);
        sup.reset();
        if (use_supremum) {
            if (auto j = f.join(t[0], t[1])) sup = f.event(*j);
        } else {
            sup = pointwise_max(f.event(t[0]), f.event(t[1]));
        }
        if (!member) {
            reason = "sum-not-member";
            return true;
        }
        if (!sup) {
            reason = "supremum-missing";
            return true;
        }
        if (f.event(*member) != *sup) {
            reason = use_supremum ? "sum-not-supremum" : "sum-not-pointwise-max";
            return true;
        }
        return false;
    });
    if (!t) return {c};
    auto v = fail(c, events_of(f, *t), reason, sum_of(f, *t));
    v.supremum = sup;
    return v;
}

}  // namespace

int condition_number(Condition c) noexcept { return static_cast<int>(c); }

ConditionVerdict check_condition(const EventFamily& f, Condition c) {
    const std::size_t n = f.size();
    switch (c) {
        case Condition::C1:
            if (!f.zero_index()) return fail(c, {Event::zero(f.arity())}, "missing-zero");
            if (!f.one_index()) return fail(c, {Event::one(f.arity())}, "missing-one");
            return {c};
        case Condition::C2: {
            auto t = first_failure<1>(f, [&](const std::array<Index, 1>& t) {
                return !f.complement_index(t[0]);
            });
            if (!t) return {c};
            return fail(c, {f.event((*t)[0]), complement(f.event((*t)[0]))}, "complement-not-member");
        }
        case Condition::C3: {
            std::vector<char> rel(n * n);
            for (Index a = 0; a < n; ++a)
                for (Index b = 0; b < n; ++b) rel[a * n + b] = f.disjoint(a, b);
            return check_pair_sum(f, c, rel);
        }
        case Condition::C4:
            return check_pair_sum(f, c, orthogonality(f));
        case Condition::C5: {
            const auto orth = orthogonality(f);
            auto t = first_failure<3>(f, [&](const std::array<Index, 3>& t) {
                return orth[t[0] * n + t[1]] && orth[t[1] * n + t[2]] && orth[t[2] * n + t[0]] &&
                       !f.index_of(sum_of(f, t));
            });
            if (!t) return {c};
            return fail(c, events_of(f, *t), "sum-not-member", sum_of(f, *t));
        }
        case Condition::C6:
            return check_disjoint_sum_is_bound(f, c, true);
        case Condition::C7:
            return check_chain(f, c, true);
        case Condition::C8:
            return check_chain(f, c, false);
    }
    throw std::invalid_argument("unknown condition");
}

ConditionVerdict check_condition6_pointwise(const EventFamily& f) {
    return check_disjoint_sum_is_bound(f, Condition::C6, false);
}

bool is_varying(const Event& p) {
    if (p.is_zero() || p.is_one()) return true;
    const auto half = Rational::half();
    bool above = false;
    bool below = false;
    for (const auto& v : p.values()) {
        above = above || v > half;
        below = below || v < half;
    }
    return above && below;
}

bool all_varying(const EventFamily& f) {
    return std::all_of(f.events().begin(), f.events().end(), is_varying);
}

std::string_view flag_name(ClassFlag flag) noexcept {
    switch (flag) {
        case ClassFlag::Specific: return "specific";
        case ClassFlag::VeeSpecific: return "vee_specific";
        case ClassFlag::Structured: return "structured";
        case ClassFlag::WeaklyStructured: return "weakly_structured";
        case ClassFlag::Gfe: return "gfe";
        case ClassFlag::Algebra: return "algebra_of_s_probabilities";
        case ClassFlag::BooleanPoset: return "boolean_poset";
        case ClassFlag::Orthoposet: return "orthoposet";
        case ClassFlag::Complemented: return "complemented";
        case ClassFlag::AllVarying: return "all_varying";
        case ClassFlag::ConcreteLogicForm: return "concrete_logic_form";
        case ClassFlag::Lattice: return "lattice";
        case ClassFlag::BooleanAlgebra: return "boolean_algebra";
        case ClassFlag::InfimumFaithful: return "infimum_faithful";
        case ClassFlag::Orthomodular: return "orthomodular";
    }
    return "?";
}

std::optional<ClassFlag> parse_flag(std::string_view name) {
    if (name == "C1" || name == "c1") return ClassFlag::Specific;
    if (name == "C2" || name == "c2") return ClassFlag::VeeSpecific;
    if (name == "C3" || name == "c3") return ClassFlag::Structured;
    if (name == "C4" || name == "c4") return ClassFlag::WeaklyStructured;
    if (name == "algebra") return ClassFlag::Algebra;
    for (auto f : kAllFlags)
        if (flag_name(f) == name) return f;
    return std::nullopt;
}

PropertyVerdict check_complemented(const EventFamily& f) {
    require_bounded_involutive(f, "complementedness");
    for (Index i = 0; i < f.size(); ++i) {
        const Index c = *f.complement_index(i);
        if (f.disjoint(i, c)) continue;
        for (Index x = 0; x < f.size(); ++x)
            if (f.leq(x, i) && f.leq(x, c) && !f.event(x).is_zero())
                return {false, {f.event(i), f.event(x)}, "nonzero-common-lower-bound"};
    }
    return {};
}

bool is_complemented(const EventFamily& f) { return check_complemented(f).holds; }
bool is_orthoposet(const EventFamily& f) { return is_complemented(f); }

PropertyVerdict check_boolean_poset(const EventFamily& f) {
    require_bounded_involutive(f, "boolean poset check");
    auto t = first_failure<2>(f, [&](const std::array<Index, 2>& t) {
        return f.disjoint(t[0], t[1]) && !is_orthogonal(f.event(t[0]), f.event(t[1]));
    });
    if (!t) return {};
    return {false, events_of(f, *t), "disjoint-not-orthogonal"};
}

bool is_boolean_poset(const EventFamily& f) { return check_boolean_poset(f).holds; }

PropertyVerdict check_concrete_logic_form(const EventFamily& f) {
    for (const auto& e : f.events())
        if (!e.is_two_valued()) return {false, {e}, "not-two-valued"};
    if (!f.zero_index()) return {false, {Event::zero(f.arity())}, "missing-empty-set"};
    if (!f.one_index()) return {false, {Event::one(f.arity())}, "missing-full-set"};
    for (Index i = 0; i < f.size(); ++i)
        if (!f.complement_index(i)) return {false, {f.event(i)}, "complement-not-member"};
    for (Index a = 0; a < f.size(); ++a)
        for (Index b = a + 1; b < f.size(); ++b) {
            if (!is_orthogonal(f.event(a), f.event(b))) continue;
            if (!f.index_of(pointwise_sum({f.event(a), f.event(b)})))
                return {false, {f.event(a), f.event(b)}, "disjoint-union-not-member"};
        }
    return {};
}

bool is_concrete_logic_form(const EventFamily& f) { return check_concrete_logic_form(f).holds; }

bool is_gfe(const EventFamily& f) {
    return check_condition(f, Condition::C1).holds && check_condition(f, Condition::C2).holds &&
           check_condition(f, Condition::C4).holds;
}

bool is_algebra(const EventFamily& f) { return is_gfe(f) && check_condition(f, Condition::C5).holds; }

bool is_specific(const EventFamily& f) {
    return check_condition(f, Condition::C1).holds && check_condition(f, Condition::C2).holds &&
           check_condition(f, Condition::C3).holds;
}

PropertyVerdict check_lattice(const EventFamily& f) {
    for (Index a = 0; a < f.size(); ++a)
        for (Index b = a + 1; b < f.size(); ++b) {
            if (!f.meet(a, b)) return {false, {f.event(a), f.event(b)}, "no-infimum"};
            if (!f.join(a, b)) return {false, {f.event(a), f.event(b)}, "no-supremum"};
        }
    return {};
}

bool is_lattice(const EventFamily& f) { return check_lattice(f).holds; }

bool lattice_criterion(const EventFamily& f) {
    if (!is_concrete_logic_form(f)) throw PreconditionError("lattice criterion requires a concrete logic");
    if (!check_condition(f, Condition::C7).holds)
        throw PreconditionError("lattice criterion requires a structured family");
    for (Index a = 0; a < f.size(); ++a)
        for (Index b = a + 1; b < f.size(); ++b)
            if (!f.contains(pointwise_max(f.event(a), f.event(b)))) return false;
    return true;
}

PropertyVerdict demorgan_check(const EventFamily& f) {
    require_bounded_involutive(f, "De Morgan check");
    for (Index a = 0; a < f.size(); ++a)
        for (Index b = a; b < f.size(); ++b) {
            const Index ca = *f.complement_index(a);
            const Index cb = *f.complement_index(b);
            if (auto j = f.join(a, b)) {
                auto m = f.meet(ca, cb);
                if (!m || *m != *f.complement_index(*j))
                    return {false, {f.event(a), f.event(b)}, "complement-of-join-not-meet"};
            }
            if (auto m = f.meet(a, b)) {
                auto j = f.join(ca, cb);
                if (!j || *j != *f.complement_index(*m))
                    return {false, {f.event(a), f.event(b)}, "complement-of-meet-not-join"};
            }
        }
    return {};
}

PropertyVerdict check_orthomodular(const EventFamily& f) {
    if (!is_orthoposet(f)) throw PreconditionError("orthomodularity requires an orthoposet");
    for (Index p = 0; p < f.size(); ++p)
        for (Index q = 0; q < f.size(); ++q) {
            if (!f.leq(p, q)) continue;
            auto m = f.meet(*f.complement_index(p), q);
            if (!m) return {false, {f.event(p), f.event(q)}, "no-infimum-of-complement"};
            auto j = f.join(p, *m);
            if (!j || *j != q) return {false, {f.event(p), f.event(q)}, "orthomodular-law-fails"};
        }
    return {};
}

bool is_orthomodular(const EventFamily& f) { return check_orthomodular(f).holds; }

PropertyVerdict check_boolean_algebra(const EventFamily& f) {
    if (!bounded_involutive(f)) return {false, {}, "not-bounded-with-complements"};
    if (auto l = check_lattice(f); !l.holds) return l;
    if (auto c = check_complemented(f); !c.holds) return c;
    const std::size_t n = f.size();
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (Index c = b + 1; c < n; ++c) {
                const Index lhs = *f.meet(a, *f.join(b, c));
                const Index rhs = *f.join(*f.meet(a, b), *f.meet(a, c));
                if (lhs != rhs)
                    return {false, {f.event(a), f.event(b), f.event(c)}, "not-distributive"};
            }
    return {};
}

bool is_boolean_algebra(const EventFamily& f) { return check_boolean_algebra(f).holds; }

ClassificationReport classify(const EventFamily& f) {
    ClassificationReport r;
    for (auto c : kAllConditions) r.conditions[condition_number(c) - 1] = check_condition(f, c);
    r.condition6_pointwise = check_condition6_pointwise(f);

    auto holds = [&](Condition c) { return r.condition(c).holds; };
    auto set = [&](ClassFlag flag, bool v) { r.flags[static_cast<std::size_t>(flag)] = v; };

    const bool base = holds(Condition::C1) && holds(Condition::C2);
    const bool specific = base && holds(Condition::C3);
    const bool vee = specific && holds(Condition::C6);
    const bool structured = base && holds(Condition::C7);
    const bool weakly = base && holds(Condition::C8);
    const bool gfe = base && holds(Condition::C4);
    const bool complemented = base && is_complemented(f);
    const bool concrete = is_concrete_logic_form(f);
    const bool lattice = is_lattice(f);

    set(ClassFlag::Specific, specific);
    set(ClassFlag::VeeSpecific, vee);
    set(ClassFlag::Structured, structured);
    set(ClassFlag::WeaklyStructured, weakly);
    set(ClassFlag::Gfe, gfe);
    set(ClassFlag::Algebra, gfe && holds(Condition::C5));
    set(ClassFlag::BooleanPoset, base && is_boolean_poset(f));
    set(ClassFlag::Orthoposet, complemented);
    set(ClassFlag::Complemented, complemented);
    set(ClassFlag::AllVarying, all_varying(f));
    set(ClassFlag::ConcreteLogicForm, concrete);
    set(ClassFlag::Lattice, lattice);
    set(ClassFlag::BooleanAlgebra, is_boolean_algebra(f));
    set(ClassFlag::InfimumFaithful, is_infimum_faithful(f));
    set(ClassFlag::Orthomodular, complemented && is_orthomodular(f));

    if (structured && concrete) r.lattice_criterion = lattice_criterion(f);

    auto expect = [&](bool ok, const char* law) {
        if (!ok) r.internal_errors.emplace_back(law);
    };
    expect(!structured || specific, "structured => specific");
    expect(!structured || vee, "structured => vee_specific");
    expect(!vee || weakly, "vee_specific => weakly_structured");
    expect(vee == (specific && weakly), "vee_specific <=> specific and weakly_structured");
    expect(!r.lattice_criterion || *r.lattice_criterion == lattice,
           "lattice criterion agrees with lattice check");
    expect(!base || demorgan_check(f).holds, "De Morgan laws under (1),(2)");
    return r;
}

}  // namespace numev
