#include "numev/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

#include "numev/error.hpp"
#include "numev/states.hpp"
#include "numev/subalg.hpp"

namespace numev {

namespace {

using IndexSet = std::vector<std::uint16_t>;

constexpr std::size_t kMaxGridPoints = std::numeric_limits<std::uint16_t>::max();
constexpr std::size_t kMaxMaterialised = 20'000'000;

struct Units {
    std::vector<std::vector<std::uint16_t>> members;
    std::vector<char> required;
    bool all_singletons = true;
};

Units build_units(const SearchSpace& space, std::size_t grid_size) {
    Units u;
    const bool closed = space.has(Prefilter::ComplementClosed);
    // The complement of grid point i is grid point (N-1-i).
    for (std::size_t i = 0; i < grid_size; ++i) {
        const std::size_t c = grid_size - 1 - i;
        if (closed) {
            if (c < i) continue;
            if (c == i)
                u.members.push_back({static_cast<std::uint16_t>(i)});
            else
                u.members.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(c)});
        } else {
            u.members.push_back({static_cast<std::uint16_t>(i)});
        }
    }
    u.all_singletons = !closed;
    u.required.assign(u.members.size(), 0);
    if (space.has(Prefilter::ContainsBounds)) {
        u.required.front() = 1;  // contains grid point 0
        for (std::size_t k = 0; k < u.members.size(); ++k)
            for (auto m : u.members[k])
                if (m == grid_size - 1) u.required[k] = 1;
    }
    return u;
}

class Enumerator {
public:
    Enumerator(const Units& units, std::size_t max_size, std::optional<std::size_t> stop_after)
        : units_(units), max_size_(max_size), stop_after_(stop_after) {}

    std::vector<IndexSet> run() {
        IndexSet current;
        dfs(0, current);
        return std::move(out_);
    }

private:
    bool done() const { return stop_after_ && out_.size() >= *stop_after_; }

    void dfs(std::size_t next, IndexSet& current) {
        if (done()) return;
        const bool required_left =
            std::find(units_.required.begin() + static_cast<std::ptrdiff_t>(next), units_.required.end(), 1) !=
            units_.required.end();
        if (!current.empty() && !required_left) {
            out_.push_back(current);
            if (out_.size() > kMaxMaterialised) throw std::length_error("search space too large to enumerate");
        }
        for (std::size_t j = next; j < units_.members.size() && !done(); ++j) {
            const auto& m = units_.members[j];
            if (current.size() + m.size() <= max_size_) {
                current.insert(current.end(), m.begin(), m.end());
                dfs(j + 1, current);
                current.resize(current.size() - m.size());
            }
            if (units_.required[j]) break;  // skipping a required unit is never valid
        }
    }

    const Units& units_;
    std::size_t max_size_;
    std::optional<std::size_t> stop_after_;
    std::vector<IndexSet> out_;
};

EventFamily materialise(const SearchSpace& space, const std::vector<Event>& grid, const IndexSet& set) {
    std::vector<Event> events;
    events.reserve(set.size());
    for (auto i : set) events.push_back(grid[i]);
    return EventFamily::with_default_states(space.num_states, std::move(events));
}

std::size_t worker_count(const SearchOptions& options, std::size_t jobs) {
    return std::max<std::size_t>(1, std::min(options.workers, jobs));
}

/// Runs body(begin, end, worker) over contiguous ranges of [0, jobs).
template <typename Body>
void parallel_ranges(std::size_t jobs, std::size_t workers, Body body) {
    if (workers <= 1) {
        body(std::size_t{0}, jobs, std::size_t{0});
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    const std::size_t chunk = (jobs + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(jobs, w * chunk);
        const std::size_t end = std::min(jobs, begin + chunk);
        threads.emplace_back([&, begin, end, w] {
            try {
                body(begin, end, w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::vector<IndexSet> budgeted_sets(const SearchSpace& space, const SearchOptions& options, bool& truncated) {
    std::optional<std::size_t> limit;
    if (options.budget) limit = *options.budget + 1;
    auto sets = canonical_index_sets(space, limit);
    truncated = options.budget && sets.size() > *options.budget;
    if (truncated) sets.resize(*options.budget);
    return sets;
}

struct FamilyOutcome {
    std::array<bool, kAllFlags.size()> flags{};
    bool c6_supremum = false;
    bool c6_pointwise = false;
    std::vector<Violation> violations;
};

}  // namespace

bool SearchSpace::has(Prefilter p) const { return std::find(require.begin(), require.end(), p) != require.end(); }

void SearchSpace::validate() const {
    if (num_states == 0) throw std::invalid_argument("search space needs at least one state");
    if (denominator <= 0) throw std::invalid_argument("denominator must be positive");
    if (max_family_size < 2) throw std::invalid_argument("max family size must be at least 2");
    std::size_t n = 1;
    for (std::size_t i = 0; i < num_states; ++i) {
        n *= static_cast<std::size_t>(denominator) + 1;
        if (n > kMaxGridPoints) throw std::invalid_argument("grid too large");
    }
}

std::vector<Event> grid_points(const SearchSpace& space) {
    space.validate();
    const auto d = space.denominator;
    std::vector<std::int64_t> digits(space.num_states, 0);
    std::vector<Event> out;
    while (true) {
        std::vector<Rational> values;
        for (auto k : digits) values.emplace_back(k, d);
        out.emplace_back(std::move(values));
        std::size_t pos = digits.size();
        while (pos > 0 && digits[pos - 1] == d) digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
    }
    return out;
}

std::vector<IndexSet> canonical_index_sets(const SearchSpace& space, std::optional<std::size_t> limit) {
    const auto grid = grid_points(space);
    const auto units = build_units(space, grid.size());
    if (units.all_singletons) return Enumerator(units, space.max_family_size, limit).run();
    auto sets = Enumerator(units, space.max_family_size, std::nullopt).run();
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end());
    if (limit && sets.size() > *limit) sets.resize(*limit);
    return sets;
}

std::vector<EventFamily> enumerate_families(const SearchSpace& space, std::optional<std::size_t> limit) {
    const auto grid = grid_points(space);
    std::vector<EventFamily> out;
    for (const auto& s : canonical_index_sets(space, limit)) out.push_back(materialise(space, grid, s));
    return out;
}

std::vector<Violation> check_laws(const EventFamily& f) {
    std::vector<Violation> out;
    auto expect = [&](bool ok, const char* law, std::string detail) {
        if (!ok) out.push_back({law, f, std::move(detail)});
    };

    const auto r = classify(f);
    for (const auto& e : r.internal_errors) expect(false, "classify-internal", e);

    const bool base = r.condition(Condition::C1).holds && r.condition(Condition::C2).holds;
    const bool specific = r.flag(ClassFlag::Specific);
    const bool vee = r.flag(ClassFlag::VeeSpecific);
    const bool structured = r.flag(ClassFlag::Structured);
    const bool weakly = r.flag(ClassFlag::WeaklyStructured);
    const bool varying = r.flag(ClassFlag::AllVarying);
    const bool complemented = r.flag(ClassFlag::Complemented);
    const bool gfe = r.flag(ClassFlag::Gfe);
    const bool algebra = r.flag(ClassFlag::Algebra);
    const bool faithful = r.flag(ClassFlag::InfimumFaithful);

    expect(!structured || (specific && vee), "lemma2", "structured family is not vee-specific");
    expect(!vee || weakly, "lemma2", "vee-specific family is not weakly structured");
    expect(vee == (specific && weakly), "lemma3", "vee_specific differs from specific and weakly_structured");
    if (base) {
        const auto dm = demorgan_check(f);
        expect(dm.holds, "remark1", dm.reason);
        expect(varying == complemented, "remark2", "all_varying differs from complemented");
    }

    const bool specific_varying = specific && varying;
    expect(specific_varying == (complemented && r.flag(ClassFlag::BooleanPoset) && gfe), "theorem1",
           "specific and varying differs from complemented Boolean GFE");
    expect(specific_varying == (algebra && faithful), "theorem2",
           "specific and varying differs from infimum faithful algebra");
    expect(structured == (algebra && faithful), "theorem3", "structured differs from infimum faithful algebra");
    expect(!algebra || r.flag(ClassFlag::Orthomodular), "algebra-orthomodular",
           "algebra of S-probabilities is not orthomodular");

    if (specific_varying) {
        expect(complemented && gfe, "proposition1", "specific varying family not a complemented GFE");
        for (std::size_t a = 0; a < f.size(); ++a)
            for (std::size_t b = 0; b < f.size(); ++b)
                if (is_orthogonal(f.event(a), f.event(b)) && !f.disjoint(a, b))
                    expect(false, "proposition1",
                           "orthogonal pair " + f.event(a).str() + ", " + f.event(b).str() + " not disjoint");
        const auto rep = two_valued_representation(f);
        expect(rep.has_value(), "theorem1-concrete", "no full set of two-valued states");
        if (rep) {
            expect(is_concrete_logic_form(rep->carrier), "theorem1-concrete",
                   "two-valued carrier is not a concrete logic");
            expect(is_isomorphism(poset_of(f), rep->carrier, rep->element_map), "theorem1-concrete",
                   "two-valued representation is not an isomorphism");
        }
    }

    if (specific) {
        const auto P = poset_of(f);
        const auto T = canonical_states(f);
        expect(is_full(P, T), "theorem5", "canonical states are not full");
        expect(is_uniform(P, T), "theorem5", "canonical states are not uniform");
        try {
            const auto rep = build_representation(P, T);
            expect(is_isomorphism(P, rep.carrier, rep.element_map), "theorem5",
                   "representation is not an isomorphism");
            expect(is_specific(rep.carrier), "theorem5", "representation carrier is not specific");
        } catch (const PreconditionError& e) {
            expect(false, "theorem5", e.what());
        }
    }

    expect(check_theorem4_shape(f).agree(), "theorem4",
           "vee-specific differs from joins-and-full-pseudostates description");
    return out;
}

SearchReport verify_theorems(const SearchSpace& space, const SearchOptions& options) {
    SearchReport report;
    report.space = space;
    bool truncated = false;
    const auto sets = budgeted_sets(space, options, truncated);
    const auto grid = grid_points(space);

    std::vector<FamilyOutcome> outcomes(sets.size());
    parallel_ranges(sets.size(), worker_count(options, sets.size()),
                    [&](std::size_t begin, std::size_t end, std::size_t) {
                        for (std::size_t i = begin; i < end; ++i) {
                            const auto f = materialise(space, grid, sets[i]);
                            const auto r = classify(f);
                            auto& o = outcomes[i];
                            o.flags = r.flags;
                            o.c6_supremum = r.flag(ClassFlag::Specific) && r.condition(Condition::C6).holds;
                            o.c6_pointwise = r.flag(ClassFlag::Specific) && r.condition6_pointwise.holds;
                            o.violations = check_laws(f);
                        }
                    });

    for (auto& o : outcomes) {
        for (std::size_t k = 0; k < o.flags.size(); ++k) report.flag_counts[k] += o.flags[k];
        report.condition6_supremum_count += o.c6_supremum;
        report.condition6_pointwise_count += o.c6_pointwise;
        for (auto& v : o.violations) report.violations.push_back(std::move(v));
    }
    report.examined = sets.size();
    report.status = truncated ? SearchStatus::Inconclusive : SearchStatus::Complete;
    return report;
}

bool WitnessQuery::matches(const ClassificationReport& r) const {
    for (auto f : want)
        if (!r.flag(f)) return false;
    if (avoid.empty()) return true;
    return !std::all_of(avoid.begin(), avoid.end(), [&](ClassFlag f) { return r.flag(f); });
}

WitnessResult find_witness(const SearchSpace& space, const WitnessQuery& query, const SearchOptions& options) {
    bool truncated = false;
    const auto sets = budgeted_sets(space, options, truncated);
    const auto grid = grid_points(space);

    std::atomic<std::size_t> best{sets.size()};
    parallel_ranges(sets.size(), worker_count(options, sets.size()),
                    [&](std::size_t begin, std::size_t end, std::size_t) {
                        for (std::size_t i = begin; i < end && i < best.load(); ++i) {
                            if (!query.matches(classify(materialise(space, grid, sets[i])))) continue;
                            std::size_t cur = best.load();
                            while (i < cur && !best.compare_exchange_weak(cur, i)) {
                            }
                            return;
                        }
                    });

    WitnessResult result;
    if (best.load() < sets.size()) {
        result.family = materialise(space, grid, sets[best.load()]);
        result.examined = best.load() + 1;
        return result;
    }
    result.examined = sets.size();
    result.status = truncated ? SearchStatus::Inconclusive : SearchStatus::Complete;
    return result;
}

}  // namespace numev
