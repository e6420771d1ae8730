#include "doctest.h"
#include "numev/search.hpp"
#include "support.hpp"

using namespace numev;
using oracle::ev;

namespace {

EventFamily load(const char* name) { return family_from_json(read_json_file(oracle::data(name))); }

AbstractBoundedPoset chain4() {
    return AbstractBoundedPoset({"0", "a", "b", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}},
                                {{"0", "1"}, {"a", "b"}, {"b", "a"}, {"1", "0"}}, "0", "1");
}

}  // namespace

TEST_CASE("poset documents are validated") {
    CHECK_NOTHROW(chain4());
    CHECK(chain4().leq(0, 3));
    // Involution that is not antitone.
    CHECK_THROWS_AS(AbstractBoundedPoset({"0", "a", "b", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}},
                                         {{"0", "1"}, {"a", "a"}, {"b", "b"}, {"1", "0"}}, "0", "1"),
                    ValidationError);
    // Cycle.
    CHECK_THROWS_AS(AbstractBoundedPoset({"0", "a", "b", "1"}, {{"a", "b"}, {"b", "a"}},
                                         {{"0", "1"}, {"a", "b"}, {"b", "a"}, {"1", "0"}}, "0", "1"),
                    ValidationError);
    // Wrong bottom.
    CHECK_THROWS_AS(AbstractBoundedPoset({"0", "1"}, {{"0", "1"}}, {{"0", "1"}, {"1", "0"}}, "1", "0"), ValidationError);
}

TEST_CASE("canonical states of example 2") {
    const auto f = load("example2.json");
    const auto P = poset_of(f);
    const auto T = canonical_states(f);
    CHECK(T.names == std::vector<std::string>{"x1", "x2"});
    for (std::size_t s = 0; s < T.size(); ++s) CHECK(check_specific_state(P, T.rows[s]).holds());
    CHECK(is_full(P, T));
    const auto u = check_uniform(P, T);
    CHECK_FALSE(u.holds);
    CHECK(u.pair == std::pair<std::string, std::string>{"(0,1/2)", "(1/2,0)"});
    CHECK(u.required->str() == "(1/2,1/2)");
    CHECK_THROWS_AS(check_pseudostate(P, T.rows[0]), PreconditionError);
    const auto t4 = check_theorem4_shape(f);
    CHECK_FALSE(t4.vee_specific);
    CHECK_FALSE(t4.sums_are_joins);
    CHECK(t4.agree());
}

TEST_CASE("axiom violations name their elements") {
    const auto P = chain4();
    const std::vector<Rational> not_zero{Rational::half(), Rational::half(), Rational::half(), Rational::one()};
    const auto v = check_specific_state(P, not_zero);
    CHECK_FALSE(v.s1.holds);
    const std::vector<Rational> not_monotone{Rational::zero(), Rational(3, 4), Rational(1, 4), Rational::one()};
    const auto m = check_specific_state(P, not_monotone);
    CHECK(m.s2.holds);
    CHECK_FALSE(m.s3.holds);
    CHECK(m.s3.witness == std::vector<std::string>{"a", "b"});
}

TEST_CASE("representation of the four-element Boolean algebra") {
    const auto doc = poset_from_json(read_json_file(oracle::data("boolean4_poset.json")));
    REQUIRE(doc.table.has_value());
    CHECK(is_full(doc.poset, *doc.table));
    CHECK(is_uniform(doc.poset, *doc.table));
    const auto rep = build_representation(doc.poset, *doc.table);
    CHECK(rep.carrier.events() == load("powerset2.json").events());
    CHECK(is_isomorphism(doc.poset, rep.carrier, rep.element_map));
    CHECK(is_specific(rep.carrier));
}

TEST_CASE("build_representation rejects a non-full table") {
    const auto doc = poset_from_json(read_json_file(oracle::data("boolean4_poset.json")));
    StateTable one{{"at_a"}, {doc.table->rows[0]}};
    CHECK_FALSE(is_full(doc.poset, one));
    CHECK_THROWS_AS(build_representation(doc.poset, one), PreconditionError);
}

// On a finite Boolean algebra the two-valued states are the atoms' indicators.
TEST_CASE("two-valued states of power sets match atoms") {
    for (const char* name : {"powerset2.json", "powerset3.json"}) {
        const auto f = load(name);
        const auto T = two_valued_states(f);
        std::size_t atoms = 0;
        for (const auto& a : f.events()) {
            if (a.is_zero()) continue;
            bool atom = true;
            for (const auto& b : f.events())
                if (!b.is_zero() && b != a && oracle::le(b, a)) atom = false;
            atoms += atom;
        }
        CHECK(T.size() == atoms);
        const auto rep = two_valued_representation(f);
        REQUIRE(rep.has_value());
        CHECK(rep->carrier.size() == f.size());
        CHECK(is_concrete_logic_form(rep->carrier));
        CHECK(is_isomorphism(poset_of(f), rep->carrier, rep->element_map));
    }
}

TEST_CASE("Theorem 5 round trip over a sweep") {
    const SearchSpace space{2, 4, 8, {Prefilter::ContainsBounds, Prefilter::ComplementClosed}};
    std::size_t specific = 0;
    for (const auto& f : enumerate_families(space)) {
        if (!is_specific(f)) continue;
        ++specific;
        const auto P = poset_of(f);
        const auto T = canonical_states(f);
        CHECK(is_full(P, T));
        CHECK(is_uniform(P, T));
        const auto rep = build_representation(P, T);
        CHECK(is_isomorphism(P, rep.carrier, rep.element_map));
        CHECK(rep.carrier.events() == f.events());
    }
    CHECK(specific > 0);
}
