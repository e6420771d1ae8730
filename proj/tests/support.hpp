#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "numev/io.hpp"

// Brute-force reference implementations. They work on plain vectors of
// events and share nothing with the library beyond Event and Rational.
namespace oracle {

using numev::Event;
using numev::Rational;

inline std::filesystem::path data(const std::string& name) { return std::filesystem::path(NUMEV_DATA_DIR) / name; }

inline Event ev(std::initializer_list<const char*> values) {
    std::vector<Rational> r;
    for (const char* v : values) r.push_back(Rational::parse(v));
    return Event(std::move(r));
}

inline numev::EventFamily fam(std::initializer_list<Event> events) {
    return numev::EventFamily::with_default_states(events.begin()->arity(), std::vector<Event>(events));
}

inline bool le(const Event& p, const Event& q) {
    for (std::size_t i = 0; i < p.arity(); ++i)
        if (q[i] < p[i]) return false;
    return true;
}

inline bool ortho(const Event& p, const Event& q) {
    for (std::size_t i = 0; i < p.arity(); ++i)
        if (Rational::one() < p[i] + q[i]) return false;
    return true;
}

inline bool in(const std::vector<Event>& P, const Event& e) { return std::find(P.begin(), P.end(), e) != P.end(); }

// Sum as an event, or nothing when some coordinate exceeds 1.
inline std::optional<Event> add(std::initializer_list<Event> terms) {
    std::vector<Rational> out(terms.begin()->arity());
    for (const auto& t : terms)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += t[i];
    for (const auto& v : out)
        if (Rational::one() < v) return std::nullopt;
    return Event(out);
}

inline bool sum_in(const std::vector<Event>& P, std::initializer_list<Event> terms) {
    auto s = add(terms);
    return s && in(P, *s);
}

inline std::optional<Event> inf(const std::vector<Event>& P, const Event& p, const Event& q) {
    for (const auto& x : P) {
        if (!le(x, p) || !le(x, q)) continue;
        bool greatest = true;
        for (const auto& y : P)
            if (le(y, p) && le(y, q) && !le(y, x)) greatest = false;
        if (greatest) return x;
    }
    return std::nullopt;
}

inline std::optional<Event> sup(const std::vector<Event>& P, const Event& p, const Event& q) {
    for (const auto& x : P) {
        if (!le(p, x) || !le(q, x)) continue;
        bool least = true;
        for (const auto& y : P)
            if (le(p, y) && le(q, y) && !le(x, y)) least = false;
        if (least) return x;
    }
    return std::nullopt;
}

inline bool disjoint(const std::vector<Event>& P, const Event& p, const Event& q) {
    for (const auto& x : P)
        if (le(x, p) && le(x, q) && !x.is_zero()) return false;
    return true;
}

inline bool cond(const std::vector<Event>& P, int n) {
    const auto k = P.front().arity();
    switch (n) {
        case 1: return in(P, Event::zero(k)) && in(P, Event::one(k));
        case 2:
            for (const auto& p : P)
                if (!in(P, numev::complement(p))) return false;
            return true;
        case 3:
        case 4:
        case 6:
            for (const auto& p : P)
                for (const auto& q : P) {
                    const bool hyp = n == 4 ? ortho(p, q) : disjoint(P, p, q);
                    if (!hyp) continue;
                    if (!sum_in(P, {p, q})) return false;
                    if (n == 6 && sup(P, p, q) != add({p, q})) return false;
                }
            return true;
        case 5:
        case 7:
        case 8:
            for (const auto& p : P)
                for (const auto& q : P)
                    for (const auto& r : P) {
                        const bool hyp = n == 5 ? ortho(p, q) && ortho(q, r) && ortho(r, p)
                                                : ortho(p, q) && ortho(q, r) && disjoint(P, p, r);
                        if (!hyp) continue;
                        if (n == 8 ? !add({p, q, r}).has_value() : !sum_in(P, {p, q, r})) return false;
                    }
            return true;
    }
    return false;
}

// All subsets of `pool` of size <= max_size, each sorted.
inline std::vector<std::vector<Event>> subsets(const std::vector<Event>& pool, std::size_t max_size) {
    std::vector<std::vector<Event>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << pool.size()); ++mask) {
        std::vector<Event> s;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (mask >> i & 1) s.push_back(pool[i]);
        if (!s.empty() && s.size() <= max_size) out.push_back(s);
    }
    return out;
}

// Every point of {0, 1/d, ..., 1}^n.
inline std::vector<Event> grid(std::size_t n, std::int64_t d) {
    std::vector<Event> out;
    std::vector<std::int64_t> k(n, 0);
    while (true) {
        std::vector<Rational> v;
        for (auto x : k) v.emplace_back(x, d);
        out.emplace_back(v);
        std::size_t i = n;
        while (i > 0 && k[i - 1] == d) k[--i] = 0;
        if (i == 0) break;
        ++k[i - 1];
    }
    return out;
}

}  // namespace oracle
