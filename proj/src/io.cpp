#include "numev/io.hpp"

#include <fstream>
#include <sstream>

namespace numev {

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const Json& field(const Json& doc, const char* name) {
    if (!doc.is_object()) throw DocumentError("document", "expected a JSON object");
    auto it = doc.find(name);
    if (it == doc.end()) throw DocumentError(name, "missing field");
    return *it;
}

std::string as_string(const Json& j, const std::string& where) {
    if (!j.is_string()) throw DocumentError(where, "expected a string");
    return j.get<std::string>();
}

Rational as_rational(const Json& j, const std::string& where) {
    try {
        if (j.is_number_unsigned()) return Rational(static_cast<std::int64_t>(j.get<std::uint64_t>()));
        if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
        if (j.is_string()) return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw DocumentError(where, e.what());
    }
    throw DocumentError(where, "expected a rational string such as \"1/2\"");
}

Rational as_probability(const Json& j, const std::string& where) {
    auto r = as_rational(j, where);
    if (r > Rational::one()) throw DocumentError(where, "value " + r.str() + " is outside [0,1]");
    return r;
}

std::vector<std::string> label_list(const Json& j, const std::string& where) {
    if (!j.is_array()) throw DocumentError(where, "expected an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Json labels_json(const std::vector<std::string>& labels) {
    Json out = Json::array();
    for (const auto& l : labels) out.push_back(l);
    return out;
}

Json events_json(const std::vector<Event>& events) {
    Json out = Json::array();
    for (const auto& e : events) out.push_back(to_json(e));
    return out;
}

Json axiom_json(const AxiomVerdict& v) {
    Json j;
    j["holds"] = v.holds;
    if (!v.holds) {
        j["witness"] = labels_json(v.witness);
        j["reason"] = v.reason;
    }
    return j;
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentError(line_column(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError(path.string(), "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

bool is_poset_document(const Json& doc) { return doc.is_object() && doc.contains("elements"); }

EventFamily family_from_json(const Json& doc) {
    const auto states = label_list(field(doc, "states"), "states");
    const auto& events = field(doc, "events");
    if (!events.is_array()) throw DocumentError("events", "expected an array");
    std::vector<Event> parsed;
    for (std::size_t i = 0; i < events.size(); ++i) {
        const std::string where = "events[" + std::to_string(i) + "]";
        const auto& row = events[i];
        if (!row.is_array()) throw DocumentError(where, "expected an array of rationals");
        if (row.size() != states.size())
            throw DocumentError(where, "has " + std::to_string(row.size()) + " values but there are " +
                                           std::to_string(states.size()) + " states");
        std::vector<Rational> values;
        for (std::size_t k = 0; k < row.size(); ++k)
            values.push_back(as_probability(row[k], where + "[" + std::to_string(k) + "]"));
        parsed.emplace_back(std::move(values));
    }
    try {
        return EventFamily(states, std::move(parsed));
    } catch (const ValidationError& e) {
        throw DocumentError("events", e.what());
    }
}

PosetDocument poset_from_json(const Json& doc) {
    const auto elements = label_list(field(doc, "elements"), "elements");
    const auto& order_json = field(doc, "order");
    if (!order_json.is_array()) throw DocumentError("order", "expected an array of pairs");
    std::vector<std::pair<std::string, std::string>> order;
    for (std::size_t i = 0; i < order_json.size(); ++i) {
        const auto where = "order[" + std::to_string(i) + "]";
        const auto pair = label_list(order_json[i], where);
        if (pair.size() != 2) throw DocumentError(where, "expected a pair");
        order.emplace_back(pair[0], pair[1]);
    }
    const auto& inv_json = field(doc, "involution");
    if (!inv_json.is_object()) throw DocumentError("involution", "expected an object");
    std::vector<std::pair<std::string, std::string>> involution;
    for (const auto& [k, v] : inv_json.items()) involution.emplace_back(k, as_string(v, "involution." + k));
    const auto bottom = as_string(field(doc, "bottom"), "bottom");
    const auto top = as_string(field(doc, "top"), "top");

    PosetDocument out{[&] {
        try {
            return AbstractBoundedPoset(elements, order, involution, bottom, top);
        } catch (const ValidationError& e) {
            throw DocumentError("poset", e.what());
        }
    }(), std::nullopt};

    if (auto it = doc.find("states"); it != doc.end()) {
        if (!it->is_object()) throw DocumentError("states", "expected an object of states");
        StateTable table;
        for (const auto& [name, values] : it->items()) {
            const auto where = "states." + name;
            if (!values.is_object()) throw DocumentError(where, "expected an object element -> rational");
            std::vector<std::optional<Rational>> row(out.poset.size());
            for (const auto& [label, v] : values.items()) {
                auto idx = out.poset.index_of(label);
                if (!idx) throw DocumentError(where + "." + label, "unknown element");
                row[*idx] = as_probability(v, where + "." + label);
            }
            std::vector<Rational> dense;
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (!row[i]) throw DocumentError(where, "no value for element '" + out.poset.label(i) + "'");
                dense.push_back(*row[i]);
            }
            table.names.push_back(name);
            table.rows.push_back(std::move(dense));
        }
        out.table = std::move(table);
    }
    return out;
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Event& e) {
    Json out = Json::array();
    for (const auto& v : e.values()) out.push_back(v.str());
    return out;
}

Json to_json(const PointwiseVector& v) {
    Json out = Json::array();
    for (const auto& x : v.values()) out.push_back(x.str());
    return out;
}

Json to_json(const EventFamily& f) {
    Json out;
    out["states"] = labels_json(f.states());
    out["events"] = events_json(f.events());
    return out;
}

Json to_json(const ConditionVerdict& v) {
    Json out;
    out["condition"] = condition_number(v.condition);
    out["holds"] = v.holds;
    if (!v.holds) {
        out["witness"] = events_json(v.witness);
        if (v.sum) out["sum"] = to_json(*v.sum);
        if (v.condition == Condition::C6) out["supremum"] = v.supremum ? to_json(*v.supremum) : Json(nullptr);
        out["reason"] = v.reason;
    }
    return out;
}

Json to_json(const PropertyVerdict& v) {
    Json out;
    out["holds"] = v.holds;
    if (!v.holds) {
        out["witness"] = events_json(v.witness);
        out["reason"] = v.reason;
    }
    return out;
}

Json to_json(const ClassificationReport& r) {
    Json out;
    Json conditions = Json::object();
    for (const auto& c : r.conditions) conditions[std::to_string(condition_number(c.condition))] = to_json(c);
    out["conditions"] = std::move(conditions);
    Json flags = Json::object();
    for (auto f : kAllFlags) flags[std::string(flag_name(f))] = r.flag(f);
    out["flags"] = std::move(flags);
    out["lattice_criterion"] = r.lattice_criterion ? Json(*r.lattice_criterion) : Json(nullptr);
    out["condition6_pointwise_max"] = to_json(r.condition6_pointwise);
    Json errors = Json::array();
    for (const auto& e : r.internal_errors) errors.push_back(e);
    out["internal_errors"] = std::move(errors);
    return out;
}

Json to_json(const StateVerdict& v) {
    Json out;
    out["S1"] = axiom_json(v.s1);
    out["S2"] = axiom_json(v.s2);
    out["S3"] = axiom_json(v.s3);
    out["S4"] = axiom_json(v.s4);
    if (v.s5) out["S5"] = axiom_json(*v.s5);
    out["specific"] = v.s1.holds && v.s2.holds && v.s3.holds && v.s4.holds;
    return out;
}

Json to_json(const FullnessVerdict& v) {
    Json out;
    out["holds"] = v.holds;
    if (v.pair) out["pair"] = Json::array({v.pair->first, v.pair->second});
    return out;
}

Json to_json(const UniformityVerdict& v) {
    Json out;
    out["holds"] = v.holds;
    if (v.pair) out["pair"] = Json::array({v.pair->first, v.pair->second});
    if (v.required) out["required"] = to_json(*v.required);
    return out;
}

Json to_json(const StateTable& t) {
    Json out = Json::object();
    for (std::size_t s = 0; s < t.size(); ++s) {
        Json row = Json::array();
        for (const auto& v : t.rows[s]) row.push_back(v.str());
        out[t.names[s]] = std::move(row);
    }
    return out;
}

Json to_json(const ConcreteRepresentation& rep, const AbstractBoundedPoset& poset) {
    Json out;
    out["carrier"] = to_json(rep.carrier);
    Json map = Json::object();
    for (std::size_t i = 0; i < rep.element_map.size(); ++i) map[poset.label(i)] = to_json(rep.element_map[i]);
    out["element_map"] = std::move(map);
    return out;
}

std::string_view status_name(SearchStatus s) noexcept {
    return s == SearchStatus::Complete ? "complete" : "inconclusive";
}

Json to_json(const SearchSpace& space) {
    Json out;
    out["states"] = space.num_states;
    out["denominator"] = space.denominator;
    out["max_size"] = space.max_family_size;
    out["contains_bounds"] = space.has(Prefilter::ContainsBounds);
    out["complement_closed"] = space.has(Prefilter::ComplementClosed);
    return out;
}

Json to_json(const SearchReport& r) {
    Json out;
    out["space"] = to_json(r.space);
    out["status"] = std::string(status_name(r.status));
    out["examined"] = r.examined;
    Json counts = Json::object();
    for (auto f : kAllFlags) counts[std::string(flag_name(f))] = r.flag_counts[static_cast<std::size_t>(f)];
    out["counts"] = std::move(counts);
    Json c6;
    c6["supremum_in_family"] = r.condition6_supremum_count;
    c6["pointwise_max"] = r.condition6_pointwise_count;
    out["condition6_readings"] = std::move(c6);
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        Json j;
        j["law"] = v.law;
        j["detail"] = v.detail;
        j["family"] = to_json(v.family);
        violations.push_back(std::move(j));
    }
    out["violations"] = std::move(violations);
    return out;
}

Json to_json(const WitnessResult& r) {
    Json out;
    out["status"] = std::string(status_name(r.status));
    out["examined"] = r.examined;
    out["found"] = r.family.has_value();
    out["family"] = r.family ? to_json(*r.family) : Json(nullptr);
    return out;
}

}  // namespace numev
