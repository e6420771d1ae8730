#pragma once

/**
 * JSON documents and machine-readable reports.
 *
 * FamilyDocument:
 *   { "states": ["x1", "x2"], "events": [["0", "1/2"], ["1", "1"], ...] }
 *
 * PosetDocument:
 *   { "elements": ["0", "a", "a'", "1"],
 *     "order": [["0", "a"], ["a", "1"], ...],      // closed reflexively and transitively
 *     "involution": {"0": "1", "a": "a'", ...},
 *     "bottom": "0", "top": "1",
 *     "states": {"s1": {"0": "0", "a": "1/2", ...}, ...} }   // optional
 *
 * Rationals are strings "a/b" or "a"; JSON integers are accepted too.
 * Objects keep the key order of the file.
 */

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "numev/classify.hpp"
#include "numev/error.hpp"
#include "numev/search.hpp"
#include "numev/states.hpp"
#include "numev/subalg.hpp"

namespace numev {

using Json = nlohmann::ordered_json;

/// Parse or validation failure, with the offending location ("line 3, column 7"
/// or a field path such as "events[2][1]").
class DocumentError : public ValidationError {
public:
    DocumentError(std::string where, const std::string& message)
        : ValidationError(where + ": " + message), where_(std::move(where)) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

struct PosetDocument {
    AbstractBoundedPoset poset;
    std::optional<StateTable> table;
};

Json parse_json(std::string_view text);
Json read_json_file(const std::filesystem::path& path);

bool is_poset_document(const Json& doc);
EventFamily family_from_json(const Json& doc);
PosetDocument poset_from_json(const Json& doc);

Json to_json(const Rational& r);
Json to_json(const Event& e);
Json to_json(const PointwiseVector& v);
Json to_json(const EventFamily& family);
Json to_json(const ConditionVerdict& v);
Json to_json(const PropertyVerdict& v);
Json to_json(const ClassificationReport& report);
Json to_json(const StateVerdict& v);
Json to_json(const FullnessVerdict& v);
Json to_json(const UniformityVerdict& v);
Json to_json(const StateTable& table);
Json to_json(const ConcreteRepresentation& rep, const AbstractBoundedPoset& poset);
Json to_json(const SearchSpace& space);
Json to_json(const SearchReport& report);
Json to_json(const WitnessResult& result);

std::string_view status_name(SearchStatus s) noexcept;

}  // namespace numev
