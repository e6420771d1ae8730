#include "doctest.h"
#include "numev/cli.hpp"
#include "support.hpp"

#include <fstream>
#include <sstream>

using namespace numev;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string path(const char* name) { return oracle::data(name).string(); }

std::string temp_file(const std::string& name, const std::string& text) {
    const auto p = std::filesystem::temp_directory_path() / ("numev_cli_" + name);
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST_CASE("classify example 1") {
    const auto r = run({"classify", path("example1.json")});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("(1,5/4) not in P") != std::string::npos);
    CHECK(r.out.find("specific (C1)               yes") != std::string::npos);
    CHECK(r.out.find("structured (C3)             no") != std::string::npos);

    const auto j = run({"classify", path("example1.json"), "--json"});
    const auto doc = parse_json(j.out);
    CHECK(doc["flags"]["specific"] == true);
    CHECK(doc["conditions"]["7"]["sum"] == Json::array({"1", "5/4"}));
}

TEST_CASE("classify: bounds only has every flag") {
    const auto doc = parse_json(run({"classify", path("bounds.json"), "--json"}).out);
    for (const auto& [name, value] : doc["flags"].items()) CHECK_MESSAGE(value == true, name);
}

TEST_CASE("parse errors exit 2 with a location") {
    auto r = run({"classify", path("out_of_range.json")});
    CHECK(r.code == cli::kInvalidInput);
    CHECK(r.err.find("events[1][0]") != std::string::npos);

    r = run({"classify", temp_file("bad.json", "{\"states\": [\"a\"],\n \"events\": [[\"0\"] [\"1\"]]}")});
    CHECK(r.code == cli::kInvalidInput);
    CHECK(r.err.find("line 2") != std::string::npos);

    r = run({"classify", temp_file("arity.json", R"({"states":["a","b"],"events":[["0"],["1","1"]]})")});
    CHECK(r.code == cli::kInvalidInput);
    CHECK(r.err.find("events[0]") != std::string::npos);

    CHECK(run({"classify", "/nonexistent/file.json"}).code == cli::kInvalidInput);
    CHECK(run({"frobnicate"}).code == cli::kInvalidInput);
    CHECK(run({"search", "--states", "x"}).code == cli::kInvalidInput);
    CHECK(run({"search", "--want", "C9"}).code == cli::kInvalidInput);
}

TEST_CASE("states on example 2") {
    const auto r = run({"states", path("example2.json"), "--check-canonical"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("full: yes") != std::string::npos);
    CHECK(r.out.find("uniform: no, pair ((0,1/2), (1/2,0)) forces r = (1/2,1/2) not in P") != std::string::npos);
}

TEST_CASE("states on the power set and a poset table") {
    auto r = run({"states", path("powerset3.json"), "--json"});
    auto doc = parse_json(r.out);
    CHECK(doc["full"]["holds"] == true);
    CHECK(doc["uniform"]["holds"] == true);
    CHECK(doc["pseudostates"] == true);

    r = run({"states", path("boolean4_poset.json"), "--verify-table", "--json"});
    doc = parse_json(r.out);
    CHECK(r.code == cli::kOk);
    CHECK(doc["mode"] == "table");
    CHECK(doc["full"]["holds"] == true);

    CHECK(run({"states", path("boolean4_poset.json"), "--check-canonical"}).code == cli::kInvalidInput);
    CHECK(run({"states", path("powerset2.json"), "--verify-table"}).code == cli::kInvalidInput);
}

TEST_CASE("subalgebra") {
    // File order in powerset3.json: index 6 is (1,1,0), index 2 is (0,1,1).
    auto r = run({"subalgebra", path("powerset3.json"), "--elements", "6,2", "--json"});
    CHECK(r.code == cli::kOk);
    auto doc = parse_json(r.out);
    CHECK(doc["criterion"]["holds"] == true);
    CHECK(doc["oracle"]["found"] == true);
    CHECK(doc["agree"] == true);

    r = run({"subalgebra", path("example1.json"), "--elements", "1"});
    CHECK(r.code == cli::kPrecondition);
    CHECK(r.err.find("{0,1}-valued") != std::string::npos);
    CHECK(run({"subalgebra", path("powerset2.json"), "--elements", "9"}).code == cli::kInvalidInput);
}

TEST_CASE("represent") {
    auto r = run({"represent", path("boolean4_poset.json"), "--json"});
    CHECK(r.code == cli::kOk);
    auto doc = parse_json(r.out);
    CHECK(doc["carrier"]["events"] == Json::array({Json::array({"0", "0"}), Json::array({"0", "1"}),
                                                   Json::array({"1", "0"}), Json::array({"1", "1"})}));
    CHECK(doc["isomorphism"] == true);

    r = run({"represent", path("powerset2.json"), "--json"});
    doc = parse_json(r.out);
    CHECK(doc["found"] == true);
    CHECK(doc["concrete_logic_form"] == true);
}

TEST_CASE("search") {
    auto r = run({"search", "--states", "2", "--denominator", "2", "--want", "C4", "--avoid", "C2", "--json"});
    CHECK(r.code == cli::kOk);
    auto doc = parse_json(r.out);
    REQUIRE(doc["found"] == true);
    const auto f = family_from_json(doc["family"]);
    const auto c = classify(f);
    CHECK(c.flag(ClassFlag::WeaklyStructured));
    CHECK_FALSE(c.flag(ClassFlag::VeeSpecific));

    r = run({"search", "--states", "2", "--denominator", "2", "--budget", "0"});
    CHECK(r.code == cli::kInconclusive);
    CHECK(r.out.find("inconclusive") != std::string::npos);

    r = run({"search", "--states", "3", "--denominator", "1", "--max-size", "8"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("violations: 0") != std::string::npos);
}

TEST_CASE("json output is identical across runs and worker counts") {
    const std::vector<std::vector<std::string>> commands{
        {"classify", path("example1.json"), "--json"},
        {"states", path("example2.json"), "--json"},
        {"represent", path("boolean4_poset.json"), "--json"},
        {"subalgebra", path("powerset3.json"), "--elements", "1,2", "--json"},
    };
    for (const auto& c : commands) CHECK(run(c).out == run(c).out);
    const std::vector<std::string> search{"search", "--states", "2", "--denominator", "4", "--max-size", "8", "--json"};
    auto with = [&](const char* w) {
        auto a = search;
        a.insert(a.end(), {"--workers", w});
        return run(a).out;
    };
    CHECK(with("1") == with("4"));
    CHECK(with("1") == with("13"));
}
