#include "numev/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "numev/io.hpp"

namespace numev::cli {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_events(const std::vector<Event>& events) {
    std::string out;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (i) out += ", ";
        out += events[i].str();
    }
    return out;
}

std::string describe(const ConditionVerdict& v) {
    if (v.holds) return "holds";
    std::string s = "fails: " + join_events(v.witness);
    if (v.reason == "missing-zero" || v.reason == "missing-one") return "fails: " + v.witness[0].str() + " not in P";
    if (v.reason == "complement-not-member") return "fails: complement " + v.witness[1].str() + " of " +
                                                   v.witness[0].str() + " not in P";
    if (v.reason == "sum-not-member") return s + " -> sum " + v.sum->str() + " not in P";
    if (v.reason == "sum-exceeds-one") return s + " -> sum " + v.sum->str() + " exceeds 1";
    if (v.reason == "supremum-missing") return s + " -> sum " + v.sum->str() + " in P but no supremum in P";
    if (v.reason == "sum-not-supremum" || v.reason == "sum-not-pointwise-max")
        return s + " -> sum " + v.sum->str() + " differs from " + v.supremum->str();
    return s + " (" + v.reason + ")";
}

std::string flag_label(ClassFlag f) {
    std::string name(flag_name(f));
    switch (f) {
        case ClassFlag::Specific: return name + " (C1)";
        case ClassFlag::VeeSpecific: return name + " (C2)";
        case ClassFlag::Structured: return name + " (C3)";
        case ClassFlag::WeaklyStructured: return name + " (C4)";
        default: return name;
    }
}

void print_classification(std::ostream& out, const EventFamily& f, const ClassificationReport& r) {
    out << "family of " << f.size() << " events over states (";
    for (std::size_t i = 0; i < f.arity(); ++i) out << (i ? ", " : "") << f.states()[i];
    out << ")\n";
    for (const auto& c : r.conditions) out << "  (" << condition_number(c.condition) << ") " << describe(c) << '\n';
    out << "  (6) with pointwise max: " << describe(r.condition6_pointwise) << '\n';
    out << "classes\n";
    for (auto flag : kAllFlags) out << "  " << std::left << std::setw(28) << flag_label(flag) << yes_no(r.flag(flag)) << '\n';
    out << "  " << std::left << std::setw(28) << "lattice_criterion"
        << (r.lattice_criterion ? yes_no(*r.lattice_criterion) : "n/a") << '\n';
    for (const auto& e : r.internal_errors) out << "INTERNAL ERROR: " << e << '\n';
}

std::vector<Event> events_in_file_order(const Json& doc) {
    std::vector<Event> out;
    for (const auto& row : doc.at("events")) {
        std::vector<Rational> values;
        for (const auto& v : row) values.push_back(v.is_string() ? Rational::parse(v.get<std::string>())
                                                                 : Rational(v.get<std::int64_t>()));
        out.emplace_back(std::move(values));
    }
    return out;
}

std::size_t default_workers() {
    if (const char* env = std::getenv("NUMEVENTS_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

struct Options {
    std::string path;
    bool json = false;
    bool check_canonical = false;
    bool verify_table = false;
    std::vector<std::size_t> elements;
    std::size_t states = 2;
    std::int64_t denominator = 2;
    std::size_t max_size = 6;
    std::vector<std::string> want;
    std::vector<std::string> avoid;
    std::optional<std::size_t> budget;
    std::optional<std::size_t> workers;
    bool no_bounds = false;
    bool no_complement_closed = false;
};

int cmd_classify(const Options& o, std::ostream& out) {
    const auto f = family_from_json(read_json_file(o.path));
    const auto r = classify(f);
    if (o.json)
        out << to_json(r).dump(2) << '\n';
    else
        print_classification(out, f, r);
    return r.internal_errors.empty() ? kOk : kViolation;
}

Json state_verdicts(const AbstractBoundedPoset& P, const StateTable& T, std::ostream* text) {
    Json verdicts = Json::object();
    bool all_pseudo = true;
    std::optional<std::string> pseudo_problem;
    for (std::size_t s = 0; s < T.size(); ++s) {
        StateVerdict v;
        try {
            v = check_pseudostate(P, T.rows[s]);
        } catch (const PreconditionError& e) {
            v = check_specific_state(P, T.rows[s]);
            pseudo_problem = e.what();
        }
        all_pseudo = all_pseudo && v.holds() && v.s5.has_value();
        if (text) {
            *text << "state " << T.names[s] << ": S1 " << yes_no(v.s1.holds) << ", S2 " << yes_no(v.s2.holds)
                  << ", S3 " << yes_no(v.s3.holds) << ", S4 " << yes_no(v.s4.holds) << ", S5 "
                  << (v.s5 ? yes_no(v.s5->holds) : "n/a") << '\n';
            for (const auto* a : {&v.s1, &v.s2, &v.s3, &v.s4}) {
                if (a->holds) continue;
                *text << "  violation " << a->reason << " at";
                for (const auto& w : a->witness) *text << ' ' << w;
                *text << '\n';
            }
        }
        verdicts[T.names[s]] = to_json(v);
    }
    Json out;
    out["verdicts"] = std::move(verdicts);
    out["pseudostates"] = pseudo_problem ? Json(nullptr) : Json(all_pseudo);
    if (pseudo_problem) out["pseudostate_precondition"] = *pseudo_problem;
    if (text && pseudo_problem) *text << "pseudostates: n/a (" << *pseudo_problem << ")\n";
    return out;
}

int cmd_states(const Options& o, std::ostream& out, std::ostream& err) {
    const auto doc = read_json_file(o.path);
    const bool poset_doc = is_poset_document(doc);
    if (o.check_canonical && poset_doc) {
        err << "error: --check-canonical needs a family document\n";
        return kInvalidInput;
    }
    if (o.verify_table && !poset_doc) {
        err << "error: --verify-table needs a poset document with states\n";
        return kInvalidInput;
    }

    std::optional<EventFamily> family;
    std::optional<AbstractBoundedPoset> poset;
    StateTable table;
    if (poset_doc) {
        auto pd = poset_from_json(doc);
        if (!pd.table) {
            err << "error: poset document has no \"states\"\n";
            return kInvalidInput;
        }
        poset = std::move(pd.poset);
        table = std::move(*pd.table);
    } else {
        family = family_from_json(doc);
        try {
            poset = poset_of(*family);
        } catch (const PreconditionError& e) {
            err << "error: " << e.what() << '\n';
            return kPrecondition;
        }
        table = canonical_states(*family);
    }

    std::ostringstream text;
    auto report = state_verdicts(*poset, table, o.json ? nullptr : &text);
    const auto full = check_full(*poset, table);
    const auto uniform = check_uniform(*poset, table);
    report["mode"] = poset_doc ? "table" : "canonical";
    report["table"] = to_json(table);
    report["full"] = to_json(full);
    report["uniform"] = to_json(uniform);

    if (o.json) {
        out << report.dump(2) << '\n';
        return kOk;
    }
    out << text.str();
    out << "full: " << yes_no(full.holds);
    if (full.pair) out << ", pair (" << full.pair->first << ", " << full.pair->second << ") is not ordered";
    out << '\n';
    out << "uniform: " << yes_no(uniform.holds);
    if (uniform.pair) {
        out << ", pair (" << uniform.pair->first << ", " << uniform.pair->second << ") forces r = "
            << uniform.required->str();
        if (family) out << " not in P";
        else out << " with no such element";
    }
    out << '\n';
    return kOk;
}

int cmd_subalgebra(const Options& o, std::ostream& out, std::ostream& err) {
    const auto doc = read_json_file(o.path);
    const auto f = family_from_json(doc);
    const auto file_events = events_in_file_order(doc);
    std::vector<Event> chosen;
    for (auto i : o.elements) {
        if (i >= file_events.size()) {
            err << "error: element index " << i << " out of range (" << file_events.size() << " events)\n";
            return kInvalidInput;
        }
        chosen.push_back(file_events[i]);
    }

    ProductCriterionResult criterion;
    try {
        criterion = product_criterion(f, chosen);
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kPrecondition;
    }
    const auto oracle = boolean_subalgebra_oracle(f, chosen);
    const bool agree = criterion.holds == oracle.has_value();

    if (o.json) {
        Json j;
        Json ch = Json::array();
        for (const auto& e : chosen) ch.push_back(to_json(e));
        j["chosen"] = std::move(ch);
        Json c;
        c["holds"] = criterion.holds;
        if (!criterion.holds) {
            Json fs = Json::array();
            for (const auto& e : criterion.failing_subset) fs.push_back(to_json(e));
            c["failing_subset"] = std::move(fs);
            c["missing_product"] = to_json(*criterion.missing_product);
        }
        j["criterion"] = std::move(c);
        Json orc;
        orc["found"] = oracle.has_value();
        if (oracle) {
            Json sub = Json::array();
            for (const auto& e : *oracle) sub.push_back(to_json(e));
            orc["subalgebra"] = std::move(sub);
        }
        j["oracle"] = std::move(orc);
        j["agree"] = agree;
        out << j.dump(2) << '\n';
    } else {
        out << "chosen: " << join_events(chosen) << '\n';
        out << "product criterion: " << yes_no(criterion.holds);
        if (!criterion.holds)
            out << " (product of " << join_events(criterion.failing_subset) << " = " << criterion.missing_product->str()
                << " not in P)";
        out << '\n';
        out << "subalgebra search: ";
        if (oracle)
            out << "found {" << join_events(*oracle) << "}\n";
        else
            out << "none\n";
        out << "agreement: " << yes_no(agree) << '\n';
    }
    return agree ? kOk : kViolation;
}

int cmd_represent(const Options& o, std::ostream& out, std::ostream& err) {
    const auto doc = read_json_file(o.path);
    if (is_poset_document(doc)) {
        const auto pd = poset_from_json(doc);
        if (!pd.table) {
            err << "error: poset document has no \"states\"\n";
            return kInvalidInput;
        }
        std::optional<ConcreteRepresentation> built;
        try {
            built = build_representation(pd.poset, *pd.table);
        } catch (const PreconditionError& e) {
            err << "error: " << e.what() << '\n';
            return kPrecondition;
        }
        const auto& rep = *built;
        const bool iso = is_isomorphism(pd.poset, rep.carrier, rep.element_map);
        const bool specific = is_specific(rep.carrier);
        if (o.json) {
            auto j = to_json(rep, pd.poset);
            j["isomorphism"] = iso;
            j["carrier_specific"] = specific;
            out << j.dump(2) << '\n';
        } else {
            out << "carrier over states (";
            for (std::size_t i = 0; i < rep.carrier.arity(); ++i) out << (i ? ", " : "") << rep.carrier.states()[i];
            out << ")\n";
            for (std::size_t i = 0; i < rep.element_map.size(); ++i)
                out << "  " << pd.poset.label(i) << " -> " << rep.element_map[i] << '\n';
            out << "order isomorphism: " << yes_no(iso) << "\ncarrier specific: " << yes_no(specific) << '\n';
        }
        return iso && specific ? kOk : kViolation;
    }

    const auto f = family_from_json(doc);
    const auto rep = two_valued_representation(f);
    if (o.json) {
        Json j;
        j["found"] = rep.has_value();
        if (rep) {
            j["representation"] = to_json(*rep, poset_of(f));
            j["concrete_logic_form"] = is_concrete_logic_form(rep->carrier);
        }
        out << j.dump(2) << '\n';
    } else if (!rep) {
        out << "two-valued representation: none\n";
    } else {
        out << "two-valued representation over " << rep->carrier.arity() << " states\n";
        for (std::size_t i = 0; i < rep->element_map.size(); ++i)
            out << "  " << f.event(i) << " -> " << rep->element_map[i] << '\n';
        out << "concrete logic form: " << yes_no(is_concrete_logic_form(rep->carrier)) << '\n';
    }
    return kOk;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
    SearchSpace space;
    space.num_states = o.states;
    space.denominator = o.denominator;
    space.max_family_size = o.max_size;
    if (!o.no_bounds) space.require.push_back(Prefilter::ContainsBounds);
    if (!o.no_complement_closed) space.require.push_back(Prefilter::ComplementClosed);
    try {
        space.validate();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    SearchOptions options;
    options.budget = o.budget;
    options.workers = o.workers ? *o.workers : default_workers();

    if (!o.want.empty() || !o.avoid.empty()) {
        WitnessQuery q;
        for (const auto* names : {&o.want, &o.avoid})
            for (const auto& n : *names) {
                auto f = parse_flag(n);
                if (!f) {
                    err << "error: unknown class flag '" << n << "'\n";
                    return kInvalidInput;
                }
                (names == &o.want ? q.want : q.avoid).push_back(*f);
            }
        const auto r = find_witness(space, q, options);
        if (o.json) {
            auto j = to_json(r);
            j["space"] = to_json(space);
            out << j.dump(2) << '\n';
        } else if (r.family) {
            out << "witness after " << r.examined << " families:\n" << to_json(*r.family).dump() << '\n';
        } else {
            out << status_name(r.status) << ": no witness among " << r.examined << " families\n";
        }
        return r.status == SearchStatus::Inconclusive ? kInconclusive : kOk;
    }

    const auto report = verify_theorems(space, options);
    if (o.json) {
        out << to_json(report).dump(2) << '\n';
    } else {
        out << "examined " << report.examined << " families (" << status_name(report.status) << ")\n";
        for (auto f : kAllFlags)
            out << "  " << std::left << std::setw(28) << flag_label(f) << report.flag_counts[static_cast<std::size_t>(f)]
                << '\n';
        out << "condition (6) readings among specific families: supremum " << report.condition6_supremum_count
            << ", pointwise max " << report.condition6_pointwise_count << '\n';
        out << "violations: " << report.violations.size() << '\n';
        for (const auto& v : report.violations)
            out << "  " << v.law << ": " << v.detail << " in " << to_json(v.family).dump() << '\n';
    }
    if (!report.violations.empty()) return kViolation;
    return report.status == SearchStatus::Inconclusive ? kInconclusive : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classify finite sets of numerical events"};
    app.require_subcommand(1);
    Options o;

    auto* classify_cmd = app.add_subcommand("classify", "Check conditions (1)-(8) and the class flags");
    classify_cmd->add_option("path", o.path, "Family document")->required();
    classify_cmd->add_flag("--json", o.json, "Machine-readable output");

    auto* states_cmd = app.add_subcommand("states", "Check specific states, fullness and uniformity");
    states_cmd->add_option("path", o.path, "Family or poset document")->required();
    auto* canon = states_cmd->add_flag("--check-canonical", o.check_canonical, "Canonical states of a family");
    auto* table = states_cmd->add_flag("--verify-table", o.verify_table, "State table of a poset document");
    canon->excludes(table);
    states_cmd->add_flag("--json", o.json, "Machine-readable output");

    auto* sub_cmd = app.add_subcommand("subalgebra", "Boolean subalgebra containment of chosen elements");
    sub_cmd->add_option("path", o.path, "Family document")->required();
    sub_cmd->add_option("--elements", o.elements, "Indices into the document's event list")
        ->required()
        ->delimiter(',');
    sub_cmd->add_flag("--json", o.json, "Machine-readable output");

    auto* rep_cmd = app.add_subcommand("represent", "Build a representation by states");
    rep_cmd->add_option("path", o.path, "Poset document with states, or family document")->required();
    rep_cmd->add_flag("--json", o.json, "Machine-readable output");

    auto* search_cmd = app.add_subcommand("search", "Enumerate families; verify laws or find a witness");
    search_cmd->add_option("--states", o.states, "Number of states")->check(CLI::PositiveNumber);
    search_cmd->add_option("--denominator", o.denominator, "Grid denominator")->check(CLI::PositiveNumber);
    search_cmd->add_option("--max-size", o.max_size, "Largest family size");
    search_cmd->add_option("--want", o.want, "Class flags the witness must have")->delimiter(',');
    search_cmd->add_option("--avoid", o.avoid, "Class flags the witness must not all have")->delimiter(',');
    search_cmd->add_option("--budget", o.budget, "Maximum number of families examined");
    search_cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    search_cmd->add_flag("--no-bounds", o.no_bounds, "Do not require 0 and 1");
    search_cmd->add_flag("--no-complement-closed", o.no_complement_closed, "Do not require closure under 1-p");
    search_cmd->add_flag("--json", o.json, "Machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(o, out);
        if (states_cmd->parsed()) return cmd_states(o, out, err);
        if (sub_cmd->parsed()) return cmd_subalgebra(o, out, err);
        if (rep_cmd->parsed()) return cmd_represent(o, out, err);
        return cmd_search(o, out, err);
    } catch (const DocumentError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kPrecondition;
    }
}

}  // namespace numev::cli
