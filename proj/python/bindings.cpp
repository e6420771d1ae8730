#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "numev/io.hpp"

namespace py = pybind11;
using namespace numev;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Event event_from_strings(const std::vector<std::string>& values) {
    std::vector<Rational> r;
    for (const auto& v : values) r.push_back(Rational::parse(v));
    return Event(std::move(r));
}

std::vector<std::string> event_strings(const Event& e) {
    std::vector<std::string> out;
    for (const auto& v : e.values()) out.push_back(v.str());
    return out;
}

std::vector<Event> pick(const std::vector<std::vector<std::string>>& chosen) {
    std::vector<Event> out;
    for (const auto& c : chosen) out.push_back(event_from_strings(c));
    return out;
}

SearchSpace make_space(std::size_t states, std::int64_t denominator, std::size_t max_size, bool contains_bounds,
                       bool complement_closed) {
    SearchSpace s{states, denominator, max_size, {}};
    if (contains_bounds) s.require.push_back(Prefilter::ContainsBounds);
    if (complement_closed) s.require.push_back(Prefilter::ComplementClosed);
    s.validate();
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact classification of finite sets of numerical events";

    py::register_exception<ArityError>(m, "ArityError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);

    py::class_<EventFamily>(m, "Family")
        .def(py::init([](std::vector<std::string> states, const std::vector<std::vector<std::string>>& events) {
                 std::vector<Event> ev;
                 for (const auto& e : events) ev.push_back(event_from_strings(e));
                 return EventFamily(std::move(states), std::move(ev));
             }),
             py::arg("states"), py::arg("events"))
        .def_static("load", [](const std::string& path) { return family_from_json(read_json_file(path)); })
        .def_static("from_json", [](const std::string& text) { return family_from_json(parse_json(text)); })
        .def_property_readonly("states", &EventFamily::states)
        .def_property_readonly("events",
                               [](const EventFamily& f) {
                                   std::vector<std::vector<std::string>> out;
                                   for (const auto& e : f.events()) out.push_back(event_strings(e));
                                   return out;
                               })
        .def("__len__", &EventFamily::size)
        .def("to_json", [](const EventFamily& f) { return to_json(f).dump(); })
        .def("classify", [](const EventFamily& f) { return to_python(to_json(classify(f))); })
        .def("check_condition",
             [](const EventFamily& f, int n) {
                 if (n < 1 || n > 8) throw py::value_error("condition must be 1..8");
                 return to_python(to_json(check_condition(f, static_cast<Condition>(n))));
             })
        .def("infimum",
             [](const EventFamily& f, const std::vector<std::string>& p, const std::vector<std::string>& q)
                 -> std::optional<std::vector<std::string>> {
                 auto r = infimum_in(f, event_from_strings(p), event_from_strings(q));
                 if (!r) return std::nullopt;
                 return event_strings(*r);
             })
        .def("supremum",
             [](const EventFamily& f, const std::vector<std::string>& p, const std::vector<std::string>& q)
                 -> std::optional<std::vector<std::string>> {
                 auto r = supremum_in(f, event_from_strings(p), event_from_strings(q));
                 if (!r) return std::nullopt;
                 return event_strings(*r);
             })
        .def("product_criterion",
             [](const EventFamily& f, const std::vector<std::vector<std::string>>& chosen) {
                 return product_criterion(f, pick(chosen)).holds;
             })
        .def("boolean_subalgebra",
             [](const EventFamily& f, const std::vector<std::vector<std::string>>& chosen)
                 -> std::optional<std::vector<std::vector<std::string>>> {
                 auto q = boolean_subalgebra_oracle(f, pick(chosen));
                 if (!q) return std::nullopt;
                 std::vector<std::vector<std::string>> out;
                 for (const auto& e : *q) out.push_back(event_strings(e));
                 return out;
             })
        .def("canonical_states_report",
             [](const EventFamily& f) {
                 const auto P = poset_of(f);
                 const auto T = canonical_states(f);
                 Json j;
                 j["table"] = to_json(T);
                 j["full"] = to_json(check_full(P, T));
                 j["uniform"] = to_json(check_uniform(P, T));
                 return to_python(j);
             })
        .def("two_valued_representation", [](const EventFamily& f) -> py::object {
            auto rep = two_valued_representation(f);
            if (!rep) return py::none();
            return to_python(to_json(*rep, poset_of(f)));
        });

    m.def("verify_theorems",
          [](std::size_t states, std::int64_t denominator, std::size_t max_size, bool contains_bounds,
             bool complement_closed, std::optional<std::size_t> budget, std::size_t workers) {
              SearchOptions o{budget, workers};
              const auto space = make_space(states, denominator, max_size, contains_bounds, complement_closed);
              SearchReport r;
              {
                  py::gil_scoped_release release;
                  r = verify_theorems(space, o);
              }
              return to_python(to_json(r));
          },
          py::arg("states"), py::arg("denominator"), py::arg("max_size"), py::arg("contains_bounds") = true,
          py::arg("complement_closed") = true, py::arg("budget") = py::none(), py::arg("workers") = 1);

    m.def("find_witness",
          [](std::size_t states, std::int64_t denominator, std::size_t max_size, const std::vector<std::string>& want,
             const std::vector<std::string>& avoid, bool contains_bounds, bool complement_closed,
             std::optional<std::size_t> budget, std::size_t workers) {
              WitnessQuery q;
              for (const auto& n : want) {
                  auto f = parse_flag(n);
                  if (!f) throw py::value_error("unknown class flag '" + n + "'");
                  q.want.push_back(*f);
              }
              for (const auto& n : avoid) {
                  auto f = parse_flag(n);
                  if (!f) throw py::value_error("unknown class flag '" + n + "'");
                  q.avoid.push_back(*f);
              }
              SearchOptions o{budget, workers};
              const auto space = make_space(states, denominator, max_size, contains_bounds, complement_closed);
              WitnessResult r;
              {
                  py::gil_scoped_release release;
                  r = find_witness(space, q, o);
              }
              return to_python(to_json(r));
          },
          py::arg("states"), py::arg("denominator"), py::arg("max_size"), py::arg("want"),
          py::arg("avoid") = std::vector<std::string>{}, py::arg("contains_bounds") = true,
          py::arg("complement_closed") = true, py::arg("budget") = py::none(), py::arg("workers") = 1);

    m.def("is_varying", [](const std::vector<std::string>& p) { return is_varying(event_from_strings(p)); });
}
