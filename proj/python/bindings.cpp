#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nomaut/em.hpp"
#include "nomaut/kleisli.hpp"
#include "nomaut/laws.hpp"

namespace py = pybind11;
using namespace nomaut;

namespace {

std::vector<std::string> rendered(const LangApprox& l) {
  std::vector<std::string> out;
  for (const auto& w : l.members()) out.push_back(render(w));
  return out;
}

std::vector<py::dict> findings(const Report& r) {
  std::vector<py::dict> out;
  for (const Finding& f : r.findings)
    out.push_back(py::dict(py::arg("condition") = f.condition, py::arg("message") = f.message,
                           py::arg("line") = f.line));
  return out;
}

// An expanded automaton together with its spec.
class Automaton {
 public:
  Automaton(const std::string& text, std::optional<std::size_t> pool, std::size_t depth)
      : spec_(parse_spec(text)),
        automaton_(expand(spec_, pool.value_or(std::max(auto_pool(depth, spec_.max_arity()),
                                                        spec_.max_rule_variables())))) {}

  std::string kind() const { return to_string(spec_.kind); }
  std::string name() const { return spec_.name; }
  std::size_t pool() const { return automaton_.pool().size(); }

  std::vector<std::string> states() const {
    std::vector<std::string> out;
    for (const State& q : automaton_.states()) out.push_back(automaton_.render(q));
    return out;
  }

  bool accepts(const std::string& q, const std::string& w) const {
    return nomaut::accepts(automaton_, state(q), parse_bar_string(w));
  }

  std::vector<std::string> language(const std::string& q, std::size_t depth, const std::string& via) const {
    const State s = state(q);
    if (via == "oracle") return rendered(enum_language(automaton_, s, depth));
    if (via == "kl")
      return rendered(to_lang(lang_kind(spec_.kind), depth, trace_iterate(automaton_, depth + 1)(s)));
    if (via == "em") return rendered(lang_semantics(automaton_, s, depth));
    throw py::value_error("via must be one of 'kl', 'em', 'oracle'");
  }

  std::vector<py::dict> validate() const { return findings(nomaut::validate(automaton_)); }
  std::vector<py::dict> check_relation(std::size_t depth) const { return findings(nomaut::check_relation(automaton_, depth)); }
  std::vector<py::dict> check_trace_square(std::size_t depth) const {
    return findings(nomaut::check_trace_square(automaton_, depth));
  }

  std::string determinize_step(const std::vector<std::string>& members) const {
    MacroState s;
    for (const auto& m : members) s.insert(state(m));
    return render(automaton_, nomaut::determinize_step(automaton_, s));
  }

 private:
  State state(const std::string& text) const { return automaton_.parse_state(text); }

  AutomatonSpec spec_;
  ConcreteAutomaton automaton_;
};

}  // namespace

PYBIND11_MODULE(_nomaut, m) {
  m.doc() = "Nominal automata over infinite alphabets";

  static py::exception<Error> error(m, "Error");
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<SpecViolation> violation(m, "SpecViolation", error.ptr());
  static py::exception<PoolError> pool_error(m, "PoolError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const SpecViolation& e) {
      py::set_error(violation, (e.condition() + ": " + e.what()).c_str());
    } catch (const PoolError& e) {
      py::set_error(pool_error, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("canonicalize", [](const std::string& w) { return render(canonicalize(parse_bar_string(w))); },
        "Canonical representative of the alpha-class of a bar string.");
  m.def("alpha_eq", [](const std::string& v, const std::string& w) {
    return alpha_eq(parse_bar_string(v), parse_bar_string(w));
  });
  m.def("free_names", [](const std::string& w) {
    std::vector<std::string> out;
    for (Name n : free_names(parse_bar_string(w))) out.push_back(to_string(n));
    return out;
  });
  m.def("auto_pool", &auto_pool, py::arg("depth"), py::arg("max_arity"));
  m.def("validate_spec", [](const std::string& text) { return findings(validate(parse_spec(text, false))); },
        "Side-condition findings of an automaton description.");

  py::class_<Automaton>(m, "Automaton")
      .def(py::init<const std::string&, std::optional<std::size_t>, std::size_t>(), py::arg("text"),
           py::arg("pool") = py::none(), py::arg("depth") = 3)
      .def_property_readonly("kind", &Automaton::kind)
      .def_property_readonly("name", &Automaton::name)
      .def_property_readonly("pool", &Automaton::pool)
      .def("states", &Automaton::states)
      .def("accepts", &Automaton::accepts, py::arg("state"), py::arg("word"))
      .def("language", &Automaton::language, py::arg("state"), py::arg("depth"), py::arg("via") = "kl")
      .def("validate", &Automaton::validate)
      .def("check_relation", &Automaton::check_relation, py::arg("depth"))
      .def("check_trace_square", &Automaton::check_trace_square, py::arg("depth"))
      .def("determinize_step", &Automaton::determinize_step, py::arg("states"));

  m.def(
      "selfcheck",
      [](std::uint64_t seed, std::size_t cases) {
        LawConfig config;
        config.seed = seed;
        config.cases = cases;
        std::vector<py::dict> out;
        for (const SuiteResult& r : run_law_suites(config))
          out.push_back(py::dict(py::arg("name") = r.name, py::arg("cases") = r.cases,
                                 py::arg("failures") = r.failures, py::arg("first_failure") = r.first_failure));
        return out;
      },
      py::arg("seed") = 0, py::arg("cases") = 200);
}
