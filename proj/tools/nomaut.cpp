// Command line front end: validate, member, enum, trace, lang, determinize,
// alpha and selfcheck. Exit codes: 0 pass/true, 1 fail/false/violation,
// 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include "nomaut/em.hpp"
#include "nomaut/kleisli.hpp"
#include "nomaut/laws.hpp"

using namespace nomaut;
using json = nlohmann::json;

namespace {

struct Options {
  std::string file;
  std::string state;
  std::vector<std::string> states;
  std::string word, word2;
  std::size_t depth = 3;
  std::optional<std::size_t> pool;
  std::uint64_t seed = 0;
  std::size_t cases = 200;
  std::string via;
  bool json = false;
  bool inject_defect = false;
};

// Thrown for conditions that should exit with status 2.
struct UsageError : Error {
  using Error::Error;
};

struct Output {
  json inputs = json::object();
  json depth = nullptr;
  json pool = nullptr;
  json result = nullptr;
  std::vector<std::string> lines;
};

void emit(const std::string& command, const Options& opt, const Output& out) {
  if (opt.json) {
    json doc;
    doc["command"] = command;
    doc["inputs"] = out.inputs;
    doc["depth"] = out.depth;
    doc["pool"] = out.pool;
    doc["result"] = out.result;
    std::cout << doc.dump(2) << "\n";
    return;
  }
  for (const auto& line : out.lines) std::cout << line << "\n";
}

std::size_t choose_pool(const Options& opt, std::size_t minimum, const std::string& what) {
  if (!opt.pool) {
    std::cerr << "pool: " << minimum << " (auto, " << what << ")\n";
    return minimum;
  }
  if (*opt.pool < minimum)
    std::cerr << "warning: --pool " << *opt.pool << " is below the auto pool " << minimum
              << "; results may be truncated\n";
  else
    std::cerr << "pool: " << *opt.pool << "\n";
  return *opt.pool;
}

State pick_state(const ConcreteAutomaton& a, const AutomatonSpec& spec, const std::string& text) {
  if (!text.empty()) return a.parse_state(text);
  for (std::size_t i = 0; i < spec.orbits.size(); ++i)
    if (spec.orbits[i].arity == 0) return State{static_cast<std::uint32_t>(i), {}};
  throw UsageError("no nullary state to start from; name one explicitly");
}

json words_json(const LangApprox& l) {
  json arr = json::array();
  for (const auto& w : l.members()) arr.push_back(render(w));
  return arr;
}

std::vector<std::string> listing(const LangApprox& l) {
  std::vector<std::string> lines{std::string("eps: ") + (l.eps() ? "true" : "false")};
  for (const auto& w : l.words()) lines.push_back(render(w));
  return lines;
}

int cmd_validate(const Options& opt, Output& out) {
  const AutomatonSpec spec = load_spec(opt.file, false);
  out.inputs["file"] = opt.file;
  Report report = validate(spec);
  if (report.ok()) {
    const std::size_t pool = std::max(auto_pool(opt.depth, spec.max_arity()), spec.max_rule_variables());
    out.pool = pool;
    out.depth = opt.depth;
    Report concrete = validate(expand(spec, pool));
    report.findings = std::move(concrete.findings);
  }
  json findings = json::array();
  for (const Finding& f : report.findings) {
    findings.push_back({{"condition", f.condition}, {"message", f.message}, {"line", f.line}});
    std::string line = "violation of condition " + f.condition;
    if (f.line) line += " at line " + std::to_string(f.line);
    out.lines.push_back(line + ": " + f.message);
  }
  out.result = {{"ok", report.ok()}, {"findings", findings}};
  if (report.ok())
    out.lines.push_back("ok: " + to_string(spec.kind) + " " + spec.name + ", " + std::to_string(spec.orbits.size()) +
                        " orbits, " + std::to_string(spec.rules.size()) + " rules");
  return report.ok() ? 0 : 1;
}

int cmd_member(const Options& opt, Output& out) {
  const AutomatonSpec spec = load_spec(opt.file);
  const BarString w = parse_bar_string(opt.word);
  std::size_t largest = 0;
  for (const Letter& l : w.letters()) largest = std::max<std::size_t>(largest, l.name.index + 1);
  // Room for the word's names, the state's names and one fresh binder.
  const std::size_t minimum = std::max({auto_pool(w.size(), spec.max_arity()),
                                        largest + spec.max_arity() + 1, spec.max_rule_variables()});
  const std::size_t pool = choose_pool(opt, minimum, "word length " + std::to_string(w.size()));
  const ConcreteAutomaton a = expand(spec, pool);
  const State q = pick_state(a, spec, opt.state);
  const bool in = accepts(a, q, w);
  out.inputs = {{"file", opt.file}, {"state", a.render(q)}, {"word", render(w)}};
  out.pool = pool;
  out.result = in;
  out.lines.push_back(in ? "true" : "false");
  return in ? 0 : 1;
}

int cmd_language(const std::string& command, const Options& opt, Output& out) {
  const AutomatonSpec spec = load_spec(opt.file);
  const std::size_t minimum = std::max(auto_pool(opt.depth, spec.max_arity()), spec.max_rule_variables());
  const std::size_t pool = choose_pool(opt, minimum, "depth " + std::to_string(opt.depth));
  const ConcreteAutomaton a = expand(spec, pool);
  const State q = pick_state(a, spec, opt.state);

  std::string via = opt.via;
  if (via.empty()) via = command == "enum" ? "oracle" : command == "trace" ? "kl" : "em";
  LangApprox l(lang_kind(spec.kind), opt.depth);
  if (via == "oracle")
    l = enum_language(a, q, opt.depth);
  else if (via == "kl")
    l = to_lang(lang_kind(spec.kind), opt.depth, trace_iterate(a, opt.depth + 1)(q));
  else
    l = lang_semantics(a, q, opt.depth);

  out.inputs = {{"file", opt.file}, {"state", a.render(q)}, {"via", via}};
  out.depth = opt.depth;
  out.pool = pool;
  out.result = {{"eps", l.eps()}, {"words", words_json(l)}};
  out.lines = listing(l);
  return 0;
}

int cmd_determinize(const Options& opt, Output& out) {
  const AutomatonSpec spec = load_spec(opt.file);
  const std::size_t minimum = std::max(auto_pool(opt.depth, spec.max_arity()), spec.max_rule_variables());
  const std::size_t pool = choose_pool(opt, minimum, "depth " + std::to_string(opt.depth));
  const ConcreteAutomaton a = expand(spec, pool);
  MacroState s;
  if (opt.states.empty()) s.insert(pick_state(a, spec, ""));
  for (const auto& text : opt.states) s.insert(a.parse_state(text));
  const GValue<MacroState> g = determinize_step(a, s);
  const std::string rendered = render(a, g);
  auto set_text = [&](const MacroState& m) { return render_set(m, [&](const State& q) { return a.render(q); }); };
  out.inputs = {{"file", opt.file}, {"macro_state", set_text(s)}};
  out.pool = pool;
  json free = json::object();
  for (const auto& [name, succ] : g.free_succ)
    if (!succ.empty()) free[to_string(name)] = set_text(succ);
  out.result = {{"accept", g.accept}, {"free", free}};
  if (g.bar_succ) out.result["bar"] = render_abs(*g.bar_succ, set_text);
  out.lines.push_back(set_text(s) + " => " + rendered);
  return 0;
}

int cmd_alpha_eq(const Options& opt, Output& out) {
  const BarString v = parse_bar_string(opt.word), w = parse_bar_string(opt.word2);
  const bool eq = alpha_eq(v, w);
  out.inputs = {{"left", render(v)}, {"right", render(w)}};
  out.result = eq;
  out.lines.push_back(eq ? "true" : "false");
  return eq ? 0 : 1;
}

int cmd_alpha_canon(const Options& opt, Output& out) {
  const BarString w = parse_bar_string(opt.word);
  const std::string c = render(canonicalize(w));
  out.inputs = {{"word", render(w)}};
  out.result = c;
  out.lines.push_back(c);
  return 0;
}

int cmd_selfcheck(const Options& opt, Output& out) {
  if (opt.cases == 0) std::cerr << "warning: --cases 0 runs no cases; every suite passes vacuously\n";
  LawConfig config;
  config.seed = opt.seed;
  config.cases = opt.cases;
  config.inject_defect = opt.inject_defect;
  bool all = true;
  json suites = json::array();
  for (const SuiteResult& r : run_law_suites(config)) {
    all &= r.passed();
    suites.push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"passed", r.passed()}});
    if (!r.passed()) suites.back()["first_failure"] = r.first_failure;
    std::string line = std::string(r.passed() ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.cases) + " cases";
    if (!r.passed()) line += ", " + std::to_string(r.failures) + " failures: " + r.first_failure;
    out.lines.push_back(line + ")");
  }
  out.inputs = {{"seed", opt.seed}, {"cases", opt.cases}};
  out.result = {{"passed", all}, {"suites", suites}};
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nominal automata: NOFAs, RNNAs, trace and language semantics"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--depth", opt.depth, "Maximal word length")->check(CLI::NonNegativeNumber);
    sub->add_option("--pool", opt.pool, "Number of names in the pool (default: auto)");
    sub->add_flag("--json", opt.json, "Machine-readable output");
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check an automaton file");
  validate_cmd->add_option("file", opt.file)->required();
  common(validate_cmd);

  auto* member_cmd = app.add_subcommand("member", "Decide whether a state accepts a word");
  member_cmd->add_option("file", opt.file)->required();
  member_cmd->add_option("state", opt.state)->required();
  member_cmd->add_option("word", opt.word)->required();
  common(member_cmd);

  std::vector<std::pair<std::string, CLI::App*>> language_cmds;
  for (const auto& [name, help] : {std::pair{"enum", "Accepted language by run enumeration"},
                                   std::pair{"trace", "Kleisli trace by Kleene iteration"},
                                   std::pair{"lang", "Language semantics by determinization"}}) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.file)->required();
    sub->add_option("state", opt.state, "Start state, e.g. q1(a) (default: first nullary state)");
    sub->add_option("--via", opt.via, "Computation route")->check(CLI::IsMember({"kl", "em", "oracle"}));
    common(sub);
    language_cmds.emplace_back(name, sub);
  }

  auto* det_cmd = app.add_subcommand("determinize", "One step of the determinized automaton");
  det_cmd->add_option("file", opt.file)->required();
  det_cmd->add_option("states", opt.states, "Members of the macro-state");
  common(det_cmd);

  auto* alpha_cmd = app.add_subcommand("alpha", "Alpha-equivalence of bar strings");
  alpha_cmd->require_subcommand(1);
  auto* eq_cmd = alpha_cmd->add_subcommand("eq", "Are two bar strings alpha-equivalent");
  eq_cmd->add_option("left", opt.word)->required();
  eq_cmd->add_option("right", opt.word2)->required();
  eq_cmd->add_flag("--json", opt.json, "Machine-readable output");
  auto* canon_cmd = alpha_cmd->add_subcommand("canon", "Canonical representative");
  canon_cmd->add_option("word", opt.word)->required();
  canon_cmd->add_flag("--json", opt.json, "Machine-readable output");

  auto* self_cmd = app.add_subcommand("selfcheck", "Run the law suites");
  self_cmd->add_option("--seed", opt.seed, "Random seed");
  self_cmd->add_option("--cases", opt.cases, "Cases per suite");
  self_cmd->add_flag("--json", opt.json, "Machine-readable output");
  self_cmd->add_flag("--inject-defect", opt.inject_defect)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command;
  Output out;
  try {
    int code = 0;
    if (validate_cmd->parsed()) {
      command = "validate";
      code = cmd_validate(opt, out);
    } else if (member_cmd->parsed()) {
      command = "member";
      code = cmd_member(opt, out);
    } else if (det_cmd->parsed()) {
      command = "determinize";
      code = cmd_determinize(opt, out);
    } else if (eq_cmd->parsed()) {
      command = "alpha eq";
      code = cmd_alpha_eq(opt, out);
    } else if (canon_cmd->parsed()) {
      command = "alpha canon";
      code = cmd_alpha_canon(opt, out);
    } else if (self_cmd->parsed()) {
      command = "selfcheck";
      code = cmd_selfcheck(opt, out);
    } else {
      for (const auto& [name, sub] : language_cmds)
        if (sub->parsed()) command = name;
      code = cmd_language(command, opt, out);
    }
    emit(command, opt, out);
    return code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << (opt.file.empty() ? "" : opt.file + ":") << e.what() << "\n";
    return 2;
  } catch (const SpecViolation& e) {
    std::cerr << "violation of condition " << e.condition() << ": " << e.what() << "\n";
    return 1;
  } catch (const PoolError& e) {
    std::cerr << "error: " << e.what() << "; pass a larger --pool\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
