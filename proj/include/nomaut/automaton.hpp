#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nomaut/abs.hpp"
#include "nomaut/bar_string.hpp"
#include "nomaut/lang.hpp"
#include "nomaut/supp_set.hpp"

namespace nomaut {

enum class AutomatonKind { nofa, rnna };

std::string to_string(AutomatonKind k);
inline LangKind lang_kind(AutomatonKind k) {
  return k == AutomatonKind::nofa ? LangKind::data : LangKind::bar;
}

// A side condition of the automaton definitions that a spec breaks.
class SpecViolation : public Error {
 public:
  SpecViolation(std::string condition, const std::string& what, std::size_t line);
  const std::string& condition() const { return condition_; }
  std::size_t line() const { return line_; }

 private:
  std::string condition_;
  std::size_t line_;
};

struct OrbitDecl {
  std::string id;
  std::size_t arity = 0;
  bool final = false;
  std::size_t line = 0;
};

struct RuleLetter {
  bool bar = false;
  std::string var;
};

/// One symbolic transition. Distinct variables denote distinct names, so
/// the rule stands for all its injective instantiations.
struct Rule {
  std::size_t source = 0;
  std::vector<std::string> source_vars;
  RuleLetter letter;
  std::size_t target = 0;
  std::vector<std::string> target_args;
  std::size_t line = 0;

  // Variables of the rule in first-occurrence order.
  std::vector<std::string> variables() const;
};

/// Equivariant automaton description: orbits of states and variable rules.
struct AutomatonSpec {
  AutomatonKind kind = AutomatonKind::nofa;
  std::string name;
  std::vector<OrbitDecl> orbits;
  std::vector<Rule> rules;

  std::optional<std::size_t> orbit_index(std::string_view id) const;
  std::size_t max_arity() const;
  std::size_t max_rule_variables() const;
};

/// Parses the automaton file grammar:
///
///   nofa NAME | rnna NAME
///   state QID(v1,...,vk) [final]
///   trans QID(vars) -x-> QID(args)
///   trans QID(vars) -|x-> QID(args)
///
/// with `#` comments. Throws ParseError (with line and column) for syntax
/// and arity errors; when `check` is set, also throws SpecViolation for the
/// first broken side condition.
AutomatonSpec parse_spec(std::string_view text, bool check = true);
AutomatonSpec load_spec(const std::string& path, bool check = true);

// Renders a spec back into the file grammar.
std::string to_text(const AutomatonSpec& spec);

struct Finding {
  std::string condition;
  std::string message;
  std::size_t line = 0;
};

struct Report {
  std::string subject;
  std::vector<Finding> findings;
  bool ok() const { return findings.empty(); }
};

/// Symbolic checks: injective tuples, no binders in NOFAs, and for RNNAs
/// finite branching (every variable of the letter or target occurs in the
/// source, except a fresh binder).
Report validate(const AutomatonSpec& spec);

/// A concrete state: an orbit with an injective tuple of names.
struct State {
  std::uint32_t orbit = 0;
  std::vector<Name> args;

  auto operator<=>(const State&) const = default;
};

State act(const Perm& p, const State& q);
NameSet support(const State& q);

struct FreeTransition {
  State source;
  Name letter;
  State target;
  auto operator<=>(const FreeTransition&) const = default;
};

// Bar transitions q -|a-> q' stored as q -> <a>q'; storing the abstraction
// closes them under alpha-invariance.
struct BarTransition {
  State source;
  Abs<State> target;
  auto operator<=>(const BarTransition&) const = default;
};

/// An automaton realized over a finite pool of names.
class ConcreteAutomaton {
 public:
  ConcreteAutomaton(AutomatonKind kind, std::vector<std::string> orbit_names, NameSet pool,
                    SuppSet<State> states, SuppSet<State> finals,
                    std::set<FreeTransition> free_transitions,
                    std::set<BarTransition> bar_transitions);

  AutomatonKind kind() const { return kind_; }
  const NameSet& pool() const { return pool_; }
  const SuppSet<State>& states() const { return states_; }
  const SuppSet<State>& finals() const { return finals_; }
  const std::set<FreeTransition>& free_transitions() const { return free_; }
  const std::set<BarTransition>& bar_transitions() const { return bar_; }
  const std::vector<std::string>& orbit_names() const { return orbit_names_; }

  bool has_state(const State& q) const { return states_.contains(q); }
  bool is_final(const State& q) const { return finals_.contains(q); }
  const std::vector<std::pair<Name, State>>& free_out(const State& q) const;
  const std::vector<Abs<State>>& bar_out(const State& q) const;
  std::size_t max_arity() const;

  std::string render(const State& q) const;
  // Reads `q1(a,b)` or `q0`; throws ParseError on unknown orbits, arity
  // mismatch or names outside the pool.
  State parse_state(std::string_view text) const;

 private:
  AutomatonKind kind_;
  std::vector<std::string> orbit_names_;
  NameSet pool_;
  SuppSet<State> states_;
  SuppSet<State> finals_;
  std::set<FreeTransition> free_;
  std::set<BarTransition> bar_;
  std::map<State, std::vector<std::pair<Name, State>>> free_out_;
  std::map<State, std::vector<Abs<State>>> bar_out_;
};

// Default pool size for queries up to `depth`: depth + max_arity + 1.
std::size_t auto_pool(std::size_t depth, std::size_t max_arity);

/// All injective instantiations of the spec over the pool {0..pool_size-1}.
/// Throws PoolError when the pool cannot instantiate some orbit or rule.
ConcreteAutomaton expand(const AutomatonSpec& spec, std::size_t pool_size);

/// Concrete checks: closure of states, finals and both transition relations
/// under pool permutations, and alpha-invariance of bar transitions.
Report validate(const ConcreteAutomaton& a);

/// Whether q accepts w (for RNNAs: some representative of [w]).
/// Throws PoolError if the pool lacks the names needed for the run.
bool accepts(const ConcreteAutomaton& a, const State& q, const BarString& w);

/// Brute-force language of q up to `depth`: every run over the pool, each
/// binder instantiated at every admissible pool name, words canonicalized.
LangApprox enum_language(const ConcreteAutomaton& a, const State& q, std::size_t depth);

}  // namespace nomaut
