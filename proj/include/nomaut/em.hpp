#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "nomaut/abs.hpp"
#include "nomaut/automaton.hpp"
#include "nomaut/kleisli.hpp"
#include "nomaut/lang.hpp"
#include "nomaut/supp_set.hpp"

namespace nomaut {

/// One layer of the deterministic functor 2 x X^A (x [A]X).
///
/// The exponent is tabulated on a finite pool; `bar_succ` is present exactly
/// for the binding signature.
template <class S>
struct GValue {
  bool accept = false;
  std::map<Name, S> free_succ;
  std::optional<Abs<S>> bar_succ;

  auto operator<=>(const GValue&) const = default;
};

/// epsilon: TF -> GT. Splits a set of F-values into acceptance, the
/// successors per name, and the bar successors gathered under one binder
/// fresh for the whole set.
template <Nominal X>
GValue<SuppSet<X>> epsilon(const SuppSet<FValue<X>>& s, const NameSet& pool, AutomatonKind kind) {
  GValue<SuppSet<X>> out;
  for (Name a : pool) out.free_succ.emplace(a, SuppSet<X>{});
  SuppSet<Abs<X>> binds;
  for (const auto& v : s) {
    if (std::holds_alternative<UnitF>(v)) {
      out.accept = true;
    } else if (const auto* p = std::get_if<PairF<X>>(&v)) {
      auto it = out.free_succ.find(p->name);
      if (it == out.free_succ.end())
        throw PoolError("epsilon: name " + to_string(p->name) + " outside the pool");
      it->second.insert(p->value);
    } else {
      binds.insert(std::get<BindF<X>>(v).abs);
    }
  }
  if (kind == AutomatonKind::rnna) out.bar_succ = psi_abs_at(binds, least_fresh(support(s)));
  else if (!binds.empty()) throw Error("epsilon: bar values in the non-binding signature");
  return out;
}

/// The lifting law TG -> GT: acceptance is disjunction, free successors
/// are collected pointwise, bar successors go through psi.
template <Nominal S>
GValue<SuppSet<S>> rho_G(const SuppSet<GValue<S>>& t, const NameSet& pool, AutomatonKind kind) {
  GValue<SuppSet<S>> out;
  for (Name a : pool) out.free_succ.emplace(a, SuppSet<S>{});
  SuppSet<Abs<S>> bars;
  for (const auto& g : t) {
    out.accept = out.accept || g.accept;
    for (Name a : pool) out.free_succ[a].insert(g.free_succ.at(a));
    if (g.bar_succ) bars.insert(*g.bar_succ);
  }
  if (kind == AutomatonKind::rnna) out.bar_succ = psi_abs(bars);
  return out;
}

// G on plain maps.
template <class F, class S>
auto G_map(F&& f, const GValue<S>& g) {
  using U = std::decay_t<decltype(f(std::declval<const S&>()))>;
  GValue<U> out;
  out.accept = g.accept;
  for (const auto& [a, s] : g.free_succ) out.free_succ.emplace(a, f(s));
  if (g.bar_succ) out.bar_succ = abs_map(f, *g.bar_succ);
  return out;
}

template <Nominal X>
GValue<SuppSet<X>> G_mult(const GValue<SuppSet<SuppSet<X>>>& g) {
  return G_map([](const SuppSet<SuppSet<X>>& s) { return set_mult(s); }, g);
}

using MacroState = SuppSet<State>;

/// One step of the generalized determinization: epsilon applied to the
/// union of the coalgebra over the members of S.
GValue<MacroState> determinize_step(const ConcreteAutomaton& a, const MacroState& s);

/// Lazily explores macro-states reachable from a starting set and reads off
/// the accepted language.
///
/// Memo tables are filled on demand and never invalidated; a Determinizer
/// is a single-writer object and must not be shared between threads.
class Determinizer {
 public:
  explicit Determinizer(const ConcreteAutomaton& a, bool inject_defect = false);

  const GValue<MacroState>& step(const MacroState& s);
  LangApprox language(const MacroState& s, std::size_t depth);

  std::size_t explored() const { return steps_.size(); }

 private:
  const ConcreteAutomaton& automaton_;
  Coalgebra coalgebra_;
  bool defect_pending_;
  std::map<MacroState, GValue<MacroState>> steps_;
  std::map<std::pair<MacroState, std::size_t>, LangApprox> languages_;
};

/// Language of q through the determinization, starting at {q}.
LangApprox lang_semantics(const ConcreteAutomaton& a, const State& q, std::size_t depth);

/// For every state, the language at `depth` equals the trace iterate
/// depth + 1. `inject_defect` drops one macro transition.
Report check_relation(const ConcreteAutomaton& a, std::size_t depth, bool inject_defect = false);

std::string render(const ConcreteAutomaton& a, const GValue<MacroState>& g);

}  // namespace nomaut
