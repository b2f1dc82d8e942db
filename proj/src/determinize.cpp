#include "nomaut/em.hpp"

namespace nomaut {

namespace {

SuppSet<FValue<State>> union_over(const Coalgebra& c, const MacroState& s) {
  SuppSet<FValue<State>> out;
  for (const State& q : s) out.insert_all(c(q));
  return out;
}

GValue<MacroState> checked_step(const ConcreteAutomaton& a, const Coalgebra& c,
                                const MacroState& s) {
  GValue<MacroState> g = epsilon(union_over(c, s), a.pool(), a.kind());
  if (g.bar_succ) {
    for (const State& q : g.bar_succ->body())
      if (!a.has_state(q))
        throw PoolError("determinization needs a fresh binder outside the pool of size " +
                        std::to_string(a.pool().size()));
  }
  return g;
}

}  // namespace

GValue<MacroState> determinize_step(const ConcreteAutomaton& a, const MacroState& s) {
  return checked_step(a, coalgebra_of(a), s);
}

Determinizer::Determinizer(const ConcreteAutomaton& a, bool inject_defect)
    : automaton_(a), coalgebra_(coalgebra_of(a)), defect_pending_(inject_defect) {}

const GValue<MacroState>& Determinizer::step(const MacroState& s) {
  if (auto it = steps_.find(s); it != steps_.end()) return it->second;
  GValue<MacroState> g = checked_step(automaton_, coalgebra_, s);
  if (defect_pending_) {
    for (auto& [name, succ] : g.free_succ) {
      if (succ.empty()) continue;
      succ = MacroState{};
      defect_pending_ = false;
      break;
    }
  }
  return steps_.emplace(s, std::move(g)).first->second;
}

LangApprox Determinizer::language(const MacroState& s, std::size_t depth) {
  const auto key = std::make_pair(s, depth);
  if (auto it = languages_.find(key); it != languages_.end()) return it->second;

  LangApprox out(lang_kind(automaton_.kind()), depth);
  if (!s.empty()) {
    // Copy: recursive calls may grow the memo tables.
    const GValue<MacroState> g = step(s);
    if (g.accept) out.insert(Word{});
    if (depth > 0) {
      for (const auto& [name, succ] : g.free_succ) {
        if (succ.empty()) continue;
        for (const Word& w : language(succ, depth - 1).members()) out.insert(prepend_free(name, w));
      }
      if (g.bar_succ && !g.bar_succ->body().empty()) {
        const Name binder = g.bar_succ->binder();
        for (const Word& w : language(g.bar_succ->body(), depth - 1).members())
          out.insert(prepend_bar(binder, w));
      }
    }
  }
  return languages_.emplace(key, std::move(out)).first->second;
}

LangApprox lang_semantics(const ConcreteAutomaton& a, const State& q, std::size_t depth) {
  if (!a.has_state(q)) throw Error("state " + a.render(q) + " is not in the automaton");
  Determinizer det(a);
  return det.language(set_unit(q), depth);
}

Report check_relation(const ConcreteAutomaton& a, std::size_t depth, bool inject_defect) {
  Report report{"language semantics vs trace at depth " + std::to_string(depth), {}};
  const TraceMap trace = trace_iterate(a, depth + 1);
  Determinizer det(a, inject_defect);
  for (const State& q : a.states()) {
    const LangApprox em = det.language(set_unit(q), depth);
    const LangApprox kl = to_lang(lang_kind(a.kind()), depth, trace(q));
    if (em != kl)
      report.findings.push_back(
          {"relation", "state " + a.render(q) + ": " + render(em) + " != " + render(kl), 0});
  }
  return report;
}

std::string render(const ConcreteAutomaton& a, const GValue<MacroState>& g) {
  auto set_text = [&](const MacroState& s) {
    return render_set(s, [&](const State& q) { return a.render(q); });
  };
  std::string out = std::string("(") + (g.accept ? "1" : "0");
  for (const auto& [name, succ] : g.free_succ)
    if (!succ.empty()) out += ", " + to_string(name) + " -> " + set_text(succ);
  if (g.bar_succ) out += ", |" + render_abs(*g.bar_succ, set_text);
  return out + ")";
}

}  // namespace nomaut
