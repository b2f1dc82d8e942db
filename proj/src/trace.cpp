#include "nomaut/kleisli.hpp"

namespace nomaut {

Coalgebra coalgebra_of(const ConcreteAutomaton& a) {
  Coalgebra c(a.states());
  for (const State& q : a.states()) {
    SuppSet<FValue<State>> out;
    if (a.is_final(q)) out.insert(UnitF{});
    for (const auto& [letter, next] : a.free_out(q)) out.insert(PairF<State>{letter, next});
    for (const Abs<State>& target : a.bar_out(q)) out.insert(BindF<State>{target});
    c.set(q, std::move(out));
  }
  return c;
}

Word iota_step(const FValue<Word>& v) {
  if (const auto* p = std::get_if<PairF<Word>>(&v)) return prepend_free(p->name, p->value);
  if (const auto* b = std::get_if<BindF<Word>>(&v)) return prepend_bar(b->abs.binder(), b->abs.body());
  return Word{};
}

FValue<Word> iota_inverse(const Word& w) {
  if (w.empty()) return UnitF{};
  const Letter head = w.letters().front();
  const Word tail = canonicalize(w.word().suffix(1));
  if (!head.bar) return PairF<Word>{head.name, tail};
  return BindF<Word>{Abs<Word>(head.name, tail)};
}

namespace {

void require_binder_room(const ConcreteAutomaton& a) {
  if (a.kind() == AutomatonKind::rnna && a.pool().size() <= a.max_arity())
    throw PoolError("pool of size " + std::to_string(a.pool().size()) +
                    " leaves no fresh binder for states of arity " + std::to_string(a.max_arity()));
}

}  // namespace

std::vector<TraceMap> trace_chain(const ConcreteAutomaton& a, std::size_t depth) {
  require_binder_room(a);
  const Coalgebra c = coalgebra_of(a);
  std::vector<TraceMap> chain{TraceMap(a.states())};
  for (std::size_t i = 0; i < depth; ++i) {
    const TraceMap& prev = chain.back();
    TraceMap next(a.states());
    // The points of one round are independent of each other.
    for (const State& q : a.states()) {
      SuppSet<Word> words;
      for (const auto& v : c(q))
        for (const auto& fw : fbar_apply(prev, v)) words.insert(iota_step(fw));
      next.set(q, std::move(words));
    }
    chain.push_back(std::move(next));
  }
  return chain;
}

TraceMap trace_iterate(const ConcreteAutomaton& a, std::size_t depth) {
  return trace_chain(a, depth).back();
}

LangApprox to_lang(LangKind kind, std::size_t depth, const SuppSet<Word>& words) {
  LangApprox out(kind, depth);
  for (const Word& w : words) out.insert(w);
  return out;
}

namespace {

std::size_t body_length(const FValue<Word>& v) {
  if (const auto* p = std::get_if<PairF<Word>>(&v)) return p->value.size();
  if (const auto* b = std::get_if<BindF<Word>>(&v)) return b->abs.body().size();
  return 0;
}

}  // namespace

Report check_trace_square(const ConcreteAutomaton& a, std::size_t depth, bool inject_defect) {
  Report report{"trace square at depth " + std::to_string(depth), {}};
  if (depth == 0) return report;
  TraceMap lang(a.states());
  for (const State& q : a.states()) {
    SuppSet<Word> words;
    for (const Word& w : enum_language(a, q, depth).members()) words.insert(w);
    lang.set(q, std::move(words));
  }
  const Coalgebra c = coalgebra_of(a);
  bool defect_pending = inject_defect;
  for (const State& q : a.states()) {
    SuppSet<FValue<Word>> left;
    for (const auto& v : c(q))
      for (const auto& fw : fbar_apply(lang, v))
        if (body_length(fw) < depth) left.insert(fw);
    if (defect_pending && !left.empty()) {
      left.erase(*left.begin());
      defect_pending = false;
    }
    SuppSet<FValue<Word>> right;
    for (const Word& w : lang(q)) right.insert(iota_inverse(w));
    if (left == right) continue;
    std::string diff;
    for (const auto& v : left)
      if (!right.contains(v)) diff += " +" + render(v);
    for (const auto& v : right)
      if (!left.contains(v)) diff += " -" + render(v);
    report.findings.push_back({"trace-square", "state " + a.render(q) + ":" + diff, 0});
  }
  return report;
}

std::string render(const FValue<Word>& v) {
  if (const auto* p = std::get_if<PairF<Word>>(&v))
    return "(" + to_string(p->name) + ", " + render(p->value) + ")";
  if (const auto* b = std::get_if<BindF<Word>>(&v))
    return render_abs(b->abs, [](const Word& w) { return render(w); });
  return "*";
}

std::string render(const ConcreteAutomaton& a, const FValue<State>& v) {
  if (const auto* p = std::get_if<PairF<State>>(&v))
    return "(" + to_string(p->name) + ", " + a.render(p->value) + ")";
  if (const auto* b = std::get_if<BindF<State>>(&v))
    return render_abs(b->abs, [&](const State& q) { return a.render(q); });
  return "*";
}

}  // namespace nomaut
