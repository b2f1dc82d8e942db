#include "nomaut/automaton.hpp"

#include <algorithm>
#include <functional>

namespace nomaut {

State act(const Perm& p, const State& q) {
  State out{q.orbit, {}};
  out.args.reserve(q.args.size());
  for (Name a : q.args) out.args.push_back(p.apply(a));
  return out;
}

NameSet support(const State& q) { return NameSet(q.args.begin(), q.args.end()); }

ConcreteAutomaton::ConcreteAutomaton(AutomatonKind kind, std::vector<std::string> orbit_names,
                                     NameSet pool, SuppSet<State> states,
                                     SuppSet<State> finals,
                                     std::set<FreeTransition> free_transitions,
                                     std::set<BarTransition> bar_transitions)
    : kind_(kind),
      orbit_names_(std::move(orbit_names)),
      pool_(std::move(pool)),
      states_(std::move(states)),
      finals_(std::move(finals)),
      free_(std::move(free_transitions)),
      bar_(std::move(bar_transitions)) {
  for (const auto& t : free_) free_out_[t.source].emplace_back(t.letter, t.target);
  for (const auto& t : bar_) bar_out_[t.source].push_back(t.target);
}

const std::vector<std::pair<Name, State>>& ConcreteAutomaton::free_out(const State& q) const {
  static const std::vector<std::pair<Name, State>> none;
  auto it = free_out_.find(q);
  return it == free_out_.end() ? none : it->second;
}

const std::vector<Abs<State>>& ConcreteAutomaton::bar_out(const State& q) const {
  static const std::vector<Abs<State>> none;
  auto it = bar_out_.find(q);
  return it == bar_out_.end() ? none : it->second;
}

std::size_t ConcreteAutomaton::max_arity() const {
  std::size_t out = 0;
  for (const State& q : states_) out = std::max(out, q.args.size());
  return out;
}

std::string ConcreteAutomaton::render(const State& q) const {
  std::string out = q.orbit < orbit_names_.size() ? orbit_names_[q.orbit]
                                                  : "#orbit" + std::to_string(q.orbit);
  if (q.args.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < q.args.size(); ++i) out += (i ? "," : "") + to_string(q.args[i]);
  return out + ')';
}

State ConcreteAutomaton::parse_state(std::string_view text) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  const auto open = text.find('(');
  const std::string_view id = trim(text.substr(0, open));
  std::vector<Name> args;
  if (open != std::string_view::npos) {
    if (text.back() != ')') throw ParseError("state '" + std::string(text) + "': missing ')'");
    std::string_view inner = text.substr(open + 1, text.size() - open - 2);
    while (!trim(inner).empty()) {
      const auto comma = inner.find(',');
      const std::string_view item = trim(inner.substr(0, comma));
      auto n = parse_name(item);
      if (!n) throw ParseError("state '" + std::string(text) + "': bad name '" + std::string(item) + "'");
      args.push_back(*n);
      if (comma == std::string_view::npos) break;
      inner.remove_prefix(comma + 1);
    }
  }
  auto it = std::find(orbit_names_.begin(), orbit_names_.end(), id);
  if (it == orbit_names_.end()) throw ParseError("unknown state '" + std::string(id) + "'");
  State q{static_cast<std::uint32_t>(it - orbit_names_.begin()), std::move(args)};
  if (!has_state(q)) {
    for (Name a : q.args)
      if (!pool_.contains(a))
        throw PoolError("state '" + std::string(text) + "' uses name " + to_string(a) +
                        " outside the pool of size " + std::to_string(pool_.size()));
    throw ParseError("state '" + std::string(text) + "' does not exist (arity or repeated name)");
  }
  return q;
}

std::size_t auto_pool(std::size_t depth, std::size_t max_arity) { return depth + max_arity + 1; }

namespace {

// Calls f with every injective tuple of length k over the pool.
void for_each_injective(const std::vector<Name>& pool, std::size_t k,
                        const std::function<void(const std::vector<Name>&)>& f) {
  std::vector<Name> tuple;
  std::vector<bool> used(pool.size(), false);
  std::function<void()> rec = [&] {
    if (tuple.size() == k) {
      f(tuple);
      return;
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      tuple.push_back(pool[i]);
      rec();
      tuple.pop_back();
      used[i] = false;
    }
  };
  rec();
}

}  // namespace

ConcreteAutomaton expand(const AutomatonSpec& spec, std::size_t pool_size) {
  const std::size_t needed = std::max(spec.max_arity(), spec.max_rule_variables());
  if (pool_size < needed)
    throw PoolError("pool of size " + std::to_string(pool_size) + " is too small for spec '" +
                    spec.name + "' (needs at least " + std::to_string(needed) + ")");

  const NameSet pool = pool_names(pool_size);
  const std::vector<Name> atoms(pool.begin(), pool.end());
  std::vector<std::string> orbit_names;
  SuppSet<State> states;
  SuppSet<State> finals;
  for (std::size_t o = 0; o < spec.orbits.size(); ++o) {
    orbit_names.push_back(spec.orbits[o].id);
    for_each_injective(atoms, spec.orbits[o].arity, [&](const std::vector<Name>& t) {
      State q{static_cast<std::uint32_t>(o), t};
      if (spec.orbits[o].final) finals.insert(q);
      states.insert(std::move(q));
    });
  }

  std::set<FreeTransition> free;
  std::set<BarTransition> bar;
  for (const Rule& r : spec.rules) {
    const auto vars = r.variables();
    auto index_of = [&](const std::string& v) {
      return static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin());
    };
    for_each_injective(atoms, vars.size(), [&](const std::vector<Name>& t) {
      State src{static_cast<std::uint32_t>(r.source), {}};
      for (const auto& v : r.source_vars) src.args.push_back(t[index_of(v)]);
      State dst{static_cast<std::uint32_t>(r.target), {}};
      for (const auto& v : r.target_args) dst.args.push_back(t[index_of(v)]);
      const Name letter = t[index_of(r.letter.var)];
      if (r.letter.bar)
        bar.insert({std::move(src), Abs<State>(letter, std::move(dst))});
      else
        free.insert({std::move(src), letter, std::move(dst)});
    });
  }
  return ConcreteAutomaton(spec.kind, std::move(orbit_names), pool, std::move(states),
                           std::move(finals), std::move(free), std::move(bar));
}

Report validate(const ConcreteAutomaton& a) {
  Report report{"concrete automaton over pool of size " + std::to_string(a.pool().size()), {}};
  auto note = [&](std::string condition, std::string message) {
    report.findings.push_back({std::move(condition), std::move(message), 0});
  };
  for (const Perm& p : pool_transpositions(a.pool())) {
    for (const State& q : a.states())
      if (!a.has_state(act(p, q)))
        note("equivariance", "states not closed under " + to_string(p) + ": " + a.render(q));
    for (const State& q : a.finals())
      if (!a.is_final(act(p, q)))
        note("equivariance", "finals not closed under " + to_string(p) + ": " + a.render(q));
    for (const auto& t : a.free_transitions()) {
      const FreeTransition moved{act(p, t.source), p.apply(t.letter), act(p, t.target)};
      if (!a.free_transitions().contains(moved))
        note("equivariance", "missing transition " + a.render(moved.source) + " -" +
                                 to_string(moved.letter) + "-> " + a.render(moved.target) +
                                 " (image of " + a.render(t.source) + " under " + to_string(p) +
                                 ")");
    }
    for (const auto& t : a.bar_transitions()) {
      const BarTransition moved{act(p, t.source), act(p, t.target)};
      if (!a.bar_transitions().contains(moved))
        note("equivariance", "missing bar transition from " + a.render(moved.source) +
                                 " (image under " + to_string(p) + ")");
    }
  }
  for (const auto& t : a.bar_transitions()) {
    // Every admissible concretion must again be a bar transition.
    for (Name b : a.pool()) {
      auto target = t.target.concrete(b);
      if (!target) continue;
      if (!a.bar_transitions().contains({t.source, Abs<State>(b, *target)}))
        note("RNNA-(a)", "bar transitions of " + a.render(t.source) + " not alpha-invariant");
    }
  }
  if (a.kind() == AutomatonKind::nofa) {
    if (!a.bar_transitions().empty()) note("NOFA", "NOFA with bar transitions");
    return report;
  }
  for (const auto& t : a.free_transitions()) {
    const NameSet src = support(t.source);
    const NameSet tgt = support(t.target);
    if (!src.contains(t.letter) || !std::includes(src.begin(), src.end(), tgt.begin(), tgt.end()))
      note("RNNA-(b)", "free transition from " + a.render(t.source) +
                           " leaves the source support");
  }
  for (const auto& t : a.bar_transitions()) {
    const NameSet src = support(t.source);
    const NameSet tgt = support(t.target);
    if (!std::includes(src.begin(), src.end(), tgt.begin(), tgt.end()))
      note("RNNA-(b)", "bar transition from " + a.render(t.source) +
                           " leaves the source support");
  }
  return report;
}

namespace {

void require_state(const ConcreteAutomaton& a, const State& q) {
  if (!a.has_state(q)) throw Error("state " + a.render(q) + " is not in the automaton");
}

bool rnna_accepts(const ConcreteAutomaton& a, const State& q, const BarString& w, std::size_t i) {
  if (i == w.size()) return a.is_final(q);
  const Letter head = w.letters()[i];
  if (!head.bar) {
    for (const auto& [letter, next] : a.free_out(q))
      if (letter == head.name && rnna_accepts(a, next, w, i + 1)) return true;
    return false;
  }
  // Rename the binder to a name fresh for q and for the rest of the word;
  // by equivariance that representative is accepted if any is.
  const BarString tail = w.suffix(i + 1);
  NameSet avoid = free_names(tail);
  avoid.erase(head.name);
  avoid.merge(support(q));
  const Name c = least_fresh(avoid);
  if (!a.pool().contains(c))
    throw PoolError("no fresh binder left in the pool of size " + std::to_string(a.pool().size()));
  const BarString renamed = c == head.name ? tail : act(Perm::transposition(head.name, c), tail);
  for (const Abs<State>& target : a.bar_out(q)) {
    auto next = target.concrete(c);
    if (next && a.has_state(*next) && rnna_accepts(a, *next, renamed, 0)) return true;
  }
  return false;
}

}  // namespace

bool accepts(const ConcreteAutomaton& a, const State& q, const BarString& w) {
  require_state(a, q);
  for (Name n : free_names(w))
    if (!a.pool().contains(n))
      throw PoolError("word uses name " + to_string(n) + " outside the pool of size " +
                      std::to_string(a.pool().size()));
  if (a.kind() == AutomatonKind::rnna) return rnna_accepts(a, q, w, 0);

  if (w.has_binders()) return false;
  std::set<State> current{q};
  for (const Letter& l : w.letters()) {
    std::set<State> next;
    for (const State& s : current)
      for (const auto& [letter, target] : a.free_out(s))
        if (letter == l.name) next.insert(target);
    current = std::move(next);
  }
  return std::any_of(current.begin(), current.end(), [&](const State& s) { return a.is_final(s); });
}

LangApprox enum_language(const ConcreteAutomaton& a, const State& q, std::size_t depth) {
  require_state(a, q);
  if (a.kind() == AutomatonKind::rnna && a.pool().size() <= a.max_arity())
    throw PoolError("pool of size " + std::to_string(a.pool().size()) +
                    " leaves no fresh binder for states of arity " +
                    std::to_string(a.max_arity()));

  // Literal accepted words of length <= n from each state.
  std::map<std::pair<State, std::size_t>, std::set<BarString>> memo;
  std::function<const std::set<BarString>&(const State&, std::size_t)> runs =
      [&](const State& s, std::size_t n) -> const std::set<BarString>& {
    auto key = std::make_pair(s, n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::set<BarString> out;
    if (a.is_final(s)) out.insert(BarString{});
    if (n > 0) {
      for (const auto& [letter, next] : a.free_out(s))
        for (const BarString& w : runs(next, n - 1)) out.insert(w.prepend(Letter::free(letter)));
      for (const Abs<State>& target : a.bar_out(s)) {
        for (Name b : a.pool()) {
          auto next = target.concrete(b);
          if (!next || !a.has_state(*next)) continue;
          for (const BarString& w : runs(*next, n - 1)) out.insert(w.prepend(Letter::binder(b)));
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };

  LangApprox lang(lang_kind(a.kind()), depth);
  for (const BarString& w : runs(q, depth)) lang.insert(w);
  return lang;
}

}  // namespace nomaut
