// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nomaut/em.hpp"
#include "nomaut/fixtures.hpp"
#include "nomaut/kleisli.hpp"
#include "nomaut/laws.hpp"
#include "oracles.hpp"

using namespace nomaut;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_s > 0 && secs > budget_s) {
    out.ok = false;
    out.detail += " over the " + std::to_string(static_cast<int>(budget_s)) + " s budget";
  }
  if (!out.ok) ++failures;
  std::printf("%s  %s  [%.2f s] %s\n", out.ok ? "PASS" : "FAIL", title.c_str(), secs, out.detail.c_str());
  std::fflush(stdout);
}

std::vector<AutomatonSpec> family(AutomatonKind kind, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RandomSpecOptions options;
  options.kind = kind;
  std::vector<AutomatonSpec> out;
  while (out.size() < n) out.push_back(random_spec(rng, options));
  return out;
}

std::size_t pool_for(const AutomatonSpec& spec, std::size_t depth) {
  return std::max(auto_pool(depth, spec.max_arity()), spec.max_rule_variables());
}

// Trace at depth d+1 against the oracle at depth d, for every state.
Outcome trace_matches_oracle(const std::vector<AutomatonSpec>& specs, std::size_t depth) {
  std::size_t states = 0;
  for (const AutomatonSpec& spec : specs) {
    const ConcreteAutomaton a = expand(spec, pool_for(spec, depth));
    const TraceMap trace = trace_iterate(a, depth + 1);
    for (const State& q : a.states()) {
      ++states;
      const LangApprox oracle = enum_language(a, q, depth);
      if (to_lang(oracle.kind(), depth, trace(q)) != oracle)
        return {false, spec.name + " " + a.render(q) + ": " + render(to_lang(oracle.kind(), depth, trace(q))) +
                           " vs " + render(oracle)};
    }
  }
  return {true, std::to_string(specs.size()) + " automata, " + std::to_string(states) + " states"};
}

// Steps lang_tau along w; binders are matched at a name fresh for both sides.
bool tau_walk(const LangApprox& l, const BarString& w, const NameSet& pool) {
  LangApprox cur = l;
  BarString rest = w;
  while (!rest.empty()) {
    const Letter head = rest.letters().front();
    const BarString tail = rest.suffix(1);
    const LangTau tau = lang_tau(cur, pool);
    if (!head.bar) {
      cur = tau.free.at(head.name);
    } else {
      if (!tau.bar) return false;
      NameSet avoid = free_names(tail);
      avoid.erase(head.name);
      avoid.merge(support(*tau.bar));
      const Name c = least_fresh(avoid);
      cur = *tau.bar->concrete(c);
      rest = c == head.name ? tail : act(Perm::transposition(head.name, c), tail);
      continue;
    }
    rest = tail;
  }
  return lang_tau(cur, pool).eps;
}

}  // namespace

int main() {
  const auto nofas = family(AutomatonKind::nofa, 50, 1);
  const auto rnnas = family(AutomatonKind::rnna, 50, 2);
  std::vector<AutomatonSpec> nofa_set{fixture_spec("EX1")};
  nofa_set.insert(nofa_set.end(), nofas.begin(), nofas.end());
  std::vector<AutomatonSpec> rnna_set{fixture_spec("EX2"), fixture_spec("EX3")};
  rnna_set.insert(rnna_set.end(), rnnas.begin(), rnnas.end());

  criterion("trace equals accepted data language (EX1 + 50 random NOFAs, trace depth 4 vs oracle depth 3)", 10,
            [&] { return trace_matches_oracle(nofa_set, 3); });

  criterion("trace equals accepted bar language (EX2, EX3 + 50 random RNNAs, depth 4)", 30,
            [&] { return trace_matches_oracle(rnna_set, 4); });

  criterion("EM language semantics equals Kleisli trace (fixtures + both families, d <= 3)", 0, [&] {
    std::size_t checks = 0;
    for (const auto* set : {&nofa_set, &rnna_set})
      for (const AutomatonSpec& spec : *set) {
        const ConcreteAutomaton a = expand(spec, pool_for(spec, 3));
        for (std::size_t d = 0; d <= 3; ++d) {
          ++checks;
          const Report r = check_relation(a, d);
          if (!r.ok()) return Outcome{false, spec.name + ": " + r.findings.front().message};
        }
      }
    return Outcome{true, std::to_string(checks) + " automaton/depth pairs"};
  });

  criterion("alpha-equivalence agrees with the congruence-closure oracle (3 atoms, length <= 4, all pairs)", 0, [] {
    oracle::AlphaClosure closure(5, 4);
    const auto strings = oracle::all_bar_strings(3, 4);
    std::vector<CanonicalBarString> canon;
    for (const auto& s : strings) canon.push_back(canonicalize(s));
    std::size_t pairs = 0, disagreements = 0;
    for (std::size_t i = 0; i < strings.size(); ++i)
      for (std::size_t j = i; j < strings.size(); ++j) {
        ++pairs;
        const bool expected = closure.equivalent(strings[i], strings[j]);
        if (alpha_eq(strings[i], strings[j]) != expected || (canon[i] == canon[j]) != expected) ++disagreements;
      }
    return Outcome{disagreements == 0,
                   std::to_string(pairs) + " unordered pairs, " + std::to_string(disagreements) + " disagreements"};
  });

  criterion("law suites at seed 0, 200 cases each", 0, [] {
    LawConfig config;
    Outcome out;
    std::size_t total = 0;
    for (const SuiteResult& r : run_law_suites(config)) {
      total += r.cases;
      if (!r.passed()) {
        out.ok = false;
        out.detail += r.name + ": " + r.first_failure + "; ";
      }
    }
    if (out.ok) out.detail = "8 suites, " + std::to_string(total) + " cases";
    return out;
  });

  criterion("Kleene chain is monotone and iterate i is the length < i slice (fixtures, i <= 5)", 0, [] {
    std::size_t checks = 0;
    for (const auto& name : fixture_names()) {
      const AutomatonSpec spec = fixture_spec(name);
      const ConcreteAutomaton a = expand(spec, pool_for(spec, 4));
      const auto chain = trace_chain(a, 5);
      for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!chain[i].leq(chain[i + 1])) return Outcome{false, name + ": iterate " + std::to_string(i) + " not below the next"};
      for (const State& q : a.states()) {
        const LangApprox full = enum_language(a, q, 4);
        if (!chain[0](q).empty()) return Outcome{false, name + ": iterate 0 is not bottom"};
        for (std::size_t i = 1; i <= 5; ++i) {
          ++checks;
          if (to_lang(full.kind(), i - 1, chain[i](q)) != full.truncate(i - 1))
            return Outcome{false, name + " " + a.render(q) + ": iterate " + std::to_string(i)};
        }
      }
    }
    return Outcome{true, std::to_string(checks) + " state/iterate pairs"};
  });

  criterion("derivative structure (fixture languages at depth 4; 100 random bar languages)", 0, [] {
    std::size_t words_checked = 0;
    for (const auto& name : fixture_names()) {
      const AutomatonSpec spec = fixture_spec(name);
      const ConcreteAutomaton a = expand(spec, pool_for(spec, 4));
      const auto atoms = static_cast<std::uint32_t>(a.pool().size());
      const auto candidates = oracle::all_bar_strings(atoms, 4);
      for (const State& q : a.states()) {
        const LangApprox l = enum_language(a, q, 4);
        for (const BarString& w : candidates) {
          if (spec.kind == AutomatonKind::nofa && w.has_binders()) continue;
          ++words_checked;
          if (tau_walk(l, w, a.pool()) != l.member(w))
            return Outcome{false, name + " " + a.render(q) + ": " + render(w)};
        }
      }
    }
    std::mt19937_64 rng(0);
    for (int i = 0; i < 100; ++i) {
      const LangApprox l = oracle::random_language(rng, LangKind::bar, 4, 3);
      const NameSet s = support(l);
      const Name c1 = least_fresh(s);
      const Name c2 = least_fresh(set_union(s, NameSet{c1, Name(5)}));
      if (!abs_eq(derive_bar_at(l, c1), derive_bar_at(l, c2)))
        return Outcome{false, "derive_bar depends on the fresh name for " + render(l)};
    }
    return Outcome{true, std::to_string(words_checked) + " words walked, 100 languages"};
  });

  return failures == 0 ? 0 : 1;
}
