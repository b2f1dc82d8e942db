#include <doctest.h>

#include <random>

#include "nomaut/em.hpp"
#include "nomaut/fixtures.hpp"

using namespace nomaut;

namespace {

const Name a(0), b(1), c(2);
const State q0{0, {}};

LangApprox lang(LangKind kind, std::size_t depth, std::initializer_list<std::string_view> words) {
  LangApprox l(kind, depth);
  for (auto w : words) l.insert(parse_bar_string(w));
  return l;
}

ConcreteAutomaton fixture(const std::string& name, std::size_t depth) {
  const AutomatonSpec spec = fixture_spec(name);
  return expand(spec, auto_pool(depth, spec.max_arity()));
}

std::vector<AutomatonSpec> sample_specs(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::vector<AutomatonSpec> out;
  for (const auto& name : fixture_names()) out.push_back(fixture_spec(name));
  for (std::size_t i = 0; i < n; ++i) {
    RandomSpecOptions options;
    options.kind = i % 2 ? AutomatonKind::rnna : AutomatonKind::nofa;
    out.push_back(random_spec(rng, options));
  }
  return out;
}

}  // namespace

TEST_SUITE("em") {
  TEST_CASE("epsilon") {
    const NameSet pool = pool_names(3);
    using V = FValue<Name>;
    const auto unit = epsilon(SuppSet<V>{UnitF{}}, pool, AutomatonKind::rnna);
    CHECK(unit.accept);
    for (const auto& [n, s] : unit.free_succ) CHECK(s.empty());
    REQUIRE(unit.bar_succ.has_value());
    CHECK(unit.bar_succ->body().empty());
    CHECK_FALSE(epsilon(SuppSet<V>{UnitF{}}, pool, AutomatonKind::nofa).bar_succ.has_value());

    const auto pairs = epsilon(SuppSet<V>{PairF<Name>{a, c}, PairF<Name>{b, a}}, pool, AutomatonKind::nofa);
    CHECK_FALSE(pairs.accept);
    CHECK(pairs.free_succ.at(a) == SuppSet<Name>{c});
    CHECK(pairs.free_succ.at(b) == SuppSet<Name>{a});
    CHECK(pairs.free_succ.at(c).empty());

    const auto bind = epsilon(SuppSet<V>{BindF<Name>{Abs<Name>(a, a)}}, pool, AutomatonKind::rnna);
    REQUIRE(bind.bar_succ.has_value());
    CHECK(abs_eq(*bind.bar_succ, Abs<SuppSet<Name>>(a, {a})));
    CHECK(abs_eq(*bind.bar_succ, Abs<SuppSet<Name>>(c, {c})));

    CHECK_THROWS_AS(epsilon(SuppSet<V>{BindF<Name>{Abs<Name>(a, a)}}, pool, AutomatonKind::nofa), Error);
  }

  TEST_CASE("epsilon squares on degenerate inputs") {
    const NameSet pool = pool_names(3);
    using V = FValue<Name>;
    for (AutomatonKind kind : {AutomatonKind::nofa, AutomatonKind::rnna}) {
      const SuppSet<SuppSet<V>> empty;
      CHECK(epsilon(set_mult(empty), pool, kind) ==
            G_mult(rho_G(set_map([&](const SuppSet<V>& s) { return epsilon(s, pool, kind); }, empty), pool, kind)));
      const SuppSet<SuppSet<V>> unit{{UnitF{}}};
      CHECK(epsilon(set_mult(unit), pool, kind) ==
            G_mult(rho_G(set_map([&](const SuppSet<V>& s) { return epsilon(s, pool, kind); }, unit), pool, kind)));
    }
  }

  TEST_CASE("determinization steps") {
    const ConcreteAutomaton ex1 = expand(fixture_spec("EX1"), 2);
    const auto final_step = determinize_step(ex1, {State{2, {}}});
    CHECK(final_step.accept);
    for (const auto& [n, s] : final_step.free_succ) CHECK(s.empty());

    const auto start = determinize_step(ex1, {q0});
    CHECK_FALSE(start.accept);
    CHECK(start.free_succ.at(a) == MacroState{State{1, {a}}});
    CHECK(start.free_succ.at(b) == MacroState{State{1, {b}}});
    CHECK(render(ex1, start) == "(0, a -> {q1(a)}, b -> {q1(b)})");

    const ConcreteAutomaton ex2 = expand(fixture_spec("EX2"), 3);
    const auto bar = determinize_step(ex2, {q0});
    REQUIRE(bar.bar_succ.has_value());
    CHECK(*bar.bar_succ == Abs<MacroState>(c, {State{1, {c}}}));
    CHECK(render(ex2, bar) == "(0, |<a>{q1(a)})");
  }

  TEST_CASE("determinization needs a fresh binder") {
    const ConcreteAutomaton aut =
        expand(parse_spec("rnna P\nstate q(x)\nstate r(x,y) final\ntrans q(x) -|y-> r(x,y)\n"), 2);
    CHECK(determinize_step(aut, {State{0, {a}}}).bar_succ.has_value());
    CHECK_THROWS_AS(determinize_step(aut, {State{0, {a}}, State{0, {b}}}), PoolError);
  }

  TEST_CASE("language semantics") {
    CHECK(lang_semantics(expand(fixture_spec("EX1"), 3), q0, 3) == lang(LangKind::data, 3, {"aa", "bb", "cc"}));
    CHECK(lang_semantics(fixture("EX2", 2), q0, 2) == lang(LangKind::bar, 2, {"|aa"}));
    CHECK(lang_semantics(fixture("EX3", 1), q0, 1) == lang(LangKind::bar, 1, {"|a"}));
    CHECK(lang_semantics(fixture("EX3", 4), q0, 4) == lang(LangKind::bar, 4, {"|a", "|aa", "|aaa", "|aaaa"}));
    CHECK(lang_semantics(fixture("EX3", 4), State{1, {b}}, 2) == lang(LangKind::bar, 2, {"ε", "b", "bb"}));
  }

  TEST_CASE("relation to the trace") {
    for (const auto& name : fixture_names()) {
      const ConcreteAutomaton aut = fixture(name, 3);
      CHECK(check_relation(aut, 3).ok());
      CHECK_FALSE(check_relation(aut, 3, true).ok());
    }
    for (const auto& spec : sample_specs(41, 20)) {
      const ConcreteAutomaton aut = expand(spec, auto_pool(3, spec.max_arity()));
      const Report r = check_relation(aut, 3);
      CHECK_MESSAGE(r.ok(), to_text(spec));
    }
  }

  TEST_CASE("derivative coherence and union homomorphism") {
    for (const auto& spec : sample_specs(42, 12)) {
      const std::size_t depth = 3;
      const ConcreteAutomaton aut = expand(spec, auto_pool(depth, spec.max_arity()));
      Determinizer det(aut);
      for (const State& q : aut.states()) {
        const LangApprox l = det.language({q}, depth);
        const LangTau tau = lang_tau(l, aut.pool());
        const GValue<MacroState> g = det.step({q});
        CHECK(tau.eps == g.accept);
        for (const auto& [n, succ] : g.free_succ) CHECK(tau.free.at(n) == det.language(succ, depth - 1));
        if (aut.kind() == AutomatonKind::rnna) {
          REQUIRE(tau.bar.has_value());
          REQUIRE(g.bar_succ.has_value());
          const auto expected = abs_map([&](const MacroState& s) { return det.language(s, depth - 1); }, *g.bar_succ);
          CHECK(abs_eq(*tau.bar, expected));
        }
      }
      // A macro-state's language is the union of its members' languages.
      const auto& states = aut.states();
      for (auto it = states.begin(); it != states.end(); ++it) {
        auto next = std::next(it);
        if (next == states.end()) break;
        if (set_union(support(*it), support(*next)).size() + 1 > aut.pool().size() - depth) continue;
        LangApprox joined = det.language({*it}, depth);
        for (const auto& w : det.language({*next}, depth).members()) joined.insert(w);
        CHECK(det.language({*it, *next}, depth) == joined);
      }
    }
  }
}
