#include <doctest.h>

#include <random>

#include "nomaut/automaton.hpp"
#include "nomaut/fixtures.hpp"
#include "oracles.hpp"

using namespace nomaut;

namespace {

const Name a(0), b(1), c(2);

BarString W(std::string_view text) { return parse_bar_string(text); }

LangApprox lang(LangKind kind, std::size_t depth, std::initializer_list<std::string_view> words) {
  LangApprox l(kind, depth);
  for (auto w : words) l.insert(W(w));
  return l;
}

ConcreteAutomaton fixture(const std::string& name, std::size_t pool) {
  return expand(fixture_spec(name), pool);
}

std::string condition_of(std::string_view text) {
  try {
    parse_spec(text);
  } catch (const SpecViolation& e) {
    return e.condition();
  }
  return "";
}

}  // namespace

TEST_SUITE("automata") {
  TEST_CASE("parse fixtures") {
    const AutomatonSpec ex1 = fixture_spec("EX1");
    CHECK(ex1.kind == AutomatonKind::nofa);
    CHECK(ex1.orbits.size() == 3);
    CHECK(ex1.rules.size() == 2);
    CHECK(ex1.orbits[2].final);
    CHECK(ex1.max_arity() == 1);
    const AutomatonSpec ex3 = fixture_spec("EX3");
    CHECK(ex3.rules[0].letter.bar);
    for (const auto& name : fixture_names()) {
      const AutomatonSpec spec = fixture_spec(name);
      const AutomatonSpec again = parse_spec(to_text(spec));
      CHECK(to_text(again) == to_text(spec));
      CHECK(validate(spec).ok());
    }
  }

  TEST_CASE("comments and blank lines") {
    const AutomatonSpec spec = parse_spec(
        "# leading comment\n\nnofa T  # trailing\nstate p(x, y) final\nstate r\n"
        "trans p(x,y) -y-> p(y,x)\ntrans r -z-> p(z, w)\n");
    CHECK(spec.orbits[0].arity == 2);
    CHECK(spec.rules.size() == 2);
    CHECK(spec.max_rule_variables() == 2);
  }

  TEST_CASE("side conditions") {
    CHECK(condition_of("rnna B\nstate q0\nstate q1(x) final\ntrans q0 -x-> q1(x)\n") == "RNNA-(b)");
    CHECK(condition_of("rnna B\nstate q(x)\nstate r(x) final\ntrans q(x) -|y-> r(z)\n") == "RNNA-(b)");
    CHECK(condition_of("nofa N\nstate q0\nstate q1(x) final\ntrans q0 -|x-> q1(x)\n") == "NOFA");
    CHECK(condition_of("nofa N\nstate q(x,y)\ntrans q(x,y) -x-> q(x,x)\n") == "injectivity");
    CHECK(condition_of("rnna G\nstate q(x)\nstate r(x) final\ntrans q(x) -|y-> r(y)\n"
                       "trans q(x) -|x-> r(x)\n") == "");
    const AutomatonSpec lax = parse_spec("rnna B\nstate q0\nstate q1(x) final\ntrans q0 -x-> q1(x)\n", false);
    const Report r = validate(lax);
    // Both the letter and the target variable break the condition.
    REQUIRE(r.findings.size() == 2);
    for (const Finding& f : r.findings) {
      CHECK(f.condition == "RNNA-(b)");
      CHECK(f.line == 4);
    }
  }

  TEST_CASE("parse errors carry locations") {
    auto line_of = [](std::string_view text) -> std::size_t {
      try {
        parse_spec(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(line_of("nofa N\nstate q0\ntrans q0 --> q0\n") == 3);
    CHECK(line_of("nofa N\nstate q0\nstate q0\n") == 3);
    CHECK(line_of("nofa N\nstate q(x)\ntrans q -x-> q(x)\n") == 3);
    CHECK(line_of("nofa N\nstate q0\ntrans q0 -x-> q9\n") == 3);
    CHECK(line_of("nofa N\nbogus\n") == 2);
    CHECK(line_of("state q0\n") == 1);
    CHECK_THROWS_WITH_AS(parse_spec("nofa N\nstate q0\ntrans q0 --> q0\n"), doctest::Contains("3:"), ParseError);
  }

  TEST_CASE("expansion") {
    const ConcreteAutomaton ex1 = fixture("EX1", 2);
    CHECK(ex1.states().size() == 4);
    const State q0{0, {}}, q1a{1, {a}}, q1b{1, {b}}, q2{2, {}};
    CHECK(ex1.states() == SuppSet<State>{q0, q1a, q1b, q2});
    CHECK(ex1.free_transitions().contains({q0, a, q1a}));
    CHECK(ex1.free_transitions().contains({q1a, a, q2}));
    CHECK(ex1.free_transitions().size() == 4);
    CHECK(ex1.render(q1a) == "q1(a)");
    CHECK(ex1.parse_state("q1(b)") == q1b);
    CHECK_THROWS_AS(ex1.parse_state("q1(c)"), PoolError);
    CHECK_THROWS_AS(ex1.parse_state("q7"), ParseError);

    const ConcreteAutomaton ex2 = fixture("EX2", 2);
    CHECK(ex2.bar_transitions() == std::set<BarTransition>{{q0, Abs<State>(a, q1a)}});

    CHECK_THROWS_AS(expand(parse_spec("nofa N\nstate q(x,y)\n"), 1), PoolError);
    CHECK(expand(parse_spec("nofa N\nstate q(x,y)\n"), 3).states().size() == 6);
  }

  TEST_CASE("expansions validate and are equivariant") {
    for (const auto& name : fixture_names()) CHECK(validate(fixture(name, 4)).ok());
    std::mt19937_64 rng(31);
    for (int i = 0; i < 40; ++i) {
      RandomSpecOptions options;
      options.kind = i % 2 ? AutomatonKind::rnna : AutomatonKind::nofa;
      const AutomatonSpec spec = random_spec(rng, options);
      CHECK(validate(spec).ok());
      const Report r = validate(expand(spec, std::max<std::size_t>(4, spec.max_rule_variables())));
      CHECK_MESSAGE(r.ok(), to_text(spec));
    }
  }

  TEST_CASE("a missing permuted transition is an equivariance violation") {
    const ConcreteAutomaton ex1 = fixture("EX1", 2);
    auto free = ex1.free_transitions();
    free.erase({State{0, {}}, b, State{1, {b}}});
    const ConcreteAutomaton broken(ex1.kind(), ex1.orbit_names(), ex1.pool(), ex1.states(), ex1.finals(),
                                   free, ex1.bar_transitions());
    const Report r = validate(broken);
    REQUIRE_FALSE(r.ok());
    CHECK(r.findings[0].condition == "equivariance");
  }

  TEST_CASE("acceptance") {
    const ConcreteAutomaton ex1 = fixture("EX1", 3);
    const State q0{0, {}};
    CHECK(accepts(ex1, q0, W("aa")));
    CHECK_FALSE(accepts(ex1, q0, W("ab")));
    CHECK_FALSE(accepts(ex1, q0, W("|aa")));
    CHECK_FALSE(accepts(ex1, q0, W("ε")));
    CHECK(accepts(ex1, State{2, {}}, W("ε")));
    CHECK_THROWS_AS(accepts(ex1, q0, W("dd")), PoolError);

    const ConcreteAutomaton ex2 = fixture("EX2", 3);
    CHECK(accepts(ex2, q0, W("|bb")));
    CHECK(accepts(ex2, q0, W("|aa")));
    CHECK(accepts(ex2, q0, W("|cc")));
    CHECK_FALSE(accepts(ex2, q0, W("|ab")));
    CHECK(accepts(ex2, State{1, {b}}, W("b")));
  }

  TEST_CASE("enumerated languages") {
    const State q0{0, {}};
    CHECK(enum_language(fixture("EX1", 3), q0, 3) == lang(LangKind::data, 3, {"aa", "bb", "cc"}));
    CHECK(enum_language(fixture("EX2", 3), q0, 2) == lang(LangKind::bar, 2, {"|aa"}));
    CHECK(enum_language(fixture("EX3", 6), q0, 4) ==
          lang(LangKind::bar, 4, {"|a", "|aa", "|aaa", "|aaaa"}));
    CHECK(enum_language(fixture("EX1", 5), State{1, {c}}, 3) == lang(LangKind::data, 3, {"c"}));
    CHECK_THROWS_AS(enum_language(fixture("EX3", 1), q0, 2), PoolError);
  }

  TEST_CASE("acceptance matches enumeration and is alpha-invariant") {
    std::mt19937_64 rng(32);
    std::vector<AutomatonSpec> specs{fixture_spec("EX2"), fixture_spec("EX3")};
    for (int i = 0; i < 6; ++i) {
      RandomSpecOptions options;
      options.kind = AutomatonKind::rnna;
      specs.push_back(random_spec(rng, options));
    }
    const auto words = oracle::all_bar_strings(4, 3);
    for (const auto& spec : specs) {
      const ConcreteAutomaton a = expand(spec, auto_pool(3, spec.max_arity()) + 1);
      for (const State& q : a.states()) {
        if (support(q).size() > 1) continue;
        const LangApprox l = enum_language(a, q, 3);
        for (const BarString& w : words) {
          const bool in = accepts(a, q, w);
          CHECK(in == l.member(w));
          CHECK(in == accepts(a, q, canonicalize(w).word()));
        }
      }
    }
  }

  TEST_CASE("acceptance is equivariant and languages are supported by their state") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 20; ++i) {
      RandomSpecOptions options;
      options.kind = i % 2 ? AutomatonKind::rnna : AutomatonKind::nofa;
      const AutomatonSpec spec = random_spec(rng, options);
      const ConcreteAutomaton a =
          expand(spec, std::max(auto_pool(3, spec.max_arity()), spec.max_rule_variables()));
      const std::uint32_t n = static_cast<std::uint32_t>(a.pool().size());
      for (const State& q : a.states()) {
        const LangApprox l = enum_language(a, q, 3);
        const NameSet supp = support(l), state_supp = support(q);
        // Guessing NOFAs may mention every pool name, but the truncated
        // language is still fixed by permutations that fix the state.
        if (options.kind == AutomatonKind::rnna)
          CHECK(std::includes(state_supp.begin(), state_supp.end(), supp.begin(), supp.end()));
        for (const Perm& fix : pool_transpositions(a.pool())) {
          const auto& [x, y] = fix.swaps().front();
          if (!state_supp.contains(x) && !state_supp.contains(y)) CHECK(act(fix, l) == l);
        }
        const Perm p = Perm::transposition(Name(i % n), Name((i + 1) % n));
        CHECK(enum_language(a, act(p, q), 3) == act(p, l));
        for (int k = 0; k < 10; ++k) {
          const BarString w =
              oracle::random_bar_string(rng, n, 3, options.kind == AutomatonKind::rnna);
          CHECK(accepts(a, act(p, q), act(p, w)) == accepts(a, q, w));
        }
      }
    }
  }

  TEST_CASE("bar languages are stable under pool growth") {
    for (const std::string name : {"EX2", "EX3"}) {
      const AutomatonSpec spec = fixture_spec(name);
      for (std::size_t depth = 0; depth <= 4; ++depth) {
        const std::size_t pool = auto_pool(depth, spec.max_arity());
        const ConcreteAutomaton small = expand(spec, pool), big = expand(spec, pool + 2);
        for (const State& q : small.states())
          CHECK(enum_language(small, q, depth) == enum_language(big, q, depth));
      }
    }
  }
}
