#include "nomaut/laws.hpp"

#include <functional>
#include <iterator>
#include <random>

#include "nomaut/em.hpp"
#include "nomaut/fixtures.hpp"
#include "nomaut/kleisli.hpp"

namespace nomaut {

namespace {

const NameSet& pool3() {
  static const NameSet pool = pool_names(3);
  return pool;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return below(2) == 1; }
  Name name() { return Name(static_cast<std::uint32_t>(below(3))); }

  template <class F>
  auto set(F&& elem, std::size_t max_size = 2) {
    using T = std::decay_t<decltype(elem())>;
    SuppSet<T> out;
    const std::size_t n = below(max_size + 1);
    for (std::size_t i = 0; i < n; ++i) out.insert(elem());
    return out;
  }

  template <class F>
  auto fvalue(F&& elem, AutomatonKind kind) {
    using T = std::decay_t<decltype(elem())>;
    const std::size_t choice = below(kind == AutomatonKind::rnna ? 3 : 2);
    if (choice == 0) return FValue<T>{UnitF{}};
    if (choice == 1) return FValue<T>{PairF<T>{name(), elem()}};
    return FValue<T>{BindF<T>{Abs<T>(name(), elem())}};
  }

  AutomatonKind kind() { return coin() ? AutomatonKind::rnna : AutomatonKind::nofa; }
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Collects law outcomes for one suite.
class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = describe();
  }
  void count_case() { ++result_.cases; }
  SuiteResult done() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string show(const SuppSet<Name>& s) { return render_set(s, [](Name n) { return to_string(n); }); }

template <class T>
std::string size_note(const SuppSet<T>& s) {
  return "set of size " + std::to_string(s.size());
}

// A broken distributive law for defect injection: forgets one element.
template <Nominal X>
SuppSet<FValue<X>> broken_lambda(const FValue<SuppSet<X>>& v) {
  SuppSet<FValue<X>> out = lambda_F(v);
  if (out.size() > 1) out.erase(*std::prev(out.end()));
  return out;
}

// Equivariant maps on the pool: x |-> {}, {x}, pool \ {x} or pool. Only the
// first two stay equivariant once names outside the pool are involved.
KleisliMap<Name, Name> equivariant_map(Gen& gen, const SuppSet<Name>& carrier, bool global = false) {
  const std::size_t shape = gen.below(global ? 2 : 4);
  KleisliMap<Name, Name> f(carrier);
  for (Name x : carrier) {
    SuppSet<Name> ys;
    for (Name y : carrier)
      if ((shape == 1 && y == x) || (shape == 2 && y != x) || shape == 3) ys.insert(y);
    f.set(x, ys);
  }
  return f;
}

}  // namespace

SuiteResult check_monad_laws(const LawConfig& config) {
  Suite suite("monad laws");
  Gen gen(config.seed);
  for (std::size_t i = 0; i < config.cases; ++i) {
    suite.count_case();
    auto s = gen.set([&] { return gen.name(); });
    auto ss = gen.set([&] { return gen.set([&] { return gen.name(); }); });
    auto sss = gen.set([&] { return gen.set([&] { return gen.set([&] { return gen.name(); }); }); });

    suite.check(set_mult(set_unit(s)) == s, [&] { return "mu . eta != id on " + show(s); });
    suite.check(set_mult(set_map([](Name n) { return set_unit(n); }, s)) == s,
                [&] { return "mu . T eta != id on " + show(s); });
    suite.check(set_mult(set_mult(sss)) ==
                    set_mult(set_map([](const SuppSet<SuppSet<Name>>& x) { return set_mult(x); }, sss)),
                [&] { return "associativity fails on " + size_note(sss); });

    auto u = gen.set([&] { return gen.name(); });
    const auto pairs = comm_pair(s, u);
    suite.check(pairs == comm_pair_left_first(s, u) && pairs == comm_pair_right_first(s, u),
                [&] { return "commutativity square fails on " + show(s) + ", " + show(u); });

    const Perm p = Perm::transposition(gen.name(), gen.name());
    const Name x = gen.name();
    suite.check(act(p, strength(x, s)) == strength(act(p, x), act(p, s)),
                [&] { return "strength not equivariant"; });
    suite.check(act(p, comm_pair(s, u)) == comm_pair(act(p, s), act(p, u)),
                [&] { return "comm_pair not equivariant"; });
    suite.check(act(p, set_mult(ss)) == set_mult(act(p, ss)), [&] { return "mu not equivariant"; });
  }
  return suite.done();
}

SuiteResult check_lambda_laws(const LawConfig& config) {
  Suite suite("lambda distributive law");
  Gen gen(config.seed + 1);
  auto lambda = [&](const auto& v) {
    return config.inject_defect ? broken_lambda(v) : lambda_F(v);
  };
  for (std::size_t i = 0; i < config.cases; ++i) {
    suite.count_case();
    const AutomatonKind kind = gen.kind();

    const FValue<Name> v = gen.fvalue([&] { return gen.name(); }, kind);
    suite.check(lambda(fmap_F([](Name n) { return set_unit(n); }, v)) == set_unit(v),
                [&] { return "unit square fails"; });

    const auto w = gen.fvalue([&] { return gen.set([&] { return gen.set([&] { return gen.name(); }); }); }, kind);
    const auto lhs = lambda(fmap_F([](const SuppSet<SuppSet<Name>>& s) { return set_mult(s); }, w));
    SuppSet<SuppSet<FValue<Name>>> nested;
    for (const auto& x : lambda(w)) nested.insert(lambda(x));
    suite.check(lhs == set_mult(nested), [&] { return "multiplication square fails"; });

    const auto t = gen.fvalue([&] { return gen.set([&] { return gen.name(); }); }, kind);
    const Perm p = Perm::transposition(gen.name(), gen.name());
    suite.check(lambda(act(p, t)) == act(p, lambda(t)), [&] { return "lambda not equivariant"; });
  }
  return suite.done();
}

SuiteResult check_rho_laws(const LawConfig& config) {
  Suite suite("rho quotient square");
  Gen gen(config.seed + 2);
  for (std::size_t i = 0; i < config.cases; ++i) {
    suite.count_case();
    const Name a = gen.name();
    const auto s = gen.set([&] { return gen.name(); });

    // P q . lambda = rho . q on (a, S), with lambda the strength of A x -.
    const auto left = set_map([](const std::pair<Name, Name>& x) { return Abs<Name>(x.first, x.second); },
                              strength(a, s));
    suite.check(left == rho_abs(Abs<SuppSet<Name>>(a, s)),
                [&] { return "quotient square fails at <" + to_string(a) + ">" + show(s); });

    // Any representative of <a>S gives the same set.
    NameSet outer = support(s);
    outer.erase(a);
    const Name b = gen.coin() ? least_fresh(set_union(outer, NameSet{a})) : least_fresh(outer);
    suite.check(rho_abs_at(a, s) == rho_abs_at(b, act(Perm::transposition(a, b), s)),
                [&] { return "rho depends on the representative"; });

    const auto bigger = set_union(s, gen.set([&] { return gen.name(); }));
    suite.check(rho_abs(Abs<SuppSet<Name>>(a, s)).subset_of(rho_abs(Abs<SuppSet<Name>>(a, bigger))),
                [&] { return "rho not monotone"; });
  }
  return suite.done();
}

SuiteResult check_psi_laws(const LawConfig& config) {
  Suite suite("psi/rho inversion and psi naturality");
  Gen gen(config.seed + 3);
  using P = std::pair<Name, Name>;
  for (std::size_t i = 0; i < config.cases; ++i) {
    suite.count_case();
    const Abs<SuppSet<Name>> v(gen.name(), gen.set([&] { return gen.name(); }));
    suite.check(psi_abs(rho_abs(v)) == v, [&] { return "psi . rho != id"; });

    const auto t = gen.set([&] { return Abs<Name>(gen.name(), gen.name()); });
    suite.check(rho_abs(psi_abs(t)) == t, [&] { return "rho . psi != id"; });

    const NameSet supp = support(t);
    const Name c1 = least_fresh(supp);
    const Name c2 = least_fresh(set_union(supp, NameSet{c1}));
    suite.check(psi_abs_at(t, c1) == psi_abs_at(t, c2), [&] { return "psi depends on the fresh name"; });

    const auto tp = gen.set([&] { return Abs<P>(gen.name(), P{gen.name(), gen.name()}); });
    auto first = [](const P& x) { return x.first; };
    const auto lhs = psi_abs(set_map([&](const Abs<P>& x) { return abs_map(first, x); }, tp));
    const auto rhs = abs_map([&](const SuppSet<P>& s) { return set_map(first, s); }, psi_abs(tp));
    suite.check(lhs == rhs, [&] { return "psi not natural"; });
  }
  return suite.done();
}

SuiteResult check_eps_laws(const LawConfig& config) {
  Suite suite("epsilon extension squares");
  Gen gen(config.seed + 4);
  const NameSet& pool = pool3();
  for (std::size_t i = 0; i < config.cases; ++i) {
    suite.count_case();
    const AutomatonKind kind = gen.kind();

    // Left: eps . mu F . T lambda = G mu . eps T on TFT.
    const auto tft = gen.set([&] { return gen.fvalue([&] { return gen.set([&] { return gen.name(); }); }, kind); });
    SuppSet<SuppSet<FValue<Name>>> lifted;
    for (const auto& v : tft) lifted.insert(lambda_F(v));
    const auto upper = epsilon(set_mult(lifted), pool, kind);
    const auto lower = G_mult(epsilon(tft, pool, kind));
    suite.check(upper == lower, [&] { return "left square fails on " + size_note(tft); });

    // Right: eps . mu F = G mu . rho T . T eps on TTF.
    const auto ttf = gen.set([&] { return gen.set([&] { return gen.fvalue([&] { return gen.name(); }, kind); }); });
    const auto top = epsilon(set_mult(ttf), pool, kind);
    const auto per_set = set_map([&](const SuppSet<FValue<Name>>& s) { return epsilon(s, pool, kind); }, ttf);
    const auto bottom = G_mult(rho_G(per_set, pool, kind));
    suite.check(top == bottom, [&] { return "right square fails on " + size_note(ttf); });
  }
  return suite.done();
}

SuiteResult check_hom_lattice_laws(const LawConfig& config) {
  Suite suite("hom-lattice laws");
  Gen gen(config.seed + 5);
  const SuppSet<Name> carrier(pool3().begin(), pool3().end());
  using Map = KleisliMap<Name, Name>;
  auto random_map = [&] {
    Map f(carrier);
    for (Name x : carrier) f.set(x, gen.set([&] { return gen.name(); }));
    return f;
  };
  auto random_equivariant = [&] { return equivariant_map(gen, carrier); };
  const Map bottom(carrier);
  const Map id = kleisli_unit(carrier);
  for (std::size_t i = 0; i < config.cases; ++i) {
    suite.count_case();
    const Map f = random_map(), g = random_map(), h = random_map();
    const Map fg = kleisli_join(carrier, std::vector<Map>{f, g});

    suite.check(f.leq(fg) && g.leq(fg), [] { return "join is not an upper bound"; });
    const Map above = kleisli_join(carrier, std::vector<Map>{f, g, h});
    suite.check(fg.leq(above), [] { return "join is not least"; });
    suite.check(kleisli_join<Name, Name>(carrier, std::vector<Map>{}) == bottom, [] { return "empty join is not bottom"; });
    suite.check(kleisli_join(carrier, std::vector<Map>{f}) == f, [] { return "singleton join changes the map"; });

    suite.check(kleisli_compose(fg, h) == kleisli_join(carrier, std::vector<Map>{kleisli_compose(f, h), kleisli_compose(g, h)}),
                [] { return "composition does not distribute over joins on the left"; });
    suite.check(kleisli_compose(h, fg) == kleisli_join(carrier, std::vector<Map>{kleisli_compose(h, f), kleisli_compose(h, g)}),
                [] { return "composition does not distribute over joins on the right"; });
    suite.check(kleisli_compose(bottom, f) == bottom, [] { return "composition is not left strict"; });

    suite.check(kleisli_compose(h, kleisli_compose(g, f)) == kleisli_compose(kleisli_compose(h, g), f),
                [] { return "composition not associative"; });
    suite.check(kleisli_compose(f, id) == f && kleisli_compose(id, f) == f,
                [] { return "unit laws of composition fail"; });

    const Map e1 = random_equivariant(), e2 = random_equivariant();
    suite.check(is_equivariant(e1, pool3()) && is_equivariant(kleisli_join(carrier, std::vector<Map>{e1, e2}), pool3()),
                [] { return "equivariant maps not closed under join"; });
  }
  return suite.done();
}

SuiteResult check_fbar_laws(const LawConfig& config) {
  Suite suite("F-bar functoriality");
  Gen gen(config.seed + 6);
  const SuppSet<Name> carrier(pool3().begin(), pool3().end());
  using Map = KleisliMap<Name, Name>;
  auto random_map = [&] {
    Map f(carrier);
    for (Name x : carrier) f.set(x, gen.set([&] { return gen.name(); }));
    return f;
  };
  const Map id = kleisli_unit(carrier);
  for (std::size_t i = 0; i < config.cases; ++i) {
    suite.count_case();
    const AutomatonKind kind = gen.kind();
    const FValue<Name> v = gen.fvalue([&] { return gen.name(); }, kind);
    // Under a binder only equivariant maps act independently of the representative.
    const bool binding = kind == AutomatonKind::rnna;
    const Map f = binding ? equivariant_map(gen, carrier, true) : random_map();
    const Map g = binding ? equivariant_map(gen, carrier, true) : random_map();

    suite.check(fbar_apply(id, v) == set_unit(v), [] { return "F-bar does not preserve identities"; });

    SuppSet<FValue<Name>> stepwise;
    for (const auto& u : fbar_apply(f, v)) stepwise.insert_all(fbar_apply(g, u));
    suite.check(fbar_apply(kleisli_compose(g, f), v) == stepwise,
                [] { return "F-bar does not preserve composition"; });

    const Map fg = kleisli_join(carrier, std::vector<Map>{f, g});
    suite.check(fbar_apply(f, v).subset_of(fbar_apply(fg, v)), [] { return "F-bar not locally monotone"; });
  }
  return suite.done();
}

SuiteResult check_semantics_agreement(const LawConfig& config) {
  Suite suite("trace / language semantics agreement");
  Gen gen(config.seed + 7);
  constexpr std::size_t depth = 3;

  auto run = [&](const AutomatonSpec& spec, bool defect) {
    suite.count_case();
    const std::size_t pool =
        std::max(auto_pool(depth, spec.max_arity()), spec.max_rule_variables());
    const ConcreteAutomaton a = expand(spec, pool);
    const TraceMap trace = trace_iterate(a, depth + 1);
    for (const State& q : a.states()) {
      const LangApprox oracle = enum_language(a, q, depth);
      suite.check(to_lang(oracle.kind(), depth, trace(q)) == oracle, [&] {
        return spec.name + ": trace differs from accepted language at " + a.render(q);
      });
    }
    const Report relation = check_relation(a, depth, defect);
    suite.check(relation.ok(), [&] { return spec.name + ": " + relation.findings.front().message; });
    const Report square = check_trace_square(a, depth);
    suite.check(square.ok(), [&] { return spec.name + ": " + square.findings.front().message; });
  };

  if (config.cases == 0) return suite.done();
  for (const auto& name : fixture_names()) run(fixture_spec(name), config.inject_defect);
  for (std::size_t i = fixture_names().size(); i < config.cases; ++i) {
    RandomSpecOptions options;
    options.kind = gen.kind();
    run(random_spec(gen.rng(), options), false);
  }
  return suite.done();
}

std::vector<SuiteResult> run_law_suites(const LawConfig& config) {
  return {check_monad_laws(config),       check_lambda_laws(config),
          check_rho_laws(config),         check_psi_laws(config),
          check_eps_laws(config),         check_hom_lattice_laws(config),
          check_fbar_laws(config),        check_semantics_agreement(config)};
}

}  // namespace nomaut
