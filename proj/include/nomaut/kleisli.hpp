#pragma once

#include <compare>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "nomaut/abs.hpp"
#include "nomaut/automaton.hpp"
#include "nomaut/bar_string.hpp"
#include "nomaut/lang.hpp"
#include "nomaut/supp_set.hpp"

namespace nomaut {

// One layer of the automaton functor: 1 + A x X (+ [A]X).

struct UnitF {
  auto operator<=>(const UnitF&) const = default;
};

template <class X>
struct PairF {
  Name name;
  X value;
  auto operator<=>(const PairF&) const = default;
};

template <class X>
struct BindF {
  Abs<X> abs;
  auto operator<=>(const BindF&) const = default;
};

template <class X>
using FValue = std::variant<UnitF, PairF<X>, BindF<X>>;

inline UnitF act(const Perm&, const UnitF& u) { return u; }
inline NameSet support(const UnitF&) { return {}; }

template <Nominal X>
FValue<X> act(const Perm& p, const FValue<X>& v) {
  if (const auto* pr = std::get_if<PairF<X>>(&v)) return PairF<X>{p.apply(pr->name), act(p, pr->value)};
  if (const auto* b = std::get_if<BindF<X>>(&v)) return BindF<X>{act(p, b->abs)};
  return UnitF{};
}

template <Nominal X>
NameSet support(const FValue<X>& v) {
  if (const auto* pr = std::get_if<PairF<X>>(&v)) {
    NameSet s = support(pr->value);
    s.insert(pr->name);
    return s;
  }
  if (const auto* b = std::get_if<BindF<X>>(&v)) return support(b->abs);
  return {};
}

/// F on plain maps.
template <class G, Nominal X>
auto fmap_F(G&& g, const FValue<X>& v) {
  using Y = std::decay_t<decltype(g(std::declval<const X&>()))>;
  if (const auto* pr = std::get_if<PairF<X>>(&v)) return FValue<Y>{PairF<Y>{pr->name, g(pr->value)}};
  if (const auto* b = std::get_if<BindF<X>>(&v)) return FValue<Y>{BindF<Y>{abs_map(g, b->abs)}};
  return FValue<Y>{UnitF{}};
}

/// lambda: FT -> TF, the distributive law behind the Kleisli extension:
///   * |-> {*},  (a, S) |-> {(a, x) : x in S},  <a>S |-> {<a>s : s in S}.
template <Nominal X>
SuppSet<FValue<X>> lambda_F(const FValue<SuppSet<X>>& v) {
  SuppSet<FValue<X>> out;
  if (const auto* pr = std::get_if<PairF<SuppSet<X>>>(&v)) {
    for (const X& x : pr->value) out.insert(PairF<X>{pr->name, x});
  } else if (const auto* b = std::get_if<BindF<SuppSet<X>>>(&v)) {
    for (const Abs<X>& a : rho_abs(b->abs)) out.insert(BindF<X>{a});
  } else {
    out.insert(UnitF{});
  }
  return out;
}

class CarrierMismatch : public Error {
 public:
  using Error::Error;
};

/// A morphism X -> Y of the Kleisli category of the powerset monad,
/// tabulated on a finite carrier of X.
template <Nominal X, Nominal Y>
class KleisliMap {
 public:
  // The least map: every point goes to the empty set.
  explicit KleisliMap(SuppSet<X> carrier) : carrier_(std::move(carrier)) {
    for (const X& x : carrier_) table_.emplace(x, SuppSet<Y>{});
  }

  const SuppSet<X>& carrier() const { return carrier_; }

  const SuppSet<Y>& operator()(const X& x) const {
    auto it = table_.find(x);
    if (it == table_.end()) throw CarrierMismatch("Kleisli map applied outside its carrier");
    return it->second;
  }

  void set(const X& x, SuppSet<Y> ys) {
    auto it = table_.find(x);
    if (it == table_.end()) throw CarrierMismatch("Kleisli map updated outside its carrier");
    it->second = std::move(ys);
  }

  void add(const X& x, Y y) {
    auto it = table_.find(x);
    if (it == table_.end()) throw CarrierMismatch("Kleisli map updated outside its carrier");
    it->second.insert(std::move(y));
  }

  // Pointwise inclusion: the order of the hom-lattice.
  bool leq(const KleisliMap& other) const {
    if (carrier_ != other.carrier_) throw CarrierMismatch("comparing maps with different carriers");
    for (const auto& [x, ys] : table_)
      if (!ys.subset_of(other(x))) return false;
    return true;
  }

  const std::map<X, SuppSet<Y>>& table() const { return table_; }

  bool operator==(const KleisliMap&) const = default;

 private:
  SuppSet<X> carrier_;
  std::map<X, SuppSet<Y>> table_;
};

// eta_X as a Kleisli map: the identity morphism.
template <Nominal X>
KleisliMap<X, X> kleisli_unit(const SuppSet<X>& carrier) {
  KleisliMap<X, X> out(carrier);
  for (const X& x : carrier) out.add(x, x);
  return out;
}

/// g . f = mu . Tg . f: (g . f)(x) is the union of g(y) over y in f(x).
template <Nominal X, Nominal Y, Nominal Z>
KleisliMap<X, Z> kleisli_compose(const KleisliMap<Y, Z>& g, const KleisliMap<X, Y>& f) {
  KleisliMap<X, Z> out(f.carrier());
  for (const auto& [x, ys] : f.table()) {
    SuppSet<Z> zs;
    for (const Y& y : ys) {
      if (!g.carrier().contains(y)) throw CarrierMismatch("composite leaves the carrier of g");
      zs.insert_all(g(y));
    }
    out.set(x, std::move(zs));
  }
  return out;
}

/// Pointwise union; the join of the empty family is the least map.
template <Nominal X, Nominal Y>
KleisliMap<X, Y> kleisli_join(const SuppSet<X>& carrier, const std::vector<KleisliMap<X, Y>>& fs) {
  KleisliMap<X, Y> out(carrier);
  for (const auto& f : fs) {
    if (f.carrier() != carrier) throw CarrierMismatch("joining maps with different carriers");
    for (const auto& [x, ys] : f.table()) out.set(x, set_union(out(x), ys));
  }
  return out;
}

/// f(p.x) = p.f(x) for every pool transposition p with p.x in the carrier.
template <Nominal X, Nominal Y>
bool is_equivariant(const KleisliMap<X, Y>& f, const NameSet& pool) {
  for (const Perm& p : pool_transpositions(pool))
    for (const auto& [x, ys] : f.table()) {
      const X moved = act(p, x);
      if (f.carrier().contains(moved) && f(moved) != act(p, ys)) return false;
    }
  return true;
}

/// The extension of F to Kleisli maps, F-bar(f) = lambda . Ff, at one point.
template <Nominal X, Nominal Y>
SuppSet<FValue<Y>> fbar_apply(const KleisliMap<X, Y>& f, const FValue<X>& v) {
  return lambda_F(fmap_F([&](const X& x) { return f(x); }, v));
}

// F-bar(f) tabulated on a finite carrier of FX.
template <Nominal X, Nominal Y>
KleisliMap<FValue<X>, FValue<Y>> fbar(const KleisliMap<X, Y>& f, const SuppSet<FValue<X>>& carrier) {
  KleisliMap<FValue<X>, FValue<Y>> out(carrier);
  for (const auto& v : carrier) out.set(v, fbar_apply(f, v));
  return out;
}

// Trace semantics of concrete automata.

using Word = CanonicalBarString;
using Coalgebra = KleisliMap<State, FValue<State>>;
using TraceMap = KleisliMap<State, Word>;

/// c(q) = {* if q final} + {(a, q') : q -a-> q'} + {<a>q' : q -|a-> q'}.
Coalgebra coalgebra_of(const ConcreteAutomaton& a);

/// The initial-algebra structure on words and alpha-classes:
///   * |-> eps,  (a, w) |-> aw,  <a>[w] |-> [|a w].
Word iota_step(const FValue<Word>& v);
// Its inverse.
FValue<Word> iota_inverse(const Word& w);

/// Kleene iteration h |-> J(iota) . F-bar(h) . c from the least map.
/// Iterate i holds exactly the accepted words of length < i. Returns
/// iterates 0..depth.
std::vector<TraceMap> trace_chain(const ConcreteAutomaton& a, std::size_t depth);
TraceMap trace_iterate(const ConcreteAutomaton& a, std::size_t depth);

// A trace value as a language of the automaton's kind.
LangApprox to_lang(LangKind kind, std::size_t depth, const SuppSet<Word>& words);

/// Checks F-bar(L) . c = J(iota^-1) . L pointwise for L the brute-force
/// language at `depth`, comparing F-values whose word part is shorter than
/// depth. `inject_defect` drops one element from the left-hand side.
Report check_trace_square(const ConcreteAutomaton& a, std::size_t depth,
                          bool inject_defect = false);

std::string render(const FValue<Word>& v);
std::string render(const ConcreteAutomaton& a, const FValue<State>& v);

}  // namespace nomaut
