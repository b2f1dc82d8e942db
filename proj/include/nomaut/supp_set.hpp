#pragma once

#include <compare>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>

#include "nomaut/abs.hpp"
#include "nomaut/name.hpp"
#include "nomaut/nominal.hpp"
#include "nomaut/perm.hpp"

namespace nomaut {

/// A finite set of nominal values, iterated in the element type's order.
///
/// Finite sets are uniformly supported, so the same type serves both the
/// finitely supported and the uniformly finitely supported powerset monads;
/// the two only differ on infinite sets, which are not representable here.
template <class T>
class SuppSet {
 public:
  using value_type = T;
  using const_iterator = typename std::set<T>::const_iterator;

  SuppSet() = default;
  SuppSet(std::initializer_list<T> xs) : elems_(xs) {}
  explicit SuppSet(std::set<T> xs) : elems_(std::move(xs)) {}

  template <class It>
  SuppSet(It first, It last) : elems_(first, last) {}

  bool insert(T x) { return elems_.insert(std::move(x)).second; }
  void insert_all(const SuppSet& other) {
    elems_.insert(other.elems_.begin(), other.elems_.end());
  }
  bool erase(const T& x) { return elems_.erase(x) > 0; }
  bool contains(const T& x) const { return elems_.contains(x); }
  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }

  bool subset_of(const SuppSet& other) const {
    for (const T& x : elems_)
      if (!other.contains(x)) return false;
    return true;
  }

  const_iterator begin() const { return elems_.begin(); }
  const_iterator end() const { return elems_.end(); }
  const std::set<T>& elements() const { return elems_; }

  auto operator<=>(const SuppSet&) const = default;
  bool operator==(const SuppSet&) const = default;

 private:
  std::set<T> elems_;
};

template <Nominal T>
SuppSet<T> act(const Perm& p, const SuppSet<T>& s) {
  SuppSet<T> out;
  for (const T& x : s) out.insert(act(p, x));
  return out;
}

template <Nominal T>
NameSet support(const SuppSet<T>& s) {
  NameSet out;
  for (const T& x : s) out.merge(support(x));
  return out;
}

// Monad structure.

template <class T>
SuppSet<T> set_unit(T x) {
  return SuppSet<T>{std::move(x)};
}

template <class T>
SuppSet<T> set_mult(const SuppSet<SuppSet<T>>& ss) {
  SuppSet<T> out;
  for (const auto& s : ss) out.insert_all(s);
  return out;
}

// Functor action T f.
template <class F, class T>
auto set_map(F&& f, const SuppSet<T>& s) {
  using U = std::decay_t<decltype(f(*s.begin()))>;
  SuppSet<U> out;
  for (const T& x : s) out.insert(f(x));
  return out;
}

template <class T>
SuppSet<T> set_union(SuppSet<T> a, const SuppSet<T>& b) {
  a.insert_all(b);
  return a;
}

/// Strength X x TY -> T(X x Y): (x, S) |-> {(x, s) : s in S}.
template <class T, class U>
SuppSet<std::pair<T, U>> strength(const T& x, const SuppSet<U>& s) {
  SuppSet<std::pair<T, U>> out;
  for (const U& y : s) out.insert({x, y});
  return out;
}

/// Costrength TX x Y -> T(X x Y).
template <class T, class U>
SuppSet<std::pair<T, U>> costrength(const SuppSet<T>& s, const U& y) {
  SuppSet<std::pair<T, U>> out;
  for (const T& x : s) out.insert({x, y});
  return out;
}

/// The double strength TX x TY -> T(X x Y) of the commutative monad:
/// the cartesian product.
template <class T, class U>
SuppSet<std::pair<T, U>> comm_pair(const SuppSet<T>& s, const SuppSet<U>& u) {
  SuppSet<std::pair<T, U>> out;
  for (const T& x : s)
    for (const U& y : u) out.insert({x, y});
  return out;
}

// Both composites of the commutativity square; comm_pair must equal each.
template <class T, class U>
SuppSet<std::pair<T, U>> comm_pair_left_first(const SuppSet<T>& s, const SuppSet<U>& u) {
  SuppSet<SuppSet<std::pair<T, U>>> nested;
  for (const auto& [x, ys] : costrength(s, u)) nested.insert(strength(x, ys));
  return set_mult(nested);
}

template <class T, class U>
SuppSet<std::pair<T, U>> comm_pair_right_first(const SuppSet<T>& s, const SuppSet<U>& u) {
  SuppSet<SuppSet<std::pair<T, U>>> nested;
  for (const auto& [xs, y] : strength(s, u)) nested.insert(costrength(xs, y));
  return set_mult(nested);
}

template <class T, class Render>
std::string render_set(const SuppSet<T>& s, Render&& render_elem) {
  std::string out = "{";
  bool first = true;
  for (const T& x : s) {
    if (!first) out += ", ";
    first = false;
    out += render_elem(x);
  }
  return out + "}";
}

/// rho: [A]TX -> T[A]X, <a>S |-> {<a>s : s in S}.
template <Nominal T>
SuppSet<Abs<T>> rho_abs(const Abs<SuppSet<T>>& v) {
  SuppSet<Abs<T>> out;
  for (const T& s : v.body()) out.insert(Abs<T>(v.binder(), s));
  return out;
}

// rho evaluated on an arbitrary representative (a, S) of an abstraction.
template <Nominal T>
SuppSet<Abs<T>> rho_abs_at(Name a, const SuppSet<T>& s) {
  SuppSet<Abs<T>> out;
  for (const T& x : s) out.insert(Abs<T>(a, x));
  return out;
}

/// psi: T[A]X -> [A]TX, S |-> <c>{x : <c>x in S} for c fresh for S.
/// Inverse of rho_abs. Throws if `c` is not fresh.
template <Nominal T>
Abs<SuppSet<T>> psi_abs_at(const SuppSet<Abs<T>>& s, Name c) {
  if (support(s).contains(c))
    throw Error("psi_abs: name " + to_string(c) + " is not fresh for the set");
  SuppSet<T> body;
  for (const Abs<T>& v : s) body.insert(*v.concrete(c));
  return Abs<SuppSet<T>>(c, std::move(body));
}

template <Nominal T>
Abs<SuppSet<T>> psi_abs(const SuppSet<Abs<T>>& s) {
  return psi_abs_at(s, least_fresh(support(s)));
}

}  // namespace nomaut
