#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>

#include "nomaut/name.hpp"
#include "nomaut/nominal.hpp"
#include "nomaut/perm.hpp"

namespace nomaut {

/// An abstraction <a>x: the class of (a, x) under renaming of the binder.
///
/// Values are normalized on construction: the binder becomes the least name
/// outside support(x) \ {a} and the body is swapped to match. Structural
/// equality of normalized values is therefore alpha-equality.
template <Nominal T>
class Abs {
 public:
  Abs(Name binder, T body) : binder_(binder), body_(std::move(body)) {
    NameSet outer = support(body_);
    outer.erase(binder_);
    const Name canonical = least_fresh(outer);
    if (canonical != binder_) {
      body_ = act(Perm::transposition(binder_, canonical), body_);
      binder_ = canonical;
    }
  }

  Name binder() const { return binder_; }
  const T& body() const { return body_; }

  /// Concretion <a>x @ b. Defined when b is the binder or b is fresh for
  /// the body; otherwise b is captured and the result is empty.
  std::optional<T> concrete(Name b) const {
    if (b == binder_) return body_;
    if (support(body_).contains(b)) return std::nullopt;
    return act(Perm::transposition(binder_, b), body_);
  }

  auto operator<=>(const Abs&) const = default;
  bool operator==(const Abs&) const = default;

 private:
  Name binder_;
  T body_;
};

template <Nominal T>
Abs<T> act(const Perm& p, const Abs<T>& v) {
  return Abs<T>(p.apply(v.binder()), act(p, v.body()));
}

template <Nominal T>
NameSet support(const Abs<T>& v) {
  NameSet s = support(v.body());
  s.erase(v.binder());
  return s;
}

/// Equality of the raw pairs (a, x) and (b, y) as abstractions:
/// a = b and x = y, or b is fresh for x and (a b).x = y.
template <Nominal T>
bool abs_eq(Name a, const T& x, Name b, const T& y) {
  if (a == b && x == y) return true;
  return !support(x).contains(b) && act(Perm::transposition(a, b), x) == y;
}

template <Nominal T>
bool abs_eq(const Abs<T>& l, const Abs<T>& r) {
  return abs_eq(l.binder(), l.body(), r.binder(), r.body());
}

// [A]f for an equivariant f: apply f under the binder.
template <class F, Nominal T>
auto abs_map(F&& f, const Abs<T>& v) {
  using U = std::decay_t<decltype(f(v.body()))>;
  return Abs<U>(v.binder(), f(v.body()));
}

template <Nominal T, class Render>
std::string render_abs(const Abs<T>& v, Render&& render_body) {
  return "<" + to_string(v.binder()) + ">" + render_body(v.body());
}

}  // namespace nomaut
