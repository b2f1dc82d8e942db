#pragma once

#include <concepts>
#include <utility>
#include <vector>

#include "nomaut/name.hpp"
#include "nomaut/perm.hpp"

namespace nomaut {

/// A value type carrying a permutation action and a finite least support.
///
/// Implementations provide free functions `act(const Perm&, const T&)` and
/// `support(const T&)` found by argument-dependent lookup, together with a
/// total order used for canonical iteration.
template <class T>
concept Nominal = std::totally_ordered<T> && requires(const T& x, const Perm& p) {
  { act(p, x) } -> std::same_as<T>;
  { support(x) } -> std::same_as<NameSet>;
};

template <Nominal T>
bool is_fresh(Name a, const T& x) {
  return !support(x).contains(a);
}

template <Nominal T, Nominal U>
std::pair<T, U> act(const Perm& p, const std::pair<T, U>& x) {
  return {act(p, x.first), act(p, x.second)};
}

template <Nominal T, Nominal U>
NameSet support(const std::pair<T, U>& x) {
  return set_union(support(x.first), support(x.second));
}

// All transpositions of a finite pool. They generate every permutation of
// the pool, so closure under them is closure under the whole group.
std::vector<Perm> pool_transpositions(const NameSet& pool);

}  // namespace nomaut
