#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nomaut/name.hpp"

namespace nomaut {

/// A finite permutation of names, presented as a product of transpositions.
///
/// The swap list is applied right to left, so `Perm{{s1, s2}}` maps x to
/// s1(s2(x)). Equality compares the induced finite mappings, not the lists.
class Perm {
 public:
  using Swap = std::pair<Name, Name>;

  Perm() = default;
  explicit Perm(std::vector<Swap> swaps) : swaps_(std::move(swaps)) {}

  static Perm identity() { return Perm{}; }
  static Perm transposition(Name a, Name b) { return Perm{{{a, b}}}; }

  Name apply(Name x) const;

  // apply(compose(p, q), x) == p.apply(q.apply(x))
  friend Perm compose(const Perm& p, const Perm& q);
  Perm inverse() const;

  // Atoms moved by the permutation, with their images.
  std::map<Name, Name> mapping() const;

  const std::vector<Swap>& swaps() const { return swaps_; }

  friend bool operator==(const Perm& l, const Perm& r) {
    return l.mapping() == r.mapping();
  }

 private:
  std::vector<Swap> swaps_;
};

Perm compose(const Perm& p, const Perm& q);

std::string to_string(const Perm& p);

// Names are the base nominal set: the action is application, the support
// is the singleton.
inline Name act(const Perm& p, Name x) { return p.apply(x); }
inline NameSet support(Name x) { return {x}; }

}  // namespace nomaut
