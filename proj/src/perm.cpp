#include "nomaut/perm.hpp"

#include <algorithm>

#include "nomaut/nominal.hpp"

namespace nomaut {

Name Perm::apply(Name x) const {
  for (auto it = swaps_.rbegin(); it != swaps_.rend(); ++it) {
    if (x == it->first)
      x = it->second;
    else if (x == it->second)
      x = it->first;
  }
  return x;
}

Perm compose(const Perm& p, const Perm& q) {
  std::vector<Perm::Swap> swaps = p.swaps_;
  swaps.insert(swaps.end(), q.swaps_.begin(), q.swaps_.end());
  return Perm(std::move(swaps));
}

Perm Perm::inverse() const {
  std::vector<Swap> swaps(swaps_.rbegin(), swaps_.rend());
  return Perm(std::move(swaps));
}

std::map<Name, Name> Perm::mapping() const {
  std::map<Name, Name> out;
  for (const auto& [a, b] : swaps_) {
    for (Name x : {a, b}) {
      Name y = apply(x);
      if (y != x) out.emplace(x, y);
    }
  }
  return out;
}

std::string to_string(const Perm& p) {
  if (p.swaps().empty()) return "id";
  std::string out;
  for (const auto& [a, b] : p.swaps()) out += "(" + to_string(a) + " " + to_string(b) + ")";
  return out;
}

std::vector<Perm> pool_transpositions(const NameSet& pool) {
  std::vector<Perm> out;
  for (auto i = pool.begin(); i != pool.end(); ++i)
    for (auto j = std::next(i); j != pool.end(); ++j) out.push_back(Perm::transposition(*i, *j));
  return out;
}

}  // namespace nomaut
