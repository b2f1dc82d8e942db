#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nomaut {

// Base class for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a finite name pool cannot host a requested computation.
class PoolError : public Error {
 public:
  using Error::Error;
};

/// An atom of the infinite name alphabet, identified by its index.
///
/// Names are totally ordered by index. They render as `a`..`z` for
/// indices 0..25 and as `#k` beyond that.
struct Name {
  std::uint32_t index = 0;

  constexpr Name() = default;
  constexpr explicit Name(std::uint32_t i) : index(i) {}

  auto operator<=>(const Name&) const = default;
};

using NameSet = std::set<Name>;

std::string to_string(Name n);

// Parses a full rendering (`a`, `#27`). Returns nullopt on anything else.
std::optional<Name> parse_name(std::string_view text);

// Least name (by index) not contained in `avoid`.
Name least_fresh(const NameSet& avoid);

// The pool {0, ..., size-1}.
NameSet pool_names(std::size_t size);

inline NameSet set_union(NameSet a, const NameSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

}  // namespace nomaut
