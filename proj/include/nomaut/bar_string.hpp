#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "nomaut/name.hpp"
#include "nomaut/perm.hpp"

namespace nomaut {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A letter of the extended alphabet: a plain name `a` or a binder `|a`.
struct Letter {
  bool bar = false;
  Name name;

  static Letter free(Name n) { return {false, n}; }
  static Letter binder(Name n) { return {true, n}; }

  auto operator<=>(const Letter&) const = default;
};

/// A finite word over names and bar letters, taken literally (not up to
/// alpha-equivalence). Data words are bar strings without binders.
class BarString {
 public:
  BarString() = default;
  explicit BarString(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool has_binders() const;

  BarString suffix(std::size_t from) const;
  BarString prepend(Letter l) const;

  auto operator<=>(const BarString&) const = default;

 private:
  std::vector<Letter> letters_;
};

BarString act(const Perm& p, const BarString& w);
// Every name occurring in w, bound or free.
NameSet support(const BarString& w);

/// Names with a plain occurrence not preceded by a binder for them.
NameSet free_names(const BarString& w);

/// A bar string in alpha-normal form, standing for its alpha-class.
///
/// Every binder is the least name outside the support of the abstraction
/// class it opens. Construct through `canonicalize`.
class CanonicalBarString {
 public:
  CanonicalBarString() = default;

  const BarString& word() const { return word_; }
  const std::vector<Letter>& letters() const { return word_.letters(); }
  std::size_t size() const { return word_.size(); }
  bool empty() const { return word_.empty(); }

  auto operator<=>(const CanonicalBarString&) const = default;

 private:
  friend CanonicalBarString canonicalize(const BarString& w);
  friend CanonicalBarString prepend_free(Name a, const CanonicalBarString& w);
  explicit CanonicalBarString(BarString w) : word_(std::move(w)) {}

  BarString word_;
};

CanonicalBarString canonicalize(const BarString& w);

// Canonical form of a.w given canonical w; no renormalization is needed.
CanonicalBarString prepend_free(Name a, const CanonicalBarString& w);
// Canonical form of |a.w.
CanonicalBarString prepend_bar(Name a, const CanonicalBarString& w);

// The class action: pi.[w] = [pi.w].
CanonicalBarString act(const Perm& p, const CanonicalBarString& w);
// Least support of a class: its free names.
NameSet support(const CanonicalBarString& w);

/// Alpha-equivalence, decided structurally through abstraction equality.
bool alpha_eq(const BarString& v, const BarString& w);

/// Word syntax: whitespace-separated letters (`a`, `|a`, `#27`, `|#27`),
/// or an unspaced run when every name is a single character. `ε` and the
/// empty string denote the empty word.
BarString parse_bar_string(std::string_view text);

// Compact when all names are single characters, spaced otherwise; `ε` for
// the empty word.
std::string render(const BarString& w);
std::string render(const CanonicalBarString& w);
std::string render(Letter l);

}  // namespace nomaut
