#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nomaut/abs.hpp"
#include "nomaut/bar_string.hpp"
#include "nomaut/supp_set.hpp"

namespace nomaut {

enum class LangKind { data, bar };

std::string to_string(LangKind k);

/// A language truncated to words of length at most `depth`.
///
/// Data languages hold plain words; bar languages hold canonical
/// representatives of alpha-classes. The empty word is tracked by `eps`
/// and never stored in `words`.
class LangApprox {
 public:
  LangApprox(LangKind kind, std::size_t depth) : kind_(kind), depth_(depth) {}

  LangKind kind() const { return kind_; }
  std::size_t depth() const { return depth_; }
  bool eps() const { return eps_; }
  const SuppSet<CanonicalBarString>& words() const { return words_; }
  std::size_t size() const { return words_.size() + (eps_ ? 1 : 0); }

  // Throws Error when w is longer than depth or a data language receives a
  // binder.
  void insert(const BarString& w);
  void insert(const CanonicalBarString& w);
  bool member(const BarString& w) const;
  bool member(const CanonicalBarString& w) const;

  // Keeps only words of length <= depth.
  LangApprox truncate(std::size_t depth) const;

  // All members including the empty word, in canonical order.
  std::vector<CanonicalBarString> members() const;

  auto operator<=>(const LangApprox&) const = default;

 private:
  LangKind kind_;
  std::size_t depth_;
  bool eps_ = false;
  SuppSet<CanonicalBarString> words_;
};

LangApprox act(const Perm& p, const LangApprox& l);
NameSet support(const LangApprox& l);

bool lang_eps(const LangApprox& l);
LangApprox lang_insert(LangApprox l, const BarString& w);

/// a^-1 L: the words w with a.w in L, at depth - 1.
LangApprox derive_free(const LangApprox& l, Name a);

/// <c>{[w] : [|c w] in L} for a name c fresh for L. Throws if c is not
/// fresh or L is a data language.
Abs<LangApprox> derive_bar_at(const LangApprox& l, Name c);
// derive_bar_at with c the least name fresh for L.
Abs<LangApprox> derive_bar(const LangApprox& l);

/// The terminal-coalgebra structure: acceptance, free derivatives over a
/// pool, and the bar derivative for bar languages.
struct LangTau {
  bool eps = false;
  std::map<Name, LangApprox> free;
  std::optional<Abs<LangApprox>> bar;
};

LangTau lang_tau(const LangApprox& l, const NameSet& pool);

/// Membership decided by walking derivatives along w. Binders are matched
/// by concreting the word's abstraction and the bar derivative at a common
/// fresh name.
bool member_by_derivatives(const LangApprox& l, const BarString& w);

std::string render(const LangApprox& l);

}  // namespace nomaut
