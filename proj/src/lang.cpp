#include "nomaut/lang.hpp"

namespace nomaut {

std::string to_string(LangKind k) { return k == LangKind::data ? "data" : "bar"; }

void LangApprox::insert(const CanonicalBarString& w) {
  if (w.size() > depth_)
    throw Error("word '" + nomaut::render(w) + "' exceeds language depth " +
                std::to_string(depth_));
  if (kind_ == LangKind::data && w.word().has_binders())
    throw Error("data language cannot hold bar string '" + nomaut::render(w) + "'");
  if (w.empty())
    eps_ = true;
  else
    words_.insert(w);
}

void LangApprox::insert(const BarString& w) { insert(canonicalize(w)); }

bool LangApprox::member(const CanonicalBarString& w) const {
  if (w.empty()) return eps_;
  return words_.contains(w);
}

bool LangApprox::member(const BarString& w) const {
  if (kind_ == LangKind::data && w.has_binders()) return false;
  return member(canonicalize(w));
}

LangApprox LangApprox::truncate(std::size_t depth) const {
  LangApprox out(kind_, depth);
  out.eps_ = eps_;
  for (const auto& w : words_)
    if (w.size() <= depth) out.words_.insert(w);
  return out;
}

std::vector<CanonicalBarString> LangApprox::members() const {
  std::vector<CanonicalBarString> out;
  if (eps_) out.emplace_back();
  out.insert(out.end(), words_.begin(), words_.end());
  return out;
}

LangApprox act(const Perm& p, const LangApprox& l) {
  LangApprox out(l.kind(), l.depth());
  for (const auto& w : l.members()) out.insert(act(p, w));
  return out;
}

NameSet support(const LangApprox& l) { return support(l.words()); }

bool lang_eps(const LangApprox& l) { return l.eps(); }

LangApprox lang_insert(LangApprox l, const BarString& w) {
  l.insert(w);
  return l;
}

LangApprox derive_free(const LangApprox& l, Name a) {
  LangApprox out(l.kind(), l.depth() == 0 ? 0 : l.depth() - 1);
  for (const auto& w : l.words()) {
    const Letter& head = w.letters().front();
    // Canonical forms of a.w are a.canon(w), so prefix stripping is exact.
    if (!head.bar && head.name == a) out.insert(w.word().suffix(1));
  }
  return out;
}

Abs<LangApprox> derive_bar_at(const LangApprox& l, Name c) {
  if (l.kind() != LangKind::bar) throw Error("derive_bar needs a bar language");
  if (support(l).contains(c))
    throw Error("derive_bar: name " + to_string(c) + " is not fresh for the language");
  LangApprox body(l.kind(), l.depth() == 0 ? 0 : l.depth() - 1);
  for (const auto& w : l.words()) {
    const Letter& head = w.letters().front();
    if (!head.bar) continue;
    // c is fresh for [|b u], so <b>[u] @ c is defined.
    const BarString tail = w.word().suffix(1);
    body.insert(head.name == c ? tail : act(Perm::transposition(head.name, c), tail));
  }
  return Abs<LangApprox>(c, std::move(body));
}

Abs<LangApprox> derive_bar(const LangApprox& l) { return derive_bar_at(l, least_fresh(support(l))); }

LangTau lang_tau(const LangApprox& l, const NameSet& pool) {
  LangTau out;
  out.eps = l.eps();
  for (Name a : pool) out.free.emplace(a, derive_free(l, a));
  if (l.kind() == LangKind::bar) out.bar = derive_bar(l);
  return out;
}

bool member_by_derivatives(const LangApprox& l, const BarString& w) {
  if (w.size() > l.depth()) return false;
  LangApprox current = l;
  BarString rest = w;
  while (!rest.empty()) {
    const Letter head = rest.letters().front();
    BarString tail = rest.suffix(1);
    if (!head.bar) {
      current = derive_free(current, head.name);
      rest = std::move(tail);
      continue;
    }
    if (current.kind() != LangKind::bar) return false;
    const Abs<LangApprox> derivative = derive_bar(current);
    const Abs<CanonicalBarString> word_abs(head.name, canonicalize(tail));
    const Name c = least_fresh(set_union(support(derivative), support(word_abs)));
    current = *derivative.concrete(c);
    rest = word_abs.concrete(c)->word();
  }
  return current.eps();
}

std::string render(const LangApprox& l) {
  const auto members = l.members();
  return render_set(SuppSet<CanonicalBarString>(members.begin(), members.end()),
                    [](const CanonicalBarString& w) { return render(w); });
}

}  // namespace nomaut
