#include "nomaut/bar_string.hpp"

#include <cctype>

namespace nomaut {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(line == 0 ? what
                      : std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

bool BarString::has_binders() const {
  for (const Letter& l : letters_)
    if (l.bar) return true;
  return false;
}

BarString BarString::suffix(std::size_t from) const {
  return BarString(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                                       letters_.end()));
}

BarString BarString::prepend(Letter l) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() + 1);
  out.push_back(l);
  out.insert(out.end(), letters_.begin(), letters_.end());
  return BarString(std::move(out));
}

BarString act(const Perm& p, const BarString& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w.letters()) out.push_back({l.bar, p.apply(l.name)});
  return BarString(std::move(out));
}

NameSet support(const BarString& w) {
  NameSet out;
  for (const Letter& l : w.letters()) out.insert(l.name);
  return out;
}

NameSet free_names(const BarString& w) {
  NameSet bound;
  NameSet out;
  for (const Letter& l : w.letters()) {
    if (l.bar)
      bound.insert(l.name);
    else if (!bound.contains(l.name))
      out.insert(l.name);
  }
  return out;
}

namespace {

std::vector<Letter> canonical_letters(const BarString& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  BarString rest = w;
  // Left to right: fix the binder of |x.u from the free names of u, then
  // rename u and continue on the renamed suffix.
  std::size_t i = 0;
  while (i < rest.size()) {
    const Letter l = rest.letters()[i];
    if (!l.bar) {
      out.push_back(l);
      ++i;
      continue;
    }
    BarString tail = rest.suffix(i + 1);
    NameSet outer = free_names(tail);
    outer.erase(l.name);
    const Name b = least_fresh(outer);
    out.push_back(Letter::binder(b));
    rest = b == l.name ? tail : act(Perm::transposition(l.name, b), tail);
    i = 0;
  }
  return out;
}

}  // namespace

CanonicalBarString canonicalize(const BarString& w) {
  return CanonicalBarString(BarString(canonical_letters(w)));
}

CanonicalBarString prepend_free(Name a, const CanonicalBarString& w) {
  return CanonicalBarString(w.word().prepend(Letter::free(a)));
}

CanonicalBarString prepend_bar(Name a, const CanonicalBarString& w) {
  return canonicalize(w.word().prepend(Letter::binder(a)));
}

CanonicalBarString act(const Perm& p, const CanonicalBarString& w) {
  return canonicalize(act(p, w.word()));
}

NameSet support(const CanonicalBarString& w) { return free_names(w.word()); }

namespace {

bool alpha_eq_from(const BarString& v, const BarString& w, std::size_t i) {
  for (; i < v.size(); ++i) {
    const Letter& x = v.letters()[i];
    const Letter& y = w.letters()[i];
    if (x.bar != y.bar) return false;
    if (!x.bar) {
      if (x.name != y.name) return false;
      continue;
    }
    if (x.name == y.name) continue;
    // <a>[v'] = <b>[w'] with a != b: b fresh for [v'] and (a b).[v'] = [w'].
    BarString vt = v.suffix(i + 1);
    if (free_names(vt).contains(y.name)) return false;
    return alpha_eq_from(act(Perm::transposition(x.name, y.name), vt), w.suffix(i + 1), 0);
  }
  return true;
}

}  // namespace

bool alpha_eq(const BarString& v, const BarString& w) {
  if (v.size() != w.size()) return false;
  return alpha_eq_from(v, w, 0);
}

BarString parse_bar_string(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty() || text == "ε") return {};

  std::vector<Letter> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    bool bar = false;
    if (text[pos] == '|') {
      bar = true;
      ++pos;
    }
    if (pos >= text.size()) throw ParseError("dangling '|' in word", 1, start + 1);
    std::size_t end = pos + 1;
    if (text[pos] == '#') {
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    }
    auto name = parse_name(text.substr(pos, end - pos));
    if (!name)
      throw ParseError("bad name '" + std::string(text.substr(pos, end - pos)) + "' in word", 1,
                       pos + 1);
    out.push_back({bar, *name});
    pos = end;
  }
  return BarString(std::move(out));
}

std::string render(Letter l) { return (l.bar ? "|" : "") + to_string(l.name); }

std::string render(const BarString& w) {
  if (w.empty()) return "ε";
  bool compact = true;
  for (const Letter& l : w.letters())
    if (l.name.index >= 26) compact = false;
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!compact && !out.empty()) out += ' ';
    out += render(l);
  }
  return out;
}

std::string render(const CanonicalBarString& w) { return render(w.word()); }

}  // namespace nomaut
