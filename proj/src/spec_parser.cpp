#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "nomaut/automaton.hpp"

namespace nomaut {

std::string to_string(AutomatonKind k) { return k == AutomatonKind::nofa ? "nofa" : "rnna"; }

SpecViolation::SpecViolation(std::string condition, const std::string& what, std::size_t line)
    : Error(condition + " violation" + (line ? " (line " + std::to_string(line) + ")" : "") +
            ": " + what),
      condition_(std::move(condition)),
      line_(line) {}

std::vector<std::string> Rule::variables() const {
  std::vector<std::string> out;
  auto add = [&](const std::string& v) {
    for (const auto& seen : out)
      if (seen == v) return;
    out.push_back(v);
  };
  for (const auto& v : source_vars) add(v);
  add(letter.var);
  for (const auto& v : target_args) add(v);
  return out;
}

std::optional<std::size_t> AutomatonSpec::orbit_index(std::string_view id) const {
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (orbits[i].id == id) return i;
  return std::nullopt;
}

std::size_t AutomatonSpec::max_arity() const {
  std::size_t out = 0;
  for (const auto& o : orbits) out = std::max(out, o.arity);
  return out;
}

std::size_t AutomatonSpec::max_rule_variables() const {
  std::size_t out = 0;
  for (const auto& r : rules) out = std::max(out, r.variables().size());
  return out;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// Cursor over one line of the file.
class LineReader {
 public:
  LineReader(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(std::string_view s) {
    skip_space();
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  std::string ident(const char* what) {
    skip_space();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail(std::string("expected ") + what);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  // Optional parenthesized variable list.
  std::vector<std::string> var_list() {
    std::vector<std::string> out;
    if (!accept("(")) return out;
    if (accept(")")) return out;
    do {
      out.push_back(ident("variable"));
    } while (accept(","));
    expect(")");
    return out;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, std::min(pos_, text_.size()) + 1);
  }
  std::size_t column() const { return pos_ + 1; }
  std::size_t line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace

AutomatonSpec parse_spec(std::string_view text, bool check) {
  AutomatonSpec spec;
  bool have_header = false;

  struct PendingRule {
    std::string source, target;
    std::size_t source_col, target_col;
    Rule rule;
  };
  std::vector<PendingRule> pending;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view raw =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    LineReader in(strip_comment(raw), line_no);
    if (in.at_end()) continue;
    const std::string keyword = in.ident("declaration keyword");

    if (keyword == "nofa" || keyword == "rnna") {
      if (have_header) in.fail("duplicate automaton header");
      have_header = true;
      spec.kind = keyword == "nofa" ? AutomatonKind::nofa : AutomatonKind::rnna;
      spec.name = in.ident("automaton name");
    } else if (keyword == "state") {
      if (!have_header) in.fail("expected 'nofa NAME' or 'rnna NAME' before declarations");
      OrbitDecl orbit;
      orbit.line = line_no;
      const std::size_t col = in.column();
      orbit.id = in.ident("state identifier");
      if (spec.orbit_index(orbit.id)) throw ParseError("duplicate state '" + orbit.id + "'", line_no, col);
      const auto params = in.var_list();
      if (std::set<std::string>(params.begin(), params.end()).size() != params.size())
        throw ParseError("repeated parameter in state '" + orbit.id + "'", line_no, col);
      orbit.arity = params.size();
      if (!in.at_end()) {
        if (in.ident("'final'") != "final") in.fail("expected 'final'");
        orbit.final = true;
        if (!in.at_end()) in.fail("unexpected trailing text");
      }
      spec.orbits.push_back(orbit);
    } else if (keyword == "trans") {
      if (!have_header) in.fail("expected 'nofa NAME' or 'rnna NAME' before declarations");
      PendingRule p;
      p.rule.line = line_no;
      in.skip_space();
      p.source_col = in.column();
      p.source = in.ident("source state");
      p.rule.source_vars = in.var_list();
      in.expect("-");
      p.rule.letter.bar = in.accept("|");
      p.rule.letter.var = in.ident("letter variable");
      in.expect("->");
      in.skip_space();
      p.target_col = in.column();
      p.target = in.ident("target state");
      p.rule.target_args = in.var_list();
      if (!in.at_end()) in.fail("unexpected trailing text");
      pending.push_back(std::move(p));
    } else {
      throw ParseError("unknown declaration '" + keyword + "'", line_no, 1);
    }
  }
  if (!have_header) throw ParseError("missing 'nofa NAME' or 'rnna NAME' header", 1, 1);

  for (auto& p : pending) {
    auto src = spec.orbit_index(p.source);
    if (!src) throw ParseError("unknown state '" + p.source + "'", p.rule.line, p.source_col);
    auto dst = spec.orbit_index(p.target);
    if (!dst) throw ParseError("unknown state '" + p.target + "'", p.rule.line, p.target_col);
    if (p.rule.source_vars.size() != spec.orbits[*src].arity)
      throw ParseError("arity mismatch: '" + p.source + "' has arity " +
                           std::to_string(spec.orbits[*src].arity),
                       p.rule.line, p.source_col);
    if (p.rule.target_args.size() != spec.orbits[*dst].arity)
      throw ParseError("arity mismatch: '" + p.target + "' has arity " +
                           std::to_string(spec.orbits[*dst].arity),
                       p.rule.line, p.target_col);
    p.rule.source = *src;
    p.rule.target = *dst;
    spec.rules.push_back(std::move(p.rule));
  }

  if (check) {
    const Report report = validate(spec);
    if (!report.ok()) {
      const Finding& f = report.findings.front();
      throw SpecViolation(f.condition, f.message, f.line);
    }
  }
  return spec;
}

AutomatonSpec load_spec(const std::string& path, bool check) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open automaton file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str(), check);
}

namespace {

std::string render_tuple(const std::vector<std::string>& vars) {
  if (vars.empty()) return "";
  std::string out = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? "," : "") + vars[i];
  return out + ")";
}

}  // namespace

std::string to_text(const AutomatonSpec& spec) {
  std::string out = to_string(spec.kind) + " " + (spec.name.empty() ? "A" : spec.name) + "\n";
  for (const auto& o : spec.orbits) {
    std::vector<std::string> params;
    for (std::size_t i = 0; i < o.arity; ++i) params.push_back("v" + std::to_string(i + 1));
    out += "state " + o.id + render_tuple(params) + (o.final ? " final" : "") + "\n";
  }
  for (const auto& r : spec.rules) {
    out += "trans " + spec.orbits[r.source].id + render_tuple(r.source_vars) + " -" +
           (r.letter.bar ? "|" : "") + r.letter.var + "-> " + spec.orbits[r.target].id +
           render_tuple(r.target_args) + "\n";
  }
  return out;
}

Report validate(const AutomatonSpec& spec) {
  Report report{"spec " + spec.name, {}};
    for (const Rule& r : spec.rules) {
    const std::set<std::string> source(r.source_vars.begin(), r.source_vars.end());
    if (source.size() != r.source_vars.size())
      report.findings.push_back(
          {"injectivity", "source tuple repeats a variable", r.line});
    const std::set<std::string> target(r.target_args.begin(), r.target_args.end());
    if (target.size() != r.target_args.size())
      report.findings.push_back(
          {"injectivity", "target tuple repeats a variable", r.line});

    if (spec.kind == AutomatonKind::nofa) {
      if (r.letter.bar)
        report.findings.push_back({"NOFA", "bar letter '|" + r.letter.var +
                                               "' in a NOFA rule", r.line});
      continue;
    }
    if (!r.letter.bar && !source.contains(r.letter.var))
      report.findings.push_back(
          {"RNNA-(b)", "free letter variable '" + r.letter.var +
                           "' is not a source parameter, giving infinitely many free "
                           "transitions",
                           r.line});
    for (const auto& v : r.target_args) {
      const bool bound_here = r.letter.bar && v == r.letter.var;
      if (!source.contains(v) && !bound_here)
        report.findings.push_back(
            {"RNNA-(b)", "target variable '" + v +
                             "' is neither a source parameter nor the bound name", r.line});
    }
  }
  return report;
}

}  // namespace nomaut
