#include "nomaut/fixtures.hpp"

#include <algorithm>
#include <map>

namespace nomaut {

namespace {

const std::map<std::string, std::string>& fixtures() {
  static const std::map<std::string, std::string> texts = {
      {"EX1",
       "nofa EX1\n"
       "state q0\n"
       "state q1(x)\n"
       "state q2 final\n"
       "trans q0 -x-> q1(x)\n"
       "trans q1(x) -x-> q2\n"},
      {"EX2",
       "rnna EX2\n"
       "state q0\n"
       "state q1(x)\n"
       "state q2 final\n"
       "trans q0 -|x-> q1(x)\n"
       "trans q1(x) -x-> q2\n"},
      {"EX3",
       "rnna EX3\n"
       "state q0\n"
       "state q1(x) final\n"
       "trans q0 -|x-> q1(x)\n"
       "trans q1(x) -x-> q1(x)\n"},
  };
  return texts;
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

const std::string& fixture_text(const std::string& name) {
  auto it = fixtures().find(name);
  if (it == fixtures().end()) throw Error("unknown fixture '" + name + "'");
  return it->second;
}

AutomatonSpec fixture_spec(const std::string& name) { return parse_spec(fixture_text(name)); }

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : fixtures()) out.push_back(name);
  return out;
}

AutomatonSpec random_spec(std::mt19937_64& rng, const RandomSpecOptions& options) {
  AutomatonSpec spec;
  spec.kind = options.kind;
  spec.name = "R";
  const std::size_t n = pick(rng, 1, std::max<std::size_t>(1, options.max_orbits));
  for (std::size_t i = 0; i < n; ++i)
    spec.orbits.push_back({"q" + std::to_string(i), pick(rng, 0, options.max_arity), coin(rng, 0.4), 0});
  if (std::none_of(spec.orbits.begin(), spec.orbits.end(), [](const auto& o) { return o.final; }))
    spec.orbits[pick(rng, 0, n - 1)].final = true;

  const std::size_t rule_count = pick(rng, 1, std::max<std::size_t>(1, options.max_rules));
  while (spec.rules.size() < rule_count) {
    Rule r;
    r.source = pick(rng, 0, n - 1);
    for (std::size_t i = 0; i < spec.orbits[r.source].arity; ++i)
      r.source_vars.push_back("x" + std::to_string(i + 1));
    const std::size_t k = r.source_vars.size();

    std::vector<std::string> available = r.source_vars;
    if (options.kind == AutomatonKind::nofa) {
      r.letter.var = k > 0 && coin(rng, 0.6) ? r.source_vars[pick(rng, 0, k - 1)] : "y";
      if (r.letter.var == "y") available.push_back("y");
      // Guessed names for the target.
      available.push_back("z1");
      available.push_back("z2");
    } else {
      r.letter.bar = k == 0 || coin(rng, 0.4);
      if (r.letter.bar) {
        r.letter.var = k == 0 || coin(rng, 0.7) ? "y" : r.source_vars[pick(rng, 0, k - 1)];
        if (r.letter.var == "y") available.push_back("y");
      } else {
        r.letter.var = r.source_vars[pick(rng, 0, k - 1)];
      }
    }

    std::vector<std::size_t> targets;
    for (std::size_t t = 0; t < n; ++t)
      if (spec.orbits[t].arity <= available.size()) targets.push_back(t);
    if (targets.empty()) continue;
    r.target = targets[pick(rng, 0, targets.size() - 1)];
    std::shuffle(available.begin(), available.end(), rng);
    r.target_args.assign(available.begin(),
                         available.begin() + static_cast<std::ptrdiff_t>(spec.orbits[r.target].arity));
    spec.rules.push_back(std::move(r));
  }
  return spec;
}

}  // namespace nomaut
