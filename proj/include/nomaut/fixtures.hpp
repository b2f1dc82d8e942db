#pragma once

#include <random>
#include <string>
#include <vector>

#include "nomaut/automaton.hpp"

namespace nomaut {

// The shipped example automata, by name: EX1 (nofa), EX2 and EX3 (rnna).
const std::string& fixture_text(const std::string& name);
AutomatonSpec fixture_spec(const std::string& name);
std::vector<std::string> fixture_names();

struct RandomSpecOptions {
  AutomatonKind kind = AutomatonKind::nofa;
  std::size_t max_orbits = 3;
  std::size_t max_arity = 2;
  std::size_t max_rules = 5;
};

/// A random spec that passes validation. At least one orbit is final and
/// at least one rule is present.
AutomatonSpec random_spec(std::mt19937_64& rng, const RandomSpecOptions& options);

}  // namespace nomaut
