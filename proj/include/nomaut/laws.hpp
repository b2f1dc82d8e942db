#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nomaut {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

struct LawConfig {
  std::uint64_t seed = 0;
  std::size_t cases = 200;
  // Swaps in a broken distributive law and drops a macro transition, so
  // that the harness can be seen to fail.
  bool inject_defect = false;
};

// Randomized law suites over a three-name pool, sets of size <= 2.
SuiteResult check_monad_laws(const LawConfig& config);
SuiteResult check_lambda_laws(const LawConfig& config);
SuiteResult check_rho_laws(const LawConfig& config);
SuiteResult check_psi_laws(const LawConfig& config);
SuiteResult check_eps_laws(const LawConfig& config);
SuiteResult check_hom_lattice_laws(const LawConfig& config);
SuiteResult check_fbar_laws(const LawConfig& config);
// Oracle, Kleisli trace and determinization agree on fixtures and random
// automata; the trace square holds. One case per automaton.
SuiteResult check_semantics_agreement(const LawConfig& config);

std::vector<SuiteResult> run_law_suites(const LawConfig& config);

}  // namespace nomaut
