#pragma once

#include <string>
#include <vector>

#include "csym/alphabet.hpp"

namespace csym {

// Exhaustive small-degree verification of the Hopf-algebra axioms,
// duality, morphism properties, and triangularity statements. Checks run
// over every basis element (or pair/triple) within the degree bound, in
// increasing degree and canonical order, so a reported witness is minimal
// in that order. Deterministic output; no randomness.

struct VerifierConfig {
  std::string alphabet = "ab";
  int max_degree = 3;
  // Empty means the full catalog; otherwise a subset of check names.
  std::vector<std::string> checks;
  // Resource guard: refuse to run when the number of enumerated sentence
  // keys up to max_degree exceeds this cap.
  long max_keys = 100000;
};

struct CheckResult {
  std::string name;
  std::string statement;  // the identity the check verifies
  bool pass = false;
  long cases = 0;         // instances checked
  std::string witness;    // first failing instance, empty when pass
};

struct VerifierReport {
  std::string alphabet;
  int max_degree = 0;
  std::vector<CheckResult> results;
  bool all_pass = true;

  std::string text() const;
  std::string json_text() const;
};

// Names in catalog order.
std::vector<std::string> verifier_check_names();

// Runs the configured checks. Throws std::invalid_argument on unknown
// check names, an empty alphabet, a negative degree, or a configuration
// whose enumeration exceeds the key cap.
VerifierReport run_verifier(const VerifierConfig& config);

}  // namespace csym
