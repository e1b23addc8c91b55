#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "compmat/matrix.hpp"

namespace compmat {

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 50;
  std::size_t n_max = 3;
  long entry_bound = 5;
  /// Also replay the claims attached to the built-in fixtures.
  bool fixtures = false;
};

struct InvariantOutcome {
  std::string name;
  /// Sampled support for a universally quantified claim, not a proof.
  bool evidence_only = false;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_counterexample;
  std::string note;

  bool passed() const { return failures == 0; }
};

struct ClaimOutcome {
  std::string fixture;
  std::string claim;
  std::string expected;
  std::string actual;

  bool passed() const { return expected == actual; }
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<InvariantOutcome> invariants;
  std::vector<ClaimOutcome> claims;

  bool all_passed() const;
};

/// Random integer matrix, entries uniform in [-bound, bound].
Matrix random_matrix(std::mt19937_64& rng, std::size_t n, long bound);
Vector random_vector(std::mt19937_64& rng, std::size_t n, long bound);

/// Every invariant over `trials` seeded random instances with 2 ≤ n ≤ n_max
/// (n = 1 when n_max is 1). Throws CapExceeded when n_max exceeds the cap.
VerifyReport run_verify(const VerifyOptions& options);

/// The recorded verdicts for the built-in fixtures, each compared with what the
/// library computes.
std::vector<ClaimOutcome> replay_fixture_claims();

}  // namespace compmat
