#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paratop/parabase.hpp"
#include "paratop/space.hpp"

namespace paratop {

struct Counterexample {
  FiniteSpace space;
  std::string witness;
};

struct CheckResult {
  std::string tag;
  std::string description;
  std::size_t passed = 0;
  std::vector<Counterexample> counterexamples;
};

struct SuiteReport {
  std::size_t carrier_size = 0;
  std::size_t spaces_checked = 0;
  std::vector<CheckResult> checks;
  double wall_time = 0.0;

  bool clean() const;
  const CheckResult* find(std::string_view tag) const;
};

struct SuiteOptions {
  int depth_bound = 3;
  std::uint64_t rng_seed = 0;
  /// Sampled AP pairs per space for the T0 and partition checks.
  std::size_t pairs_per_space = 50;
  /// 0 means: PARATOP_THREADS if set, else hardware concurrency.
  unsigned threads = 0;
};

/// Worker count from PARATOP_THREADS, else hardware concurrency.
unsigned default_thread_count();

/// Runs these checks on every labeled topology on n points:
///   T1 partition <=> generators inversion-closed <=> N_F a subgroup
///   T2 N_A = Z_0^A <=> indiscrete
///   T3 T0 <=> sampled AP pairs separable <=> specialization antisymmetric
///   T4 minimal-neighbourhood trace equals U(x)
///   T5 partition spaces: specialization symmetric on samples
SuiteReport run_suite(std::size_t n, const SuiteOptions& options);

struct BatteryOptions {
  std::size_t word_length_bound = 4;
  std::uint64_t rng_seed = 0;
  /// Words per space before switching from exhaustive to sampled.
  std::size_t census_cap = 10000;
  int depth_bound = 3;
  unsigned threads = 0;
};

/// T0 spaces: every nontrivial word is separated from e through the chain
/// space R_k. Non-T0 spaces: a word w != e with w, w^-1 in N_F exists.
SuiteReport t0_word_battery(std::size_t n, const BatteryOptions& options);

/// Every reduced word of length 1..max_length over `points` letters.
std::vector<FreeWord> all_reduced_words(std::size_t points, std::size_t max_length);

}  // namespace paratop
