#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ginv/gamma_algebra.hpp"
#include "ginv/invariants.hpp"
#include "ginv/numeric_oracle.hpp"

namespace ginv {

/// Deterministic counter-based generator keyed by (seed, case, stream), so
/// cases can be produced independently and in any order.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t case_index, std::uint64_t stream);

  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);  // uniform in [0, n)
  long int_in(long lo, long hi);         // uniform inclusive
  bool one_in(unsigned n) { return below(n) == 0; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Deliberate engine defects for mutation testing. The defects are composed
/// over the public move/invariant API inside the harness; the engine itself
/// is never built in a mutated form.
enum class Defect {
  none,
  drop_root_sum,     // H* loses the root power sum of its correction term
  drop_split_twist,  // split forgets to update omega
};

struct FuzzConfig {
  std::uint64_t seed = 1729;
  std::size_t cases = 1000;
  std::size_t max_r = 4;
  std::size_t max_trace = 12;
  unsigned max_m = 6;
  long component_bound = 20;  // |num| and den bound for lambda/mu components
  unsigned depth = 12;        // fingerprint depth
  Defect defect = Defect::none;
  bool numeric_checks = true;
  double numeric_tolerance = 1e-8;
};

struct FuzzFailure {
  std::size_t case_index = 0;
  std::string kind;     // "exact" or "numeric"
  std::string message;  // which component broke, at which step
  DecoratedGamma data;  // minimized initial data
  MoveTrace trace;      // minimized trace; still fails when replayed
};

struct MoveCounts {
  std::size_t expands = 0, contracts = 0, splits = 0, merges = 0;
  std::size_t total() const { return expands + contracts + splits + merges; }
};

struct SuiteSummary {
  std::size_t cases_run = 0;
  MoveCounts moves{};
  std::size_t exact_failures = 0;
  std::size_t numeric_failures = 0;
  std::vector<FuzzFailure> failures{};

  bool ok() const { return failures.empty(); }
};

/// Deterministic in (cfg.seed, case_index); always satisfies the data
/// invariants; constant decoration.
DecoratedGamma gen_gamma(const FuzzConfig& cfg, std::size_t case_index);

/// A trace valid by construction against g: every move's precondition holds
/// at its point of application. Contracts are substituted when an expand is
/// requested but no factor is eligible, which also enables later expands.
MoveTrace gen_trace(const FuzzConfig& cfg, const DecoratedGamma& g, std::size_t case_index);

/// Runs the invariance matrix: for every case, the depth-N fingerprint must
/// be preserved exactly at every step of the trace, and the numeric oracle
/// must confirm each step as multiplication by one constant with the matching
/// omega update. Failures are shrunk (trailing/interior moves removed, then
/// initial factors dropped) and reported as reproducers.
SuiteSummary run_suite(const FuzzConfig& cfg);

}  // namespace ginv
