#include "ginv/fuzz.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace ginv {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t case_index, std::uint64_t stream)
    : key_(splitmix64(seed ^ splitmix64(case_index ^ splitmix64(stream ^ 0xA3C59AC2ULL)))) {}

std::uint64_t CounterRng::next() { return splitmix64(key_ + ++counter_); }

std::uint64_t CounterRng::below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

long CounterRng::int_in(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

namespace {

// Denominators stay small most of the time so split/merge progressions and
// Gamma-argument collisions arise organically.
Rat random_den(CounterRng& rng, long bound) {
  const long cap = rng.one_in(3) ? bound : std::min(6L, bound);
  return Rat(rng.int_in(1, std::max(1L, cap)));
}

Rat random_positive(CounterRng& rng, long bound) {
  return Rat(rng.int_in(1, bound)) / random_den(rng, bound);
}

Rat random_nonnegative(CounterRng& rng, long bound) {
  return Rat(rng.int_in(0, bound)) / random_den(rng, bound);
}

Rat random_signed(CounterRng& rng, long bound) {
  return Rat(rng.int_in(-bound, bound)) / random_den(rng, bound);
}

Rat random_small_exponent(CounterRng& rng) {
  Rat e(0);
  while (e.is_zero()) e = Rat(rng.int_in(-3, 3)) / Rat(rng.int_in(1, 2));
  return e;
}

using FingerprintFn = std::function<Fingerprint(const DecoratedGamma&)>;
using ApplyFn = std::function<DecoratedGamma(const DecoratedGamma&, const Move&)>;

FingerprintFn make_fingerprint_fn(Defect defect, unsigned depth) {
  if (defect != Defect::drop_root_sum) {
    return [depth](const DecoratedGamma& g) { return fingerprint(g, depth); };
  }
  return [depth](const DecoratedGamma& g) {
    Fingerprint fp = fingerprint(g, depth);
    for (unsigned n = 1; n < fp.h.size(); ++n) {
      GaussianRat root_sum;
      for (const auto& a : g.rational.roots()) root_sum += a.pow(n - 1);
      const Rat scale =
          Rat(2 * static_cast<long>(n)) * (n % 2 == 0 ? Rat(1) : Rat(-1));
      fp.h[n] += scale * root_sum;  // cancels the subtracted root sum
    }
    return fp;
  };
}

ApplyFn make_apply_fn(Defect defect) {
  if (defect != Defect::drop_split_twist) {
    return [](const DecoratedGamma& g, const Move& m) { return apply_move(g, m); };
  }
  return [](const DecoratedGamma& g, const Move& m) {
    DecoratedGamma out = apply_move(g, m);
    if (std::holds_alternative<SplitMove>(m)) out.gamma.omega = g.gamma.omega;
    return out;
  };
}

// The five default points plus deterministic spares, so every step keeps at
// least 3 admissible points even when roots/poles crowd the default set.
SamplePlan fuzz_plan(double tolerance) {
  SamplePlan plan = SamplePlan::defaults();
  plan.tolerance = tolerance;
  plan.points.insert(plan.points.end(), {{3.7, 2.3},
                                         {5.1, -0.9},
                                         {2.05, 1.45},
                                         {1.3, -1.7},
                                         {3.35, 0.55},
                                         {4.6, 1.15},
                                         {2.7, -0.35}});
  return plan;
}

struct CaseFailure {
  std::size_t step = 0;
  std::string kind;
  std::string message;
};

// Replays the trace checking exact fingerprint preservation and, optionally,
// the numeric oracle at every step. Invalid traces (a precondition fails)
// come back as invalid, not as failures.
struct CaseCheck {
  bool valid = true;
  std::optional<CaseFailure> failure;
};

CaseCheck check_case(const FuzzConfig& cfg, const FingerprintFn& fp_fn,
                     const ApplyFn& apply_fn, const SamplePlan& plan,
                     const DecoratedGamma& g0, const MoveTrace& trace) {
  CaseCheck result;
  Fingerprint reference;
  DecoratedGamma current = g0;
  try {
    reference = fp_fn(g0);
  } catch (const std::exception&) {
    result.valid = false;
    return result;
  }
  for (std::size_t k = 0; k < trace.moves.size(); ++k) {
    DecoratedGamma next;
    try {
      next = apply_fn(current, trace.moves[k]);
    } catch (const std::exception&) {
      result.valid = false;
      return result;
    }
    const Fingerprint fp = fp_fn(next);
    if (fp != reference) {
      result.failure = CaseFailure{
          k, "exact",
          "step " + std::to_string(k) + ": " +
              first_fingerprint_difference(reference, fp) + " not preserved"};
      return result;
    }
    if (cfg.numeric_checks) {
      try {
        const MoveReport report = verify_move(current, next, plan);
        if (report.max_rel_dev > plan.tolerance || !report.omega_consistent) {
          result.failure = CaseFailure{
              k, "numeric",
              "step " + std::to_string(k) + ": " +
                  (report.max_rel_dev > plan.tolerance
                       ? "ratio deviation " + std::to_string(report.max_rel_dev)
                       : "omega update inconsistent")};
          return result;
        }
      } catch (const std::runtime_error& e) {
        result.failure = CaseFailure{k, "numeric", e.what()};
        return result;
      }
    }
    current = std::move(next);
  }
  return result;
}

// Greedy shrink: truncate to the failing prefix, then drop interior moves,
// then drop initial factors, for as long as the candidate still fails.
void shrink_failure(const FuzzConfig& cfg, const FingerprintFn& fp_fn,
                    const ApplyFn& apply_fn, const SamplePlan& plan,
                    DecoratedGamma& data, MoveTrace& trace, CaseFailure& failure) {
  const auto fails = [&](const DecoratedGamma& g, const MoveTrace& t)
      -> std::optional<CaseFailure> {
    const CaseCheck check = check_case(cfg, fp_fn, apply_fn, plan, g, t);
    if (!check.valid) return std::nullopt;
    return check.failure;
  };

  trace.moves.resize(failure.step + 1);
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < trace.moves.size(); ++i) {
      MoveTrace candidate = trace;
      candidate.moves.erase(candidate.moves.begin() + static_cast<std::ptrdiff_t>(i));
      if (auto f = fails(data, candidate)) {
        trace.moves.resize(f->step + 1);
        std::copy(candidate.moves.begin(),
                  candidate.moves.begin() + static_cast<std::ptrdiff_t>(f->step + 1),
                  trace.moves.begin());
        failure = *f;
        improved = true;
        break;
      }
    }
    if (improved) continue;
    for (std::size_t j = 0; j < data.gamma.size(); ++j) {
      DecoratedGamma candidate = data;
      candidate.gamma.lambdas.erase(candidate.gamma.lambdas.begin() +
                                    static_cast<std::ptrdiff_t>(j));
      candidate.gamma.mus.erase(candidate.gamma.mus.begin() +
                                static_cast<std::ptrdiff_t>(j));
      if (auto f = fails(candidate, trace)) {
        trace.moves.resize(f->step + 1);
        data = std::move(candidate);
        failure = *f;
        improved = true;
        break;
      }
    }
  }
}

// Contiguous index runs whose factors share a lambda and whose mus form the
// arithmetic progression a merge expects. Freshly split factors qualify.
std::vector<MergeMove> find_merge_patterns(const GammaData& g, unsigned max_m) {
  std::vector<MergeMove> patterns;
  const std::size_t r = g.size();
  for (unsigned m = 2; m <= max_m && m <= r; ++m) {
    const Rat step = Rat(1) / Rat(static_cast<long>(m));
    for (std::size_t j = 0; j + m <= r; ++j) {
      bool match = true;
      for (unsigned k = 0; match && k < m; ++k) {
        if (g.lambdas[j + k] != g.lambdas[j]) match = false;
        if (match && k > 0 &&
            g.mus[j + k] != g.mus[j] + GaussianRat(step * Rat(static_cast<long>(k)))) {
          match = false;
        }
      }
      if (match) {
        MergeMove mv;
        mv.order = m;
        for (unsigned k = 0; k < m; ++k) mv.indices.push_back(j + k);
        patterns.push_back(std::move(mv));
      }
    }
  }
  return patterns;
}

void count_move(MoveCounts& counts, const Move& move) {
  if (std::holds_alternative<ExpandMove>(move)) {
    ++counts.expands;
  } else if (std::holds_alternative<ContractMove>(move)) {
    ++counts.contracts;
  } else if (std::holds_alternative<SplitMove>(move)) {
    ++counts.splits;
  } else {
    ++counts.merges;
  }
}

}  // namespace

DecoratedGamma gen_gamma(const FuzzConfig& cfg, std::size_t case_index) {
  CounterRng rng(cfg.seed, case_index, /*stream=*/0);
  DecoratedGamma g;
  const std::size_t r = rng.below(cfg.max_r + 1);
  for (std::size_t j = 0; j < r; ++j) {
    g.gamma.lambdas.push_back(random_positive(rng, cfg.component_bound));
    Rat re = random_nonnegative(rng, cfg.component_bound);
    Rat im = rng.one_in(3) ? Rat(0) : random_signed(rng, cfg.component_bound);
    g.gamma.mus.emplace_back(std::move(re), std::move(im));
  }
  for (long p : {2L, 3L, 5L}) {
    if (rng.one_in(2)) g.gamma.q *= PowerProduct::from_rational(Rat(p)).pow(random_small_exponent(rng));
  }
  if (rng.one_in(2)) g.gamma.q *= PowerProduct::pi_power(random_small_exponent(rng));
  PhaseTwist twist;
  for (long p : {2L, 3L}) {
    if (rng.one_in(4)) twist *= phase_twist(Rat(p), random_small_exponent(rng));
  }
  g.gamma.omega = UnitPhase("tag", twist);
  g.gamma.validate();
  return g;
}

MoveTrace gen_trace(const FuzzConfig& cfg, const DecoratedGamma& g, std::size_t case_index) {
  CounterRng rng(cfg.seed, case_index, /*stream=*/1);
  MoveTrace trace;
  DecoratedGamma current = g;
  const std::size_t target = rng.below(cfg.max_trace + 1);
  while (trace.moves.size() < target) {
    const std::size_t r = current.gamma.size();
    if (r == 0) break;  // no factor-level move applies to bare Q^s data
    Move move;
    switch (rng.below(4)) {
      case 0: {
        std::vector<std::size_t> eligible;
        for (std::size_t j = 0; j < r; ++j) {
          if (current.gamma.mus[j].re() >= Rat(1)) eligible.push_back(j);
        }
        if (eligible.empty()) {
          // contract first so a later expand becomes possible
          move = ContractMove{rng.below(r)};
        } else {
          move = ExpandMove{eligible[rng.below(eligible.size())]};
        }
        break;
      }
      case 1:
        move = ContractMove{rng.below(r)};
        break;
      case 2:
        move = SplitMove{rng.below(r), 1 + static_cast<unsigned>(rng.below(cfg.max_m))};
        break;
      default: {
        auto patterns = find_merge_patterns(current.gamma, cfg.max_m);
        if (patterns.empty()) {
          move = SplitMove{rng.below(r), 1 + static_cast<unsigned>(rng.below(cfg.max_m))};
        } else {
          move = patterns[rng.below(patterns.size())];
        }
        break;
      }
    }
    current = apply_move(current, move);
    trace.moves.push_back(std::move(move));
  }
  return trace;
}

SuiteSummary run_suite(const FuzzConfig& cfg) {
  SuiteSummary summary;
  const FingerprintFn fp_fn = make_fingerprint_fn(cfg.defect, cfg.depth);
  const ApplyFn apply_fn = make_apply_fn(cfg.defect);
  const SamplePlan plan = fuzz_plan(cfg.numeric_tolerance);

  for (std::size_t i = 0; i < cfg.cases; ++i) {
    DecoratedGamma data = gen_gamma(cfg, i);
    MoveTrace trace = gen_trace(cfg, data, i);
    for (const auto& move : trace.moves) count_move(summary.moves, move);

    CaseCheck check = check_case(cfg, fp_fn, apply_fn, plan, data, trace);
    if (check.failure) {
      CaseFailure failure = *check.failure;
      shrink_failure(cfg, fp_fn, apply_fn, plan, data, trace, failure);
      if (failure.kind == "exact") {
        ++summary.exact_failures;
      } else {
        ++summary.numeric_failures;
      }
      summary.failures.push_back(
          FuzzFailure{i, failure.kind, failure.message, std::move(data), std::move(trace)});
    }
    ++summary.cases_run;
  }
  return summary;
}

}  // namespace ginv
