#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ginv/gamma_algebra.hpp"

namespace ginv {

/// Euler gamma for complex argument: Lanczos approximation (g = 7, 9 terms)
/// with the reflection formula for Re(z) < 1/2. Relative error below 1e-10
/// for |z| <= 50 away from poles. Throws std::domain_error within 1e-12 of a
/// non-positive integer.
std::complex<double> gamma_complex(std::complex<double> z);

/// log Gamma along the same approximation; used for pole-safe ratios. The
/// imaginary part carries an arbitrary branch, which cancels in ratios of
/// exp-differences.
std::complex<double> log_gamma_complex(std::complex<double> z);

/// Sample points and the relative tolerance for move verification.
struct SamplePlan {
  std::vector<std::complex<double>> points{};
  double tolerance = 1e-8;

  /// The five fixed default points; deterministic so reports reproduce.
  static SamplePlan defaults();
};

/// Distance below which a point counts as colliding with a Gamma pole or a
/// root/pole of the decoration.
constexpr double kAdmissibilityEps = 1e-6;

/// True when s stays clear of every pole of the Gamma factors and of every
/// root and pole of R.
bool admissible(const DecoratedGamma& g, std::complex<double> s);

/// log of R(s) gamma(s) as a sum of term logs (branch not normalized).
std::complex<double> eval_decorated_log(const DecoratedGamma& g, std::complex<double> s);

/// Floating value of R(s) gamma(s). omega is not part of the function value.
std::complex<double> eval_decorated(const DecoratedGamma& g, std::complex<double> s);

struct MoveReport {
  std::complex<double> c{};       // ratio before/after at the first admissible point
  double max_rel_dev = 0.0;       // max over points of |ratio/c - 1|
  bool omega_consistent = false;  // after.omega == before.omega * conj(c)/c
  std::size_t points_used = 0;
};

/// Checks that `after` differs from `before` by one multiplicative constant
/// across the plan's admissible points and that the omega data moved by
/// conj(c)/c. Requires at least 3 admissible points; throws
/// std::runtime_error otherwise.
MoveReport verify_move(const DecoratedGamma& before, const DecoratedGamma& after,
                       const SamplePlan& plan);

}  // namespace ginv
