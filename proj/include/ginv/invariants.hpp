#pragma once

#include <utility>
#include <vector>

#include "ginv/bernoulli.hpp"
#include "ginv/gamma_algebra.hpp"

namespace ginv {

constexpr unsigned kDefaultFingerprintDepth = 12;
constexpr unsigned kMaxFingerprintDepth = kMaxBernoulliIndex;

/// The truncated invariant tuple (degree, conductor, root number,
/// H*(0..depth)). h[0] always equals the degree.
struct Fingerprint {
  Rat degree{};
  PowerProduct conductor{};
  UnitPhase root_number{};
  std::vector<GaussianRat> h{};

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// d = 2 sum lambda_j.
Rat degree(const GammaData& g);

/// q = (2 pi)^d Q^2 prod lambda_j^{2 lambda_j}, exact as a power product.
PowerProduct conductor(const GammaData& g);

/// omega_F = omega prod lambda_j^{-2i Im(mu_j)}.
UnitPhase root_number(const GammaData& g);

/// H(n) = 2 sum B_n(mu_j) / lambda_j^{n-1}. n <= 256.
GaussianRat h_invariant(const GammaData& g, unsigned n);

/// Rational extension of H: for n >= 1,
///   H*(n) = H(n) + (-1)^n 2n (sum beta_j^{n-1} - sum alpha_j^{n-1})
/// over the pole/root multisets of R, with 0^0 = 1 in the power sums;
/// H*(0) is the degree. Agrees with H for constant R.
GaussianRat h_star(const DecoratedGamma& g, unsigned n);

Fingerprint fingerprint(const DecoratedGamma& g, unsigned depth);

enum class Verdict { distinct, fingerprint_equal };

/// `distinct` is definitive; `fingerprint_equal` certifies agreement up to
/// the given depth only.
Verdict equivalent(const DecoratedGamma& a, const DecoratedGamma& b, unsigned depth);

/// Names the first fingerprint component in which a and b differ, or ""
/// when equal: "degree", "conductor", "root_number" or "H*(n)".
std::string first_fingerprint_difference(const Fingerprint& a, const Fingerprint& b);

/// Evaluates a user functional of the truncated invariant tuple. Any f run
/// through this combinator automatically restricts to the plain invariants on
/// constant decorations and is unchanged by all four rewriting moves; both
/// facts are enforced by the test suite, not assumed.
template <typename F>
auto rational_extension_eval(F&& f, const DecoratedGamma& g, unsigned depth) {
  return std::forward<F>(f)(fingerprint(g, depth));
}

}  // namespace ginv
