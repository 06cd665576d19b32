#include "ginv/invariants.hpp"

#include <stdexcept>
#include <string>

namespace ginv {

namespace {

void check_depth(unsigned n) {
  if (n > kMaxFingerprintDepth) {
    throw std::invalid_argument("invariants: index " + std::to_string(n) +
                                " exceeds the supported maximum 256");
  }
}

GaussianRat power_sum(const std::vector<GaussianRat>& values, unsigned e) {
  GaussianRat acc;
  for (const auto& v : values) acc += v.pow(e);
  return acc;
}

}  // namespace

Rat degree(const GammaData& g) {
  Rat d(0);
  for (const auto& lambda : g.lambdas) d += lambda;
  return Rat(2) * d;
}

PowerProduct conductor(const GammaData& g) {
  const Rat d = degree(g);
  PowerProduct q = PowerProduct::from_rational(Rat(2)).pow(d) * PowerProduct::pi_power(d);
  q *= g.q.pow(Rat(2));
  for (const auto& lambda : g.lambdas) {
    q *= PowerProduct::from_rational(lambda).pow(Rat(2) * lambda);
  }
  return q;
}

UnitPhase root_number(const GammaData& g) {
  PhaseTwist t;
  for (std::size_t j = 0; j < g.size(); ++j) {
    t *= phase_twist(g.lambdas[j], Rat(-2) * g.mus[j].im());
  }
  return g.omega.twisted(t);
}

GaussianRat h_invariant(const GammaData& g, unsigned n) {
  check_depth(n);
  GaussianRat acc;
  for (std::size_t j = 0; j < g.size(); ++j) {
    acc += GaussianRat(g.lambdas[j].pow(1 - static_cast<long>(n))) *
           bernoulli_poly_eval(n, g.mus[j]);
  }
  return Rat(2) * acc;
}

GaussianRat h_star(const DecoratedGamma& g, unsigned n) {
  check_depth(n);
  if (n == 0) return GaussianRat(degree(g.gamma));
  GaussianRat correction = power_sum(g.rational.poles(), n - 1) -
                           power_sum(g.rational.roots(), n - 1);
  const Rat scale = Rat(2 * static_cast<long>(n)) * (n % 2 == 0 ? Rat(1) : Rat(-1));
  return h_invariant(g.gamma, n) + scale * correction;
}

Fingerprint fingerprint(const DecoratedGamma& g, unsigned depth) {
  check_depth(depth);
  Fingerprint fp;
  fp.degree = degree(g.gamma);
  fp.conductor = conductor(g.gamma);
  fp.root_number = root_number(g.gamma);
  fp.h.reserve(depth + 1);
  for (unsigned n = 0; n <= depth; ++n) fp.h.push_back(h_star(g, n));
  return fp;
}

Verdict equivalent(const DecoratedGamma& a, const DecoratedGamma& b, unsigned depth) {
  return fingerprint(a, depth) == fingerprint(b, depth) ? Verdict::fingerprint_equal
                                                        : Verdict::distinct;
}

std::string first_fingerprint_difference(const Fingerprint& a, const Fingerprint& b) {
  if (a.degree != b.degree) return "degree";
  if (a.conductor != b.conductor) return "conductor";
  if (a.root_number != b.root_number) return "root_number";
  const std::size_t depth = std::min(a.h.size(), b.h.size());
  for (std::size_t n = 0; n < depth; ++n) {
    if (a.h[n] != b.h[n]) return "H*(" + std::to_string(n) + ")";
  }
  if (a.h.size() != b.h.size()) return "depth";
  return "";
}

}  // namespace ginv
