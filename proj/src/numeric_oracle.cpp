#include "ginv/numeric_oracle.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ginv {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients for g = 7, n = 9 (double-precision workhorse set).
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

bool near_nonpositive_integer(std::complex<double> z, double eps) {
  if (std::abs(z.imag()) >= eps) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) < eps;
}

std::complex<double> lanczos_series(std::complex<double> w) {
  std::complex<double> x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (w + static_cast<double>(i));
  return x;
}

std::complex<double> to_complex(const GaussianRat& z) {
  return {z.re().to_double(), z.im().to_double()};
}

}  // namespace

std::complex<double> gamma_complex(std::complex<double> z) {
  if (near_nonpositive_integer(z, 1e-12)) {
    throw std::domain_error("gamma_complex: argument within 1e-12 of a pole");
  }
  if (z.real() < 0.5) {
    return kPi / (std::sin(kPi * z) * gamma_complex(1.0 - z));
  }
  const std::complex<double> w = z - 1.0;
  const std::complex<double> t = w + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, w + 0.5) * std::exp(-t) * lanczos_series(w);
}

std::complex<double> log_gamma_complex(std::complex<double> z) {
  if (near_nonpositive_integer(z, 1e-12)) {
    throw std::domain_error("log_gamma_complex: argument within 1e-12 of a pole");
  }
  if (z.real() < 0.5) {
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_complex(1.0 - z);
  }
  const std::complex<double> w = z - 1.0;
  const std::complex<double> t = w + 7.5;
  return 0.5 * std::log(2.0 * kPi) + std::log(lanczos_series(w)) +
         (w + 0.5) * std::log(t) - t;
}

SamplePlan SamplePlan::defaults() {
  SamplePlan plan;
  plan.points = {{2.3, 0.7}, {3.1, -0.4}, {1.7, 1.9}, {4.2, 0.1}, {2.9, -1.3}};
  return plan;
}

bool admissible(const DecoratedGamma& g, std::complex<double> s) {
  for (std::size_t j = 0; j < g.gamma.size(); ++j) {
    const std::complex<double> arg =
        g.gamma.lambdas[j].to_double() * s + to_complex(g.gamma.mus[j]);
    if (near_nonpositive_integer(arg, kAdmissibilityEps)) return false;
  }
  for (const auto& a : g.rational.roots()) {
    if (std::abs(s - to_complex(a)) < kAdmissibilityEps) return false;
  }
  for (const auto& b : g.rational.poles()) {
    if (std::abs(s - to_complex(b)) < kAdmissibilityEps) return false;
  }
  return true;
}

std::complex<double> eval_decorated_log(const DecoratedGamma& g, std::complex<double> s) {
  std::complex<double> acc(g.rational.kappa().log_value(), 0.0);
  if (g.rational.sign() < 0) acc += std::complex<double>(0.0, kPi);
  acc += s * g.gamma.q.log_value();
  for (const auto& a : g.rational.roots()) acc += std::log(s - to_complex(a));
  for (const auto& b : g.rational.poles()) acc -= std::log(s - to_complex(b));
  for (std::size_t j = 0; j < g.gamma.size(); ++j) {
    acc += log_gamma_complex(g.gamma.lambdas[j].to_double() * s + to_complex(g.gamma.mus[j]));
  }
  return acc;
}

std::complex<double> eval_decorated(const DecoratedGamma& g, std::complex<double> s) {
  return std::exp(eval_decorated_log(g, s));
}

MoveReport verify_move(const DecoratedGamma& before, const DecoratedGamma& after,
                       const SamplePlan& plan) {
  std::vector<std::complex<double>> pts;
  for (const auto& s : plan.points) {
    if (admissible(before, s) && admissible(after, s)) pts.push_back(s);
  }
  if (pts.size() < 3) {
    throw std::runtime_error("verify_move: fewer than 3 admissible sample points");
  }

  MoveReport report;
  report.points_used = pts.size();
  // The claim under test is constancy of the ratio, so c is pinned at the
  // first point rather than fitted.
  report.c = std::exp(eval_decorated_log(before, pts.front()) -
                      eval_decorated_log(after, pts.front()));
  for (const auto& s : pts) {
    const std::complex<double> ratio =
        std::exp(eval_decorated_log(before, s) - eval_decorated_log(after, s));
    report.max_rel_dev = std::max(report.max_rel_dev, std::abs(ratio / report.c - 1.0));
  }

  const std::complex<double> predicted =
      before.gamma.omega.to_complex(1.0) * std::conj(report.c) / report.c;
  const std::complex<double> actual = after.gamma.omega.to_complex(1.0);
  report.omega_consistent = std::abs(actual - predicted) <= plan.tolerance;
  return report;
}

}  // namespace ginv
