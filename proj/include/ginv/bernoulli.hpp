#pragma once

#include <vector>

#include "ginv/rational.hpp"

namespace ginv {

/// Largest supported Bernoulli index; coefficients grow fast beyond desk scale.
constexpr unsigned kMaxBernoulliIndex = 256;

/// Exact Bernoulli number B_n in the B_1 = -1/2 convention (so B_n(0) = B_n).
/// Memoized; thread safe. Throws std::invalid_argument for n > 256.
Rat bernoulli_number(unsigned n);

/// Coefficients of the Bernoulli polynomial B_n(x); entry k is the
/// coefficient of x^k. Leading coefficient is 1. Memoized; the returned
/// reference stays valid for the lifetime of the process.
const std::vector<Rat>& bernoulli_poly(unsigned n);

/// Exact value of B_n(z).
GaussianRat bernoulli_poly_eval(unsigned n, const GaussianRat& z);

}  // namespace ginv
