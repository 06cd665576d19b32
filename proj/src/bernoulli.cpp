#include "ginv/bernoulli.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace ginv {

namespace {

std::mutex cache_mutex;

void check_index(unsigned n) {
  if (n > kMaxBernoulliIndex) {
    throw std::invalid_argument("bernoulli: index " + std::to_string(n) +
                                " exceeds the supported maximum 256");
  }
}

// Bernoulli numbers from sum_{k=0}^{n} C(n+1,k) B_k = 0, B_0 = 1.
// Caller holds cache_mutex.
const std::vector<Rat>& numbers_up_to(unsigned n) {
  static std::vector<Rat> table{Rat(1)};
  table.reserve(kMaxBernoulliIndex + 1);
  while (table.size() <= n) {
    const unsigned m = static_cast<unsigned>(table.size());
    // Pascal row C(m+1, k) for k = 0..m.
    mpz_class binom = 1;
    Rat acc(0);
    for (unsigned k = 0; k < m; ++k) {
      acc += Rat(binom) * table[k];
      binom *= static_cast<long>(m + 1 - k);
      binom /= static_cast<long>(k + 1);
    }
    // binom now holds C(m+1, m) = m+1.
    table.push_back(-acc / Rat(binom));
  }
  return table;
}

}  // namespace

Rat bernoulli_number(unsigned n) {
  check_index(n);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return numbers_up_to(n)[n];
}

const std::vector<Rat>& bernoulli_poly(unsigned n) {
  check_index(n);
  std::lock_guard<std::mutex> lock(cache_mutex);
  // B_n(x) = sum_{k=0}^{n} C(n,k) B_k x^{n-k}. A deque keeps references to
  // finished rows stable while later rows are appended.
  static std::deque<std::vector<Rat>> polys;
  const auto& numbers = numbers_up_to(n);
  while (polys.size() <= n) {
    const unsigned m = static_cast<unsigned>(polys.size());
    std::vector<Rat> coeffs(m + 1, Rat(0));
    mpz_class binom = 1;
    for (unsigned k = 0; k <= m; ++k) {
      coeffs[m - k] = Rat(binom) * numbers[k];
      if (k < m) {
        binom *= static_cast<long>(m - k);
        binom /= static_cast<long>(k + 1);
      }
    }
    polys.push_back(std::move(coeffs));
  }
  return polys[n];
}

GaussianRat bernoulli_poly_eval(unsigned n, const GaussianRat& z) {
  const auto& coeffs = bernoulli_poly(n);
  GaussianRat acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * z + GaussianRat(*it);
  }
  return acc;
}

}  // namespace ginv
