#include "ginv/power_product.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace ginv {

namespace {

// Inputs are desk-scale: every composite below 10^12 is fully split by trial
// division up to 10^6. Anything left over must itself be prime.
constexpr unsigned long kTrialDivisionLimit = 1'000'000UL;

void accumulate_integer_factors(std::map<Base, Rat>& out, mpz_class n, long sign) {
  if (n == 1) return;
  auto record = [&](const mpz_class& p, long e) {
    const Base b = Base::prime(p);
    auto it = out.find(b);
    if (it == out.end()) {
      out.emplace(b, Rat(e * sign));
    } else {
      it->second += Rat(e * sign);
      if (it->second.is_zero()) out.erase(it);
    }
  };

  for (unsigned long d = 2; d <= kTrialDivisionLimit && mpz_class(d) * d <= n; d = (d == 2 ? 3 : d + 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      long e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        ++e;
      }
      record(mpz_class(d), e);
    }
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
      throw std::domain_error("PowerProduct: cannot factor composite " + n.get_str() +
                              " (beyond trial-division range)");
    }
    record(n, 1);
  }
}

}  // namespace

double Base::log_value() const {
  return pi_ ? std::log(std::numbers::pi) : std::log(p_.get_d());
}

PowerProduct PowerProduct::from_rational(const Rat& q) {
  if (q.sign() <= 0) {
    throw std::invalid_argument("PowerProduct: value must be positive, got " + q.str());
  }
  PowerProduct p;
  accumulate_integer_factors(p.factors_, q.num(), +1);
  accumulate_integer_factors(p.factors_, q.den(), -1);
  return p;
}

PowerProduct PowerProduct::pi_power(const Rat& e) {
  PowerProduct p;
  if (!e.is_zero()) p.factors_.emplace(Base::pi(), e);
  return p;
}

Rat PowerProduct::exponent_of(const Base& b) const {
  auto it = factors_.find(b);
  return it == factors_.end() ? Rat(0) : it->second;
}

void PowerProduct::bump(const Base& b, const Rat& e) {
  if (e.is_zero()) return;
  auto it = factors_.find(b);
  if (it == factors_.end()) {
    factors_.emplace(b, e);
  } else {
    it->second += e;
    if (it->second.is_zero()) factors_.erase(it);
  }
}

PowerProduct& PowerProduct::operator*=(const PowerProduct& o) {
  for (const auto& [b, e] : o.factors_) bump(b, e);
  return *this;
}

PowerProduct PowerProduct::inverse() const {
  PowerProduct p;
  for (const auto& [b, e] : factors_) p.factors_.emplace(b, -e);
  return p;
}

PowerProduct PowerProduct::pow(const Rat& t) const {
  PowerProduct p;
  if (t.is_zero()) return p;
  for (const auto& [b, e] : factors_) p.factors_.emplace(b, e * t);
  return p;
}

double PowerProduct::log_value() const {
  double acc = 0.0;
  for (const auto& [b, e] : factors_) acc += e.to_double() * b.log_value();
  return acc;
}

double PowerProduct::to_double() const {
  const double lg = log_value();
  // exp overflows past ~709.78; underflow to subnormal/0 is just as unusable.
  if (lg > 709.0 || lg < -745.0) {
    throw std::overflow_error("PowerProduct: value out of double range (ln = " +
                              std::to_string(lg) + ")");
  }
  return std::exp(lg);
}

std::string PowerProduct::str() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, e] : factors_) {
    if (!first) os << '*';
    first = false;
    os << b.str() << '^' << e.str();
  }
  return os.str();
}

PhaseTwist phase_twist(const Rat& base, const Rat& t) {
  return PhaseTwist(PowerProduct::from_rational(base).pow(t));
}

}  // namespace ginv
