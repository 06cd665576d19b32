#pragma once

#include <complex>
#include <map>
#include <string>

#include "ginv/rational.hpp"

namespace ginv {

/// Multiplicative base: a prime integer or the distinguished symbol pi.
/// Primes order before pi; primes compare by value.
class Base {
 public:
  static Base pi() { return Base(true, 0); }
  static Base prime(mpz_class p) { return Base(false, std::move(p)); }

  bool is_pi() const { return pi_; }
  const mpz_class& prime_value() const { return p_; }

  double log_value() const;
  std::string str() const { return pi_ ? "pi" : p_.get_str(); }

  friend bool operator==(const Base& a, const Base& b) {
    return a.pi_ == b.pi_ && (a.pi_ || a.p_ == b.p_);
  }
  friend bool operator!=(const Base& a, const Base& b) { return !(a == b); }
  friend bool operator<(const Base& a, const Base& b) {
    if (a.pi_ != b.pi_) return !a.pi_;
    if (a.pi_) return false;
    return a.p_ < b.p_;
  }

 private:
  Base(bool pi, mpz_class p) : pi_(pi), p_(std::move(p)) {}

  bool pi_;
  mpz_class p_;
};

/// Exact positive real of the form prod b^{e_b} over prime bases and pi,
/// with rational exponents. Zero exponents are never stored; integer bases
/// are prime and distinct; the map order is the canonical order.
class PowerProduct {
 public:
  PowerProduct() = default;

  static PowerProduct one() { return {}; }

  /// Exact factorization of a positive rational; throws std::invalid_argument
  /// for q <= 0 and std::domain_error when a composite survives trial division.
  static PowerProduct from_rational(const Rat& q);

  static PowerProduct pi_power(const Rat& e);

  const std::map<Base, Rat>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  Rat exponent_of(const Base& b) const;

  PowerProduct& operator*=(const PowerProduct& o);
  friend PowerProduct operator*(PowerProduct a, const PowerProduct& b) { return a *= b; }
  friend PowerProduct operator*(PowerProduct a, const Rat& q) {
    return a *= from_rational(q);
  }

  PowerProduct inverse() const;

  /// (prod b^e)^t = prod b^{e t}; pow(0) is the empty product.
  PowerProduct pow(const Rat& t) const;

  /// sum e_b * ln(b), exact object evaluated in floating point.
  double log_value() const;

  /// Floating value; throws std::overflow_error when out of double range.
  double to_double() const;

  /// "1" or "*"-joined "b^e" terms in canonical order, e.g. "2^2*3^1*pi^-1/2".
  std::string str() const;

  friend bool operator==(const PowerProduct& a, const PowerProduct& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const PowerProduct& a, const PowerProduct& b) { return !(a == b); }

 private:
  void bump(const Base& b, const Rat& e);

  std::map<Base, Rat> factors_;
};

/// Exact unit-modulus factor prod b^{i t_b}; the multiplier type for
/// UnitPhase updates. Composition adds exponent maps.
class PhaseTwist {
 public:
  PhaseTwist() = default;
  explicit PhaseTwist(PowerProduct exps) : exps_(std::move(exps)) {}

  static PhaseTwist identity() { return {}; }

  bool is_identity() const { return exps_.is_one(); }
  const std::map<Base, Rat>& exponents() const { return exps_.factors(); }

  PhaseTwist& operator*=(const PhaseTwist& o) {
    exps_ *= o.exps_;
    return *this;
  }
  friend PhaseTwist operator*(PhaseTwist a, const PhaseTwist& b) { return a *= b; }
  PhaseTwist inverse() const { return PhaseTwist(exps_.inverse()); }

  /// Argument of the represented complex number: sum t_b * ln(b).
  double angle() const { return exps_.log_value(); }

  std::complex<double> to_complex() const {
    return std::polar(1.0, angle());
  }

  std::string str() const { return exps_.str(); }

  friend bool operator==(const PhaseTwist& a, const PhaseTwist& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator!=(const PhaseTwist& a, const PhaseTwist& b) { return !(a == b); }

 private:
  PowerProduct exps_;
};

/// The twist carried by base^{i t} with base a positive rational, factored
/// into prime bases. base = 1 or t = 0 gives the identity twist.
PhaseTwist phase_twist(const Rat& base, const Rat& t);

/// Exact modulus-1 complex: an opaque tag (the unconstrained initial omega of
/// a session) times a twist prod b^{i t_b}. Two phases are equal when the tag
/// and the twist map coincide. Soundness of that test rests on the linear
/// independence over Q of {ln p : p prime} together with ln(pi) for the maps
/// the engine produces; the numeric oracle cross-checks phases independently.
class UnitPhase {
 public:
  explicit UnitPhase(std::string tag = "tag") : tag_(std::move(tag)) {}
  UnitPhase(std::string tag, PhaseTwist twist)
      : tag_(std::move(tag)), twist_(std::move(twist)) {}

  const std::string& tag() const { return tag_; }
  const PhaseTwist& twist() const { return twist_; }

  UnitPhase twisted(const PhaseTwist& t) const { return {tag_, twist_ * t}; }

  /// Floating value with the opaque tag substituted by tag_value.
  std::complex<double> to_complex(std::complex<double> tag_value) const {
    return tag_value * twist_.to_complex();
  }

  std::string str() const {
    return twist_.is_identity() ? tag_ : tag_ + "*" + twist_.str();
  }

  friend bool operator==(const UnitPhase& a, const UnitPhase& b) {
    return a.tag_ == b.tag_ && a.twist_ == b.twist_;
  }
  friend bool operator!=(const UnitPhase& a, const UnitPhase& b) { return !(a == b); }

 private:
  std::string tag_;
  PhaseTwist twist_;
};

}  // namespace ginv
