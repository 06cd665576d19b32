#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace ginv {

/// Exact rational number. Always normalized: gcd(|num|, den) = 1, den >= 1.
class Rat {
 public:
  Rat() : value_(0) {}
  Rat(long n) : value_(n) {}  // NOLINT: implicit by design, Rat is a number
  Rat(long n, long d) : value_(n, d) { normalize(); }
  explicit Rat(const mpz_class& n) : value_(n) {}
  Rat(const mpz_class& n, const mpz_class& d) : value_(n, d) { normalize(); }
  explicit Rat(const mpq_class& q) : value_(q) { normalize(); }

  const mpq_class& value() const { return value_; }
  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rat operator-() const { return Rat(mpq_class(-value_)); }
  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  Rat inverse() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(mpq_class(1) / value_);
  }

  /// Integer power; pow(0) is 1 for every base (0^0 = 1 by convention).
  Rat pow(long e) const {
    if (e == 0) return Rat(1);
    if (is_zero()) {
      if (e < 0) throw std::domain_error("Rat: zero to a negative power");
      return Rat(0);
    }
    const unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1UL
                                  : static_cast<unsigned long>(e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), value_.get_den().get_mpz_t(), k);
    return e < 0 ? Rat(d, n) : Rat(n, d);
  }

  Rat abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const { return value_.get_d(); }

  /// Canonical text form: "p" or "p/q".
  std::string str() const { return value_.get_str(); }

  static Rat from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rat: bad literal '" + s + "'");
    q.canonicalize();
    return Rat(q);
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.value_ >= b.value_; }

 private:
  void normalize() {
    if (value_.get_den() == 0) throw std::domain_error("Rat: zero denominator");
    value_.canonicalize();
  }

  mpq_class value_;
};

/// Exact Gaussian rational re + im*i.
class GaussianRat {
 public:
  GaussianRat() = default;
  GaussianRat(long n) : re_(n) {}  // NOLINT: implicit by design
  GaussianRat(Rat re) : re_(std::move(re)) {}  // NOLINT: implicit by design
  GaussianRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRat conj() const { return {re_, -im_}; }

  /// |z|^2 = re^2 + im^2, exact.
  Rat norm() const { return re_ * re_ + im_ * im_; }

  GaussianRat operator-() const { return {-re_, -im_}; }
  GaussianRat& operator+=(const GaussianRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussianRat& operator-=(const GaussianRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussianRat& operator*=(const GaussianRat& o) {
    Rat r = re_ * o.re_ - im_ * o.im_;
    Rat i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRat& operator/=(const GaussianRat& o) {
    Rat n = o.norm();
    if (n.is_zero()) throw std::domain_error("GaussianRat: division by zero");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend GaussianRat operator+(GaussianRat a, const GaussianRat& b) { return a += b; }
  friend GaussianRat operator-(GaussianRat a, const GaussianRat& b) { return a -= b; }
  friend GaussianRat operator*(GaussianRat a, const GaussianRat& b) { return a *= b; }
  friend GaussianRat operator/(GaussianRat a, const GaussianRat& b) { return a /= b; }

  friend GaussianRat operator*(const Rat& a, GaussianRat b) {
    return {a * b.re_, a * b.im_};
  }

  /// Non-negative integer power; pow(0) = 1 including 0^0.
  GaussianRat pow(unsigned long e) const {
    GaussianRat acc(Rat(1)), base = *this;
    while (e != 0) {
      if (e & 1UL) acc *= base;
      e >>= 1UL;
      if (e != 0) base *= base;
    }
    return acc;
  }

  /// Canonical text form: "a", "bi" or "a+bi"/"a-bi" with b positive.
  std::string str() const {
    if (im_.is_zero()) return re_.str();
    if (re_.is_zero()) return im_.str() + "i";
    return re_.str() + (im_.sign() < 0 ? "-" : "+") + im_.abs().str() + "i";
  }

  friend bool operator==(const GaussianRat& a, const GaussianRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRat& a, const GaussianRat& b) { return !(a == b); }

 private:
  Rat re_, im_;
};

/// Lexicographic order on (re, im); the canonical order for root/pole lists.
inline bool lex_less(const GaussianRat& a, const GaussianRat& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

}  // namespace ginv
