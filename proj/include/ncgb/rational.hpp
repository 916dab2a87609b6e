// Exact rational coefficients. All polynomial arithmetic in this project runs
// over this type; there is no floating point anywhere.
#ifndef NCGB_RATIONAL_HPP
#define NCGB_RATIONAL_HPP

#include <compare>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ncgb {

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator (zero is 0/1). The coefficient field is kept behind this
/// minimal interface (zero, one, add, mul, negate, invert, equality) so a
/// prime field could be swapped in later without touching the callers.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p" or "p/q" with optional leading sign.
  static Rational from_string(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
      throw std::domain_error("Rational: cannot parse '" + text + "'");
    if (v.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  /// "p" when integral, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

}  // namespace ncgb

#endif
