#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace qrtrig::num {

/// MPFR-backed real with its precision carried alongside the value.
/// Binary operations produce max(bits(lhs), bits(rhs)) bits; nothing in this
/// type ever lowers precision implicitly.
class BigReal {
 public:
  static constexpr long kMinBits = 64;

  explicit BigReal(long bits = 256);
  BigReal(long bits, long value);
  BigReal(long bits, const mpz_class& value);
  BigReal(long bits, const mpq_class& value);
  /// Parses a decimal or scientific-notation string.
  BigReal(long bits, const std::string& decimal);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  long bits() const { return static_cast<long>(mpfr_get_prec(value_)); }
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  /// Copy at a different precision (rounding if lower).
  BigReal with_bits(long bits) const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal operator-() const;

  friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigReal& x, const BigReal& y) { return mpfr_equal_p(x.value_, y.value_); }
  friend std::partial_ordering operator<=>(const BigReal& x, const BigReal& y);

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Nearest integer (ties away from zero).
  mpz_class round() const;

  /// Scientific notation with `digits` significant digits; 0 selects the
  /// number of digits the precision supports.
  std::string to_string(int digits = 0) const;

 private:
  mpfr_t value_;
};

BigReal pi(long bits);
BigReal sqrt(const BigReal& x);
BigReal abs(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log2(const BigReal& x);
BigReal pow2(long exponent, long bits);
BigReal hypot(const BigReal& x, const BigReal& y);
BigReal max(const BigReal& x, const BigReal& y);

/// re + i*im with both parts at the same precision.
class BigComplex {
 public:
  explicit BigComplex(long bits = 256) : re_(bits), im_(bits) {}
  BigComplex(BigReal re, BigReal im);
  explicit BigComplex(BigReal re);

  long bits() const { return re_.bits(); }
  const BigReal& re() const { return re_; }
  const BigReal& im() const { return im_; }
  BigReal& re() { return re_; }
  BigReal& im() { return im_; }

  static BigComplex i(long bits) { return BigComplex(BigReal(bits, 0L), BigReal(bits, 1L)); }
  static BigComplex real(long bits, long v) { return BigComplex(BigReal(bits, v), BigReal(bits, 0L)); }

  BigComplex conj() const { return BigComplex(re_, -im_); }
  BigReal abs() const;
  BigReal norm() const;  // |z|^2

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex& operator*=(const BigReal& rhs);
  BigComplex& operator/=(const BigReal& rhs);
  BigComplex operator-() const { return BigComplex(-re_, -im_); }

  friend BigComplex operator+(BigComplex x, const BigComplex& y) { return x += y; }
  friend BigComplex operator-(BigComplex x, const BigComplex& y) { return x -= y; }
  friend BigComplex operator*(BigComplex x, const BigComplex& y) { return x *= y; }
  friend BigComplex operator/(BigComplex x, const BigComplex& y) { return x /= y; }
  friend BigComplex operator*(BigComplex x, const BigReal& y) { return x *= y; }
  friend BigComplex operator/(BigComplex x, const BigReal& y) { return x /= y; }

  BigComplex with_bits(long bits) const { return BigComplex(re_.with_bits(bits), im_.with_bits(bits)); }
  std::string to_string(int digits = 0) const;

 private:
  BigReal re_;
  BigReal im_;
};

/// z^n by repeated squaring; negative n inverts.
BigComplex pow(const BigComplex& z, long n);

}  // namespace qrtrig::num
