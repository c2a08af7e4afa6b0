#include "qrtrig/big_real.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrtrig/errors.hpp"

namespace qrtrig::num {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

long checked_bits(long bits) {
  if (bits < BigReal::kMinBits) {
    throw InvalidArgument("BigReal: precision must be at least 64 bits, got " +
                          std::to_string(bits));
  }
  return bits;
}

void raise_to(mpfr_ptr x, mpfr_prec_t bits) {
  if (mpfr_get_prec(x) < bits) mpfr_prec_round(x, bits, kRnd);
}

}  // namespace

BigReal::BigReal(long bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long bits, long value) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_si(value_, value, kRnd);
}

BigReal::BigReal(long bits, const mpz_class& value) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_z(value_, value.get_mpz_t(), kRnd);
}

BigReal::BigReal(long bits, const mpq_class& value) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_q(value_, value.get_mpq_t(), kRnd);
}

BigReal::BigReal(long bits, const std::string& decimal) {
  mpfr_init2(value_, checked_bits(bits));
  if (mpfr_set_str(value_, decimal.c_str(), 10, kRnd) != 0 && !mpfr_number_p(value_)) {
    mpfr_clear(value_);
    throw InvalidArgument("BigReal: cannot parse '" + decimal + "'");
  }
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRnd);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRnd);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::with_bits(long bits) const {
  BigReal out(bits);
  mpfr_set(out.value_, value_, kRnd);
  return out;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  raise_to(value_, mpfr_get_prec(rhs.value_));
  mpfr_add(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  raise_to(value_, mpfr_get_prec(rhs.value_));
  mpfr_sub(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  raise_to(value_, mpfr_get_prec(rhs.value_));
  mpfr_mul(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  raise_to(value_, mpfr_get_prec(rhs.value_));
  mpfr_div(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal out(*this);
  mpfr_neg(out.value_, out.value_, kRnd);
  return out;
}

std::partial_ordering operator<=>(const BigReal& x, const BigReal& y) {
  if (mpfr_unordered_p(x.value_, y.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(x.value_, y.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

mpz_class BigReal::round() const {
  BigReal r(bits());
  mpfr_round(r.value_, value_);
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), r.value_, kRnd);
  return out;
}

std::string BigReal::to_string(int digits) const {
  if (digits <= 0) {
    digits = static_cast<int>(std::ceil(static_cast<double>(bits()) * 0.30102999566398120)) + 1;
  }
  if (mpfr_zero_p(value_)) {
    return "0." + std::string(static_cast<std::size_t>(digits - 1), '0') + "e+00";
  }
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigReal pi(long bits) {
  BigReal out(bits);
  mpfr_const_pi(out.get(), kRnd);
  return out;
}

BigReal sqrt(const BigReal& x) {
  BigReal out(x.bits());
  mpfr_sqrt(out.get(), x.get(), kRnd);
  return out;
}

BigReal abs(const BigReal& x) {
  BigReal out(x.bits());
  mpfr_abs(out.get(), x.get(), kRnd);
  return out;
}

BigReal exp(const BigReal& x) {
  BigReal out(x.bits());
  mpfr_exp(out.get(), x.get(), kRnd);
  return out;
}

BigReal log2(const BigReal& x) {
  BigReal out(x.bits());
  mpfr_log2(out.get(), x.get(), kRnd);
  return out;
}

BigReal pow2(long exponent, long bits) {
  BigReal out(bits, 1L);
  mpfr_mul_2si(out.get(), out.get(), exponent, kRnd);
  return out;
}

BigReal hypot(const BigReal& x, const BigReal& y) {
  BigReal out(std::max(x.bits(), y.bits()));
  mpfr_hypot(out.get(), x.get(), y.get(), kRnd);
  return out;
}

BigReal max(const BigReal& x, const BigReal& y) {
  BigReal out(std::max(x.bits(), y.bits()));
  mpfr_max(out.get(), x.get(), y.get(), kRnd);
  return out;
}

BigComplex::BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {
  const long b = std::max(re_.bits(), im_.bits());
  if (re_.bits() < b) re_ = re_.with_bits(b);
  if (im_.bits() < b) im_ = im_.with_bits(b);
}

BigComplex::BigComplex(BigReal re) : re_(std::move(re)), im_(re_.bits()) {}

BigReal BigComplex::abs() const { return hypot(re_, im_); }

BigReal BigComplex::norm() const { return re_ * re_ + im_ * im_; }

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  BigReal re = re_ * rhs.re_ - im_ * rhs.im_;
  BigReal im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  const BigReal denom = rhs.norm();
  BigReal re = (re_ * rhs.re_ + im_ * rhs.im_) / denom;
  BigReal im = (im_ * rhs.re_ - re_ * rhs.im_) / denom;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigReal& rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

std::string BigComplex::to_string(int digits) const {
  const std::string im = im_.to_string(digits);
  return re_.to_string(digits) + (im.front() == '-' ? " - " + im.substr(1) : " + " + im) + "i";
}

BigComplex pow(const BigComplex& z, long n) {
  BigComplex result = BigComplex::real(z.bits(), 1);
  BigComplex base = n < 0 ? BigComplex::real(z.bits(), 1) / z : z;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

}  // namespace qrtrig::num
