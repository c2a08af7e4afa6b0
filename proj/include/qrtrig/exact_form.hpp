#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrtrig/big_real.hpp"
#include "qrtrig/number_theory.hpp"
#include "qrtrig/quadratic_fields.hpp"

namespace qrtrig {

struct SqrtTerm {
  Rational coeff;
  std::int64_t radicand = 1;  // squarefree, >= 1
  friend bool operator==(const SqrtTerm&, const SqrtTerm&) = default;
};

/// e^{2 pi i * turn} * sum_k coeff_k * sqrt(radicand_k), with rational
/// coefficients and squarefree radicands. Closed forms such as
/// i*omega*(1338106 sqrt(3) - 153829 sqrt(227)) or 2^{(p-1)/4} eps^{-3h}
/// live here before they are evaluated numerically.
class ExactForm {
 public:
  ExactForm() = default;

  static ExactForm rational(const Rational& q);
  static ExactForm integer(long v) { return rational(Rational(v)); }
  static ExactForm sqrt_of(std::int64_t n, const Rational& coeff = 1);
  static ExactForm from_quad(const qf::QuadElem& x);
  /// e^{2 pi i * turns}.
  static ExactForm root(const Rational& turns);

  const Rational& turn() const { return turn_; }
  const std::vector<SqrtTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ExactForm& operator*=(const ExactForm& rhs);
  ExactForm& operator+=(const ExactForm& rhs);
  ExactForm operator-() const;
  friend ExactForm operator*(ExactForm x, const ExactForm& y) { return x *= y; }
  friend ExactForm operator+(ExactForm x, const ExactForm& y) { return x += y; }
  friend ExactForm operator-(ExactForm x, const ExactForm& y) { return x += -y; }
  friend bool operator==(const ExactForm&, const ExactForm&) = default;

  /// Numeric value, with enough guard bits to absorb cancellation between
  /// large terms.
  num::BigComplex evaluate(long bits) const;
  std::string to_string() const;

 private:
  void normalize();

  Rational turn_{0};
  std::vector<SqrtTerm> terms_;
};

/// (-1)^e as an exact form.
ExactForm sign_power(std::int64_t e);
/// 2^e for any integer e.
ExactForm power_of_two(std::int64_t e);

}  // namespace qrtrig
