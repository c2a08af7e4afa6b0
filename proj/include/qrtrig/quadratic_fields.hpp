#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrtrig/number_theory.hpp"

namespace qrtrig::qf {

bool is_squarefree(std::int64_t n);

/// Exact element a + b*sqrt(d) of Q(sqrt(d)), d squarefree and nonzero.
class QuadElem {
 public:
  QuadElem(std::int64_t d, Rational a, Rational b = 0);

  static QuadElem one(std::int64_t d) { return QuadElem(d, 1, 0); }

  std::int64_t d() const { return d_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  Rational norm() const { return a_ * a_ - Rational(Int(static_cast<long>(d_))) * b_ * b_; }
  QuadElem conj() const { return QuadElem(d_, a_, -b_); }
  QuadElem inverse() const;
  /// Sign of a + b*sqrt(d) as a real number; requires d > 0.
  int real_sign() const;

  std::string to_string() const;

  friend bool operator==(const QuadElem&, const QuadElem&) = default;

 private:
  std::int64_t d_;
  Rational a_;
  Rational b_;
};

QuadElem quad_mul(const QuadElem& x, const QuadElem& y);
QuadElem quad_pow(const QuadElem& x, std::uint64_t n);
/// x^n for any integer n; negative powers go through the exact inverse.
QuadElem quad_pow_signed(const QuadElem& x, std::int64_t n);
inline QuadElem operator*(const QuadElem& x, const QuadElem& y) { return quad_mul(x, y); }

/// Fundamental unit of Q(sqrt(p)) with its norm and class-number data.
struct UnitData {
  std::int64_t p = 0;
  QuadElem unit{5, 1};
  int norm = 0;
  std::int64_t h_real = 0;
  /// Coordinates of unit^h_real.
  Rational a_p;
  Rational b_p;
};

struct StData {
  std::int64_t p = 0;
  Int s;
  Int t;
};

struct BinaryForm {
  Int a, b, c;
  Int discriminant() const { return b * b - 4 * a * c; }
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

struct PellSolution {
  Int x;
  Int y;
};

/// disc Q(sqrt(-p)): -p if p = 3 (mod 4), else -4p.
std::int64_t imag_field_discriminant(std::int64_t p);
/// disc Q(sqrt(p)): p if p = 1 (mod 4), else 4p.
std::int64_t real_field_discriminant(std::int64_t p);
bool is_fundamental_discriminant(std::int64_t D);

/// Smallest unit > 1 of the ring of integers of Q(sqrt(p)), plus its norm.
std::pair<QuadElem, int> fundamental_unit_of(std::int64_t p);
UnitData fundamental_unit(std::int64_t p);

std::vector<BinaryForm> reduced_forms_definite(std::int64_t D);
std::vector<BinaryForm> reduced_forms_indefinite(std::int64_t D);
/// Successor of a reduced indefinite form in its cycle.
BinaryForm rho(const BinaryForm& f, std::int64_t D);

std::int64_t class_number_imag(std::int64_t D);
/// Narrow class number of a positive fundamental discriminant (cycle count).
std::int64_t narrow_class_number(std::int64_t D);
std::int64_t class_number_real(std::int64_t p);

StData st_values(std::int64_t p);
StData st_values(const UnitData& unit);

/// Least (x, y) in positive integers, minimal y, with A x^2 + B = p y^2.
std::optional<PellSolution> pell_like_solve(std::int64_t A, std::int64_t B,
                                            std::int64_t p, std::int64_t y_bound);

/// The unique positive (x, y) with 16 x^2 + 3 y^2 = p, p = 19 (mod 24).
std::pair<std::int64_t, std::int64_t> represent_16x2_3y2(std::int64_t p);

}  // namespace qrtrig::qf
