#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "qrtrig/big_real.hpp"
#include "qrtrig/number_theory.hpp"

namespace qrtrig::num {

/// An angle pi*q with q an exact rational.
class PiRational {
 public:
  PiRational(Rational q = 0);  // NOLINT: implicit from rationals is intended
  const Rational& q() const { return q_; }
  /// q reduced to [0, 2), exactly.
  Rational reduced() const;

 private:
  Rational q_;
};

/// pi*(re + i*im) with both coordinates exact rationals.
struct PiComplex {
  Rational re;
  Rational im;
};

enum class TrigKind { Sin, Cos, Tan, Cot, Sec, Csc };

const char* to_string(TrigKind kind);

BigReal trig_pi(const PiRational& angle, TrigKind kind, long bits);
BigComplex trig_pi(const PiComplex& angle, TrigKind kind, long bits);

/// sin or cos of an arbitrary complex number, through the exponential form.
BigComplex trig_complex(const BigComplex& z, TrigKind kind, long bits);

/// e^{2 pi i j / m}, j reduced mod m exactly.
BigComplex root_of_unity(std::int64_t j, std::int64_t m, long bits);
/// e^{2 pi i t} for a rational number of turns t.
BigComplex root_of_unity(const Rational& turns, long bits);

/// sum_{x=0}^{p-1} e^{2 pi i a x^2 / p} by direct summation.
BigComplex gauss_sum(std::int64_t p, std::int64_t a, long bits);

/// prod_{k=1}^{(p-1)/2} (x - e^{2 pi i a k^2 / p}).
BigComplex s_poly_eval(std::int64_t p, std::int64_t a, const BigComplex& x, long bits);

/// prod over the quadratic non-residues r in [1, p-1] of (x - e^{2 pi i r / p}).
BigComplex s_poly_minus_eval(std::int64_t p, const BigComplex& x, long bits);

/// Tolerance rule shared by every numeric comparison: pass iff
/// |u - v| <= 2^-tolerance_bits * max(1, |u|, |v|), with tolerance_bits
/// defaulting to bits/2 and one retry at twice the precision.
struct PrecisionPolicy {
  long bits = 256;
  std::optional<long> tolerance_bits;
  bool escalate = true;

  long tolerance_exponent() const { return tolerance_bits.value_or(bits / 2); }
  BigReal tolerance() const { return pow2(-tolerance_exponent(), bits); }
  /// The retry policy: double precision, same tolerance, no further retry.
  PrecisionPolicy escalated() const {
    return PrecisionPolicy{bits * 2, tolerance_exponent(), false};
  }
  void validate() const;
};

struct NearEqual {
  bool equal = false;
  /// |u - v| / max(1, |u|, |v|).
  BigReal residual;
};

NearEqual near_equal(const BigComplex& u, const BigComplex& v, const PrecisionPolicy& policy);

/// Coordinates (a, b) of a + b*sqrt(d).
struct QuadraticCoords {
  Rational a;
  Rational b;
};

/// Finds the unique a + b*sqrt(d) with 2a, 2b integers, reduced numerators
/// bounded by height_bound, within 2^-(bits/2) of v. Throws AmbiguityError if
/// two candidates qualify.
std::optional<QuadraticCoords> recognize_quadratic(const BigReal& v, std::int64_t d,
                                                  std::int64_t height_bound);

}  // namespace qrtrig::num
