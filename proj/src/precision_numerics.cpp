#include "qrtrig/precision_numerics.hpp"

#include <cmath>
#include <vector>

#include "qrtrig/errors.hpp"

namespace qrtrig::num {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;
constexpr long kGuardBits = 32;

Rational floor_rational(const Rational& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(fl);
}

// sin(pi*r), cos(pi*r) for r in [0, 2), folded to [0, 1/4] so both results
// keep full relative accuracy.
std::pair<BigReal, BigReal> sin_cos_pi(Rational r, long bits) {
  int sin_sign = 1, cos_sign = 1;
  bool swapped = false;
  if (r >= 1) {
    r -= 1;
    sin_sign = -sin_sign;
    cos_sign = -cos_sign;
  }
  if (r > Rational(1, 2)) {
    r = 1 - r;
    cos_sign = -cos_sign;
  }
  if (r > Rational(1, 4)) {
    r = Rational(1, 2) - r;
    swapped = true;
  }
  const long work = bits + kGuardBits;
  BigReal x = pi(work) * BigReal(work, r);
  BigReal s(work), c(work);
  mpfr_sin_cos(s.get(), c.get(), x.get(), kRnd);
  if (swapped) std::swap(s, c);
  if (sin_sign < 0) s = -s;
  if (cos_sign < 0) c = -c;
  return {s.with_bits(bits), c.with_bits(bits)};
}

// Exact values at multiples of pi/2, or nothing.
std::optional<std::pair<long, long>> exact_sin_cos(const Rational& r) {
  if (r == 0) return std::pair{0L, 1L};
  if (r == Rational(1, 2)) return std::pair{1L, 0L};
  if (r == 1) return std::pair{0L, -1L};
  if (r == Rational(3, 2)) return std::pair{-1L, 0L};
  return std::nullopt;
}

BigReal apply_kind(TrigKind kind, const BigReal& s, const BigReal& c, long bits) {
  const BigReal one(bits, 1L);
  switch (kind) {
    case TrigKind::Sin: return s;
    case TrigKind::Cos: return c;
    case TrigKind::Tan: return s / c;
    case TrigKind::Cot: return c / s;
    case TrigKind::Sec: return one / c;
    case TrigKind::Csc: return one / s;
  }
  throw InvalidArgument("unknown trig kind");
}

BigComplex apply_kind(TrigKind kind, const BigComplex& s, const BigComplex& c, long bits) {
  const BigComplex one = BigComplex::real(bits, 1);
  switch (kind) {
    case TrigKind::Sin: return s;
    case TrigKind::Cos: return c;
    case TrigKind::Tan: return s / c;
    case TrigKind::Cot: return c / s;
    case TrigKind::Sec: return one / c;
    case TrigKind::Csc: return one / s;
  }
  throw InvalidArgument("unknown trig kind");
}

bool pole_at(TrigKind kind, long sin_value, long cos_value) {
  switch (kind) {
    case TrigKind::Tan:
    case TrigKind::Sec: return cos_value == 0;
    case TrigKind::Cot:
    case TrigKind::Csc: return sin_value == 0;
    default: return false;
  }
}

}  // namespace

PiRational::PiRational(Rational q) : q_(std::move(q)) { q_.canonicalize(); }

Rational PiRational::reduced() const {
  return q_ - 2 * floor_rational(q_ / 2);
}

const char* to_string(TrigKind kind) {
  switch (kind) {
    case TrigKind::Sin: return "sin";
    case TrigKind::Cos: return "cos";
    case TrigKind::Tan: return "tan";
    case TrigKind::Cot: return "cot";
    case TrigKind::Sec: return "sec";
    case TrigKind::Csc: return "csc";
  }
  return "?";
}

BigReal trig_pi(const PiRational& angle, TrigKind kind, long bits) {
  const Rational r = angle.reduced();
  if (auto exact = exact_sin_cos(r)) {
    if (pole_at(kind, exact->first, exact->second)) {
      throw PoleError(std::string(to_string(kind)) + " has a pole at pi*" + angle.q().get_str());
    }
    return apply_kind(kind, BigReal(bits, exact->first), BigReal(bits, exact->second), bits);
  }
  auto [s, c] = sin_cos_pi(r, bits + kGuardBits);
  return apply_kind(kind, s, c, bits + kGuardBits).with_bits(bits);
}

BigComplex trig_pi(const PiComplex& angle, TrigKind kind, long bits) {
  if (angle.im == 0) return BigComplex(trig_pi(PiRational(angle.re), kind, bits));
  const long work = bits + kGuardBits;
  auto [s, c] = [&] {
    const Rational r = PiRational(angle.re).reduced();
    if (auto exact = exact_sin_cos(r)) {
      return std::pair{BigReal(work, exact->first), BigReal(work, exact->second)};
    }
    return sin_cos_pi(r, work);
  }();
  BigReal t = pi(work) * BigReal(work, angle.im);
  BigReal sh(work), ch(work);
  mpfr_sinh_cosh(sh.get(), ch.get(), t.get(), kRnd);
  const BigComplex sin_z(s * ch, c * sh);
  const BigComplex cos_z(c * ch, -(s * sh));
  return apply_kind(kind, sin_z, cos_z, work).with_bits(bits);
}

BigComplex trig_complex(const BigComplex& z, TrigKind kind, long bits) {
  if (kind != TrigKind::Sin && kind != TrigKind::Cos) {
    throw InvalidArgument("trig_complex supports sin and cos only");
  }
  const long work = bits + kGuardBits;
  BigReal s(work), c(work), sh(work), ch(work);
  mpfr_sin_cos(s.get(), c.get(), z.re().with_bits(work).get(), kRnd);
  mpfr_sinh_cosh(sh.get(), ch.get(), z.im().with_bits(work).get(), kRnd);
  if (kind == TrigKind::Sin) return BigComplex(s * ch, c * sh).with_bits(bits);
  return BigComplex(c * ch, -(s * sh)).with_bits(bits);
}

BigComplex root_of_unity(const Rational& turns, long bits) {
  const Rational r = PiRational(2 * turns).reduced();
  if (auto exact = exact_sin_cos(r)) {
    return BigComplex(BigReal(bits, exact->second), BigReal(bits, exact->first));
  }
  auto [s, c] = sin_cos_pi(r, bits);
  return BigComplex(std::move(c), std::move(s));
}

BigComplex root_of_unity(std::int64_t j, std::int64_t m, long bits) {
  if (m < 1) throw InvalidArgument("root_of_unity: order must be positive");
  const std::int64_t jr = nt::mod(j, m);
  return root_of_unity(Rational(Int(static_cast<long>(jr)), Int(static_cast<long>(m))), bits);
}

namespace {

void require_prime_coprime(std::int64_t p, std::int64_t a, const char* what) {
  if (!nt::is_odd_prime(p)) {
    throw InvalidArgument(std::string(what) + ": " + std::to_string(p) + " is not an odd prime");
  }
  if (nt::mod(a, p) == 0) {
    throw InvalidArgument(std::string(what) + ": p divides a");
  }
}

}  // namespace

BigComplex gauss_sum(std::int64_t p, std::int64_t a, long bits) {
  require_prime_coprime(p, a, "gauss_sum");
  const long work = bits + kGuardBits;
  const auto am = static_cast<std::uint64_t>(nt::mod(a, p));
  // Exponents repeat, so evaluate each residue class once.
  std::vector<int> multiplicity(static_cast<std::size_t>(p), 0);
  for (std::int64_t x = 0; x < p; ++x) {
    const auto e = nt::mul_mod(am, nt::mul_mod(x, x, p), p);
    ++multiplicity[e];
  }
  BigComplex sum(work);
  for (std::int64_t e = 0; e < p; ++e) {
    const int m = multiplicity[static_cast<std::size_t>(e)];
    if (m == 0) continue;
    sum += root_of_unity(e, p, work) * BigReal(work, static_cast<long>(m));
  }
  return sum.with_bits(bits);
}

BigComplex s_poly_eval(std::int64_t p, std::int64_t a, const BigComplex& x, long bits) {
  require_prime_coprime(p, a, "s_poly_eval");
  const long work = bits + kGuardBits;
  const BigComplex xw = x.with_bits(work);
  const auto am = static_cast<std::uint64_t>(nt::mod(a, p));
  BigComplex prod = BigComplex::real(work, 1);
  for (std::int64_t k = 1; k <= (p - 1) / 2; ++k) {
    const auto e = nt::mul_mod(am, nt::mul_mod(k, k, p), p);
    prod *= xw - root_of_unity(static_cast<std::int64_t>(e), p, work);
  }
  return prod.with_bits(bits);
}

BigComplex s_poly_minus_eval(std::int64_t p, const BigComplex& x, long bits) {
  require_prime_coprime(p, 1, "s_poly_minus_eval");
  const long work = bits + kGuardBits;
  const BigComplex xw = x.with_bits(work);
  const nt::ResidueTable table(p);
  BigComplex prod = BigComplex::real(work, 1);
  for (std::int64_t r = 1; r < p; ++r) {
    if (table.symbol(r) == -1) prod *= xw - root_of_unity(r, p, work);
  }
  return prod.with_bits(bits);
}

void PrecisionPolicy::validate() const {
  if (bits < BigReal::kMinBits) {
    throw InvalidArgument("precision must be at least 64 bits, got " + std::to_string(bits));
  }
  if (tolerance_bits && *tolerance_bits <= 0) {
    throw InvalidArgument("tolerance exponent must be positive");
  }
}

NearEqual near_equal(const BigComplex& u, const BigComplex& v, const PrecisionPolicy& policy) {
  const long bits = policy.bits;
  const BigComplex uw = u.with_bits(std::max(bits, u.bits()));
  const BigComplex vw = v.with_bits(std::max(bits, v.bits()));
  const BigReal diff = (uw - vw).abs();
  const BigReal scale = max(BigReal(bits, 1L), max(uw.abs(), vw.abs()));
  NearEqual out;
  out.residual = (diff / scale).with_bits(bits);
  out.equal = out.residual <= policy.tolerance();
  return out;
}

namespace {

Int reduced_numerator_bound(const Int& twice) {
  // numerator of twice/2 in lowest terms
  return mpz_even_p(twice.get_mpz_t()) ? Int(abs(twice) / 2) : Int(abs(twice));
}

}  // namespace

std::optional<QuadraticCoords> recognize_quadratic(const BigReal& v, std::int64_t d,
                                                   std::int64_t height_bound) {
  if (v.bits() < 192) {
    throw InvalidArgument("recognize_quadratic: need at least 192 bits, got " +
                          std::to_string(v.bits()));
  }
  if (d <= 1) throw InvalidArgument("recognize_quadratic: radicand must exceed 1");
  if (height_bound < 0) throw InvalidArgument("recognize_quadratic: negative height bound");
  const auto root = nt::isqrt(static_cast<std::uint64_t>(d));
  if (static_cast<std::int64_t>(root * root) == d) {
    throw InvalidArgument("recognize_quadratic: radicand must not be a square");
  }

  const long bits = v.bits();
  const BigReal tol = pow2(-(bits / 2), bits);
  const BigReal sd = sqrt(BigReal(bits, static_cast<long>(d)));
  const BigReal two_v = v * BigReal(bits, 2L);
  const Int H = static_cast<long>(height_bound);

  std::vector<QuadraticCoords> found;
  auto verify = [&](long B) {
    // A = round(2v - B sqrt(d)); accept if a + b sqrt(d) is within tolerance.
    BigReal w = two_v - sd * BigReal(bits, B);
    const Int A = w.round();
    if (reduced_numerator_bound(A) > H) return;
    BigReal cand = (BigReal(bits, A) + sd * BigReal(bits, B)) / BigReal(bits, 2L);
    if (abs(v - cand) < tol) {
      QuadraticCoords c{Rational(A, Int(2)), Rational(Int(B), Int(2))};
      c.a.canonicalize();
      c.b.canonicalize();
      found.push_back(c);
    }
  };

  const long Bmax = 2 * height_bound;
  const double mag = std::fabs(two_v.to_double()) + static_cast<double>(Bmax) * std::sqrt(static_cast<double>(d));
  const bool fast = mag < std::ldexp(1.0, 30);
  const long double two_v_ld = mpfr_get_ld(two_v.get(), MPFR_RNDN);
  const long double sd_ld = mpfr_get_ld(sd.get(), MPFR_RNDN);
  for (long B = -Bmax; B <= Bmax; ++B) {
    if ((B % 2 != 0) && std::labs(B) > height_bound) continue;
    if (fast) {
      const long double w = two_v_ld - static_cast<long double>(B) * sd_ld;
      long double f = w - static_cast<long double>(static_cast<std::int64_t>(w));
      if (f < 0) f += 1;
      if (f > 1e-6L && f < 1 - 1e-6L) continue;
    }
    verify(B);
    if (found.size() > 1) {
      throw AmbiguityError("recognize_quadratic: multiple candidates for sqrt(" +
                           std::to_string(d) + "); raise the precision");
    }
  }
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace qrtrig::num
