#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "qrtrig/errors.hpp"
#include "qrtrig/exact_form.hpp"
#include "qrtrig/number_theory.hpp"
#include "qrtrig/precision_numerics.hpp"

using namespace qrtrig;
using namespace qrtrig::num;

namespace {

constexpr long kBits = 256;

bool close(const BigReal& x, double want, double tol = 1e-15) { return std::abs(x.to_double() - want) <= tol; }

bool close(const BigComplex& z, oracle::cld want, double tol = 1e-12) {
  const double scale = std::max(1.0, static_cast<double>(std::abs(want)));
  return std::abs(z.re().to_double() - static_cast<double>(want.real())) <= tol * scale &&
         std::abs(z.im().to_double() - static_cast<double>(want.imag())) <= tol * scale;
}

BigComplex cplx(double re, double im) {
  return BigComplex(BigReal(kBits, std::to_string(re)), BigReal(kBits, std::to_string(im)));
}

}  // namespace

TEST_CASE("BigReal basics") {
  BigReal a(kBits, 3L), b(kBits, Rational(1, 4));
  CHECK((a + b).to_double() == 3.25);
  CHECK((a * b).bits() == kBits);
  CHECK((BigReal(64, 1L) + BigReal(512, 1L)).bits() == 512);
  CHECK(BigReal(kBits, std::string("2.5")).round() == 3);
  CHECK(BigReal(kBits, std::string("-2.5")).round() == -3);
  CHECK(BigReal(kBits, 0L).to_string(3) == "0.00e+00");
  CHECK_THROWS(BigReal(10));
}

TEST_CASE("trig at exact rational angles") {
  CHECK(trig_pi(Rational(1, 2), TrigKind::Sin, kBits) == BigReal(kBits, 1L));
  CHECK(close(trig_pi(Rational(1, 3), TrigKind::Cos, kBits), 0.5));
  const BigReal want = (sqrt(BigReal(kBits, 5L)) - BigReal(kBits, 1L)) / BigReal(kBits, 4L);
  CHECK(abs(trig_pi(Rational(2, 5), TrigKind::Cos, kBits) - want) < pow2(-250, kBits));
  CHECK_THROWS_AS(trig_pi(Rational(1, 2), TrigKind::Tan, kBits), PoleError);
  CHECK_THROWS_AS(trig_pi(Rational(1), TrigKind::Cot, kBits), PoleError);
  CHECK_THROWS_AS(trig_pi(Rational(3, 2), TrigKind::Sec, kBits), PoleError);
  CHECK_THROWS_AS(trig_pi(Rational(-2), TrigKind::Csc, kBits), PoleError);
  // Reduction happens on the rational: a huge numerator still lands exactly.
  CHECK(close(trig_pi(Rational(Int("100000000000000000000001"), Int(3)), TrigKind::Cos, kBits), 0.5));
}

TEST_CASE("Pythagorean identity on random rationals") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 10000);
  const BigReal tol = pow2(-kBits + 8, kBits);
  for (int i = 0; i < 1000; ++i) {
    const Rational q(num(rng), den(rng));
    const BigReal s = trig_pi(q, TrigKind::Sin, kBits);
    const BigReal c = trig_pi(q, TrigKind::Cos, kBits);
    REQUIRE(abs(s * s + c * c - BigReal(kBits, 1L)) <= tol);
  }
}

TEST_CASE("complex trig") {
  const BigComplex zero(kBits);
  CHECK(trig_complex(zero, TrigKind::Sin, kBits).re().is_zero());
  CHECK(trig_complex(zero, TrigKind::Cos, kBits).re() == BigReal(kBits, 1L));
  CHECK(close(trig_complex(BigComplex::i(kBits), TrigKind::Cos, kBits).re(), 1.5430806348152437));
  const PiComplex z{Rational(1, 7), Rational(1, 3)};
  const auto want = std::tan(oracle::kPi * oracle::cld(1.0L / 7, 1.0L / 3));
  CHECK(close(trig_pi(z, TrigKind::Tan, kBits), want));
}

TEST_CASE("roots of unity") {
  const auto i = root_of_unity(1, 4, kBits);
  CHECK(i.re().is_zero());
  CHECK(i.im() == BigReal(kBits, 1L));
  const auto w = root_of_unity(1, 3, kBits);
  CHECK(close(w, oracle::cld(-0.5L, std::sqrt(3.0L) / 2)));
  CHECK(root_of_unity(5, 5, kBits).re() == BigReal(kBits, 1L));
  PrecisionPolicy policy;
  for (std::int64_t m = 1; m <= 24; ++m) {
    for (std::int64_t j = -m; j <= m; ++j) {
      for (std::int64_t k = 0; k < m; k += 3) {
        REQUIRE(near_equal(root_of_unity(j, m, kBits) * root_of_unity(k, m, kBits), root_of_unity(j + k, m, kBits),
                           policy)
                    .equal);
      }
    }
  }
}

TEST_CASE("Gauss sums") {
  CHECK(close(gauss_sum(3, 1, kBits), oracle::cld(0, std::sqrt(3.0L))));
  CHECK(close(gauss_sum(5, 1, kBits), oracle::cld(std::sqrt(5.0L), 0)));
  CHECK(close(gauss_sum(5, 2, kBits), oracle::cld(-std::sqrt(5.0L), 0)));
  CHECK_THROWS_AS(gauss_sum(5, 10, kBits), InvalidArgument);
  PrecisionPolicy policy;
  for (auto p : oracle::primes(3, 199)) {
    for (std::int64_t a : {1, 2, 3}) {
      if (a % p == 0) continue;
      const auto g = gauss_sum(p, a, kBits);
      const BigReal root = sqrt(BigReal(kBits, static_cast<long>(p)));
      const int chi = nt::jacobi(a, p);
      BigComplex want = p % 4 == 1 ? BigComplex(root) : BigComplex(BigReal(kBits, 0L), root);
      want *= BigReal(kBits, static_cast<long>(chi));
      REQUIRE_MESSAGE(near_equal(g, want, policy).equal, "p=" << p << " a=" << a);
      REQUIRE(close(g, oracle::gauss_sum(p, a), 1e-10));
    }
  }
}

TEST_CASE("S_p evaluation") {
  const auto v = s_poly_eval(5, 1, BigComplex::real(kBits, 1), kBits);
  CHECK(close(v, oracle::cld((5 - std::sqrt(5.0L)) / 2, 0)));
  const auto s79 = s_poly_eval(79, 1, BigComplex::i(kBits), kBits);
  const auto lhs = (BigComplex::i(kBits) - BigComplex::real(kBits, 1)) * s79;
  const BigReal want = BigReal(kBits, 1431L) - BigReal(kBits, 161L) * sqrt(BigReal(kBits, 79L));
  CHECK(near_equal(lhs, BigComplex(want), PrecisionPolicy{}).equal);
  const auto s3 = s_poly_eval(3, 1, BigComplex(kBits), kBits);
  CHECK(near_equal(s3, -root_of_unity(1, 3, kBits), PrecisionPolicy{}).equal);
  for (auto p : {7, 13, 31, 101}) {
    for (std::int64_t a : {1, 2, 5}) {
      const oracle::cld x(0.3L, -1.7L);
      REQUIRE(close(s_poly_eval(p, a, cplx(0.3, -1.7), kBits), oracle::s_poly(p, a, x), 1e-9));
    }
  }
}

TEST_CASE("complementary product") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-2, 2);
  PrecisionPolicy policy;
  for (auto p : oracle::primes(3, 101)) {
    for (int i = 0; i < 4; ++i) {
      auto x = cplx(coord(rng), coord(rng));
      if (std::abs(x.abs().to_double() - 1) < 0.05) continue;
      const auto lhs = s_poly_eval(p, 1, x, kBits) * s_poly_minus_eval(p, x, kBits);
      const auto one = BigComplex::real(kBits, 1);
      const auto rhs = (pow(x, p) - one) / (x - one);
      REQUIRE(near_equal(lhs, rhs, policy).equal);
    }
  }
}

TEST_CASE("doubling the precision moves values less than the tolerance") {
  for (auto p : {13, 79, 227}) {
    const PrecisionPolicy policy;
    const auto lo = s_poly_eval(p, 1, root_of_unity(1, 3, policy.bits), policy.bits);
    const auto hi = s_poly_eval(p, 1, root_of_unity(1, 3, 2 * policy.bits), 2 * policy.bits);
    REQUIRE(near_equal(lo.with_bits(2 * policy.bits), hi, policy).equal);
    REQUIRE(near_equal(gauss_sum(p, 2, policy.bits).with_bits(2 * policy.bits), gauss_sum(p, 2, 2 * policy.bits),
                       policy)
                .equal);
  }
}

TEST_CASE("near_equal") {
  const PrecisionPolicy policy;
  const BigComplex one = BigComplex::real(kBits, 1);
  CHECK(near_equal(one, one + BigComplex(pow2(-200, kBits)), policy).equal);
  CHECK_FALSE(near_equal(BigComplex(kBits), BigComplex(BigReal(kBits, std::string("1e-10"))), policy).equal);
  const BigComplex big(BigReal(kBits, 1000000L));
  // Relative rule: an absolute gap of 1e-34 is far above 2^-128 but passes at scale 1e6.
  CHECK(near_equal(big, big + BigComplex(BigReal(kBits, std::string("1e-34"))), policy).equal);
  CHECK_FALSE(near_equal(BigComplex(kBits), BigComplex(BigReal(kBits, std::string("1e-34"))), policy).equal);
  // 1e-30 at scale 1e6 is a relative gap of 1e-36 > 2^-128.
  CHECK_FALSE(near_equal(big, big + BigComplex(BigReal(kBits, std::string("1e-30"))), policy).equal);
  const auto r = near_equal(one, BigComplex::real(kBits, 2), policy);
  CHECK_FALSE(r.equal);
  CHECK(close(r.residual, 0.5));
  PrecisionPolicy bad;
  bad.bits = 32;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  CHECK(policy.escalated().bits == 512);
  CHECK(policy.escalated().tolerance_exponent() == 128);
  CHECK_FALSE(policy.escalated().escalate);
}

TEST_CASE("quadratic recognition") {
  const BigReal v = BigReal(kBits, 1431L) - BigReal(kBits, 161L) * sqrt(BigReal(kBits, 79L));
  auto r = recognize_quadratic(v, 79, 1'000'000);
  REQUIRE(r);
  CHECK(r->a == 1431);
  CHECK(r->b == -161);
  r = recognize_quadratic(BigReal(kBits, Rational(1, 2)), 5, 1'000'000);
  REQUIRE(r);
  CHECK(r->a == Rational(1, 2));
  CHECK(r->b == 0);
  r = recognize_quadratic((BigReal(kBits, 5L) - sqrt(BigReal(kBits, 5L))) / BigReal(kBits, 2L), 5, 1'000'000);
  REQUIRE(r);
  CHECK(r->a == Rational(5, 2));
  CHECK(r->b == Rational(-1, 2));
  CHECK_FALSE(recognize_quadratic(pi(kBits), 5, 1000));
}

TEST_CASE("exact forms") {
  const auto f = ExactForm::root(Rational(1, 3)) * ExactForm::sqrt_of(3, 1338106) +
                 ExactForm::root(Rational(1, 3)) * ExactForm::sqrt_of(227, -153829);
  CHECK(f.turn() == Rational(1, 3));
  CHECK(f.terms().size() == 2);
  CHECK(ExactForm::sqrt_of(12) == ExactForm::sqrt_of(3, 2));
  CHECK((ExactForm::sqrt_of(3) * ExactForm::sqrt_of(3)) == ExactForm::integer(3));
  CHECK(power_of_two(-2) == ExactForm::rational(Rational(1, 4)));
  CHECK(sign_power(3).evaluate(kBits).re() == BigReal(kBits, -1L));
  CHECK(sign_power(4).evaluate(kBits).re() == BigReal(kBits, 1L));
  const auto v = (ExactForm::sqrt_of(79) - ExactForm::sqrt_of(3, 5)).evaluate(kBits);
  CHECK(close(v.re(), std::sqrt(79.0) - 5 * std::sqrt(3.0), 1e-12));
}
