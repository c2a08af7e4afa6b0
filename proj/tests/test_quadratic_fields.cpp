#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "qrtrig/errors.hpp"
#include "qrtrig/number_theory.hpp"
#include "qrtrig/quadratic_fields.hpp"

using namespace qrtrig;
using qf::QuadElem;

TEST_CASE("quadratic arithmetic examples") {
  CHECK(QuadElem(3, 2, 1) * QuadElem(3, 2, -1) == QuadElem::one(3));
  const QuadElem phi(5, Rational(1, 2), Rational(1, 2));
  CHECK(phi * phi == QuadElem(5, Rational(3, 2), Rational(1, 2)));
  CHECK(qf::quad_pow(phi, 2) == QuadElem(5, Rational(3, 2), Rational(1, 2)));
  const QuadElem e79(79, 80, 9);
  CHECK(e79 * e79 == QuadElem(79, 12799, 1440));
  CHECK(qf::quad_pow(e79, 3) == QuadElem(79, 2047760, 230391));
  CHECK(qf::quad_pow(e79, 0) == QuadElem::one(79));
  CHECK(qf::quad_pow_signed(e79, -1) == QuadElem(79, 80, -9));
  CHECK_THROWS_AS(QuadElem(3, 1, 1) * QuadElem(5, 1, 1), InvalidArgument);
}

TEST_CASE("norm is multiplicative") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-1000, 1000), den(1, 40);
  for (std::int64_t d : {2, 3, 5, 79, 997, -1, -3, -79}) {
    for (int i = 0; i < 200; ++i) {
      const QuadElem x(d, Rational(coef(rng), den(rng)), Rational(coef(rng), den(rng)));
      const QuadElem y(d, Rational(coef(rng), den(rng)), Rational(coef(rng), den(rng)));
      REQUIRE((x * y).norm() == x.norm() * y.norm());
    }
  }
}

TEST_CASE("fundamental units") {
  auto u79 = qf::fundamental_unit_of(79);
  CHECK(u79.first == QuadElem(79, 80, 9));
  CHECK(u79.second == 1);
  auto u5 = qf::fundamental_unit_of(5);
  CHECK(u5.first == QuadElem(5, Rational(1, 2), Rational(1, 2)));
  CHECK(u5.second == -1);
  auto u13 = qf::fundamental_unit_of(13);
  CHECK(u13.first == QuadElem(13, Rational(3, 2), Rational(1, 2)));
  CHECK(u13.second == -1);
}

TEST_CASE("fundamental unit matches brute-force minimal unit for p <= 50") {
  for (auto p : oracle::primes(3, 50)) {
    const auto [x, y, den, norm] = oracle::brute_unit(p);
    const auto [unit, n] = qf::fundamental_unit_of(p);
    REQUIRE_MESSAGE(unit == QuadElem(p, Rational(x, den), Rational(y, den)), "p=" << p);
    REQUIRE(n == norm);
  }
}

TEST_CASE("norm law for p = 1 mod 4") {
  for (auto p : oracle::primes(5, 500)) {
    if (p % 4 != 1) continue;
    const auto u = qf::fundamental_unit(p);
    REQUIRE(u.norm == -1);
    if (u.h_real % 2 == 1) {
      REQUIRE(u.a_p * u.a_p - Rational(static_cast<long>(p)) * u.b_p * u.b_p == -1);
    }
  }
}

TEST_CASE("imaginary class numbers") {
  CHECK(qf::class_number_imag(-79) == 5);
  CHECK(qf::class_number_imag(-4) == 1);
  CHECK(qf::class_number_imag(-52) == 2);
  CHECK(qf::reduced_forms_definite(-52).size() == 2);
  for (std::int64_t D = -3; D >= -3000; --D) {
    if (!qf::is_fundamental_discriminant(D)) continue;
    REQUIRE_MESSAGE(qf::class_number_imag(D) == oracle::class_number_forms(D), "D=" << D);
    if (D < -4) REQUIRE(qf::class_number_imag(D) == oracle::class_number_dirichlet(D));
  }
}

TEST_CASE("real class numbers") {
  CHECK(qf::class_number_real(79) == 3);
  CHECK(qf::class_number_real(5) == 1);
  CHECK(qf::class_number_real(13) == 1);
  for (auto p : oracle::primes(3, 50)) {
    REQUIRE_MESSAGE(qf::class_number_real(p) == oracle::class_number_real_analytic(p), "p=" << p);
  }
}

TEST_CASE("class number cross-oracles") {
  for (auto p : oracle::primes(5, 2000)) {
    if (p % 4 != 1) continue;
    REQUIRE(qf::class_number_imag(qf::imag_field_discriminant(p)) == 2 * nt::char_sum_interval(p, Rational(1, 4)));
    REQUIRE(qf::class_number_imag(-3 * p) ==
            2 * nt::char_sum_interval(p, Rational(1, 3)));
  }
}

TEST_CASE("2 a_p = -2 ((p-1)/2)! mod p") {
  for (auto p : oracle::primes(5, 2000)) {
    if (p % 4 != 1) continue;
    const auto u = qf::fundamental_unit(p);
    const Rational two_a = 2 * u.a_p;
    REQUIRE(two_a.get_den() == 1);
    const Int lhs = two_a.get_num() + 2 * nt::half_factorial_mod(p);
    REQUIRE(Int(lhs % p) == 0);
  }
}

TEST_CASE("s_p and t_p") {
  const auto s79 = qf::st_values(79);
  CHECK(s79.s == 1431);
  CHECK(s79.t == 161);
  const auto s7 = qf::st_values(7);
  CHECK(s7.s == 3);
  CHECK(s7.t == 1);
  const auto s3 = qf::st_values(3);
  CHECK(s3.s == 1);
  CHECK(s3.t == 1);
  CHECK_THROWS_AS(qf::st_values(13), InvalidArgument);
  for (auto p : oracle::primes(3, 500)) {
    if (p % 4 != 3) continue;
    const auto u = qf::fundamental_unit(p);
    const Int pi(static_cast<long>(p));
    REQUIRE(u.a_p * u.a_p - Rational(pi) * u.b_p * u.b_p == 1);
    const auto st = qf::st_values(u);
    REQUIRE(Int(st.s * st.s - pi * st.t * st.t) == 2 * nt::jacobi(2, p));
  }
}

TEST_CASE("Pell-type equations") {
  auto s = qf::pell_like_solve(3, 1, 13, 100);
  REQUIRE(s);
  CHECK(s->x == 2);
  CHECK(s->y == 1);
  s = qf::pell_like_solve(3, 4, 79, 100);
  REQUIRE(s);
  CHECK(s->x == 5);
  CHECK(s->y == 1);
  CHECK_FALSE(qf::pell_like_solve(3, 1, 997, 1000));
  for (auto p : oracle::primes(5, 500)) {
    const auto got = qf::pell_like_solve(3, 1, p, 300);
    const auto want = oracle::pell(3, 1, p, 300);
    REQUIRE(got.has_value() == want.has_value());
    if (got) {
      REQUIRE(got->x == want->first);
      REQUIRE(got->y == want->second);
    }
  }
}

TEST_CASE("Pell-type solution of Example 5.2") {
  const auto s = qf::pell_like_solve(3, 1, 997, 20'000'000);
  REQUIRE(s);
  CHECK(s->x == Int(318334327));
  CHECK(s->y == Int(17462102));
}

TEST_CASE("p = (4x)^2 + 3y^2") {
  CHECK(qf::represent_16x2_3y2(19) == std::pair<std::int64_t, std::int64_t>{1, 1});
  CHECK(qf::represent_16x2_3y2(43) == std::pair<std::int64_t, std::int64_t>{1, 3});
  CHECK(qf::represent_16x2_3y2(67) == std::pair<std::int64_t, std::int64_t>{2, 1});
  for (auto p : oracle::primes(19, 1000)) {
    if (p % 24 != 19) continue;
    const auto [x, y] = qf::represent_16x2_3y2(p);
    REQUIRE(16 * x * x + 3 * y * y == p);
  }
}
