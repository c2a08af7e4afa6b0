#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "qrtrig/errors.hpp"
#include "qrtrig/identity_catalog.hpp"

using namespace qrtrig;
using namespace qrtrig::catalog;

namespace {

CheckParams at_n(std::int64_t n) {
  CheckParams p;
  p.n = n;
  return p;
}

CheckParams at_p(std::int64_t p, std::optional<std::int64_t> a = std::nullopt) {
  CheckParams c;
  c.p = p;
  c.a = a;
  return c;
}

RationalComplex rc(Rational re, Rational im = 0) { return {std::move(re), std::move(im)}; }

const num::BigComplex& numeric(const Value& v) { return std::get<num::BigComplex>(v); }

oracle::cld to_cld(const num::BigComplex& z) { return {z.re().to_double(), z.im().to_double()}; }

oracle::cld to_cld(const RationalComplex& z) { return {z.re.get_d(), z.im.get_d()}; }

bool near(oracle::cld got, oracle::cld want, double tol = 1e-9) {
  return std::abs(got - want) <= tol * std::max<oracle::ld>(1, std::abs(want));
}

}  // namespace

TEST_CASE("catalog listing") {
  const auto& all = list_identities();
  CHECK(all.size() == 47);
  CHECK(std::is_sorted(all.begin(), all.end(), [](auto& a, auto& b) { return a.id < b.id; }));
  std::set<std::string> ids;
  for (const auto& d : all) {
    ids.insert(d.id);
    CHECK_FALSE(d.anchor.empty());
    CHECK_FALSE(d.statement.empty());
  }
  CHECK(ids.size() == all.size());
  CHECK_THROWS_AS(lookup("no-such-id"), NotFound);
  CHECK(lookup("secant").kind == CheckKind::ExactInteger);
  CHECK(lookup("wc").kind == CheckKind::Congruence);
  CHECK(std::string(to_string(CheckKind::NumericComplex)) == "numeric-complex");
}

TEST_CASE("catalog examples") {
  auto r = check("secant", at_n(3));
  CHECK(r.pass);
  CHECK(std::get<Rational>(r.rhs) == 9);
  CHECK(near(to_cld(numeric(r.lhs)), 9));

  r = check("sincos0", at_n(5));
  CHECK(r.pass);
  CHECK(std::get<Rational>(r.rhs) == Rational(5, 2));

  r = check("cosp", at_p(7));
  CHECK(r.pass);
  CHECK(std::get<Rational>(r.rhs) == -2);

  r = check("cot2_sum", at_n(5));
  CHECK(r.pass);
  CHECK(std::get<Rational>(r.rhs) == 4);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(check("secant", at_n(4)), InvalidArgument);
  CHECK_THROWS_AS(check("secant", at_n(0)), InvalidArgument);
  CHECK_THROWS_AS(check("secant", at_p(7)), InvalidArgument);
  CHECK_THROWS_AS(check("cosp", at_p(13)), InvalidArgument);
  CHECK_THROWS_AS(check("cosp", at_p(15)), InvalidArgument);
  CHECK_THROWS_AS(check("tan43", at_p(7, 14)), InvalidArgument);
  CheckParams bad = at_n(5);
  bad.x = rc(Rational(1, 2));
  CHECK_THROWS_AS(check("csc", bad), InvalidArgument);
  bad.x = rc(Rational(1, 2) + Rational(1, 1000));
  CHECK_THROWS_AS(check("csc", bad), InvalidArgument);
  bad.x = rc(Rational(1, 3));
  CHECK_NOTHROW(check("csc", bad));
  CheckParams missing = at_n(5);
  CHECK_THROWS_AS(check("sin2d", missing), InvalidArgument);
}

TEST_CASE("sampling is deterministic and respects exclusions") {
  for (const auto& d : list_identities()) {
    REQUIRE(sample_params(d.id, 42, 10) == sample_params(d.id, 42, 10));
  }
  CHECK_FALSE(sample_params("sin2d", 1, 10) == sample_params("sin2d", 2, 10));
  const auto csc = sample_params("csc", 1, 10);
  CHECK(csc.size() == 10);
  for (const auto& p : csc) {
    REQUIRE(p.x);
    for (const auto& ex : lookup("csc").excluded) REQUIRE(ex.distance(p) >= kExclusionMargin);
    REQUIRE(abs(p.x->im) <= kImagCap);
  }
  for (const auto& p : sample_params_at("mix2d", 37, 3, 25)) {
    REQUIRE(*p.n == 37);
    for (const auto& ex : lookup("mix2d").excluded) REQUIRE(ex.distance(p) >= kExclusionMargin);
  }
  for (const auto& p : sample_params("tan5", 9, 20)) REQUIRE(*p.p % 8 == 5);
}

TEST_CASE("numeric sides agree with direct long double sums") {
  for (std::int64_t n = 1; n <= 41; n += 2) {
    REQUIRE(near(to_cld(numeric(check("secant", at_n(n)).lhs)), oracle::sec2_sum(n)));
  }
  for (std::int64_t n = 1; n <= 60; ++n) {
    REQUIRE(near(to_cld(numeric(check("cot2_sum", at_n(n)).lhs)), oracle::cot_power_sum(n, 2)));
    REQUIRE(near(to_cld(numeric(check("cot4_sum", at_n(n)).lhs)), oracle::cot_power_sum(n, 4)));
  }
  for (const auto& p : sample_params("cot_sum", 3, 20)) {
    const auto r = check("cot_sum", p);
    REQUIRE(near(to_cld(numeric(r.lhs)), oracle::cot_mean(*p.n, to_cld(*p.x)), 1e-7));
  }
  for (const auto& p : sample_params_at("sin2d", 9, 4, 5)) {
    const auto r = check("sin2d", p);
    REQUIRE(near(to_cld(numeric(r.lhs)), oracle::sin2d_sum(9, to_cld(*p.x), to_cld(*p.y)), 1e-7));
  }
  for (std::int64_t p : {7, 11, 19, 23}) {
    for (std::int64_t a : {1, 2, 3}) {
      const auto r = check("tan43", at_p(p, a));
      REQUIRE(near(to_cld(numeric(r.lhs)), oracle::tan_product(p, a)));
    }
  }
}

TEST_CASE("numeric identities hold on seeded samples") {
  for (const char* id : {"csc2", "sin_product", "cot_sum", "sincos", "minus_sincos", "csc", "sec", "sin2d", "cos2d",
                         "mix2d", "cot_prod", "tan_prod"}) {
    for (std::int64_t n : {1, 3, 15, 31}) {
      for (const auto& p : sample_params_at(id, n, 2024, 5)) {
        const auto r = check(id, p);
        REQUIRE_MESSAGE(r.pass, id << " " << p.to_string() << " residual " << r.residual.to_string(6));
        REQUIRE(r.residual <= num::pow2(-128, 256));
      }
    }
  }
}

TEST_CASE("exact right-hand sides for small parameters") {
  for (const char* id : {"secant", "sincos0", "minus_sincos0", "sec0a", "sec0b", "mix0", "mix1", "cos0", "cos1"}) {
    for (std::int64_t n = 1; n <= 31; n += 2) {
      const auto r = check(id, at_n(n));
      REQUIRE_MESSAGE(r.pass, id << " n=" << n);
    }
  }
  for (std::int64_t n = 1; n <= 60; ++n) {
    REQUIRE(check("cot2_sum", at_n(n)).pass);
    REQUIRE(check("cot4_sum", at_n(n)).pass);
    Rational want((n - 1) * (n - 2) * (n * n + 3 * n - 13), 45);
    want.canonicalize();
    REQUIRE(std::get<Rational>(check("cot4_sum", at_n(n)).rhs) == want);
  }
  for (std::int64_t p : {3, 7, 11, 19, 23, 31, 43, 47, 59}) {
    const auto r = check("cosp", at_p(p));
    REQUIRE(r.pass);
    Rational want(-(p + 1) * (p - 3), 16);
    want.canonicalize();
    REQUIRE(std::get<Rational>(r.rhs) == want);
  }
}

TEST_CASE("sec0a + sec0b cancel") {
  const num::PrecisionPolicy policy;
  for (std::int64_t n = 1; n <= 99; n += 2) {
    const auto a = numeric(check("sec0a", at_n(n)).lhs);
    const auto b = numeric(check("sec0b", at_n(n)).lhs);
    REQUIRE(num::near_equal(a + b, num::BigComplex(256), policy).equal);
  }
}

TEST_CASE("tolerance can force a failure") {
  num::PrecisionPolicy tight;
  tight.tolerance_bits = 100000;
  CheckParams p = sample_params_at("csc", 21, 1, 1).front();
  const auto r = check("csc", p, tight);
  CHECK_FALSE(r.pass);
  CHECK(r.bits_used == 512);
}
