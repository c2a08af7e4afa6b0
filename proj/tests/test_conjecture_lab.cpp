#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "qrtrig/conjecture_lab.hpp"
#include "qrtrig/errors.hpp"
#include "qrtrig/exact_form.hpp"
#include "qrtrig/quadratic_fields.hpp"

using namespace qrtrig;
using namespace qrtrig::lab;

namespace {

ScanRange at(std::int64_t p) {
  ScanRange r;
  r.p_min = r.p_max = p;
  return r;
}

ScanRange between(std::int64_t lo, std::int64_t hi) {
  ScanRange r;
  r.p_min = lo;
  r.p_max = hi;
  return r;
}

const ConjectureReport& variant(const std::vector<ConjectureReport>& rs, const std::string& v) {
  auto it = std::find_if(rs.begin(), rs.end(), [&](const auto& r) { return r.variant == v; });
  REQUIRE(it != rs.end());
  return *it;
}

bool same_value(const ExactForm& f, const ExactForm& g) {
  return num::near_equal(f.evaluate(256), g.evaluate(256), num::PrecisionPolicy{}).equal;
}

std::set<std::int64_t> failing(const std::vector<ConjectureReport>& rs) {
  std::set<std::int64_t> out;
  for (const auto& r : rs) {
    if (r.outcome == Outcome::Fail) out.insert(r.p);
  }
  return out;
}

}  // namespace

TEST_CASE("conjecture 5.2 at p=79 and p=227") {
  auto rs = scan_conjecture("5.2", at(79));
  REQUIRE(rs.size() == 3);
  for (const auto& r : rs) CHECK(r.pass());
  const auto& w79 = variant(rs, "x=w");
  REQUIRE(w79.predicted_form);
  const ExactForm want79 = ExactForm::root(Rational(1, 4)) *
                           (ExactForm::sqrt_of(79, Rational(1, 2)) + ExactForm::sqrt_of(3, Rational(-5, 2)));
  CHECK(same_value(*w79.predicted_form, want79));
  CHECK(w79.predicted == "i*(-5/2*sqrt(3)+1/2*sqrt(79))");
  CHECK(w79.notes.find("x_p=5 y_p=1") != std::string::npos);

  rs = scan_conjecture("5.2", at(227));
  for (const auto& r : rs) CHECK(r.pass());
  const auto& w227 = variant(rs, "x=w");
  const ExactForm want227 = ExactForm::root(Rational(7, 12)) *
                            (ExactForm::sqrt_of(3, 1338106) + ExactForm::sqrt_of(227, -153829));
  CHECK(same_value(*w227.predicted_form, want227));
  CHECK(w227.notes.find("x_p=2676212 y_p=307658") != std::string::npos);
}

TEST_CASE("conjecture 5.5 at p=29") {
  const auto rs = scan_conjecture("5.5", at(29));
  REQUIRE(rs.size() == 4);
  for (std::int64_t j : {1, 3, 7, 9}) {
    const auto& r = variant(rs, "x=e(" + std::to_string(j) + "/10)");
    CHECK(r.pass());
    CHECK(same_value(*r.predicted_form, ExactForm::root(Rational(2 * j, 10))));
  }
}

TEST_CASE("conjecture 5.3(i) at p=13 and Example 5.2 at p=997") {
  auto rs = scan_conjecture("5.3i", at(13));
  REQUIRE(rs.size() == 4);
  for (const auto& r : rs) CHECK(r.pass());
  const auto& r = variant(rs, "x=e(1/12)");
  const ExactForm want = ExactForm::root(Rational(1, 4)) * (ExactForm::sqrt_of(3, 2) + ExactForm::sqrt_of(13, -1));
  CHECK(same_value(*r.predicted_form, want));
  CHECK(r.notes.find("x_p=2 y_p=1") != std::string::npos);

  rs = scan_conjecture("5.3i", at(997));
  for (const auto& q : rs) CHECK(q.pass());
  const auto& big = variant(rs, "x=e(1/12)");
  const ExactForm want997 =
      ExactForm::root(Rational(1, 4)) * (ExactForm::sqrt_of(3, -318334327) + ExactForm::sqrt_of(997, 17462102));
  CHECK(same_value(*big.predicted_form, want997));
}

TEST_CASE("h(-p) from the cosecant sum") {
  for (std::int64_t p : {11, 19, 43}) {
    const auto rs = scan_h_csc(at(p));
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].pass());
    CHECK(rs[0].predicted == "1");
  }
  const auto all = scan_h_csc(between(11, 499));
  CHECK(all.size() == 24);
  for (const auto& r : all) {
    REQUIRE(r.pass());
    REQUIRE(r.predicted == std::to_string(oracle::class_number_dirichlet(-r.p)));
  }
}

TEST_CASE("sum 1/(1 + d sin + cos) = -(p+1)/4") {
  for (auto [p, want] : {std::pair{7, -2}, {23, -6}, {31, -8}}) {
    const auto rs = scan_eq43(at(p));
    REQUIRE(rs.size() == 2);
    for (const auto& r : rs) {
      CHECK(r.pass());
      CHECK(r.predicted == std::to_string(want));
    }
  }
}

TEST_CASE("explorations") {
  auto r = explore_s_poly(79, 1, 4);
  CHECK(r.outcome == Outcome::Explored);
  CHECK(r.notes == "recognized: (i-1)*S = 1431-161*sqrt(79)");
  r = explore_s_poly(13, 1, 3);
  CHECK(r.notes == "recognized: S = -1");
  r = explore_s_poly(13, 1, 10);
  CHECK(r.outcome == Outcome::Explored);
  CHECK(r.notes == "recognized: none");
  CHECK_THROWS_AS(explore_s_poly(3, 1, 4), InvalidArgument);
}

TEST_CASE("scans that hold over their whole range") {
  for (const char* id : {"5.5", "5.3ii", "5.3iii", "5.3iv"}) {
    std::vector<std::int64_t> skipped;
    const auto rs = scan_conjecture(id, between(3, 500), {}, &skipped);
    CHECK_FALSE(rs.empty());
    CHECK_FALSE(skipped.empty());
    for (const auto& r : rs) REQUIRE_MESSAGE(r.pass(), id << " p=" << r.p << " " << r.notes);
  }
  for (const auto& r : scan_eq43(between(3, 499))) REQUIRE(r.pass());
}

TEST_CASE("sign conditions report the sign they saw") {
  for (const auto& r : scan_conjecture("5.3iii", between(3, 200))) {
    REQUIRE(r.sign_condition);
    REQUIRE(r.sign);
    REQUIRE(*r.sign == 1);
  }
}

// The least solutions at these primes give predictions that the observed
// values contradict; the scanner must say so rather than pass them.
TEST_CASE("least-solution counterexamples are reported as failures") {
  CHECK(failing(scan_conjecture("5.2", between(7, 400))) == std::set<std::int64_t>{107, 331, 367});
  CHECK(failing(scan_conjecture("remark5.2", between(7, 400))) == std::set<std::int64_t>{367});
  CHECK(failing(scan_conjecture("5.3i", between(3, 500))) == std::set<std::int64_t>{397});
  for (const auto& r : scan_conjecture("5.2", at(107))) {
    CHECK(r.notes.find("with (x,y)=(5148,862) from the cube of the least solution the prediction holds") !=
          std::string::npos);
  }
  // 3 divides the narrow class number of Q(sqrt(3p)) exactly at these primes.
  for (auto p : oracle::primes(7, 400)) {
    if (p % 4 != 3) continue;
    const bool three = qf::narrow_class_number(3 * p) % 3 == 0;
    CHECK_MESSAGE(three == (p == 107 || p == 331 || p == 367), "p=" << p);
  }
  CHECK(qf::narrow_class_number(4764) % 3 == 0);
}

TEST_CASE("exhausted Pell search is inconclusive, never a verdict") {
  ScanRange r = between(7, 300);
  r.pell_bound = 1;
  const auto rs = scan_conjecture("5.2", r);
  std::size_t inconclusive = 0;
  for (const auto& q : rs) {
    REQUIRE(q.outcome != Outcome::Fail);
    inconclusive += q.outcome == Outcome::Inconclusive;
  }
  CHECK(inconclusive > 0);
}

TEST_CASE("scan arguments") {
  CHECK_THROWS_AS(scan_conjecture("5.9", at(7)), NotFound);
  ScanRange r = between(7, 100);
  r.modulus = 4;
  r.residues = {1};
  CHECK_THROWS_AS(scan_conjecture("5.2", r), InvalidArgument);
  r.residues = {3};
  CHECK_NOTHROW(scan_conjecture("5.2", r));
  ScanRange empty = between(50, 10);
  CHECK_THROWS_AS(empty.validate(), InvalidArgument);
  std::vector<std::int64_t> skipped;
  CHECK(scan_conjecture("5.2", at(13), {}, &skipped).empty());
  CHECK(skipped == std::vector<std::int64_t>{13});
}

TEST_CASE("scans are deterministic") {
  const auto a = scan_conjecture("5.3iv", between(5, 120));
  const auto b = scan_conjecture("5.3iv", between(5, 120));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].observed.to_string() == b[i].observed.to_string());
    REQUIRE(a[i].notes == b[i].notes);
    REQUIRE(a[i].outcome == b[i].outcome);
  }
}
