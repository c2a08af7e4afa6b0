#include "qrtrig/exact_form.hpp"

#include <algorithm>
#include <map>

#include "qrtrig/errors.hpp"
#include "qrtrig/precision_numerics.hpp"

namespace qrtrig {

namespace {

Rational reduce_turn(const Rational& t) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  Rational out = t - Rational(fl);
  out.canonicalize();
  return out;
}

// n = square^2 * core with core squarefree.
std::pair<std::int64_t, std::int64_t> split_square(std::int64_t n) {
  std::int64_t square = 1, core = 1;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square *= q;
    if (e % 2) core *= q;
  }
  core *= n;
  return {square, core};
}

long log2_magnitude(const Rational& q) {
  if (q == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
         static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

std::string turn_name(const Rational& t) {
  if (t == Rational(1, 4)) return "i";
  if (t == Rational(1, 2)) return "-1";
  if (t == Rational(3, 4)) return "-i";
  if (t == Rational(1, 3)) return "w";
  if (t == Rational(2, 3)) return "w^2";
  return "e(" + t.get_str() + ")";
}

}  // namespace

ExactForm ExactForm::rational(const Rational& q) {
  ExactForm f;
  f.terms_.push_back({q, 1});
  f.normalize();
  return f;
}

ExactForm ExactForm::sqrt_of(std::int64_t n, const Rational& coeff) {
  if (n < 1) throw InvalidArgument("ExactForm::sqrt_of: radicand must be positive");
  auto [square, core] = split_square(n);
  ExactForm f;
  f.terms_.push_back({coeff * Rational(Int(static_cast<long>(square))), core});
  f.normalize();
  return f;
}

ExactForm ExactForm::from_quad(const qf::QuadElem& x) {
  if (x.d() < 0) throw InvalidArgument("ExactForm::from_quad: real fields only");
  return rational(x.a()) + sqrt_of(x.d(), x.b());
}

ExactForm ExactForm::root(const Rational& turns) {
  ExactForm f = rational(1);
  f.turn_ = reduce_turn(turns);
  return f;
}

void ExactForm::normalize() {
  std::map<std::int64_t, Rational> merged;
  for (auto& t : terms_) merged[t.radicand] += t.coeff;
  terms_.clear();
  for (auto& [r, c] : merged) {
    c.canonicalize();
    if (c != 0) terms_.push_back({c, r});
  }
  if (terms_.empty()) turn_ = 0;
}

ExactForm& ExactForm::operator*=(const ExactForm& rhs) {
  std::vector<SqrtTerm> out;
  for (const auto& x : terms_) {
    for (const auto& y : rhs.terms_) {
      const __int128 prod = static_cast<__int128>(x.radicand) * y.radicand;
      if (prod > INT64_MAX) throw InvalidArgument("ExactForm: radicand overflow");
      auto [square, core] = split_square(static_cast<std::int64_t>(prod));
      out.push_back({x.coeff * y.coeff * Rational(Int(static_cast<long>(square))), core});
    }
  }
  terms_ = std::move(out);
  turn_ = reduce_turn(turn_ + rhs.turn_);
  normalize();
  return *this;
}

ExactForm& ExactForm::operator+=(const ExactForm& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  ExactForm r = rhs;
  if (r.turn_ != turn_) {
    // -1 is the only rotation two addends may differ by.
    if (reduce_turn(r.turn_ + Rational(1, 2)) != turn_) {
      throw InvalidArgument("ExactForm: cannot add forms with different root factors");
    }
    r.turn_ = turn_;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
  }
  for (const auto& t : r.terms_) terms_.push_back(t);
  normalize();
  return *this;
}

ExactForm ExactForm::operator-() const {
  ExactForm f = *this;
  for (auto& t : f.terms_) t.coeff = -t.coeff;
  return f;
}

num::BigComplex ExactForm::evaluate(long bits) const {
  long guard = 64;
  for (const auto& t : terms_) {
    guard = std::max(guard, 64 + 2 * (log2_magnitude(t.coeff) +
                                      static_cast<long>(mpz_sizeinbase(Int(static_cast<long>(t.radicand)).get_mpz_t(), 2))));
  }
  const long work = bits + guard;
  num::BigReal sum(work);
  for (const auto& t : terms_) {
    num::BigReal term(work, t.coeff);
    if (t.radicand != 1) term *= num::sqrt(num::BigReal(work, static_cast<long>(t.radicand)));
    sum += term;
  }
  num::BigComplex value(sum);
  if (turn_ != 0) value *= num::root_of_unity(turn_, work);
  return value.with_bits(bits);
}

std::string ExactForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string body;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    const bool neg = t.coeff < 0;
    const Rational ac = abs(t.coeff);
    std::string piece;
    if (t.radicand == 1) {
      piece = ac.get_str();
    } else {
      const std::string root = "sqrt(" + std::to_string(t.radicand) + ")";
      piece = (ac == 1) ? root : ac.get_str() + "*" + root;
    }
    if (i == 0) {
      body = (neg ? "-" : "") + piece;
    } else {
      body += (neg ? "-" : "+") + piece;
    }
  }
  if (turn_ == 0) return body;
  const std::string factor = turn_name(turn_);
  if (terms_.size() == 1 && terms_[0].radicand == 1 && terms_[0].coeff == 1) return factor;
  return factor + "*(" + body + ")";
}

ExactForm sign_power(std::int64_t e) { return ExactForm::integer(e % 2 == 0 ? 1 : -1); }

ExactForm power_of_two(std::int64_t e) {
  Int v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return ExactForm::rational(e < 0 ? Rational(Int(1), v) : Rational(v));
}

}  // namespace qrtrig
