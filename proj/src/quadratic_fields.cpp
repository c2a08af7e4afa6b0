#include "qrtrig/quadratic_fields.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "qrtrig/errors.hpp"

namespace qrtrig::qf {

using nt::mod;

bool is_squarefree(std::int64_t n) {
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  if (m == 0) return false;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      m /= q;
      if (m % q == 0) return false;
    }
  }
  return true;
}

QuadElem::QuadElem(std::int64_t d, Rational a, Rational b)
    : d_(d), a_(std::move(a)), b_(std::move(b)) {
  if (d == 0 || !is_squarefree(d)) {
    throw InvalidArgument("QuadElem: radicand must be squarefree and nonzero, got " +
                          std::to_string(d));
  }
  a_.canonicalize();
  b_.canonicalize();
}

QuadElem QuadElem::inverse() const {
  if (d_ == 1) {
    const Rational v = a_ + b_;
    if (v == 0) throw InvalidArgument("QuadElem::inverse: zero element");
    return QuadElem(1, 1 / v, 0);
  }
  const Rational n = norm();
  if (n == 0) throw InvalidArgument("QuadElem::inverse: zero element");
  return QuadElem(d_, a_ / n, -b_ / n);
}

int QuadElem::real_sign() const {
  if (d_ < 0) throw InvalidArgument("QuadElem::real_sign: imaginary field");
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  const Rational lhs = a_ * a_;
  const Rational rhs = Rational(Int(static_cast<long>(d_))) * b_ * b_;
  return lhs > rhs ? sa : sb;
}

std::string QuadElem::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  std::string bpart;
  const Rational ab = abs(b_);
  bpart = (ab == 1) ? root : ab.get_str() + "*" + root;
  if (a_ == 0) return (b_ < 0 ? "-" : "") + bpart;
  return a_.get_str() + (b_ < 0 ? "-" : "+") + bpart;
}

QuadElem quad_mul(const QuadElem& x, const QuadElem& y) {
  if (x.d() != y.d()) {
    throw InvalidArgument("quad_mul: mismatched radicands " + std::to_string(x.d()) +
                          " and " + std::to_string(y.d()));
  }
  const Rational d(Int(static_cast<long>(x.d())));
  return QuadElem(x.d(), x.a() * y.a() + d * x.b() * y.b(), x.a() * y.b() + x.b() * y.a());
}

QuadElem quad_pow(const QuadElem& x, std::uint64_t n) {
  QuadElem result = QuadElem::one(x.d());
  QuadElem base = x;
  while (n) {
    if (n & 1) result = quad_mul(result, base);
    n >>= 1;
    if (n) base = quad_mul(base, base);
  }
  return result;
}

QuadElem quad_pow_signed(const QuadElem& x, std::int64_t n) {
  if (n >= 0) return quad_pow(x, static_cast<std::uint64_t>(n));
  return quad_pow(x.inverse(), static_cast<std::uint64_t>(-n));
}

std::int64_t imag_field_discriminant(std::int64_t p) {
  return p % 4 == 3 ? -p : -4 * p;
}

std::int64_t real_field_discriminant(std::int64_t p) {
  return p % 4 == 1 ? p : 4 * p;
}

bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 0 || D == 1) return false;
  if (mod(D, 4) == 1) return is_squarefree(D);
  if (mod(D, 4) != 0) return false;
  const std::int64_t m = D / 4;
  const std::int64_t r = mod(m, 4);
  return (r == 2 || r == 3) && is_squarefree(m);
}

namespace {

void require_odd_prime(std::int64_t p, const char* what) {
  if (!nt::is_odd_prime(p)) {
    throw InvalidArgument(std::string(what) + ": " + std::to_string(p) +
                          " is not an odd prime");
  }
}

// floor((P + sqrt(D)) / Q) for non-square D, s = isqrt(D).
Int cf_floor(const Int& P, const Int& Q, const Int& s) {
  Int num = P + s;
  Int q;
  if (Q > 0) {
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
  } else {
    Int aq = -Q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), aq.get_mpz_t());
    q = -q - 1;
  }
  return q;
}

}  // namespace

std::pair<QuadElem, int> fundamental_unit_of(std::int64_t p) {
  require_odd_prime(p, "fundamental_unit");
  // Expand omega = (P0 + sqrt(p)) / Q0, the generator of the ring of integers,
  // and stop at the first convergent h/k with N(h - k*omega) = +-1. The unit
  // is then h - k*conj(omega).
  const Int D = static_cast<long>(p);
  const Int P0 = (p % 4 == 1) ? 1 : 0;
  const Int Q0 = (p % 4 == 1) ? 2 : 1;
  Int s;
  mpz_sqrt(s.get_mpz_t(), D.get_mpz_t());

  Int P = P0, Q = Q0;
  Int h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  for (long step = 0;; ++step) {
    const Int a = cf_floor(P, Q, s);
    const Int h = a * h_prev + h_prev2;
    const Int k = a * k_prev + k_prev2;
    const Int lead = Q0 * h - k * P0;
    const Int n = lead * lead - D * k * k;
    const Int q2 = Q0 * Q0;
    if (k > 0 && (n == q2 || n == -q2)) {
      QuadElem unit(p, Rational(lead, Q0), Rational(k, Q0));
      return {unit, n > 0 ? 1 : -1};
    }
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    P = a * Q - P;
    Q = (D - P * P) / Q;
    if (step > 4 * p + 16) {
      throw IntegrityFailure("fundamental_unit: no unit within the expected period for p=" +
                             std::to_string(p));
    }
  }
}

namespace {

struct Form64 {
  std::int64_t a, b, c;
  auto key() const { return std::tuple(a, b, c); }
  friend bool operator<(const Form64& x, const Form64& y) { return x.key() < y.key(); }
};

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) {
  return std::gcd(std::gcd(std::llabs(a), std::llabs(b)), std::llabs(c));
}

BinaryForm to_form(const Form64& f) {
  return {Int(static_cast<long>(f.a)), Int(static_cast<long>(f.b)), Int(static_cast<long>(f.c))};
}

std::vector<Form64> definite_forms(std::int64_t D) {
  std::vector<Form64> out;
  const std::int64_t absD = -D;
  for (std::int64_t a = 1; 3 * a * a <= absD; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (mod(b - D, 2) != 0) continue;
      const std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (gcd3(a, b, c) != 1) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

std::vector<Form64> indefinite_forms(std::int64_t D) {
  std::vector<Form64> out;
  const auto s = static_cast<std::int64_t>(nt::isqrt(static_cast<std::uint64_t>(D)));
  for (std::int64_t b = 1; b <= s; ++b) {
    if (mod(b - D, 2) != 0) continue;
    // sqrt(D) - b < 2|a| < sqrt(D) + b over the integers.
    const std::int64_t lo = (s + 1 - b + 1) / 2;
    const std::int64_t hi = (s + b) / 2;
    const std::int64_t num = b * b - D;
    for (std::int64_t aa = std::max<std::int64_t>(lo, 1); aa <= hi; ++aa) {
      if (num % (4 * aa) != 0) continue;
      for (std::int64_t a : {aa, -aa}) {
        const std::int64_t c = num / (4 * a);
        if (gcd3(a, b, c) != 1) continue;
        out.push_back({a, b, c});
      }
    }
  }
  return out;
}

Form64 rho64(const Form64& f, std::int64_t D, std::int64_t s) {
  const std::int64_t two_c = 2 * std::llabs(f.c);
  const std::int64_t b2 = s - mod(s + f.b, two_c);
  const std::int64_t num = b2 * b2 - D;
  return {f.c, b2, num / (4 * f.c)};
}

void require_nonsquare_positive(std::int64_t D) {
  if (D <= 0) throw InvalidArgument("indefinite forms need D > 0");
  const auto s = nt::isqrt(static_cast<std::uint64_t>(D));
  if (static_cast<std::int64_t>(s * s) == D) {
    throw InvalidArgument("indefinite forms need a non-square discriminant");
  }
}

}  // namespace

std::vector<BinaryForm> reduced_forms_definite(std::int64_t D) {
  if (D >= 0 || mod(D, 4) > 1) throw InvalidArgument("definite forms need D < 0, D = 0,1 mod 4");
  std::vector<BinaryForm> out;
  for (const auto& f : definite_forms(D)) out.push_back(to_form(f));
  return out;
}

std::vector<BinaryForm> reduced_forms_indefinite(std::int64_t D) {
  require_nonsquare_positive(D);
  std::vector<BinaryForm> out;
  for (const auto& f : indefinite_forms(D)) out.push_back(to_form(f));
  return out;
}

BinaryForm rho(const BinaryForm& f, std::int64_t D) {
  require_nonsquare_positive(D);
  if (f.discriminant() != D) throw InvalidArgument("rho: discriminant mismatch");
  const auto s = static_cast<std::int64_t>(nt::isqrt(static_cast<std::uint64_t>(D)));
  return to_form(rho64({f.a.get_si(), f.b.get_si(), f.c.get_si()}, D, s));
}

std::int64_t class_number_imag(std::int64_t D) {
  if (D >= 0 || !is_fundamental_discriminant(D)) {
    throw InvalidArgument("class_number_imag: " + std::to_string(D) +
                          " is not a negative fundamental discriminant");
  }
  return static_cast<std::int64_t>(definite_forms(D).size());
}

std::int64_t narrow_class_number(std::int64_t D) {
  if (D <= 0 || !is_fundamental_discriminant(D)) {
    throw InvalidArgument("narrow_class_number: " + std::to_string(D) +
                          " is not a positive fundamental discriminant");
  }
  const auto s = static_cast<std::int64_t>(nt::isqrt(static_cast<std::uint64_t>(D)));
  const auto forms = indefinite_forms(D);
  std::set<Form64> unvisited(forms.begin(), forms.end());
  std::int64_t cycles = 0;
  while (!unvisited.empty()) {
    const Form64 start = *unvisited.begin();
    Form64 f = start;
    do {
      if (unvisited.erase(f) != 1) {
        throw IntegrityFailure("narrow_class_number: rho left the reduced set at D=" +
                               std::to_string(D));
      }
      f = rho64(f, D, s);
    } while (f.key() != start.key());
    ++cycles;
  }
  return cycles;
}

std::int64_t class_number_real(std::int64_t p) {
  require_odd_prime(p, "class_number_real");
  const std::int64_t narrow = narrow_class_number(real_field_discriminant(p));
  const int norm = fundamental_unit_of(p).second;
  if (norm == -1) return narrow;
  if (narrow % 2 != 0) {
    throw IntegrityFailure("class_number_real: odd narrow class number with norm +1 at p=" +
                           std::to_string(p));
  }
  return narrow / 2;
}

UnitData fundamental_unit(std::int64_t p) {
  auto [unit, norm] = fundamental_unit_of(p);
  UnitData out;
  out.p = p;
  out.unit = unit;
  out.norm = norm;
  const std::int64_t narrow = narrow_class_number(real_field_discriminant(p));
  out.h_real = norm == -1 ? narrow : narrow / 2;
  const QuadElem power = quad_pow(unit, static_cast<std::uint64_t>(out.h_real));
  out.a_p = power.a();
  out.b_p = power.b();
  return out;
}

StData st_values(const UnitData& u) {
  const std::int64_t p = u.p;
  if (p % 4 != 3) {
    throw InvalidArgument("st_values: p must be 3 mod 4, got " + std::to_string(p));
  }
  if (u.a_p.get_den() != 1 || u.b_p.get_den() != 1) {
    throw IntegrityFailure("st_values: eps^h has non-integral coordinates at p=" +
                           std::to_string(p));
  }
  const Int a = u.a_p.get_num();
  const Int b = u.b_p.get_num();
  const int sign = ((p + 1) / 4) % 2 == 0 ? 1 : -1;
  StData out;
  out.p = p;
  if (!nt::is_square(a + sign, &out.s) || out.s <= 0) {
    throw IntegrityFailure("st_values: a_p + (-1)^((p+1)/4) is not a positive square at p=" +
                           std::to_string(p));
  }
  if (b % out.s != 0) {
    throw IntegrityFailure("st_values: s_p does not divide b_p at p=" + std::to_string(p));
  }
  out.t = b / out.s;
  return out;
}

StData st_values(std::int64_t p) {
  if (p % 4 != 3) {
    throw InvalidArgument("st_values: p must be 3 mod 4, got " + std::to_string(p));
  }
  return st_values(fundamental_unit(p));
}

namespace {

using u128 = unsigned __int128;

std::uint64_t isqrt128(u128 n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::optional<PellSolution> pell_like_solve(std::int64_t A, std::int64_t B, std::int64_t p,
                                            std::int64_t y_bound) {
  if (A <= 0) throw InvalidArgument("pell_like_solve: A must be positive");
  if (p <= 0) throw InvalidArgument("pell_like_solve: p must be positive");
  if (y_bound > (std::int64_t{1} << 31)) {
    throw InvalidArgument("pell_like_solve: y_bound too large for exhaustive search");
  }
  const __int128 a = A;
  for (std::int64_t y = 1; y <= y_bound; ++y) {
    const __int128 r = static_cast<__int128>(p) * y * y - B;
    if (r <= 0 || r % a != 0) continue;
    const auto q = static_cast<u128>(r / a);
    const std::uint64_t x = isqrt128(q);
    if (x > 0 && static_cast<u128>(x) * x == q) {
      return PellSolution{Int(std::to_string(x)), Int(static_cast<long>(y))};
    }
  }
  return std::nullopt;
}

std::pair<std::int64_t, std::int64_t> represent_16x2_3y2(std::int64_t p) {
  if (mod(p, 24) != 19) {
    throw InvalidArgument("represent_16x2_3y2: p must be 19 mod 24, got " + std::to_string(p));
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> found;
  for (std::int64_t x = 1; 16 * x * x < p; ++x) {
    const std::int64_t rest = p - 16 * x * x;
    if (rest % 3 != 0) continue;
    const auto y = static_cast<std::int64_t>(nt::isqrt(static_cast<std::uint64_t>(rest / 3)));
    if (y > 0 && y * y == rest / 3) found.emplace_back(x, y);
  }
  if (found.empty()) {
    throw IntegrityFailure("represent_16x2_3y2: no representation of " + std::to_string(p));
  }
  if (found.size() > 1) {
    throw IntegrityFailure("represent_16x2_3y2: representation of " + std::to_string(p) +
                           " is not unique");
  }
  return found.front();
}

}  // namespace qrtrig::qf
