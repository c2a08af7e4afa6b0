#include "qrtrig/identity_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <fmt/format.h>

#include "catalog_internal.hpp"
#include "qrtrig/errors.hpp"

namespace qrtrig::catalog {

using num::BigComplex;
using num::BigReal;
using num::PiComplex;
using num::TrigKind;
using detail::rat;

const char* to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::NumericComplex: return "numeric-complex";
    case CheckKind::ExactInteger: return "exact-integer";
    case CheckKind::Congruence: return "congruence";
    case CheckKind::SignCondition: return "sign-condition";
  }
  return "?";
}

std::string RationalComplex::to_string() const {
  if (im == 0) return re.get_str();
  if (re == 0) return im.get_str() + "i";
  return re.get_str() + (im < 0 ? "-" : "+") + Rational(abs(im)).get_str() + "i";
}

std::string CheckParams::to_string() const {
  std::vector<std::string> parts;
  if (n) parts.push_back(fmt::format("n={}", *n));
  if (p) parts.push_back(fmt::format("p={}", *p));
  if (a) parts.push_back(fmt::format("a={}", *a));
  if (x) parts.push_back("x=" + x->to_string());
  if (y) parts.push_back("y=" + y->to_string());
  return fmt::format("{}", fmt::join(parts, " "));
}

std::string ParamSchema::describe() const {
  switch (shape) {
    case ParamShape::N: return odd_n ? "odd n >= 1" : "n >= 1";
    case ParamShape::NX: return odd_n ? "odd n >= 1, complex x" : "n >= 1, complex x";
    case ParamShape::NXY: return "odd n >= 1, complex x, y";
    case ParamShape::Prime: {
      std::string s = fmt::format("prime p >= {}", p_min);
      if (modulus > 1) s += fmt::format(", p mod {} in {{{}}}", modulus, fmt::join(residues, ","));
      if (uses_a) s += ", integer a with p not dividing a";
      return s;
    }
  }
  return {};
}

namespace {

int minus_one_symbol(std::int64_t n) { return n % 4 == 1 ? 1 : -1; }

double dist_to_integer(const Rational& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  const Rational f = q - Rational(fl);
  const double fd = f.get_d();
  return std::min(fd, 1.0 - fd);
}

}  // namespace

double Exclusion::distance(const CheckParams& params) const {
  Rational off = offset;
  if (offset_times_symbol && params.n) off *= minus_one_symbol(*params.n);
  const RationalComplex zero{0, 0};
  const RationalComplex& x = params.x ? *params.x : zero;
  const RationalComplex& y = params.y ? *params.y : zero;
  const Rational re = cx * x.re + cy * y.re + off;
  const Rational im = cx * x.im + cy * y.im;
  const double d = std::hypot(dist_to_integer(re), im.get_d());
  const double unit = std::max(Rational(abs(cx)).get_d(), Rational(abs(cy)).get_d());
  return d / unit;
}

std::string Exclusion::to_string() const {
  std::string s;
  auto term = [&](const Rational& c, const char* var) {
    if (c == 0) return;
    std::string coef = c == 1 ? "" : c == -1 ? "-" : c.get_str() + "*";
    if (!s.empty() && c > 0) s += " + ";
    else if (!s.empty()) { s += " - "; coef = abs(c) == 1 ? "" : Rational(abs(c)).get_str() + "*"; }
    s += coef + var;
  };
  term(cx, "x");
  term(cy, "y");
  if (offset != 0) {
    const std::string mag = Rational(abs(offset)).get_str();
    s += offset > 0 ? " + " : " - ";
    s += offset_times_symbol ? "(-1/n)*" + mag : mag;
  }
  return s + " in Z";
}

namespace detail {

ParamSchema odd_n_schema(ParamShape shape) {
  ParamSchema s;
  s.shape = shape;
  s.odd_n = true;
  return s;
}

ParamSchema prime_schema(std::int64_t modulus, std::vector<std::int64_t> residues,
                         std::int64_t p_min, bool uses_a, std::int64_t sample_p_max) {
  ParamSchema s;
  s.shape = ParamShape::Prime;
  s.modulus = modulus;
  s.residues = std::move(residues);
  s.p_min = p_min;
  s.uses_a = uses_a;
  s.sample_p_max = sample_p_max;
  return s;
}

Sides with_exact_rhs(Value lhs, const ExactForm& rhs, long bits) {
  Sides s;
  s.lhs = std::move(lhs);
  s.rhs_exact = rhs.to_string();
  const bool rational = rhs.turn() == 0 &&
                        std::all_of(rhs.terms().begin(), rhs.terms().end(),
                                    [](const SqrtTerm& t) { return t.radicand == 1; });
  if (rational) {
    s.rhs = rhs.is_zero() ? Rational(0) : rhs.terms().front().coeff;
  } else {
    const auto* z = std::get_if<BigComplex>(&s.lhs);
    s.rhs = rhs.evaluate(z ? std::max(bits, z->bits()) : bits);
  }
  return s;
}

namespace {

std::vector<Entry> build_registry() {
  std::vector<Entry> out;
  add_trig_entries(out);
  add_prime_entries(out);
  std::sort(out.begin(), out.end(),
            [](const Entry& a, const Entry& b) { return a.desc.id < b.desc.id; });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].desc.id == out[i - 1].desc.id) {
      throw IntegrityFailure("duplicate identity id " + out[i].desc.id);
    }
  }
  return out;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> reg = build_registry();
  return reg;
}

}  // namespace

const Entry& entry(std::string_view id) {
  const auto& reg = registry();
  auto it = std::lower_bound(reg.begin(), reg.end(), id,
                             [](const Entry& e, std::string_view k) { return e.desc.id < k; });
  if (it == reg.end() || it->desc.id != id) {
    throw NotFound("unknown identity id '" + std::string(id) + "'");
  }
  return *it;
}

}  // namespace detail

const std::vector<IdentityDescriptor>& list_identities() {
  static const std::vector<IdentityDescriptor> list = [] {
    std::vector<IdentityDescriptor> v;
    for (const auto& e : detail::registry()) v.push_back(e.desc);
    return v;
  }();
  return list;
}

const IdentityDescriptor& lookup(std::string_view id) { return detail::entry(id).desc; }

void validate(const IdentityDescriptor& desc, const CheckParams& params) {
  const auto& s = desc.params;
  auto fail = [&](const std::string& why) {
    throw InvalidArgument(desc.id + ": " + why + " (expects " + s.describe() + ")");
  };
  if (s.shape == ParamShape::Prime) {
    if (!params.p) fail("missing p");
    if (params.n || params.x || params.y) fail("unexpected n/x/y");
    const std::int64_t p = *params.p;
    if (!nt::is_odd_prime(p)) fail(fmt::format("{} is not an odd prime", p));
    if (p < s.p_min) fail(fmt::format("p={} below {}", p, s.p_min));
    if (std::find(s.residues.begin(), s.residues.end(), nt::mod(p, s.modulus)) == s.residues.end()) {
      fail(fmt::format("p={} is in the wrong residue class", p));
    }
    if (s.uses_a) {
      if (!params.a) fail("missing a");
      if (nt::mod(*params.a, p) == 0) fail("p divides a");
    } else if (params.a) {
      fail("unexpected a");
    }
    return;
  }
  if (!params.n) fail("missing n");
  if (params.p || params.a) fail("unexpected p/a");
  const std::int64_t n = *params.n;
  if (n < 1) fail("n must be positive");
  if (s.odd_n && n % 2 == 0) fail("n must be odd");
  const bool want_x = s.shape != ParamShape::N;
  const bool want_y = s.shape == ParamShape::NXY;
  if (want_x != params.x.has_value()) fail(want_x ? "missing x" : "unexpected x");
  if (want_y != params.y.has_value()) fail(want_y ? "missing y" : "unexpected y");
  for (const auto& ex : desc.excluded) {
    if (ex.distance(params) < kExclusionMargin) {
      fail("parameters within 1/100 of the excluded set " + ex.to_string());
    }
  }
}

namespace {

CheckParams normalized(const IdentityDescriptor& desc, CheckParams params) {
  if (desc.params.shape == ParamShape::Prime && desc.params.uses_a && !params.a) params.a = 1;
  return params;
}

BigComplex as_complex(const Value& v, long bits) {
  if (const auto* q = std::get_if<Rational>(&v)) return BigComplex(BigReal(bits, *q));
  return std::get<BigComplex>(v);
}

Value rounded(Value v, long bits) {
  if (auto* z = std::get_if<BigComplex>(&v)) return z->with_bits(bits);
  return v;
}

CheckResult compare(const IdentityDescriptor& desc, const CheckParams& params,
                    detail::Sides sides, const num::PrecisionPolicy& policy) {
  CheckResult r;
  r.id = desc.id;
  r.kind = desc.kind;
  r.params = params;
  r.bits_used = policy.bits;
  r.rhs_exact = std::move(sides.rhs_exact);
  r.notes = std::move(sides.notes);
  const auto* lq = std::get_if<Rational>(&sides.lhs);
  const auto* rq = std::get_if<Rational>(&sides.rhs);
  if (lq && rq) {
    r.exact_match = *lq == *rq;
    r.pass = r.exact_match;
    r.residual = BigReal(policy.bits, Rational(abs(*lq - *rq)));
  } else {
    const BigComplex lhs = as_complex(sides.lhs, policy.bits);
    const BigComplex rhs = as_complex(sides.rhs, policy.bits);
    auto ne = num::near_equal(lhs, rhs, policy);
    r.pass = ne.equal;
    r.residual = ne.residual;
    for (const auto& [name, value] : sides.also) {
      auto other = num::near_equal(value, rhs, policy);
      r.pass = r.pass && other.equal;
      r.residual = num::max(r.residual, other.residual);
      if (!r.notes.empty()) r.notes += "; ";
      r.notes += name + "=" + value.re().to_string(20);
    }
  }
  // Compared at working precision, stored at the requested one.
  r.lhs = rounded(std::move(sides.lhs), policy.bits);
  r.rhs = rounded(std::move(sides.rhs), policy.bits);
  return r;
}

}  // namespace

CheckResult check(std::string_view id, const CheckParams& params,
                  const num::PrecisionPolicy& policy) {
  policy.validate();
  const auto& e = detail::entry(id);
  const CheckParams pr = normalized(e.desc, params);
  validate(e.desc, pr);
  CheckResult r = compare(e.desc, pr, e.eval(pr, policy.bits), policy);
  const bool numeric = !(std::holds_alternative<Rational>(r.lhs) &&
                         std::holds_alternative<Rational>(r.rhs));
  if (!r.pass && numeric && policy.escalate) {
    const auto retry = policy.escalated();
    r = compare(e.desc, pr, e.eval(pr, retry.bits), retry);
    r.notes += r.notes.empty() ? "escalated" : "; escalated";
  }
  return r;
}

// ---------------------------------------------------------------- sampling

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Uniform integer in [lo, hi]; the same on every platform, unlike
/// std::uniform_int_distribution.
std::int64_t draw(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(g());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t v;
  do {
    v = g();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % range);
}

RationalComplex draw_point(std::mt19937_64& g, bool real) {
  const std::int64_t v = draw(g, 1, 1000);
  const std::int64_t u = draw(g, -2 * v, 2 * v);
  const std::int64_t w = real ? 0 : draw(g, -kImagCap * v, kImagCap * v);
  return RationalComplex{rat(u, v), rat(w, v)};
}

std::vector<CheckParams> sample_impl(std::string_view id, std::optional<std::int64_t> pinned,
                                     std::uint64_t seed, std::size_t count) {
  if (count < 1) throw InvalidArgument("sample_params: count must be >= 1");
  const auto& desc = lookup(id);
  const auto& s = desc.params;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(fnv1a(id)),
                    static_cast<std::uint32_t>(fnv1a(id) >> 32),
                    static_cast<std::uint32_t>(pinned.value_or(0))};
  std::mt19937_64 g(seq);
  std::vector<CheckParams> out;

  if (s.shape == ParamShape::Prime) {
    std::vector<std::int64_t> pool;
    if (pinned) {
      pool.push_back(*pinned);
    } else {
      for (auto p : nt::primes_between(s.p_min, s.sample_p_max)) {
        if (std::find(s.residues.begin(), s.residues.end(), nt::mod(p, s.modulus)) != s.residues.end()) {
          pool.push_back(p);
        }
      }
    }
    if (pinned && !s.uses_a) count = 1;
    for (std::size_t i = 0; i < count; ++i) {
      CheckParams cp;
      cp.p = pool[static_cast<std::size_t>(draw(g, 0, static_cast<std::int64_t>(pool.size()) - 1))];
      if (s.uses_a) cp.a = draw(g, 1, *cp.p - 1);
      validate(desc, cp);
      out.push_back(cp);
    }
    return out;
  }

  if (pinned && s.shape == ParamShape::N) count = 1;
  for (std::size_t i = 0; i < count; ++i) {
    CheckParams cp;
    for (;;) {
      if (pinned) {
        cp.n = *pinned;
      } else if (s.odd_n) {
        cp.n = 2 * draw(g, 0, (s.sample_n_max - 1) / 2) + 1;
      } else {
        cp.n = draw(g, 1, s.sample_n_max);
      }
      const bool real = i % 5 == 4;
      if (s.shape != ParamShape::N) cp.x = draw_point(g, real);
      if (s.shape == ParamShape::NXY) cp.y = draw_point(g, real);
      const bool ok = std::all_of(desc.excluded.begin(), desc.excluded.end(), [&](const Exclusion& ex) {
        return ex.distance(cp) >= kExclusionMargin;
      });
      if (ok) break;
    }
    validate(desc, cp);
    out.push_back(cp);
  }
  return out;
}

}  // namespace

std::vector<CheckParams> sample_params(std::string_view id, std::uint64_t seed, std::size_t count) {
  return sample_impl(id, std::nullopt, seed, count);
}

std::vector<CheckParams> sample_params_at(std::string_view id, std::int64_t n_or_p,
                                          std::uint64_t seed, std::size_t count) {
  return sample_impl(id, n_or_p, seed, count);
}

// ------------------------------------------------------- trigonometric sums

namespace detail {
namespace {

constexpr long kSumGuard = 64;

/// trig(pi * c * (x + r) / n)
BigComplex trig_at(TrigKind kind, const Rational& c, const RationalComplex& x, std::int64_t r,
                   std::int64_t n, long bits) {
  const Rational scale = c / rat(n);
  return num::trig_pi(PiComplex{scale * (x.re + rat(r)), scale * x.im}, kind, bits);
}

BigComplex trig_at(TrigKind kind, const Rational& c, const RationalComplex& x, long bits) {
  return num::trig_pi(PiComplex{c * x.re, c * x.im}, kind, bits);
}

BigComplex one(long bits) { return BigComplex::real(bits, 1); }

BigComplex inv(const BigComplex& z) { return one(z.bits()) / z; }

Sides numeric(BigComplex lhs, BigComplex rhs, long) {
  Sides s;
  s.lhs = std::move(lhs);
  s.rhs = std::move(rhs);
  return s;
}

Sides exact(BigComplex lhs, Rational rhs, long) {
  Sides s;
  s.lhs = std::move(lhs);
  s.rhs_exact = rhs.get_str();
  s.rhs = std::move(rhs);
  return s;
}

const RationalComplex kZero{0, 0};
const RationalComplex kHalf{Rational(1, 2), 0};

/// sum_{j,k} 1/(A_j + B_k)
BigComplex double_sum(const std::vector<BigComplex>& A, const std::vector<BigComplex>& B, long w) {
  BigComplex sum(w);
  for (const auto& a : A) {
    for (const auto& b : B) sum += inv(a + b);
  }
  return sum;
}

std::vector<BigComplex> table(TrigKind kind, const Rational& c, const RationalComplex& x,
                              std::int64_t n, long w) {
  std::vector<BigComplex> v;
  v.reserve(static_cast<std::size_t>(n));
  for (std::int64_t r = 0; r < n; ++r) v.push_back(trig_at(kind, c, x, r, n, w));
  return v;
}

Entry make(std::string id, CheckKind kind, ParamSchema schema, std::vector<Exclusion> ex,
           std::string anchor, std::string statement, Evaluator eval) {
  Entry e;
  e.desc.id = std::move(id);
  e.desc.kind = kind;
  e.desc.params = std::move(schema);
  e.desc.excluded = std::move(ex);
  e.desc.anchor = std::move(anchor);
  e.desc.statement = std::move(statement);
  e.eval = std::move(eval);
  return e;
}

Exclusion ex(Rational cx, Rational cy, Rational off, bool times_symbol = false) {
  return Exclusion{std::move(cx), std::move(cy), std::move(off), times_symbol};
}

/// 1/(1 + sin t + sgn*cos t) summed over t = 2 pi (x + r)/n.
BigComplex sincos_sum(const RationalComplex& x, std::int64_t n, int sgn, long w) {
  BigComplex sum(w);
  for (std::int64_t r = 0; r < n; ++r) {
    const BigComplex s = trig_at(TrigKind::Sin, 2, x, r, n, w);
    BigComplex c = trig_at(TrigKind::Cos, 2, x, r, n, w);
    if (sgn < 0) c = -c;
    sum += inv(one(w) + s + c);
  }
  return sum;
}

BigComplex sincos_rhs(const RationalComplex& x, std::int64_t n, int sgn, long w) {
  const int s = minus_one_symbol(n);
  BigComplex c = trig_at(TrigKind::Cos, 2, x, w);
  if (sgn < 0) c = -c;
  const BigComplex denom = one(w) + trig_at(TrigKind::Sin, 2, x, w) * BigReal(w, static_cast<long>(s)) + c;
  return BigComplex::real(w, s * n) / denom;
}

}  // namespace

void add_trig_entries(std::vector<Entry>& out) {
  const ParamSchema N = odd_n_schema(ParamShape::N);
  const ParamSchema NX = odd_n_schema(ParamShape::NX);
  const ParamSchema NXY = odd_n_schema(ParamShape::NXY);
  ParamSchema any_n;
  any_n.shape = ParamShape::N;
  any_n.odd_n = false;
  any_n.sample_n_max = 60;

  out.push_back(make(
      "csc2", CheckKind::NumericComplex, [] { ParamSchema s; s.shape = ParamShape::NX; s.odd_n = false; return s; }(),
      {ex(1, 0, 0)}, "csc2: \"another well-known formula\"",
      "(1/n^2) sum_{r=0}^{n-1} csc^2(pi(x+r)/n) = csc^2(pi x)",
      [](const CheckParams& p, long bits) {
        const long w = bits + kSumGuard;
        const auto n = *p.n;
        BigComplex sum(w);
        for (std::int64_t r = 0; r < n; ++r) {
          const BigComplex c = trig_at(TrigKind::Csc, 1, *p.x, r, n, w);
          sum += c * c;
        }
        sum /= BigReal(w, static_cast<long>(n * n));
        const BigComplex c = trig_at(TrigKind::Csc, 1, *p.x, w);
        return numeric(sum, c * c, bits);
      }));

  out.push_back(make(
      "secant", CheckKind::ExactInteger, N, {}, "secant: \"we get the known identity\"",
      "sum_{r=0}^{n-1} sec^2(pi r/n) = n^2",
      [](const CheckParams& p, long bits) {
        const long w = bits + kSumGuard;
        const auto n = *p.n;
        BigComplex sum(w);
        for (std::int64_t r = 0; r < n; ++r) {
          const BigComplex c = trig_at(TrigKind::Sec, 1, kZero, r, n, w);
          sum += c * c;
        }
        return exact(sum, rat(n * n), bits);
      }));

  out.push_back(make(
      "sin_product", CheckKind::NumericComplex, [] { ParamSchema s; s.shape = ParamShape::NX; s.odd_n = false; return s; }(),
      {}, "sin_product: \"implies the known formula\"",
      "prod_{r=0}^{n-1} 2 sin(pi(x+r)/n) = 2 sin(pi x)",
      [](const CheckParams& p, long bits) {
        const long w = bits + kSumGuard;
        const auto n = *p.n;
        BigComplex prod = one(w);
        for (std::int64_t r = 0; r < n; ++r) {
          prod *= trig_at(TrigKind::Sin, 1, *p.x, r, n, w) * BigReal(w, 2L);
        }
        return numeric(prod, trig_at(TrigKind::Sin, 1, *p.x, w) * BigReal(w, 2L), bits);
      }));

  out.push_back(make(
      "cot_sum", CheckKind::NumericComplex, NX, {ex(1, 0, 0)},
      "cot_sum: \"implies the known formula\"",
      "(1/n) sum_{r=0}^{n-1} cot(pi(x+r)/n) = cot(pi x)",
      [](const CheckParams& p, long bits) {
        const long w = bits + kSumGuard;
        const auto n = *p.n;
        BigComplex sum(w);
        for (std::int64_t r = 0; r < n; ++r) sum += trig_at(TrigKind::Cot, 1, *p.x, r, n, w);
        sum /= BigReal(w, static_cast<long>(n));
        return numeric(sum, trig_at(TrigKind::Cot, 1, *p.x, w), bits);
      }));

  out.push_back(make(
      "cot2_sum", CheckKind::ExactInteger, any_n, {}, "cot2_sum: \"in terms of Bernoulli numbers\"",
      "sum_{r=1}^{n-1} cot^2(pi r/n) = (n-1)(n-2)/3",
      [](const CheckParams& p, long bits) {
        const long w = bits + kSumGuard;
        const auto n = *p.n;
        BigComplex sum(w);
        for (std::int64_t r = 1; r < n; ++r) {
          const BigComplex c = trig_at(TrigKind::Cot, 1, kZero, r, n, w);
          sum += c * c;
        }
        return exact(sum, rat((n - 1) * (n - 2), 3), bits);
      }));

  out.push_back(make(
      "cot4_sum", CheckKind::ExactInteger, any_n, {}, "cot4_sum: \"in terms of Bernoulli numbers\"",
      "sum_{r=1}^{n-1} cot^4(pi r/n) = (n-1)(n-2)(n^2+3n-13)/45",
      [](const CheckParams& p, long bits) {
        const long w = bits + kSumGuard;
        const auto n = *p.n;
        BigComplex sum(w);
        for (std::int64_t r = 1; r < n; ++r) {
          const BigComplex c = trig_at(TrigKind::Cot, 1, kZero, r, n, w);
          const BigComplex c2 = c * c;
          sum += c2 * c2;
        }
        return exact(sum, rat((n - 1) * (n - 2) * (n * n + 3 * n - 13), 45), bits);
      }));

  out.push_back(make(
      "sincos", CheckKind::NumericComplex, NX, {ex(1, 0, Rational(1, 2)), ex(1, 0, Rational(1, 4), true)},
      "sincos: \"for any complex number with\"",
      "sum_{r=0}^{n-1} 1/(1 + sin 2pi(x+r)/n + cos 2pi(x+r)/n) = (-1/n) n/(1 + (-1/n) sin 2pi x + cos 2pi x)",
      [](const CheckParams& p, long bits) {
        const long w = bits + kSumGuard;
        return numeric(sincos_sum(*p.x, *p.n, 1, w), sincos_rhs(*p.x, *p.n, 1, w), bits);
      }));

  out.push_back(make(
      "minus_sincos", CheckKind::NumericComplex, NX, {ex(1, 0, 0), ex(1, 0, Rational(1, 4), true)},
      "minus_sincos: \"for any complex number with\"",
      "sum_{r=0}^{n-1} 1/(1 + sin 2pi(x+r)/n - cos 2pi(x+r)/n) = (-1/n) n/(1 + (-1/n) sin 2pi x - cos 2pi x)",
      [](const CheckParams& p, long bits) {
        const long w = bits + kSumGuard;
        return numeric(sincos_sum(*p.x, *p.n, -1, w), sincos_rhs(*p.x, *p.n, -1, w), bits);
      }));

  out.push_back(make(
      "csc", CheckKind::NumericComplex, NX, {ex(2, 0, 0)}, "csc: \"for all x in C with 2x not in Z\"",
      "(1/n) sum_{r=0}^{n-1} csc 2pi(x+r)/n = csc 2pi x",
      [](const CheckParams& p, long bits) {
        const long w = bits + kSumGuard;
        const auto n = *p.n;
        BigComplex sum(w);
        for (std::int64_t r = 0; r < n; ++r) sum += trig_at(TrigKind::Csc, 2, *p.x, r, n, w);
        sum /= BigReal(w, static_cast<long>(n));
        return numeric(sum, trig_at(TrigKind::Csc, 2, *p.x, w), bits);
      }));

  out.push_back(make(
      "sec", CheckKind::NumericComplex, NX, {ex(2, 0, Rational(-1, 2))},
      "sec: \"with 4x not an odd integer\"",
      "(1/n) sum_{r=0}^{n-1} sec 2pi(x+r)/n = (-1/n) sec 2pi x",
      [](const CheckParams& p, long bits) {
        const long w = bits + kSumGuard;
        const auto n = *p.n;
        BigComplex sum(w);
        for (std::int64_t r = 0; r < n; ++r) sum += trig_at(TrigKind::Sec, 2, *p.x, r, n, w);
        sum /= BigReal(w, static_cast<long>(n));
        return numeric(sum, trig_at(TrigKind::Sec, 2, *p.x, w) * BigReal(w, static_cast<long>(minus_one_symbol(n))),
                       bits);
      }));

  out.push_back(make(
      "sincos0", CheckKind::ExactInteger, N, {}, "sincos0: \"Putting x=0,1/2 in\"",
      "sum_{r=0}^{n-1} 1/(1 + sin 2pi r/n + cos 2pi r/n) = (-1/n) n/2",
      [](const CheckParams& p, long bits) {
        const long w = bits + kSumGuard;
        const auto n = *p.n;
        return exact(sincos_sum(kZero, n, 1, w), rat(minus_one_symbol(n) * n, 2), bits);
      }));

  out.push_back(make(
      "minus_sincos0", CheckKind::ExactInteger, N, {}, "minus_sincos0: \"Putting x=0,1/2 in\"",
      "sum_{r=0}^{n-1} 1/(1 + sin pi(2r+1)/n - cos pi(2r+1)/n) = (-1/n) n/2",
      [](const CheckParams& p, long bits) {
        const long w = bits + kSumGuard;
        const auto n = *p.n;
        return exact(sincos_sum(kHalf, n, -1, w), rat(minus_one_symbol(n) * n, 2), bits);
      }));

  out.push_back(make(
      "sec0a", CheckKind::ExactInteger, N, {}, "sec0a: \"Putting x=0,1/2 in\"",
      "sum_{r=0}^{n-1} sec 2pi r/n = (-1/n) n",
      [](const CheckParams& p, long bits) {
        const long w = bits + kSumGuard;
        const auto n = *p.n;
        BigComplex sum(w);
        for (std::int64_t r = 0; r < n; ++r) sum += trig_at(TrigKind::Sec, 2, kZero, r, n, w);
        return exact(sum, rat(minus_one_symbol(n) * n), bits);
      }));

  out.push_back(make(
      "sec0b", CheckKind::ExactInteger, N, {}, "sec0b: \"Putting x=0,1/2 in\"",
      "sum_{r=0}^{n-1} sec pi(2r+1)/n = -(-1/n) n",
      [](const CheckParams& p, long bits) {
        const long w = bits + kSumGuard;
        const auto n = *p.n;
        BigComplex sum(w);
        for (std::int64_t r = 0; r < n; ++r) sum += trig_at(TrigKind::Sec, 2, kHalf, r, n, w);
        return exact(sum, rat(-minus_one_symbol(n) * n), bits);
      }));

  out.push_back(make(
      "sin2d", CheckKind::NumericComplex, NXY, {ex(1, 1, 0), ex(1, -1, Rational(-1, 2))},
      "sin2d: \"for all complex numbers x and y\"",
      "sum_{j,k=0}^{n-1} 1/(sin 2pi(x+j)/n + sin 2pi(y+k)/n) = (-1/n) n^2/(sin 2pi x + sin 2pi y)",
      [](const CheckParams& p, long bits) {
        const long w = bits + kSumGuard;
        const auto n = *p.n;
        const BigComplex lhs = double_sum(table(TrigKind::Sin, 2, *p.x, n, w), table(TrigKind::Sin, 2, *p.y, n, w), w);
        const BigComplex rhs = BigComplex::real(w, minus_one_symbol(n) * n * n) /
                               (trig_at(TrigKind::Sin, 2, *p.x, w) + trig_at(TrigKind::Sin, 2, *p.y, w));
        return numeric(lhs, rhs, bits);
      }));

  out.push_back(make(
      "cos2d", CheckKind::NumericComplex, NXY, {ex(1, 1, Rational(-1, 2)), ex(1, -1, Rational(-1, 2))},
      "cos2d: \"for all complex numbers x and y\"",
      "sum_{j,k=0}^{n-1} 1/(cos 2pi(x+j)/n + cos 2pi(y+k)/n) = n^2/(cos 2pi x + cos 2pi y)",
      [](const CheckParams& p, long bits) {
        const long w = bits + kSumGuard;
        const auto n = *p.n;
        const BigComplex lhs = double_sum(table(TrigKind::Cos, 2, *p.x, n, w), table(TrigKind::Cos, 2, *p.y, n, w), w);
        const BigComplex rhs = BigComplex::real(w, n * n) /
                               (trig_at(TrigKind::Cos, 2, *p.x, w) + trig_at(TrigKind::Cos, 2, *p.y, w));
        return numeric(lhs, rhs, bits);
      }));

  out.push_back(make(
      "mix2d", CheckKind::NumericComplex, NXY,
      {ex(1, 1, Rational(1, 4), true), ex(1, -1, Rational(1, 4), true)},
      "mix2d: \"for all complex numbers x and y\"",
      "sum_{j,k=0}^{n-1} 1/(sin 2pi(x+j)/n + cos 2pi(y+k)/n) = n^2/((-1/n) sin 2pi x + cos 2pi y)",
      [](const CheckParams& p, long bits) {
        const long w = bits + kSumGuard;
        const auto n = *p.n;
        const BigComplex lhs = double_sum(table(TrigKind::Sin, 2, *p.x, n, w), table(TrigKind::Cos, 2, *p.y, n, w), w);
        const BigComplex rhs =
            BigComplex::real(w, n * n) /
            (trig_at(TrigKind::Sin, 2, *p.x, w) * BigReal(w, static_cast<long>(minus_one_symbol(n))) +
             trig_at(TrigKind::Cos, 2, *p.y, w));
        return numeric(lhs, rhs, bits);
      }));

  struct Special {
    const char* id;
    TrigKind a_kind;
    bool a_half;
    TrigKind b_kind;
    bool b_half;
    int num, den;  // rhs = num/den * n^2
    const char* statement;
  };
  const Special specials[] = {
      {"mix0", TrigKind::Sin, false, TrigKind::Cos, false, 1, 1,
       "sum_{j,k=0}^{n-1} 1/(sin 2pi j/n + cos 2pi k/n) = n^2"},
      {"mix1", TrigKind::Sin, true, TrigKind::Cos, true, -1, 1,
       "sum_{j,k=0}^{n-1} 1/(sin pi(2j+1)/n + cos pi(2k+1)/n) = -n^2"},
      {"cos0", TrigKind::Cos, false, TrigKind::Cos, false, 1, 2,
       "sum_{j,k=0}^{n-1} 1/(cos 2pi j/n + cos 2pi k/n) = n^2/2"},
      {"cos1", TrigKind::Cos, true, TrigKind::Cos, true, -1, 2,
       "sum_{j,k=0}^{n-1} 1/(cos pi(2j+1)/n + cos pi(2k+1)/n) = -n^2/2"},
  };
  for (const auto& sp : specials) {
    out.push_back(make(
        sp.id, CheckKind::ExactInteger, N, {}, std::string(sp.id) + ": \"in the special case x=y in {0,1/2}\"",
        sp.statement, [sp](const CheckParams& p, long bits) {
          const long w = bits + kSumGuard;
          const auto n = *p.n;
          const BigComplex lhs = double_sum(table(sp.a_kind, 2, sp.a_half ? kHalf : kZero, n, w),
                                            table(sp.b_kind, 2, sp.b_half ? kHalf : kZero, n, w), w);
          return exact(lhs, rat(sp.num * n * n, sp.den), bits);
        }));
  }

  out.push_back(make(
      "cosp", CheckKind::ExactInteger, prime_schema(4, {3}, 3, false, 60),
      {}, "cosp: \"Let p be a prime with p=3 (mod 4)\"",
      "sum_{1<=j<k<=(p-1)/2} 1/(cos 2pi j^2/p + cos 2pi k^2/p) = -((p+1)/4)((p-3)/4)",
      [](const CheckParams& prm, long bits) {
        const long w = bits + kSumGuard;
        const auto p = *prm.p;
        std::vector<BigReal> c;
        for (std::int64_t k = 1; k <= (p - 1) / 2; ++k) {
          c.push_back(num::trig_pi(num::PiRational(rat(2 * (k * k % p), p)), TrigKind::Cos, w));
        }
        BigReal sum(w);
        for (std::size_t j = 0; j < c.size(); ++j) {
          for (std::size_t k = j + 1; k < c.size(); ++k) sum += BigReal(w, 1L) / (c[j] + c[k]);
        }
        return exact(BigComplex(sum), rat(-((p + 1) / 4) * ((p - 3) / 4)), bits);
      }));

  auto lemma_product = [](TrigKind kind) {
    return [kind](const CheckParams& p, long bits) {
      const long w = bits + kSumGuard;
      const auto n = *p.n;
      BigComplex prod = one(w);
      for (std::int64_t r = 0; r < n; ++r) prod *= one(w) + trig_at(kind, 1, *p.x, r, n, w);
      const int s = minus_one_symbol(n);
      const int two = nt::jacobi(std::int64_t{2}, n);
      const BigComplex inner = one(w) + trig_at(kind, 1, *p.x, w) * BigReal(w, static_cast<long>(s));
      const BigReal factor = num::pow2((n - 1) / 2, w) * BigReal(w, static_cast<long>(two));
      return numeric(prod, inner * factor, bits);
    };
  };
  out.push_back(make("cot_prod", CheckKind::NumericComplex, NX, {ex(1, 0, 0)},
                     "cot_prod: \"(2/n)2^{(n-1)/2}(1+((-1)/n)cot pi x)\"",
                     "prod_{r=0}^{n-1} (1 + cot pi(x+r)/n) = (2/n) 2^{(n-1)/2} (1 + (-1/n) cot pi x)",
                     lemma_product(TrigKind::Cot)));
  out.push_back(make("tan_prod", CheckKind::NumericComplex, NX, {ex(1, 0, Rational(-1, 2))},
                     "tan_prod: \"(2/n)2^{(n-1)/2}(1+((-1)/n)cot pi x)\"",
                     "prod_{r=0}^{n-1} (1 + tan pi(x+r)/n) = (2/n) 2^{(n-1)/2} (1 + (-1/n) tan pi x)",
                     lemma_product(TrigKind::Tan)));
}

}  // namespace detail
}  // namespace qrtrig::catalog
