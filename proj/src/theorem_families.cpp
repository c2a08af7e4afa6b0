#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "catalog_internal.hpp"
#include "qrtrig/errors.hpp"
#include "qrtrig/quadratic_fields.hpp"

namespace qrtrig::catalog {

using num::BigComplex;
using num::BigReal;
using num::TrigKind;

namespace detail {
namespace {

constexpr long kGuard = 32;

/// Exact ingredients for one prime, computed on demand.
class Ingredients {
 public:
  explicit Ingredients(std::int64_t p) : p_(p), table_(p) {}

  std::int64_t p() const { return p_; }
  int chi(std::int64_t a) const { return table_.symbol(nt::mod(a, p_)); }

  /// |{1 <= k < p/4 : (k/p) = sign}|
  std::int64_t quarter(int sign) const { return nt::qr_count_interval(table_, Rational(1, 4), sign); }

  const qf::UnitData& unit() {
    if (!unit_) unit_ = qf::fundamental_unit(p_);
    return *unit_;
  }
  std::int64_t h() { return unit().h_real; }
  std::int64_t h_imag() {
    if (!h_imag_) h_imag_ = qf::class_number_imag(qf::imag_field_discriminant(p_));
    return *h_imag_;
  }
  const qf::StData& st() {
    if (!st_) st_ = qf::st_values(unit());
    return *st_;
  }
  /// eps_p^e
  ExactForm eps(std::int64_t e) { return ExactForm::from_quad(qf::quad_pow_signed(unit().unit, e)); }

 private:
  std::int64_t p_;
  nt::ResidueTable table_;
  std::optional<qf::UnitData> unit_;
  std::optional<std::int64_t> h_imag_;
  std::optional<qf::StData> st_;
};

BigComplex S(std::int64_t p, std::int64_t a, const BigComplex& x, long w) {
  return num::s_poly_eval(p, a, x, w);
}

/// e^{2 pi i t} at working precision.
BigComplex root(const Rational& t, long w) { return num::root_of_unity(t, w); }

/// angle pi * a k^2 / p, numerator reduced mod 2p
num::PiRational angle(std::int64_t p, std::int64_t a, std::int64_t k) {
  const auto m = static_cast<std::uint64_t>(2 * p);
  const auto r = nt::mul_mod(static_cast<std::uint64_t>(nt::mod(a, 2 * p)),
                             nt::mul_mod(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(k), m), m);
  return num::PiRational(rat(static_cast<std::int64_t>(r), p));
}

/// prod_{k=1}^{(p-1)/2} (1 + f(pi a k^2/p))
BigReal one_plus_product(TrigKind kind, std::int64_t p, std::int64_t a, long w) {
  BigReal prod(w, 1L);
  for (std::int64_t k = 1; k <= (p - 1) / 2; ++k) {
    prod *= BigReal(w, 1L) + num::trig_pi(angle(p, a, k), kind, w);
  }
  return prod;
}

ExactForm chi_form(int v) { return ExactForm::integer(v); }

Rational residue(const Int& v, std::int64_t p) {
  Int r = v % Int(static_cast<long>(p));
  if (r < 0) r += p;
  return Rational(r);
}

std::int64_t pow_mod_signed(std::int64_t base, std::int64_t e, std::int64_t p) {
  return static_cast<std::int64_t>(nt::pow_mod(static_cast<std::uint64_t>(nt::mod(base, p)),
                                               static_cast<std::uint64_t>(e), static_cast<std::uint64_t>(p)));
}

Sides congruence(std::int64_t lhs, std::int64_t rhs, std::int64_t p, std::string note) {
  Sides s;
  s.lhs = Rational(nt::mod(lhs, p));
  s.rhs = Rational(nt::mod(rhs, p));
  s.rhs_exact = fmt::format("{} (mod {})", nt::mod(rhs, p), p);
  s.notes = std::move(note);
  return s;
}

Entry make(std::string id, CheckKind kind, ParamSchema schema, std::string anchor,
           std::string statement, Evaluator eval) {
  Entry e;
  e.desc.id = std::move(id);
  e.desc.kind = kind;
  e.desc.params = std::move(schema);
  e.desc.anchor = std::move(anchor);
  e.desc.statement = std::move(statement);
  e.eval = std::move(eval);
  return e;
}

}  // namespace

void add_prime_entries(std::vector<Entry>& out) {
  const auto any = prime_schema(1, {0}, 5, true);
  const auto one4 = prime_schema(4, {1}, 5, true);
  const auto one4_plain = prime_schema(4, {1}, 5, false);

  out.push_back(make(
      "tancot", CheckKind::NumericComplex, any, "tancot: \"the new class number formula\"",
      "sum 1/(cot(pi a k^2/p) - 1) = sum 1/(1 - tan(pi a k^2/p)) - (p-1)/2 = "
      "(p/4)((-1/p) - 1) + (-2a/p)(sqrt(p)/2) sum_{k<=(p-1)/2} (-1)^k (k/p)",
      [](const CheckParams& prm, long bits) {
        const long w = bits + kGuard;
        const auto p = *prm.p;
        const auto a = *prm.a;
        BigReal cot_side(w), tan_side(w);
        const BigReal one(w, 1L);
        for (std::int64_t k = 1; k <= (p - 1) / 2; ++k) {
          cot_side += one / (num::trig_pi(angle(p, a, k), TrigKind::Cot, w) - one);
          tan_side += one / (one - num::trig_pi(angle(p, a, k), TrigKind::Tan, w));
        }
        tan_side -= BigReal(w, static_cast<long>((p - 1) / 2));
        const int m1 = p % 4 == 1 ? 1 : -1;
        const int m2a = nt::jacobi(-2 * nt::mod(a, p), p);
        const ExactForm rhs = ExactForm::rational(rat(p * (m1 - 1), 4)) +
                              ExactForm::sqrt_of(p, rat(m2a * nt::alternating_symbol_sum(p), 2));
        Sides s = with_exact_rhs(BigComplex(cot_side), rhs, bits);
        s.also.emplace_back("tan_side", BigComplex(tan_side));
        return s;
      }));

  out.push_back(make(
      "h_minus_p", CheckKind::ExactInteger, one4_plain, "h_minus_p: \"the new class number formula\"",
      "h(-p) = (2/sqrt(p)) sum_{k=1}^{(p-1)/2} 1/(cot(pi k^2/p) - 1)",
      [](const CheckParams& prm, long bits) {
        const long w = bits + kGuard;
        const auto p = *prm.p;
        BigReal sum(w);
        const BigReal one(w, 1L);
        for (std::int64_t k = 1; k <= (p - 1) / 2; ++k) {
          sum += one / (num::trig_pi(angle(p, 1, k), TrigKind::Cot, w) - one);
        }
        sum *= BigReal(w, 2L) / num::sqrt(BigReal(w, static_cast<long>(p)));
        Ingredients in(p);
        return with_exact_rhs(BigComplex(sum), ExactForm::integer(in.h_imag()), bits);
      }));

  out.push_back(make(
      "wc", CheckKind::Congruence, prime_schema(4, {1}, 5, false), "wc: \"Williams and Currie\"",
      "(-1)^{#{1<=k<p/4 : (k/p)=-1}} 2^{(p-1)/4} = 1 (p=1 mod 8) or ((p-1)/2)! (p=5 mod 8) (mod p)",
      [](const CheckParams& prm, long) {
        const auto p = *prm.p;
        Ingredients in(p);
        const auto c = in.quarter(-1);
        std::int64_t lhs = pow_mod_signed(2, (p - 1) / 4, p);
        if (c % 2) lhs = p - lhs;
        const std::int64_t rhs = p % 8 == 1 ? 1 : nt::half_factorial_mod(p);
        return congruence(lhs, rhs, p, fmt::format("nonresidue count below p/4 = {}", c));
      }));

  out.push_back(make(
      "p14", CheckKind::NumericComplex, one4, "p14: \"For any integer a not divisible by p\"",
      "prod_{k=1}^{(p-1)/2} (1 - e^{2 pi i a k^2/p}) = sqrt(p) eps_p^{-(a/p) h(p)}",
      [](const CheckParams& prm, long bits) {
        const auto p = *prm.p;
        const auto a = *prm.a;
        Ingredients in(p);
        const ExactForm rhs = ExactForm::sqrt_of(p) * in.eps(-in.chi(a) * in.h());
        return with_exact_rhs(S(p, a, BigComplex::real(bits, 1), bits), rhs, bits);
      }));

  out.push_back(make(
      "cos14", CheckKind::NumericComplex, one4, "cos14: \"For any integer a not divisible by p\"",
      "2^{(p-1)/2} prod_{k=1}^{(p-1)/2} cos(pi a k^2/p) = (-1)^{a(p-1)/4} eps_p^{(1-(2/p))(a/p) h(p)}",
      [](const CheckParams& prm, long bits) {
        const long w = bits + kGuard;
        const auto p = *prm.p;
        const auto a = *prm.a;
        BigReal prod = num::pow2((p - 1) / 2, w);
        for (std::int64_t k = 1; k <= (p - 1) / 2; ++k) prod *= num::trig_pi(angle(p, a, k), TrigKind::Cos, w);
        Ingredients in(p);
        const int two = nt::jacobi(std::int64_t{2}, p);
        const ExactForm rhs = sign_power(nt::mod(a, 2) * ((p - 1) / 4)) * in.eps((1 - two) * in.chi(a) * in.h());
        return with_exact_rhs(BigComplex(prod), rhs, bits);
      }));

  out.push_back(make(
      "re", CheckKind::Congruence, one4_plain, "re: \"with 2a_p, 2b_p in Z\"",
      "eps_p^{h(p)} = a_p + b_p sqrt(p) has a_p = -((p-1)/2)! (mod p)",
      [](const CheckParams& prm, long) {
        const auto p = *prm.p;
        Ingredients in(p);
        const Rational& ap = in.unit().a_p;
        const Int twice = Int(ap * 2);
        // a_p = (2a_p) * 2^{-1} mod p
        const Int inv2((p + 1) / 2);
        const Rational lhs = residue(twice * inv2, p);
        Sides s;
        s.lhs = lhs;
        s.rhs = Rational(nt::mod(-nt::half_factorial_mod(p), p));
        s.rhs_exact = fmt::format("{} (mod {})", nt::mod(-nt::half_factorial_mod(p), p), p);
        s.notes = "a_p=" + ap.get_str();
        return s;
      }));

  out.push_back(make(
      "prod_4k3", CheckKind::NumericComplex, prime_schema(4, {3}, 7, true),
      "prod_4k3: \"Dirichlet's class number formula\"",
      "prod_{k=1}^{(p-1)/2} (1 - e^{2 pi i a k^2/p}) = (-1)^{(h(-p)+1)/2} (a/p) sqrt(p) i",
      [](const CheckParams& prm, long bits) {
        const auto p = *prm.p;
        const auto a = *prm.a;
        Ingredients in(p);
        const ExactForm rhs = sign_power((in.h_imag() + 1) / 2) * chi_form(in.chi(a)) *
                              ExactForm::sqrt_of(p) * ExactForm::root(Rational(1, 4));
        return with_exact_rhs(S(p, a, BigComplex::real(bits, 1), bits), rhs, bits);
      }));

  out.push_back(make(
      "root1", CheckKind::NumericComplex, prime_schema(8, {1}, 17, true),
      "root1: \"with s_p and t_p given by\"",
      "prod_{k=1}^{(p-1)/2} (i - e^{2 pi i a k^2/p}) = (-1)^{(p-1)/8 + #{1<=k<p/4 : (k/p)=1}}",
      [](const CheckParams& prm, long bits) {
        const auto p = *prm.p;
        Ingredients in(p);
        const ExactForm rhs = sign_power((p - 1) / 8 + in.quarter(1));
        return with_exact_rhs(S(p, *prm.a, BigComplex::i(bits), bits), rhs, bits);
      }));

  out.push_back(make(
      "root5", CheckKind::NumericComplex, prime_schema(8, {5}, 5, true),
      "root5: \"with s_p and t_p given by\"",
      "prod_{k=1}^{(p-1)/2} (i - e^{2 pi i a k^2/p}) = i (-1)^{(p-5)/8 + #{1<=k<p/4 : (k/p)=1}} (a/p) eps_p^{-(a/p) h(p)}",
      [](const CheckParams& prm, long bits) {
        const auto p = *prm.p;
        const auto a = *prm.a;
        Ingredients in(p);
        const ExactForm rhs = ExactForm::root(Rational(1, 4)) * sign_power((p - 5) / 8 + in.quarter(1)) *
                              chi_form(in.chi(a)) * in.eps(-in.chi(a) * in.h());
        return with_exact_rhs(S(p, a, BigComplex::i(bits), bits), rhs, bits);
      }));

  out.push_back(make(
      "S_i", CheckKind::NumericComplex, prime_schema(4, {3}, 7, false),
      "S_i: \"with s_p and t_p given by\"",
      "(i - (-1)^{(p+1)/4}) S_p(i) = (-1)^{((h(-p)+1)/2)((p+1)/4)} (s_p - t_p sqrt(p))",
      [](const CheckParams& prm, long bits) {
        const long w = bits + kGuard;
        const auto p = *prm.p;
        Ingredients in(p);
        const auto& st = in.st();
        const BigComplex factor = BigComplex::i(w) - BigComplex::real(w, ((p + 1) / 4) % 2 ? -1 : 1);
        const BigComplex lhs = factor * S(p, 1, BigComplex::i(w), w);
        const ExactForm rhs = sign_power(((in.h_imag() + 1) / 2) * ((p + 1) / 4)) *
                              (ExactForm::rational(Rational(st.s)) - ExactForm::sqrt_of(p, Rational(st.t)));
        return with_exact_rhs(lhs, rhs, bits);
      }));

  out.push_back(make(
      "st", CheckKind::ExactInteger, prime_schema(4, {3}, 3, false), "st: \"with s_p and t_p given by\"",
      "(s_p^2 - p t_p^2)/2 = (2/p), with a_p^2 - p b_p^2 = 1",
      [](const CheckParams& prm, long) {
        const auto p = *prm.p;
        Ingredients in(p);
        const auto& u = in.unit();
        if (u.a_p * u.a_p - rat(p) * u.b_p * u.b_p != 1) {
          throw IntegrityFailure(fmt::format("st: a_p^2 - p b_p^2 != 1 at p={}", p));
        }
        const auto& st = in.st();
        Sides s;
        s.lhs = Rational(st.s * st.s - Int(static_cast<long>(p)) * st.t * st.t, Int(2));
        std::get<Rational>(s.lhs).canonicalize();
        s.rhs = Rational(static_cast<int>(nt::jacobi(std::int64_t{2}, p)));
        s.rhs_exact = std::get<Rational>(s.rhs).get_str();
        s.notes = fmt::format("s={} t={}", st.s.get_str(), st.t.get_str());
        return s;
      }));

  // products of (1 + tan) and (1 + cot) over quadratic residues
  const char* prod_anchor = "\"fundamental unit and the class number\"";
  auto product_entry = [&](std::string id, TrigKind kind, ParamSchema schema, std::string statement,
                           std::function<ExactForm(Ingredients&, int)> rhs_of) {
    out.push_back(make(
        id, CheckKind::NumericComplex, std::move(schema), id + ": " + prod_anchor, std::move(statement),
        [kind, rhs_of](const CheckParams& prm, long bits) {
          const auto p = *prm.p;
          const auto a = *prm.a;
          Ingredients in(p);
          const BigReal lhs = one_plus_product(kind, p, a, bits + kGuard);
          return with_exact_rhs(BigComplex(lhs), rhs_of(in, in.chi(a)), bits);
        }));
  };
  auto quarter_power = [](std::int64_t p) { return power_of_two((p - 1) / 4); };
  auto inv_sqrt = [](std::int64_t p) { return ExactForm::sqrt_of(p, rat(1, p)); };

  product_entry("tan1", TrigKind::Tan, prime_schema(8, {1}, 17, true),
                "prod (1 + tan pi a k^2/p) = (-1)^{#{1<=k<p/4 : (k/p)=1}} 2^{(p-1)/4}",
                [=](Ingredients& in, int) { return sign_power(in.quarter(1)) * quarter_power(in.p()); });
  product_entry("cot1", TrigKind::Cot, prime_schema(8, {1}, 17, true),
                "prod (1 + cot pi a k^2/p) = (-1)^{#{1<=k<p/4 : (k/p)=1}} 2^{(p-1)/4}/sqrt(p) eps_p^{(a/p) h(p)}",
                [=](Ingredients& in, int chi) {
                  return sign_power(in.quarter(1)) * quarter_power(in.p()) * inv_sqrt(in.p()) *
                         in.eps(chi * in.h());
                });
  product_entry("tan5", TrigKind::Tan, prime_schema(8, {5}, 5, true),
                "prod (1 + tan pi a k^2/p) = (-1)^{#{1<=k<p/4 : (k/p)=-1}} 2^{(p-1)/4} (a/p) eps_p^{-3(a/p) h(p)}",
                [=](Ingredients& in, int chi) {
                  return sign_power(in.quarter(-1)) * quarter_power(in.p()) * chi_form(chi) *
                         in.eps(-3 * chi * in.h());
                });
  product_entry("cot5", TrigKind::Cot, prime_schema(8, {5}, 5, true),
                "prod (1 + cot pi a k^2/p) = (-1)^{#{1<=k<p/4 : (k/p)=1}} (a/p) 2^{(p-1)/4}/sqrt(p)",
                [=](Ingredients& in, int chi) {
                  return sign_power(in.quarter(1)) * chi_form(chi) * quarter_power(in.p()) * inv_sqrt(in.p());
                });
  product_entry("tan43", TrigKind::Tan, prime_schema(4, {3}, 3, true),
                "prod (1 + tan pi a k^2/p) = (-1)^{[p=3] + floor((p+1)/8) + ((h(-p)+1)/2)((p+1)/4)} "
                "2^{(p-3)/4} (s_p + (a/p) t_p sqrt(p))",
                [](Ingredients& in, int chi) {
                  const auto p = in.p();
                  const auto& st = in.st();
                  const std::int64_t delta = p == 3 ? 1 : 0;
                  return sign_power(delta + (p + 1) / 8 + ((in.h_imag() + 1) / 2) * ((p + 1) / 4)) *
                         power_of_two((p - 3) / 4) *
                         (ExactForm::rational(Rational(st.s)) + ExactForm::sqrt_of(p, Rational(chi * st.t)));
                });
  product_entry("cot43", TrigKind::Cot, prime_schema(4, {3}, 3, true),
                "prod (1 + cot pi a k^2/p) = (-1)^{floor((p-3)/8) + ((h(-p)-1)/2)((p-3)/4)} "
                "2^{(p-3)/4} (t_p + (a/p) s_p/sqrt(p))",
                [](Ingredients& in, int chi) {
                  const auto p = in.p();
                  const auto& st = in.st();
                  return sign_power((p - 3) / 8 + ((in.h_imag() - 1) / 2) * ((p - 3) / 4)) *
                         power_of_two((p - 3) / 4) *
                         (ExactForm::rational(Rational(st.t)) +
                          ExactForm::sqrt_of(p, Rational(chi * st.s) / rat(p)));
                });

  out.push_back(make(
      "lerch", CheckKind::Congruence, one4_plain, "lerch: \"In 1905, Lerch\"",
      "(-1)^{#{1<=k<p/3 : (k/p)=-1}} (-3)^{(p-1)/4} = 1 (p=1 mod 12) or ((p-1)/2)! (p=5 mod 12) (mod p)",
      [](const CheckParams& prm, long) {
        const auto p = *prm.p;
        const auto c = nt::qr_count_interval(p, Rational(1, 3), -1);
        std::int64_t lhs = pow_mod_signed(-3, (p - 1) / 4, p);
        if (c % 2) lhs = p - lhs;
        const std::int64_t rhs = p % 12 == 1 ? 1 : nt::half_factorial_mod(p);
        return congruence(lhs, rhs, p, fmt::format("nonresidue count below p/3 = {}", c));
      }));

  out.push_back(make(
      "relation", CheckKind::NumericComplex, prime_schema(1, {0}, 5, false),
      "relation: \"if p=5,7 (mod 8)\"",
      "S_p(-w) = (-1/p) conj(S_p(w))/S_p(w) (p=1,3 mod 8); (3/p) w^{(p/3)-1}/(S_p(w) conj(S_p(w))) (p=5,7 mod 8)",
      [](const CheckParams& prm, long bits) {
        const long w = bits + kGuard;
        const auto p = *prm.p;
        const BigComplex omega = root(Rational(1, 3), w);
        const BigComplex lhs = S(p, 1, -omega, w);
        const BigComplex sw = S(p, 1, omega, w);
        BigComplex rhs(w);
        if (p % 8 == 1 || p % 8 == 3) {
          rhs = sw.conj() / sw * BigReal(w, static_cast<long>(p % 4 == 1 ? 1 : -1));
        } else {
          const int p3 = nt::jacobi(p, std::int64_t{3});
          const int three = nt::jacobi(std::int64_t{3}, p);
          rhs = root(Rational(p3 - 1, 3), w) / (sw * sw.conj()) * BigReal(w, static_cast<long>(three));
        }
        Sides s;
        s.lhs = lhs;
        s.rhs = rhs;
        return s;
      }));

  out.push_back(make(
      "omega", CheckKind::NumericComplex, one4_plain, "omega: \"if p=5 (mod 12)\"",
      "(-1)^{#{1<=k<=floor((p+1)/3) : (k/p)=-1}} S_p(w) = 1 (p=1 mod 12) or w eps_p^{h(p)} (p=5 mod 12)",
      [](const CheckParams& prm, long bits) {
        const auto p = *prm.p;
        Ingredients in(p);
        const auto c = nt::qr_count_interval(p, rat(p + 1, 3 * p), -1, nt::Bound::Closed);
        BigComplex lhs = S(p, 1, root(Rational(1, 3), bits), bits);
        if (c % 2) lhs = -lhs;
        const ExactForm rhs = p % 12 == 1 ? ExactForm::integer(1)
                                          : ExactForm::root(Rational(1, 3)) * in.eps(in.h());
        Sides s = with_exact_rhs(lhs, rhs, bits);
        s.notes = fmt::format("nonresidue count up to floor((p+1)/3) = {}", c);
        return s;
      }));

  out.push_back(make(
      "minus_omega41", CheckKind::NumericComplex, one4_plain, "minus_omega41: \"if p=5 (mod 12)\"",
      "S_p(-w) = 1 (p=1 mod 12), -w eps_p^{-2h(p)} (p=5 mod 24), w (p=17 mod 24)",
      [](const CheckParams& prm, long bits) {
        const auto p = *prm.p;
        Ingredients in(p);
        const BigComplex lhs = S(p, 1, -root(Rational(1, 3), bits), bits);
        ExactForm rhs = ExactForm::integer(1);
        if (p % 24 == 5) rhs = -(ExactForm::root(Rational(1, 3)) * in.eps(-2 * in.h()));
        if (p % 24 == 17) rhs = ExactForm::root(Rational(1, 3));
        return with_exact_rhs(lhs, rhs, bits);
      }));

  out.push_back(make(
      "oomega", CheckKind::NumericComplex, one4_plain, "oomega: \"if p=5 (mod 12)\"",
      "S_p(w) conj(S_p(w)) = eps_p^{(1-(p/3)) h(p)}",
      [](const CheckParams& prm, long bits) {
        const auto p = *prm.p;
        Ingredients in(p);
        const BigComplex sw = S(p, 1, root(Rational(1, 3), bits), bits);
        const int p3 = nt::jacobi(p, std::int64_t{3});
        return with_exact_rhs(sw * sw.conj(), in.eps((1 - p3) * in.h()), bits);
      }));

  out.push_back(make(
      "zeta6_relation", CheckKind::NumericComplex, prime_schema(1, {0}, 5, false),
      "zeta6_relation: \"S_p(e^{2 pi i/6}) = S_p(-conj(w))\"",
      "S_p(e^{2 pi i/6}) = conj(S_p(-w)) (p=1 mod 4), 1/conj(S_p(-w)) (p=7 mod 12), w/conj(S_p(-w)) (p=11 mod 12)",
      [](const CheckParams& prm, long bits) {
        const long w = bits + kGuard;
        const auto p = *prm.p;
        const BigComplex lhs = S(p, 1, root(Rational(1, 6), w), w);
        const BigComplex smw = S(p, 1, -root(Rational(1, 3), w), w).conj();
        BigComplex rhs = smw;
        if (p % 12 == 7) rhs = BigComplex::real(w, 1) / smw;
        if (p % 12 == 11) rhs = root(Rational(1, 3), w) / smw;
        Sides s;
        s.lhs = lhs;
        s.rhs = rhs;
        return s;
      }));
}

}  // namespace detail

// ---------------------------------------------------------------- families

namespace {

struct Family {
  std::vector<std::string> names;
  std::int64_t modulus;
  std::vector<std::int64_t> residues;
  std::int64_t p_min;
  std::vector<std::string> members;
};

const std::vector<Family>& families() {
  static const std::vector<Family> list = {
      {{"class_number_sum", "1.3"}, 1, {0}, 5, {"tancot", "h_minus_p"}},
      {{"unit_products", "1.4"}, 1, {0}, 3, {"tan1", "cot1", "tan5", "cot5", "tan43", "cot43"}},
      {{"omega_values", "1.5"}, 4, {1}, 5, {"omega", "minus_omega41", "oomega"}},
      {{"williams_currie", "4.1"}, 4, {1}, 5, {"wc"}},
      {{"unit_congruence", "4.2"}, 4, {1}, 5, {"p14", "cos14", "re"}},
      {{"imag_product", "4.3"}, 4, {3}, 7, {"prod_4k3"}},
      {{"relation", "4.4"}, 1, {0}, 5, {"relation", "zeta6_relation"}},
      {{"s_at_i", "sp_i"}, 1, {0}, 5, {"root1", "root5", "S_i", "st"}},
      {{"lerch"}, 4, {1}, 5, {"lerch"}},
  };
  return list;
}

const Family* find_family(std::string_view name) {
  for (const auto& f : families()) {
    if (std::find(f.names.begin(), f.names.end(), name) != f.names.end()) return &f;
  }
  return nullptr;
}

bool in_class(const ParamSchema& s, std::int64_t p) {
  return p >= s.p_min &&
         std::find(s.residues.begin(), s.residues.end(), nt::mod(p, s.modulus)) != s.residues.end();
}

}  // namespace

std::vector<std::string> family_members(std::string_view family, std::int64_t p) {
  if (!nt::is_odd_prime(p)) throw InvalidArgument(fmt::format("{}: {} is not an odd prime", family, p));

  // "<family>-<member>" selects one member; a bare catalog id is its own family.
  std::optional<std::string> single;
  const Family* fam = find_family(family);
  if (!fam) {
    const auto dash = family.find('-');
    if (dash != std::string_view::npos) {
      fam = find_family(family.substr(0, dash));
      const std::string member(family.substr(dash + 1));
      if (!fam || std::find(fam->members.begin(), fam->members.end(), member) == fam->members.end()) {
        throw NotFound("unknown theorem family '" + std::string(family) + "'");
      }
      single = member;
    } else {
      const auto& desc = lookup(family);  // throws NotFound
      if (desc.params.shape != ParamShape::Prime) {
        throw InvalidArgument("'" + std::string(family) + "' is not indexed by a prime");
      }
      single = desc.id;
    }
  }

  if (single) {
    const auto& s = lookup(*single).params;
    if (!in_class(s, p)) {
      throw InvalidArgument(fmt::format("{}: p={} outside the required class ({})", family, p, s.describe()));
    }
    return {*single};
  }

  if (p < fam->p_min ||
      std::find(fam->residues.begin(), fam->residues.end(), nt::mod(p, fam->modulus)) == fam->residues.end()) {
    throw InvalidArgument(fmt::format("{}: p={} outside the required residue class", family, p));
  }
  std::vector<std::string> out;
  for (const auto& m : fam->members) {
    if (in_class(lookup(m).params, p)) out.push_back(m);
  }
  return out;
}

std::vector<CheckResult> check_theorem_family(std::string_view family, std::int64_t p, std::int64_t a,
                                              const num::PrecisionPolicy& policy) {
  const auto members = family_members(family, p);
  if (nt::mod(a, p) == 0) throw InvalidArgument(fmt::format("{}: p={} divides a={}", family, p, a));
  std::vector<CheckResult> out;
  for (const auto& id : members) {
    CheckParams params;
    params.p = p;
    if (lookup(id).params.uses_a) params.a = a;
    out.push_back(check(id, params, policy));
  }
  return out;
}

}  // namespace qrtrig::catalog
