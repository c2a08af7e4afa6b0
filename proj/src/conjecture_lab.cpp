#include "qrtrig/conjecture_lab.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include <fmt/format.h>

#include "qrtrig/errors.hpp"
#include "qrtrig/number_theory.hpp"
#include "qrtrig/quadratic_fields.hpp"

namespace qrtrig::lab {

using num::BigComplex;
using num::BigReal;
using num::PrecisionPolicy;

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Inconclusive: return "inconclusive";
    case Outcome::Explored: return "explored";
  }
  return "?";
}

void ScanRange::validate() const {
  if (p_min > p_max) throw InvalidArgument(fmt::format("empty prime range {}..{}", p_min, p_max));
  if (modulus < 1) throw InvalidArgument("residue filter modulus must be positive");
  if (residues.empty()) throw InvalidArgument("residue filter has no residues");
  if (pell_bound < 1) throw InvalidArgument("pell bound must be positive");
}

const std::vector<std::string>& conjecture_ids() {
  static const std::vector<std::string> ids = {"5.2", "5.5", "5.3i", "5.3ii", "5.3iii", "5.3iv", "remark5.2"};
  return ids;
}

namespace {

Rational rat(std::int64_t n, std::int64_t d = 1) {
  Rational q(Int(static_cast<long>(n)), Int(static_cast<long>(d)));
  q.canonicalize();
  return q;
}

struct Hypothesis {
  std::int64_t modulus;
  std::vector<std::int64_t> residues;
  std::int64_t p_min;
  bool holds(std::int64_t p) const {
    return p >= p_min && std::find(residues.begin(), residues.end(), nt::mod(p, modulus)) != residues.end();
  }
};

Hypothesis hypothesis(std::string_view id) {
  if (id == "5.2" || id == "remark5.2") return {4, {3}, 7};
  if (id == "5.5") return {40, {21, 29}, 7};
  if (id == "5.3i") return {24, {13}, 5};
  if (id == "5.3ii") return {24, {19}, 5};
  if (id == "5.3iii") return {24, {1, 7}, 5};
  if (id == "5.3iv") return {24, {5, 11, 17, 23}, 5};
  if (id == "h") return {8, {3}, 11};
  if (id == "4.3") return {8, {7}, 7};
  throw NotFound("unknown conjecture id '" + std::string(id) + "'");
}

/// Every residue class the filter admits must meet the hypothesis.
void check_filter(std::string_view id, const ScanRange& range, const Hypothesis& hyp) {
  const std::int64_t l = std::lcm(range.modulus, hyp.modulus);
  for (auto r : range.residues) {
    bool meets = false;
    for (std::int64_t x = nt::mod(r, range.modulus); x < l && !meets; x += range.modulus) {
      meets = std::find(hyp.residues.begin(), hyp.residues.end(), x % hyp.modulus) != hyp.residues.end();
    }
    if (!meets) {
      throw InvalidArgument(fmt::format("residue filter {} mod {} is inconsistent with {} (needs p mod {} in {{{}}})",
                                        r, range.modulus, id, hyp.modulus, fmt::join(hyp.residues, ",")));
    }
  }
}

std::vector<std::int64_t> primes_for(std::string_view id, const ScanRange& range,
                                     std::vector<std::int64_t>* skipped) {
  range.validate();
  const Hypothesis hyp = hypothesis(id);
  check_filter(id, range, hyp);
  std::vector<std::int64_t> out;
  for (auto p : nt::primes_between(std::max<std::int64_t>(range.p_min, 3), range.p_max)) {
    if (std::find(range.residues.begin(), range.residues.end(), nt::mod(p, range.modulus)) ==
        range.residues.end()) {
      continue;
    }
    if (hyp.holds(p)) {
      out.push_back(p);
    } else if (skipped) {
      skipped->push_back(p);
    }
  }
  return out;
}

BigComplex S_at(std::int64_t p, const Rational& turns, long bits) {
  return num::s_poly_eval(p, 1, num::root_of_unity(turns, bits), bits);
}

std::string turn_label(const Rational& t) {
  if (t == Rational(1, 3)) return "w";
  if (t == Rational(-1, 3)) return "w^-1";
  return "e(" + t.get_str() + ")";
}

/// Compares an observed value against an exact prediction, retrying once at
/// higher precision.
ConjectureReport exact_report(std::string id, std::int64_t p, std::string variant, const ExactForm& pred,
                              const std::function<BigComplex(long)>& observe, const PrecisionPolicy& policy,
                              std::string notes) {
  ConjectureReport r;
  r.conjecture_id = std::move(id);
  r.p = p;
  r.variant = std::move(variant);
  r.predicted_form = pred;
  r.predicted = pred.to_string();
  r.notes = std::move(notes);
  auto run = [&](const PrecisionPolicy& pol) {
    r.observed = observe(pol.bits);
    r.predicted_value = pred.evaluate(pol.bits);
    const auto ne = num::near_equal(r.observed, *r.predicted_value, pol);
    r.residual = ne.residual;
    r.bits_used = pol.bits;
    r.outcome = ne.equal ? Outcome::Pass : Outcome::Fail;
  };
  run(policy);
  if (r.outcome == Outcome::Fail && policy.escalate) {
    run(policy.escalated());
    r.notes += "; escalated";
  }
  return r;
}

ConjectureReport inconclusive(std::string id, std::int64_t p, std::string variant, std::string notes,
                              const PrecisionPolicy& policy) {
  ConjectureReport r;
  r.conjecture_id = std::move(id);
  r.p = p;
  r.variant = std::move(variant);
  r.outcome = Outcome::Inconclusive;
  r.notes = std::move(notes);
  r.bits_used = policy.bits;
  r.observed = BigComplex(policy.bits);
  r.residual = BigReal(policy.bits);
  return r;
}

bool matches(const ExactForm& pred, const BigComplex& observed, const PrecisionPolicy& policy) {
  return num::near_equal(observed, pred.evaluate(observed.bits()), policy).equal;
}

std::int64_t h_imag(std::int64_t p) { return qf::class_number_imag(qf::imag_field_discriminant(p)); }

/// For the least solution (x, y), the solution attached to eta^3 where
/// eta = (x sqrt3 + y sqrt p)/2 (halves) or x sqrt3 + y sqrt p.
qf::PellSolution cube_solution(const qf::PellSolution& s, std::int64_t p, bool halves) {
  const Int P(static_cast<long>(p));
  Int x = 3 * s.x * s.x * s.x + 3 * P * s.x * s.y * s.y;
  Int y = 9 * s.x * s.x * s.y + P * s.y * s.y * s.y;
  if (halves) {
    x /= 4;
    y /= 4;
  }
  return {x, y};
}

std::string cube_note(const ExactForm& pred, const BigComplex& observed, const PrecisionPolicy& policy,
                      const qf::PellSolution& cubed) {
  return fmt::format("; with (x,y)=({},{}) from the cube of the least solution the prediction {}",
                     cubed.x.get_str(), cubed.y.get_str(), matches(pred, observed, policy) ? "holds" : "also fails");
}

// ------------------------------------------------------------------ 5.2

void scan_52(std::int64_t p, const ScanRange& range, const PrecisionPolicy& policy,
             std::vector<ConjectureReport>& out) {
  const std::int64_t h = h_imag(p);
  const int p3 = nt::jacobi(p, std::int64_t{3});
  const std::int64_t c = nt::qr_count_interval(p, Rational(1, 3), +1);
  const auto pell = qf::pell_like_solve(3, 4 * p3, p, range.pell_bound);
  const std::string base = fmt::format("h(-p)={} (p/3)={} #{{1<=k<p/3:(k/p)=1}}={}", h, p3, c);
  const Rational tw(1, 3);
  if (!pell) {
    for (const char* v : {"x=w", "x=w^-1", "x=conj(w)"}) {
      out.push_back(inconclusive("5.2", p, v,
                                 fmt::format("{}; no solution of 3x^2{:+}=py^2 with y<={}", base, 4 * p3,
                                             range.pell_bound),
                                 policy));
    }
    return;
  }
  const ExactForm sgn = sign_power((h + 1) / 2) * ExactForm::integer(p3);
  const bool seven = p % 12 == 7;
  auto factor = [&](int e) {
    return seven ? ExactForm::root(Rational(e, 4)) : sign_power(c) * ExactForm::root(Rational(e * 7, 12));
  };
  const ExactForm conj_factor =
      seven ? ExactForm::root(Rational(1, 4)) : sign_power(c) * ExactForm::root(Rational(1, 4) - tw);
  // printed and alternate predictions for the three evaluation points, given (x, y)
  auto predictions = [&](const Int& x, const Int& y) {
    const ExactForm X = ExactForm::sqrt_of(3, Rational(x, Int(2)));
    const ExactForm Y = ExactForm::sqrt_of(p, Rational(y, Int(2)));
    return std::array<std::pair<ExactForm, std::optional<ExactForm>>, 3>{{
        {sgn * (X - Y) * factor(1), sgn * (X + Y) * factor(1)},
        {sgn * (X + Y) * factor(-1), sgn * (X - Y) * factor(-1)},
        {sign_power((h - 1) / 2) * ExactForm::integer(p3) * (X + Y) * conj_factor, std::nullopt},
    }};
  };
  const std::string notes = fmt::format("{}; x_p={} y_p={}", base, pell->x.get_str(), pell->y.get_str());
  const auto preds = predictions(pell->x, pell->y);
  const auto cubed = cube_solution(*pell, p, true);
  const auto cubed_preds = predictions(cubed.x, cubed.y);
  const char* variants[] = {"x=w", "x=w^-1", "x=conj(w)"};
  const Rational points[] = {tw, -tw, -tw};
  for (int k = 0; k < 3; ++k) {
    const Rational at = points[k];
    ConjectureReport r = exact_report(
        "5.2", p, variants[k], preds[k].first, [&](long bits) { return S_at(p, at, bits); }, policy, notes);
    if (preds[k].second) {
      const bool alt = matches(*preds[k].second, r.observed, policy);
      r.notes += fmt::format("; alternate sign coupling matches: {}", alt ? "yes" : "no");
      if (alt && !r.pass()) r.notes += "; only the alternate coupling matches";
    }
    if (!r.pass()) r.notes += cube_note(cubed_preds[k].first, r.observed, policy, cubed);
    out.push_back(std::move(r));
  }
}

void scan_remark52(std::int64_t p, const ScanRange& range, const PrecisionPolicy& policy,
                   std::vector<ConjectureReport>& out) {
  auto observe = [p](long bits) { return num::s_poly_eval(p, 1, -num::root_of_unity(Rational(1, 3), bits), bits); };
  if (p % 24 == 11) {
    out.push_back(exact_report("remark5.2", p, "x=-w", ExactForm::root(Rational(1, 3)), observe, policy, "p=11 (mod 24)"));
    return;
  }
  if (p % 24 == 19) {
    out.push_back(exact_report("remark5.2", p, "x=-w", ExactForm::integer(1), observe, policy, "p=19 (mod 24)"));
    return;
  }
  const int p3 = nt::jacobi(p, std::int64_t{3});
  const int three = nt::jacobi(std::int64_t{3}, p);
  const auto pell = qf::pell_like_solve(3, 4 * p3, p, range.pell_bound);
  if (!pell) {
    out.push_back(inconclusive("remark5.2", p, "x=-w",
                               fmt::format("no solution of 3x^2{:+}=py^2 with y<={}", 4 * p3, range.pell_bound),
                               policy));
    return;
  }
  auto prediction = [&](const qf::PellSolution& s) {
    const ExactForm sum = ExactForm::sqrt_of(3, Rational(s.x)) + ExactForm::sqrt_of(p, Rational(s.y));
    return ExactForm::integer(three) * ExactForm::root(Rational((1 + three) / 2, 3)) * sum * sum *
           ExactForm::rational(Rational(1, 4));
  };
  ConjectureReport r = exact_report("remark5.2", p, "x=-w", prediction(*pell), observe, policy,
                                    fmt::format("p=7 (mod 8); (3/p)={} x_p={} y_p={}", three, pell->x.get_str(),
                                                pell->y.get_str()));
  if (!r.pass()) {
    const auto cubed = cube_solution(*pell, p, true);
    r.notes += cube_note(prediction(cubed), r.observed, policy, cubed);
  }
  out.push_back(std::move(r));
}

// ------------------------------------------------------------------ 5.5

void scan_55(std::int64_t p, const PrecisionPolicy& policy, std::vector<ConjectureReport>& out) {
  const bool b21 = p % 40 == 21;
  const std::int64_t upto = b21 ? (p + 9) / 10 : (p + 1) / 10;
  const std::int64_t c = nt::qr_count_interval(p, rat(upto, p), -1, nt::Bound::Closed);
  for (std::int64_t j : {1, 3, 7, 9}) {
    const Rational at = rat(j, 10);
    const ExactForm pred = b21 ? sign_power(c) : sign_power(c) * ExactForm::root(rat(2 * j, 10));
    out.push_back(exact_report("5.5", p, "x=" + turn_label(at), pred,
                               [&](long bits) { return S_at(p, at, bits); }, policy,
                               fmt::format("#{{1<=k<={}:(k/p)=-1}}={}", upto, c)));
  }
}

// ------------------------------------------------------------------ 5.3

void scan_53i(std::int64_t p, const ScanRange& range, const PrecisionPolicy& policy,
              std::vector<ConjectureReport>& out) {
  const auto pell = qf::pell_like_solve(3, 1, p, range.pell_bound);
  const Rational points[] = {Rational(1, 12), Rational(-1, 12), Rational(5, 12), Rational(-5, 12)};
  if (!pell) {
    for (const auto& at : points) {
      out.push_back(inconclusive("5.3i", p, "x=" + turn_label(at),
                                 fmt::format("no solution of 3x^2+1=py^2 with y<={}", range.pell_bound), policy));
    }
    return;
  }
  const nt::ResidueTable table(p);
  const std::int64_t plus = nt::qr_count_interval(table, Rational(1, 4), +1);
  const std::int64_t minus = nt::qr_count_interval(table, Rational(1, 4), -1);
  const ExactForm i = ExactForm::root(Rational(1, 4));
  const std::int64_t base = (p - 5) / 8;
  const std::string notes = fmt::format("x_p={} y_p={} #{{k<p/4:(k/p)=1}}={} #{{k<p/4:(k/p)=-1}}={}",
                                        pell->x.get_str(), pell->y.get_str(), plus, minus);
  auto predictions = [&](const qf::PellSolution& s) {
    const ExactForm X = ExactForm::sqrt_of(3, Rational(s.x));
    const ExactForm Y = ExactForm::sqrt_of(p, Rational(s.y));
    return std::array<ExactForm, 4>{
        i * sign_power(base + minus) * (X - Y),
        i * sign_power(base + plus) * (X - Y),
        i * sign_power(base + plus) * (X + Y),
        i * sign_power(base + minus) * (X + Y),
    };
  };
  const auto preds = predictions(*pell);
  const auto cubed = cube_solution(*pell, p, false);
  const auto cubed_preds = predictions(cubed);
  for (int k = 0; k < 4; ++k) {
    const Rational at = points[k];
    ConjectureReport r = exact_report("5.3i", p, "x=" + turn_label(at), preds[k],
                                      [&](long bits) { return S_at(p, at, bits); }, policy, notes);
    if (!r.pass()) r.notes += cube_note(cubed_preds[k], r.observed, policy, cubed);
    out.push_back(std::move(r));
  }
}

void scan_53ii(std::int64_t p, const PrecisionPolicy& policy, std::vector<ConjectureReport>& out) {
  const auto [x, y] = qf::represent_16x2_3y2(p);
  const ExactForm sgn = sign_power((p - 19) / 24 + x);
  const ExactForm plus3 = ExactForm::rational(Rational(1, 2)) + ExactForm::sqrt_of(3, Rational(1, 2));
  const ExactForm minus3 = ExactForm::rational(Rational(1, 2)) - ExactForm::sqrt_of(3, Rational(1, 2));
  auto one_pm_i = [](int s) { return ExactForm::sqrt_of(2) * ExactForm::root(Rational(s, 8)); };
  const std::string notes = fmt::format("p=(4*{})^2+3*{}^2", x, y);
  const struct {
    Rational at;
    ExactForm pred;
  } cases[] = {
      {Rational(1, 12), sgn * one_pm_i(1) * plus3},
      {Rational(-1, 12), sgn * one_pm_i(-1) * plus3},
      {Rational(5, 12), sgn * one_pm_i(1) * minus3},
      {Rational(-5, 12), sgn * one_pm_i(-1) * minus3},
  };
  for (const auto& cs : cases) {
    out.push_back(exact_report("5.3ii", p, "x=" + turn_label(cs.at), cs.pred,
                               [&](long bits) { return S_at(p, cs.at, bits); }, policy, notes));
  }
}

/// sigma * e(rot) * S_p(e(at)) must be real with the expected sign.
ConjectureReport sign_report(std::string id, std::int64_t p, const Rational& at, int sigma, const Rational& rot,
                             int expected, const PrecisionPolicy& policy, std::string notes) {
  ConjectureReport r;
  r.conjecture_id = std::move(id);
  r.p = p;
  r.variant = "x=" + turn_label(at);
  r.sign_condition = true;
  r.predicted = fmt::format("{}e({})*S_p({}) {} 0", sigma < 0 ? "-" : "", rot.get_str(), turn_label(at),
                            expected > 0 ? ">" : "<");
  r.notes = std::move(notes);
  auto run = [&](const PrecisionPolicy& pol) {
    const long bits = pol.bits;
    BigComplex v = num::root_of_unity(rot, bits) * S_at(p, at, bits);
    if (sigma < 0) v = -v;
    r.observed = v;
    r.bits_used = bits;
    const BigReal mag = v.abs();
    const BigReal tol = pol.tolerance();
    const BigReal scale = num::max(BigReal(bits, 1L), mag);
    r.residual = num::abs(v.im()) / scale;
    if (mag <= tol) {
      r.outcome = Outcome::Inconclusive;
      r.sign.reset();
      return;
    }
    r.sign = v.re().sign() > 0 ? 1 : v.re().sign() < 0 ? -1 : 0;
    const bool real = r.residual <= tol;
    r.outcome = real && *r.sign == expected ? Outcome::Pass : Outcome::Fail;
  };
  run(policy);
  if (r.outcome == Outcome::Fail && policy.escalate) {
    run(policy.escalated());
    r.notes += "; escalated";
  }
  if (r.outcome == Outcome::Inconclusive) r.notes += "; value within tolerance of 0";
  return r;
}

void scan_53_signs(std::string_view id, std::int64_t p, const PrecisionPolicy& policy,
                   std::vector<ConjectureReport>& out) {
  const std::int64_t h = h_imag(p);
  const std::int64_t c = nt::qr_count_interval(p, Rational(1, 12), +1);
  const int sigma = ((h / 2 + c) % 2) ? -1 : 1;
  const std::string notes = fmt::format("h(-p)={} #{{1<=k<p/12:(k/p)=1}}={}", h, c);
  const bool third = id == "5.3iii";
  const std::int64_t r24 = p % 24;
  for (int s : {1, -1}) {
    const Rational at(s, 12);
    const Rational rot = third ? rat(s * (p - 1), 48) : rat(5 * s * (p - 1), 48);
    int sg = sigma;
    int expected = 1;
    if ((third && r24 == 7) || (!third && r24 == 11)) sg *= s;
    if (!third && r24 == 23) expected = -1;
    out.push_back(sign_report(std::string(id), p, at, sg, rot, expected, policy, notes));
  }
}

}  // namespace

// ------------------------------------------------------------------ scans

std::vector<ConjectureReport> scan_h_csc(const ScanRange& range, const PrecisionPolicy& policy,
                                         std::vector<std::int64_t>* skipped) {
  policy.validate();
  std::vector<ConjectureReport> out;
  for (auto p : primes_for("h", range, skipped)) {
    const std::int64_t h = h_imag(p);
    ConjectureReport r;
    r.conjecture_id = "h";
    r.p = p;
    r.variant = "csc";
    r.predicted_form = ExactForm::integer(h);
    r.predicted = std::to_string(h);
    auto run = [&](const PrecisionPolicy& pol) {
      const long w = pol.bits + 32;
      BigReal sum(w);
      for (std::int64_t k = 1; k <= (p - 1) / 2; ++k) {
        sum += num::trig_pi(num::PiRational(rat(2 * (k * k % p), p)), num::TrigKind::Csc, w);
      }
      sum /= BigReal(w, 2L) * num::sqrt(BigReal(w, static_cast<long>(p)));
      r.observed = BigComplex(sum).with_bits(pol.bits);
      r.predicted_value = BigComplex::real(pol.bits, h);
      const auto ne = num::near_equal(r.observed, *r.predicted_value, pol);
      r.residual = ne.residual;
      r.bits_used = pol.bits;
      const BigReal gap = num::abs(sum - BigReal(w, static_cast<long>(h)));
      const bool rounds = sum.round() == h && gap < BigReal(w, Rational(1, 4));
      r.outcome = rounds && ne.equal ? Outcome::Pass : Outcome::Fail;
      r.notes = fmt::format("nearest integer {}", sum.round().get_str());
    };
    run(policy);
    if (!r.pass() && policy.escalate) {
      run(policy.escalated());
      r.notes += "; escalated";
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ConjectureReport> scan_eq43(const ScanRange& range, const PrecisionPolicy& policy,
                                        std::vector<std::int64_t>* skipped) {
  policy.validate();
  std::vector<ConjectureReport> out;
  for (auto p : primes_for("4.3", range, skipped)) {
    const ExactForm pred = ExactForm::rational(rat(-(p + 1), 4));
    for (int delta : {1, -1}) {
      auto observe = [p, delta](long bits) {
        const long w = bits + 32;
        BigReal sum(w);
        const BigReal one(w, 1L);
        for (std::int64_t k = 1; k <= (p - 1) / 2; ++k) {
          const num::PiRational t(rat(2 * (k * k % p), p));
          BigReal s = num::trig_pi(t, num::TrigKind::Sin, w);
          if (delta < 0) s = -s;
          sum += one / (one + s + num::trig_pi(t, num::TrigKind::Cos, w));
        }
        return BigComplex(sum).with_bits(bits);
      };
      out.push_back(exact_report("4.3", p, fmt::format("delta={:+}", delta), pred, observe, policy, ""));
    }
  }
  return out;
}

std::vector<ConjectureReport> scan_conjecture(std::string_view id, const ScanRange& range,
                                              const PrecisionPolicy& policy, std::vector<std::int64_t>* skipped) {
  policy.validate();
  if (id == "h") return scan_h_csc(range, policy, skipped);
  if (id == "4.3") return scan_eq43(range, policy, skipped);
  std::vector<ConjectureReport> out;
  for (auto p : primes_for(id, range, skipped)) {
    if (id == "5.2") {
      scan_52(p, range, policy, out);
    } else if (id == "remark5.2") {
      scan_remark52(p, range, policy, out);
    } else if (id == "5.5") {
      scan_55(p, policy, out);
    } else if (id == "5.3i") {
      scan_53i(p, range, policy, out);
    } else if (id == "5.3ii") {
      scan_53ii(p, policy, out);
    } else {
      scan_53_signs(id, p, policy, out);
    }
  }
  return out;
}

// ------------------------------------------------------------- exploration

ConjectureReport explore_s_poly(std::int64_t p, std::int64_t j, std::int64_t m, const PrecisionPolicy& policy) {
  policy.validate();
  if (!nt::is_odd_prime(p) || p <= 3) throw InvalidArgument(fmt::format("explore: p={} must be a prime > 3", p));
  if (m < 1) throw InvalidArgument("explore: root order must be positive");
  const long bits = std::max<long>(policy.bits, 192);
  const Rational at = rat(j, m);
  ConjectureReport r;
  r.conjecture_id = "explore";
  r.p = p;
  r.variant = "x=" + turn_label(at);
  r.outcome = Outcome::Explored;
  r.bits_used = bits;
  r.observed = S_at(p, at, bits);
  r.residual = BigReal(bits);

  const std::int64_t radicands[] = {p, 2 * p, 3 * p, 3, 2};
  struct Multiplier {
    const char* name;
    BigComplex value;
  };
  const Multiplier mults[] = {
      {"", BigComplex::real(bits, 1)},
      {"(i-1)*", BigComplex::i(bits) - BigComplex::real(bits, 1)},
      {"(i+1)*", BigComplex::i(bits) + BigComplex::real(bits, 1)},
  };
  PrecisionPolicy recog;
  recog.bits = bits;
  const BigReal tol = recog.tolerance();

  // Recognize one real coordinate; zero counts as recognized.
  auto recognize = [&](const BigReal& v, std::vector<std::string>& ambiguous) -> std::optional<ExactForm> {
    if (num::abs(v) <= tol) return ExactForm();
    for (auto d : radicands) {
      if (nt::is_square(Int(static_cast<long>(d)))) continue;
      try {
        if (auto q = num::recognize_quadratic(v, d, 1'000'000)) {
          return ExactForm::rational(q->a) + ExactForm::sqrt_of(d, q->b);
        }
      } catch (const AmbiguityError&) {
        ambiguous.push_back(std::to_string(d));
      }
    }
    return std::nullopt;
  };

  struct Candidate {
    int nonzero;
    std::size_t length;
    std::string text;
  };
  std::optional<Candidate> best;
  std::vector<std::string> ambiguous;
  for (const auto& mult : mults) {
    const BigComplex z = mult.value * r.observed;
    const auto re = recognize(z.re(), ambiguous);
    if (!re) continue;
    const auto im = recognize(z.im(), ambiguous);
    if (!im) continue;
    std::string text;
    int nonzero = 0;
    if (!re->is_zero()) {
      text = re->to_string();
      ++nonzero;
    }
    if (!im->is_zero()) {
      text += (text.empty() ? "" : " + ") + std::string("i*(") + im->to_string() + ")";
      ++nonzero;
    }
    if (text.empty()) text = "0";
    Candidate c{nonzero, text.size(), std::string(mult.name) + "S = " + text};
    if (!best || std::tie(c.nonzero, c.length) < std::tie(best->nonzero, best->length)) best = c;
  }
  r.predicted = "";
  r.notes = best ? "recognized: " + best->text : "recognized: none";
  if (!ambiguous.empty()) r.notes += fmt::format("; ambiguous against d in {{{}}}", fmt::join(ambiguous, ","));
  return r;
}

}  // namespace qrtrig::lab
