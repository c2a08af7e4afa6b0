#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qrtrig/exact_form.hpp"
#include "qrtrig/identity_catalog.hpp"

namespace qrtrig::catalog::detail {

/// Both sides of one identity at a given working precision.
struct Sides {
  Value lhs;
  Value rhs;
  std::string rhs_exact;
  /// Further left-hand evaluations that must agree with rhs as well.
  std::vector<std::pair<std::string, num::BigComplex>> also;
  std::string notes;
};

using Evaluator = std::function<Sides(const CheckParams&, long bits)>;

struct Entry {
  IdentityDescriptor desc;
  Evaluator eval;
};

void add_trig_entries(std::vector<Entry>& out);
void add_prime_entries(std::vector<Entry>& out);

const Entry& entry(std::string_view id);

inline Rational rat(std::int64_t v) { return Rational(Int(static_cast<long>(v))); }
inline Rational rat(std::int64_t num, std::int64_t den) {
  Rational q(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

/// rhs from an exact form: a Rational when the form is rational, a number otherwise.
Sides with_exact_rhs(Value lhs, const ExactForm& rhs, long bits);

ParamSchema odd_n_schema(ParamShape shape);
ParamSchema prime_schema(std::int64_t modulus, std::vector<std::int64_t> residues,
                         std::int64_t p_min, bool uses_a, std::int64_t sample_p_max = 499);

}  // namespace qrtrig::catalog::detail
