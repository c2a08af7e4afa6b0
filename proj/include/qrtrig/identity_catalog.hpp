#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qrtrig/big_real.hpp"
#include "qrtrig/number_theory.hpp"
#include "qrtrig/precision_numerics.hpp"

namespace qrtrig::catalog {

enum class CheckKind { NumericComplex, ExactInteger, Congruence, SignCondition };

const char* to_string(CheckKind kind);

/// re + i*im with exact rational coordinates.
struct RationalComplex {
  Rational re;
  Rational im;
  std::string to_string() const;
  friend bool operator==(const RationalComplex&, const RationalComplex&) = default;
};

struct CheckParams {
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> a;
  std::optional<RationalComplex> x;
  std::optional<RationalComplex> y;

  std::string to_string() const;
  friend bool operator==(const CheckParams&, const CheckParams&) = default;
};

enum class ParamShape {
  N,          // n only
  NX,         // n and complex x
  NXY,        // n and complex x, y
  Prime,      // prime p (and a when uses_a)
};

struct ParamSchema {
  ParamShape shape = ParamShape::N;
  bool odd_n = true;
  std::int64_t sample_n_max = 99;
  std::int64_t p_min = 3;
  std::int64_t sample_p_max = 499;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> residues{0};
  bool uses_a = false;

  std::string describe() const;
};

/// The set { (x, y) : cx*x + cy*y + offset in Z }. When `offset_times_symbol`
/// is set the offset is multiplied by (-1/n).
struct Exclusion {
  Rational cx;
  Rational cy;
  Rational offset;
  bool offset_times_symbol = false;

  /// Distance from the set, measured in units of x (and y).
  double distance(const CheckParams& params) const;
  std::string to_string() const;
};

struct IdentityDescriptor {
  std::string id;
  CheckKind kind = CheckKind::NumericComplex;
  ParamSchema params;
  std::vector<Exclusion> excluded;
  /// Where the statement comes from and what it asserts, in words.
  std::string anchor;
  std::string statement;
};

/// A side of a check: a numeric value or an exact rational.
using Value = std::variant<num::BigComplex, Rational>;

struct CheckResult {
  std::string id;
  CheckKind kind = CheckKind::NumericComplex;
  CheckParams params;
  Value lhs;
  Value rhs;
  /// Closed form of the right-hand side when one is available.
  std::string rhs_exact;
  num::BigReal residual{64};
  bool exact_match = false;
  long bits_used = 0;
  bool pass = false;
  std::string notes;
};

/// Minimum distance of sampled or checked parameters from any excluded set.
inline constexpr double kExclusionMargin = 0.01;
/// Largest |Im x| accepted for complex parameters.
inline constexpr int kImagCap = 2;

const std::vector<IdentityDescriptor>& list_identities();
const IdentityDescriptor& lookup(std::string_view id);

/// Throws InvalidArgument when params do not fit the descriptor.
void validate(const IdentityDescriptor& desc, const CheckParams& params);

CheckResult check(std::string_view id, const CheckParams& params,
                  const num::PrecisionPolicy& policy = {});

std::vector<CheckParams> sample_params(std::string_view id, std::uint64_t seed,
                                       std::size_t count);
/// Same, with n (or p) pinned.
std::vector<CheckParams> sample_params_at(std::string_view id, std::int64_t n_or_p,
                                          std::uint64_t seed, std::size_t count);

/// Members of a theorem family that apply to p (residue-class dispatch).
std::vector<std::string> family_members(std::string_view family, std::int64_t p);

std::vector<CheckResult> check_theorem_family(std::string_view family, std::int64_t p,
                                              std::int64_t a,
                                              const num::PrecisionPolicy& policy = {});

}  // namespace qrtrig::catalog
