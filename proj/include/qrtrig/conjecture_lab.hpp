#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrtrig/big_real.hpp"
#include "qrtrig/exact_form.hpp"
#include "qrtrig/precision_numerics.hpp"

namespace qrtrig::lab {

enum class Outcome { Pass, Fail, Inconclusive, Explored };

const char* to_string(Outcome o);

struct ScanRange {
  std::int64_t p_min = 3;
  std::int64_t p_max = 500;
  /// Optional extra filter: keep p with p mod modulus in residues.
  std::int64_t modulus = 1;
  std::vector<std::int64_t> residues{0};
  std::int64_t pell_bound = 20'000'000;

  void validate() const;
};

struct ConjectureReport {
  std::string conjecture_id;
  std::int64_t p = 0;
  /// Which evaluation point or sign branch, e.g. "x=w", "x=e(-5/12)", "delta=-1".
  std::string variant;
  /// Closed form of the prediction; empty for sign conditions and explorations.
  std::optional<ExactForm> predicted_form;
  /// Human-readable prediction (closed form or inequality).
  std::string predicted;
  std::optional<num::BigComplex> predicted_value;
  num::BigComplex observed{64};
  num::BigReal residual{64};
  /// For sign conditions: the sign of the rotated value's real part.
  std::optional<int> sign;
  bool sign_condition = false;
  Outcome outcome = Outcome::Inconclusive;
  long bits_used = 0;
  std::string notes;

  bool pass() const { return outcome == Outcome::Pass; }
};

/// "5.2", "5.5", "5.3i", "5.3ii", "5.3iii", "5.3iv", "remark5.2".
const std::vector<std::string>& conjecture_ids();

/// Primes in the range outside the conjecture's hypothesis are skipped and,
/// when `skipped` is given, listed there.
std::vector<ConjectureReport> scan_conjecture(std::string_view id, const ScanRange& range,
                                              const num::PrecisionPolicy& policy = {},
                                              std::vector<std::int64_t>* skipped = nullptr);

/// h(-p) = (1/(2 sqrt p)) sum csc(2 pi k^2/p) for p = 3 (mod 8), p > 3.
std::vector<ConjectureReport> scan_h_csc(const ScanRange& range, const num::PrecisionPolicy& policy = {},
                                         std::vector<std::int64_t>* skipped = nullptr);

/// sum 1/(1 + d sin(2 pi k^2/p) + cos(2 pi k^2/p)) = -(p+1)/4 for p = 7 (mod 8), d = +-1.
std::vector<ConjectureReport> scan_eq43(const ScanRange& range, const num::PrecisionPolicy& policy = {},
                                        std::vector<std::int64_t>* skipped = nullptr);

/// S_p(e^{2 pi i j/m}) with an attempt to recognize it (after multiplying by
/// 1, i-1 or i+1) in Q(sqrt d), d in {p, 2p, 3p, 3, 2}. Never pass/fail.
ConjectureReport explore_s_poly(std::int64_t p, std::int64_t j, std::int64_t m,
                                const num::PrecisionPolicy& policy = {});

}  // namespace qrtrig::lab
