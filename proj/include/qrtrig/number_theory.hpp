#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace qrtrig {

using Int = mpz_class;
using Rational = mpq_class;

namespace nt {

/// Value of a Jacobi symbol, always one of -1, 0, +1.
class SymbolValue {
 public:
  constexpr SymbolValue() = default;
  explicit SymbolValue(int v);

  constexpr int value() const { return value_; }
  constexpr operator int() const { return value_; }

  friend constexpr bool operator==(SymbolValue, SymbolValue) = default;
  friend constexpr SymbolValue operator*(SymbolValue x, SymbolValue y) {
    SymbolValue r;
    r.value_ = x.value_ * y.value_;
    return r;
  }

 private:
  int value_ = 1;
};

SymbolValue jacobi(const Int& a, const Int& n);
SymbolValue jacobi(std::int64_t a, std::int64_t n);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);
bool is_odd_prime(std::int64_t n);

std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Least non-negative residue of a mod m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m);

/// ((p-1)/2)! mod p.
std::int64_t half_factorial_mod(std::int64_t p);

/// The quadratic residues of an odd prime p, as an immutable table.
class ResidueTable {
 public:
  explicit ResidueTable(std::int64_t p);

  std::int64_t prime() const { return p_; }
  /// Legendre symbol (k/p) for any integer k.
  int symbol(std::int64_t k) const;
  bool is_residue(std::int64_t k) const { return symbol(k) == 1; }
  /// Sorted residues in [1, p-1].
  const std::vector<std::int64_t>& residues() const { return qr_set_; }

 private:
  std::int64_t p_;
  std::vector<signed char> symbols_;
  std::vector<std::int64_t> qr_set_;
};

ResidueTable residue_table(std::int64_t p);

/// Selects k < p*frac (Open) or k <= floor(p*frac) (Closed).
enum class Bound { Open, Closed };

/// |{1 <= k (< or <=) p*frac : (k/p) = sign}|.
std::int64_t qr_count_interval(std::int64_t p, const Rational& frac, int sign,
                               Bound bound = Bound::Open);
std::int64_t qr_count_interval(const ResidueTable& table, const Rational& frac,
                               int sign, Bound bound = Bound::Open);

/// sum_{k=1}^{(p-1)/2} (-1)^k (k/p); requires p = 1 (mod 4).
std::int64_t char_sum_alternating(std::int64_t p);

/// Same sum without the residue-class restriction (any odd prime).
std::int64_t alternating_symbol_sum(std::int64_t p);

/// sum_{0<k<p*frac} (k/p), frac in (0,1).
std::int64_t char_sum_interval(std::int64_t p, const Rational& frac);

/// Largest s with s*s <= n.
std::uint64_t isqrt(std::uint64_t n);
bool is_square(const Int& n, Int* root = nullptr);

}  // namespace nt
}  // namespace qrtrig
