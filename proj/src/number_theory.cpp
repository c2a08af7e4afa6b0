#include "qrtrig/number_theory.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qrtrig/errors.hpp"

namespace qrtrig::nt {

SymbolValue::SymbolValue(int v) : value_(v) {
  if (v < -1 || v > 1) {
    throw InvalidArgument("symbol value must be -1, 0 or 1, got " +
                          std::to_string(v));
  }
}

SymbolValue jacobi(const Int& a_in, const Int& n_in) {
  if (n_in <= 0 || mpz_even_p(n_in.get_mpz_t())) {
    throw InvalidArgument("jacobi: modulus must be a positive odd integer, got " +
                          n_in.get_str());
  }
  Int n = n_in;
  Int a = a_in % n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (mpz_even_p(a.get_mpz_t())) {
      a /= 2;
      const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) {
      result = -result;
    }
    a %= n;
  }
  return SymbolValue(n == 1 ? result : 0);
}

SymbolValue jacobi(std::int64_t a_in, std::int64_t n_in) {
  if (n_in <= 0 || n_in % 2 == 0) {
    throw InvalidArgument("jacobi: modulus must be a positive odd integer, got " +
                          std::to_string(n_in));
  }
  std::uint64_t n = static_cast<std::uint64_t>(n_in);
  std::uint64_t a = static_cast<std::uint64_t>(mod(a_in, n_in));
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const std::uint64_t r = n & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return SymbolValue(n == 1 ? result : 0);
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are sufficient for all n < 2^64.
  for (std::uint64_t w : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_odd_prime(std::int64_t n) {
  return n > 2 && is_prime(static_cast<std::uint64_t>(n));
}

std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n) {
    if (is_prime(static_cast<std::uint64_t>(n))) out.push_back(n);
  }
  return out;
}

namespace {

void require_odd_prime(std::int64_t p, const char* what) {
  if (!is_odd_prime(p)) {
    throw InvalidArgument(std::string(what) + ": " + std::to_string(p) +
                          " is not an odd prime");
  }
}

}  // namespace

std::int64_t half_factorial_mod(std::int64_t p) {
  require_odd_prime(p, "half_factorial_mod");
  const auto m = static_cast<std::uint64_t>(p);
  std::uint64_t acc = 1;
  for (std::uint64_t k = 2; k <= (m - 1) / 2; ++k) acc = mul_mod(acc, k, m);
  return static_cast<std::int64_t>(acc);
}

ResidueTable::ResidueTable(std::int64_t p) : p_(p) {
  require_odd_prime(p, "residue_table");
  symbols_.assign(static_cast<std::size_t>(p), -1);
  symbols_[0] = 0;
  for (std::int64_t k = 1; k <= (p - 1) / 2; ++k) {
    const auto sq = static_cast<std::int64_t>(mul_mod(k, k, p));
    symbols_[static_cast<std::size_t>(sq)] = 1;
  }
  for (std::int64_t k = 1; k < p; ++k) {
    if (symbols_[static_cast<std::size_t>(k)] == 1) qr_set_.push_back(k);
  }
}

int ResidueTable::symbol(std::int64_t k) const {
  return symbols_[static_cast<std::size_t>(mod(k, p_))];
}

ResidueTable residue_table(std::int64_t p) { return ResidueTable(p); }

namespace {

// Largest k admitted by the bound: k < p*frac or k <= floor(p*frac).
std::int64_t interval_end(std::int64_t p, const Rational& frac, Bound bound) {
  const Rational x = frac * Int(static_cast<long>(p));
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (bound == Bound::Open && x.get_den() == 1) fl -= 1;
  return fl.get_si();
}

}  // namespace

std::int64_t qr_count_interval(const ResidueTable& table, const Rational& frac,
                               int sign, Bound bound) {
  if (frac <= 0 || frac > 1) {
    throw InvalidArgument("qr_count_interval: fraction must lie in (0,1], got " +
                          frac.get_str());
  }
  if (sign != 1 && sign != -1) {
    throw InvalidArgument("qr_count_interval: sign must be +1 or -1");
  }
  const std::int64_t end = interval_end(table.prime(), frac, bound);
  std::int64_t count = 0;
  for (std::int64_t k = 1; k <= end; ++k) {
    if (table.symbol(k) == sign) ++count;
  }
  return count;
}

std::int64_t qr_count_interval(std::int64_t p, const Rational& frac, int sign,
                               Bound bound) {
  return qr_count_interval(ResidueTable(p), frac, sign, bound);
}

std::int64_t alternating_symbol_sum(std::int64_t p) {
  require_odd_prime(p, "alternating_symbol_sum");
  std::int64_t sum = 0;
  for (std::int64_t k = 1; k <= (p - 1) / 2; ++k) {
    const int s = jacobi(k, p);
    sum += (k % 2 == 0) ? s : -s;
  }
  return sum;
}

std::int64_t char_sum_alternating(std::int64_t p) {
  require_odd_prime(p, "char_sum_alternating");
  if (p % 4 != 1) {
    throw InvalidArgument("char_sum_alternating: p must be 1 mod 4, got " +
                          std::to_string(p));
  }
  return alternating_symbol_sum(p);
}

std::int64_t char_sum_interval(std::int64_t p, const Rational& frac) {
  require_odd_prime(p, "char_sum_interval");
  if (frac <= 0 || frac >= 1) {
    throw InvalidArgument("char_sum_interval: fraction must lie in (0,1), got " +
                          frac.get_str());
  }
  const std::int64_t end = interval_end(p, frac, Bound::Open);
  std::int64_t sum = 0;
  for (std::int64_t k = 1; k <= end; ++k) sum += jacobi(k, p);
  return sum;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(const Int& n, Int* root) {
  if (n < 0) return false;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
  return true;
}

}  // namespace qrtrig::nt
