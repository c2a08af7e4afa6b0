#pragma once

// Slow, independent reimplementations used to cross-check the library.
// Nothing here calls into qrtrig.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

namespace oracle {

using ld = long double;
using cld = std::complex<long double>;

inline const ld kPi = std::acos(ld(-1));

inline std::int64_t pmod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::int64_t> primes(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (auto n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

/// Legendre symbol by looking for a square root.
inline int legendre(std::int64_t a, std::int64_t p) {
  a = pmod(a, p);
  if (a == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x) {
    if (x * x % p == a) return 1;
  }
  return -1;
}

/// Jacobi symbol from the factorization of n.
inline int jacobi(std::int64_t a, std::int64_t n) {
  int out = 1;
  for (std::int64_t q = 3; n > 1; q += 2) {
    while (n % q == 0) {
      out *= legendre(a, q);
      n /= q;
    }
  }
  return out;
}

/// Kronecker symbol (D/k) for k > 0, D a discriminant.
inline int kronecker(std::int64_t D, std::int64_t k) {
  int out = 1;
  while (k % 2 == 0) {
    if (D % 2 == 0) return 0;
    out *= (pmod(D, 8) == 1 || pmod(D, 8) == 7) ? 1 : -1;
    k /= 2;
  }
  return out * jacobi(D, k);
}

inline std::int64_t half_factorial_mod(std::int64_t p) {
  std::int64_t r = 1;
  for (std::int64_t k = 2; k <= (p - 1) / 2; ++k) r = r * k % p;
  return r;
}

/// Primitive positive definite reduced forms of discriminant D < 0, by
/// enumerating a, b directly.
inline std::int64_t class_number_forms(std::int64_t D) {
  std::int64_t h = 0;
  for (std::int64_t a = 1; 3 * a * a <= -D; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

/// Dirichlet's formula h(D) = -(1/|D|) sum_{k<|D|} k (D/k), for D < -4.
inline std::int64_t class_number_dirichlet(std::int64_t D) {
  std::int64_t s = 0;
  for (std::int64_t k = 1; k < -D; ++k) s += k * kronecker(D, k);
  return -s / -D;
}

/// Smallest unit (x + y sqrt p)/den > 1, den = 2 for p = 1 (mod 4), by
/// increasing y. Returns (x, y, den, norm).
inline std::tuple<std::int64_t, std::int64_t, int, int> brute_unit(std::int64_t p) {
  const int den = p % 4 == 1 ? 2 : 1;
  const std::int64_t k = den * den;
  for (std::int64_t y = 1;; ++y) {
    for (int sign : {-1, 1}) {
      const std::int64_t x2 = p * y * y + sign * k;
      if (x2 <= 0) continue;
      auto x = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<ld>(x2))));
      while (x * x > x2) --x;
      while ((x + 1) * (x + 1) <= x2) ++x;
      if (x * x == x2) return {x, y, den, sign};
    }
  }
}

/// h(p) log eps = -sum_{0<k<D/2} (D/k) log sin(pi k/D), D the discriminant of Q(sqrt p).
inline std::int64_t class_number_real_analytic(std::int64_t p) {
  const std::int64_t D = p % 4 == 1 ? p : 4 * p;
  ld s = 0;
  for (std::int64_t k = 1; 2 * k < D; ++k) {
    const int chi = kronecker(D, k);
    if (chi) s -= chi * std::log(std::sin(kPi * k / D));
  }
  const auto [x, y, den, norm] = brute_unit(p);
  const ld eps = (x + y * std::sqrt(static_cast<ld>(p))) / den;
  return std::llround(s / std::log(eps));
}

inline cld e(ld turns) { return std::polar(ld(1), 2 * kPi * turns); }

inline cld gauss_sum(std::int64_t p, std::int64_t a) {
  cld s = 0;
  for (std::int64_t x = 0; x < p; ++x) s += e(static_cast<ld>(pmod(a * x * x, p)) / p);
  return s;
}

inline cld s_poly(std::int64_t p, std::int64_t a, cld x) {
  cld out = 1;
  for (std::int64_t k = 1; k <= (p - 1) / 2; ++k) out *= x - e(static_cast<ld>(pmod(a * k * k, p)) / p);
  return out;
}

inline ld sec2_sum(std::int64_t n) {
  ld s = 0;
  for (std::int64_t r = 0; r < n; ++r) {
    const ld c = std::cos(kPi * r / n);
    s += 1 / (c * c);
  }
  return s;
}

inline ld cot_power_sum(std::int64_t n, int power) {
  ld s = 0;
  for (std::int64_t r = 1; r < n; ++r) s += std::pow(1 / std::tan(kPi * r / n), power);
  return s;
}

/// (1/n) sum_r cot(pi (x + r)/n) for complex x.
inline cld cot_mean(std::int64_t n, cld x) {
  cld s = 0;
  for (std::int64_t r = 0; r < n; ++r) {
    const cld z = kPi * (x + cld(r)) / cld(n);
    s += std::cos(z) / std::sin(z);
  }
  return s / cld(n);
}

inline cld sin2d_sum(std::int64_t n, cld x, cld y) {
  cld s = 0;
  for (std::int64_t j = 0; j < n; ++j) {
    for (std::int64_t k = 0; k < n; ++k) {
      s += cld(1) / (std::sin(2 * kPi * (x + cld(j)) / cld(n)) + std::sin(2 * kPi * (y + cld(k)) / cld(n)));
    }
  }
  return s;
}

/// prod_{k=1}^{(p-1)/2} (1 + tan(pi a k^2/p)).
inline ld tan_product(std::int64_t p, std::int64_t a) {
  ld out = 1;
  for (std::int64_t k = 1; k <= (p - 1) / 2; ++k) out *= 1 + std::tan(kPi * pmod(a * k * k, p) / p);
  return out;
}

/// Least y >= 1 (then x) with A x^2 + B = p y^2.
inline std::optional<std::pair<std::int64_t, std::int64_t>> pell(std::int64_t A, std::int64_t B, std::int64_t p,
                                                                 std::int64_t bound) {
  for (std::int64_t y = 1; y <= bound; ++y) {
    const std::int64_t r = p * y * y - B;
    if (r <= 0 || r % A) continue;
    const std::int64_t q = r / A;
    auto x = static_cast<std::int64_t>(std::sqrt(static_cast<ld>(q)));
    while (x * x > q) --x;
    while ((x + 1) * (x + 1) <= q) ++x;
    if (x > 0 && x * x == q) return std::pair{x, y};
  }
  return std::nullopt;
}

}  // namespace oracle
