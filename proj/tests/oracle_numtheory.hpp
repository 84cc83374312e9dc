#pragma once
// Slow, self-contained number theory used as a reference by the tests.
// Deliberately shares no code with the library: 128-bit integers, naive
// Miller-Rabin and plain Pollard rho.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u128 mul_mod(u128 a, u128 b, u128 m) {
  if (m < (u128(1) << 64)) return a % m * (b % m) % m;
  a %= m;
  b %= m;
  u128 r = 0;
  while (b > 0) {
    if (b & 1) {
      r += a;
      if (r >= m) r -= m;
    }
    a += a;
    if (a >= m) a -= m;
    b >>= 1;
  }
  return r;
}

inline u128 pow_mod(u128 b, u128 e, u128 m) {
  u128 r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

inline bool probable_prime(u128 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    if (n % p == 0) return n == p;
  }
  u128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    u128 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u128 rho(u128 n) {
  for (u128 c = 1;; ++c) {
    u128 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mul_mod(x, x, n) + c) % n;
      y = (mul_mod(y, y, n) + c) % n;
      y = (mul_mod(y, y, n) + c) % n;
      d = gcd128(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

inline void factor_rec(u128 n, std::vector<u128>& out) {
  if (n == 1) return;
  if (probable_prime(n)) {
    out.push_back(n);
    return;
  }
  u128 d = rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

/// Distinct prime factors, ascending.
inline std::vector<u128> prime_factors(u128 n) {
  std::vector<u128> out;
  for (u64 p = 2; p < 100000 && u128(p) * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  factor_rec(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Least prime dividing q^n - 1 but no q^i - 1 (i < n), by factoring q^n - 1
/// completely and testing every prime directly.
inline std::optional<u64> least_primitive_divisor(u64 q, unsigned n) {
  u128 qn = 1;
  for (unsigned i = 0; i < n; ++i) qn *= q;
  for (u128 l : prime_factors(qn - 1)) {
    bool primitive = true;
    for (unsigned i = 1; i < n && primitive; ++i) {
      if (pow_mod(q, i, l) == 1) primitive = false;
    }
    if (primitive) return static_cast<u64>(l);
  }
  return std::nullopt;
}

/// Prime powers up to `bound` from a plain sieve.
inline std::vector<std::pair<u64, unsigned>> prime_powers_upto(u64 bound, std::vector<u64>* primes_out = nullptr) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::pair<u64, unsigned>> pp;  // (p, f) with p^f <= bound
  for (u64 i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    if (primes_out) primes_out->push_back(i);
    for (u64 j = i * i; j <= bound; j += i) composite[j] = true;
    u64 q = i;
    for (unsigned f = 1; q <= bound; ++f) {
      pp.emplace_back(i, f);
      if (q > bound / i) break;
      q *= i;
    }
  }
  return pp;
}

}  // namespace oracle
