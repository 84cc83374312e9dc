#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace charzero::nt {

using BigInt = mpz_class;
using u64 = std::uint64_t;

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n);

/// Probabilistic (25 rounds) primality for big integers; exact below 2^64.
bool is_prime(const BigInt& n);

/// Returns (p, f) with q = p^f, or nullopt. Trial factorization up to sqrt(q).
std::optional<std::pair<u64, unsigned>> prime_power(u64 q);

/// Distinct prime divisors of n in ascending order (trial division).
std::vector<u64> prime_divisors(u64 n);

/// Full factorization of a big integer: ascending (prime, exponent) pairs.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);
u64 powmod(u64 base, u64 exp, u64 mod);

/// Value of the n-th cyclotomic polynomial at q, by dividing q^n - 1 by
/// Phi_d(q) for every proper divisor d of n.
BigInt cyclotomic_poly_value(unsigned n, const BigInt& q);
inline BigInt cyclotomic_poly_value(unsigned n, u64 q) {
  return cyclotomic_poly_value(n, BigInt(static_cast<unsigned long>(q)));
}

/// m || n : m divides n but m^2 does not.
bool exactly_divides(u64 m, u64 n);

/// Multiplicative order of q modulo the prime l. Throws NotCoprime if l | q.
u64 mult_order(u64 q, u64 l);

enum class ZsigmondyException { Q2N6, N2QPlus1Pow2 };

std::string to_string(ZsigmondyException e);

struct ZsigmondyOutcome {
  u64 q = 0;
  unsigned n = 0;
  std::optional<BigInt> prime;
  std::optional<ZsigmondyException> exception;
};

/// Least prime l with l | q^n - 1 and l not dividing q^i - 1 for i < n, or
/// the documented exception. Throws NotPrimePower, PreconditionViolated (n < 2).
ZsigmondyOutcome zsigmondy(u64 q, unsigned n);

enum class LemmaPart { A, B, C };

LemmaPart parse_lemma_part(const std::string& s);
char to_char(LemmaPart part);

/// Strict inequalities on q = p^f:
///   A: q > 11          =>  6f + 1 < (q^2 - q - 2) / 9
///   B: q >= 7, q odd   =>  4f + 1 < (q^2 - 1) / 8
/// Throws PreconditionViolated when the hypothesis on q fails.
bool lemma22_check(u64 p, unsigned f, LemmaPart part);

struct DiophantineSolution {
  u64 q = 0;
  unsigned a = 0, b = 0, c = 0;
};

struct DiophantineSolutionSet {
  LemmaPart part = LemmaPart::A;
  u64 bound = 0;
  std::vector<DiophantineSolution> solutions;  // ascending in q
};

/// Prime powers q <= bound with
///   A: q - 1 = 2^c,        q + 1 = 2^a 3^b   (a >= 1)
///   B: q - 1 = 2^a,        q + 1 = 2^b 5^c   (a >= 1)
///   C: q - 1 = 2^a 5^b,    q + 1 = 2^c       (a >= 1)
DiophantineSolutionSet lemma23_enumerate(LemmaPart part, u64 bound);

/// Lie families with rows in the torus tables.
enum class LieFamily { A, TwistedA, B, C, D, TwistedD, F4, E6, TwistedE6, E7, E8 };

LieFamily parse_lie_family(const std::string& s);
std::string to_string(LieFamily f);

struct TorusOrder {
  std::string label;  // "T1", "T2", "T3"
  BigInt order;
};

struct ZsigmondyLabel {
  std::string label;  // "l1", ...
  unsigned index = 0; // the k in l(k)
  ZsigmondyOutcome outcome;
};

struct TorusReport {
  LieFamily family = LieFamily::A;
  unsigned n = 0;
  u64 q = 0;
  std::vector<TorusOrder> tori;
  std::vector<ZsigmondyLabel> primes;
};

/// Orders of the distinguished maximal tori and their Zsigmondy primes.
/// Throws UnsupportedFamily outside the tabulated rows, NotPrimePower.
TorusReport torus_orders(LieFamily family, unsigned n, u64 q);

/// Order of the finite simply connected group of the given type.
BigInt lie_group_order(LieFamily family, unsigned n, u64 q);

}  // namespace charzero::nt
