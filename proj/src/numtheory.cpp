#include "charzero/numtheory.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>

#include "charzero/errors.hpp"

namespace charzero::nt {

namespace {

using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

bool is_power_of_two(u64 x) { return x != 0 && (x & (x - 1)) == 0; }

// Strips every factor of `prime` from x and returns the exponent.
unsigned strip(u64& x, u64 prime) {
  unsigned e = 0;
  while (x % prime == 0) {
    x /= prime;
    ++e;
  }
  return e;
}

BigInt to_big(u64 x) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
  return r;
}

BigInt big_pow(u64 base, unsigned e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), to_big(base).get_mpz_t(), e);
  return r;
}

BigInt pollard_brent(const BigInt& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  BigInt y = seed % 97 + 2, c = seed % 89 + 1, g = 1, r = 1, q = 1, x, ys;
  const unsigned long m = 128;
  auto f = [&](const BigInt& v) {
    BigInt t = v * v + c;
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    return t;
  };
  do {
    x = y;
    for (BigInt i = 0; i < r; ++i) y = f(y);
    BigInt k = 0;
    do {
      ys = y;
      for (unsigned long i = 0; i < m && k + i < r; ++i) {
        y = f(y);
        BigInt d = x - y;
        mpz_abs(d.get_mpz_t(), d.get_mpz_t());
        q = q * d;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      BigInt d = x - ys;
      mpz_abs(d.get_mpz_t(), d.get_mpz_t());
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (unsigned long seed = 1;; ++seed) {
    BigInt d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      factor_into(d, out);
      factor_into(BigInt(n / d), out);
      return;
    }
  }
}

}  // namespace

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm(u64 a, u64 b) { return a == 0 || b == 0 ? 0 : a / gcd(a, b) * b; }

u64 powmod(u64 base, u64 exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime(static_cast<u64>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 25) > 0;
}

std::optional<std::pair<u64, unsigned>> prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  for (u64 d = 2; d <= q / d; ++d) {
    if (q % d == 0) {
      u64 rest = q;
      unsigned f = strip(rest, d);
      if (rest != 1) return std::nullopt;
      return std::make_pair(d, f);
    }
  }
  return std::make_pair(q, 1u);
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      strip(n, d);
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
  std::map<BigInt, unsigned> acc;
  BigInt rest = n;
  for (unsigned long p = 2; p < 10000 && rest > 1; ++p) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++acc[BigInt(p)];
      rest /= p;
    }
    if (BigInt(p) * p > rest) break;
  }
  factor_into(rest, acc);
  return {acc.begin(), acc.end()};
}

BigInt cyclotomic_poly_value(unsigned n, const BigInt& q) {
  if (n == 0) throw PreconditionViolated("cyclotomic_poly_value: n must be >= 1");
  if (q < 2) throw PreconditionViolated("cyclotomic_poly_value: q must be >= 2");
  std::map<unsigned, BigInt> phi;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    BigInt v;
    mpz_pow_ui(v.get_mpz_t(), q.get_mpz_t(), d);
    v -= 1;
    for (const auto& [e, val] : phi) {
      if (d % e == 0) v /= val;
    }
    phi[d] = v;
  }
  return phi[n];
}

bool exactly_divides(u64 m, u64 n) {
  if (m == 0 || n == 0) throw PreconditionViolated("exactly_divides: arguments must be >= 1");
  if (n % m != 0) return false;
  u64 rest = n / m;
  return rest % m != 0;
}

u64 mult_order(u64 q, u64 l) {
  if (!is_prime(l)) throw PreconditionViolated("mult_order: modulus must be prime");
  if (q % l == 0) throw NotCoprime("mult_order: " + std::to_string(l) + " divides " + std::to_string(q));
  u64 order = l - 1;
  for (u64 r : prime_divisors(l - 1)) {
    while (order % r == 0 && powmod(q, order / r, l) == 1) order /= r;
  }
  return order;
}

std::string to_string(ZsigmondyException e) {
  switch (e) {
    case ZsigmondyException::Q2N6:
      return "Q2N6";
    case ZsigmondyException::N2QPlus1Pow2:
      return "N2_QPLUS1_POW2";
  }
  return "?";
}

ZsigmondyOutcome zsigmondy(u64 q, unsigned n) {
  if (n < 2) throw PreconditionViolated("zsigmondy: n must be >= 2");
  if (!prime_power(q)) throw NotPrimePower("zsigmondy: " + std::to_string(q) + " is not a prime power");
  ZsigmondyOutcome out{q, n, std::nullopt, std::nullopt};
  if (q == 2 && n == 6) {
    out.exception = ZsigmondyException::Q2N6;
    return out;
  }
  if (n == 2 && is_power_of_two(q + 1)) {
    out.exception = ZsigmondyException::N2QPlus1Pow2;
    return out;
  }
  // Prime divisors of Phi_n(q) are either divisors of n or primitive.
  BigInt value = cyclotomic_poly_value(n, q);
  for (u64 r : prime_divisors(n)) {
    while (mpz_divisible_ui_p(value.get_mpz_t(), r)) value /= static_cast<unsigned long>(r);
  }
  if (value == 1) throw Error("zsigmondy: no primitive divisor outside the exceptional cases");
  out.prime = factorize(value).front().first;
  return out;
}

LemmaPart parse_lemma_part(const std::string& s) {
  if (s.size() == 1) {
    switch (std::tolower(static_cast<unsigned char>(s[0]))) {
      case 'a':
        return LemmaPart::A;
      case 'b':
        return LemmaPart::B;
      case 'c':
        return LemmaPart::C;
      default:
        break;
    }
  }
  throw ParseError("unknown part '" + s + "' (expected a, b or c)");
}

char to_char(LemmaPart part) {
  switch (part) {
    case LemmaPart::A:
      return 'a';
    case LemmaPart::B:
      return 'b';
    case LemmaPart::C:
      return 'c';
  }
  return '?';
}

bool lemma22_check(u64 p, unsigned f, LemmaPart part) {
  if (!is_prime(p)) throw PreconditionViolated("lemma22_check: p must be prime");
  if (f == 0) throw PreconditionViolated("lemma22_check: f must be >= 1");
  BigInt q = big_pow(p, f);
  // (q^2 - q - 2) / 9 > 6f + 1  <=>  q^2 - q - 2 > 9 (6f + 1), exact.
  switch (part) {
    case LemmaPart::A:
      if (q <= 11) throw PreconditionViolated("lemma22_check(a): requires q > 11");
      return BigInt(9 * (6 * static_cast<unsigned long>(f) + 1)) < q * q - q - 2;
    case LemmaPart::B:
      if (q < 7 || mpz_even_p(q.get_mpz_t()))
        throw PreconditionViolated("lemma22_check(b): requires q >= 7 odd");
      return BigInt(8 * (4 * static_cast<unsigned long>(f) + 1)) < q * q - 1;
    case LemmaPart::C:
      break;
  }
  throw PreconditionViolated("lemma22_check: part must be a or b");
}

DiophantineSolutionSet lemma23_enumerate(LemmaPart part, u64 bound) {
  DiophantineSolutionSet set{part, bound, {}};
  if (bound < 2) return set;
  // Smallest-prime-factor sieve for prime power recognition.
  std::vector<std::uint32_t> spf(bound + 1, 0);
  for (u64 i = 2; i <= bound; ++i) {
    if (spf[i] != 0) continue;
    for (u64 j = i; j <= bound; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  auto is_prime_power = [&](u64 q) {
    u64 p = spf[q];
    while (q % p == 0) q /= p;
    return q == 1;
  };
  for (u64 q = 2; q <= bound; ++q) {
    if (!is_prime_power(q)) continue;
    u64 lo = q - 1, hi = q + 1;
    DiophantineSolution s{q, 0, 0, 0};
    bool ok = false;
    switch (part) {
      case LemmaPart::A: {
        s.c = strip(lo, 2);
        s.a = strip(hi, 2);
        s.b = strip(hi, 3);
        ok = lo == 1 && hi == 1 && s.a >= 1;
        break;
      }
      case LemmaPart::B: {
        s.a = strip(lo, 2);
        s.b = strip(hi, 2);
        s.c = strip(hi, 5);
        ok = lo == 1 && hi == 1 && s.a >= 1;
        break;
      }
      case LemmaPart::C: {
        s.a = strip(lo, 2);
        s.b = strip(lo, 5);
        s.c = strip(hi, 2);
        ok = lo == 1 && hi == 1 && s.a >= 1;
        break;
      }
    }
    if (ok) set.solutions.push_back(s);
  }
  return set;
}

LieFamily parse_lie_family(const std::string& raw) {
  std::string s;
  for (char ch : raw) {
    if (ch != '_' && ch != '^' && ch != ' ') s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  }
  static const std::map<std::string, LieFamily> kNames{
      {"A", LieFamily::A},        {"2A", LieFamily::TwistedA}, {"B", LieFamily::B},
      {"C", LieFamily::C},        {"D", LieFamily::D},         {"2D", LieFamily::TwistedD},
      {"F4", LieFamily::F4},      {"E6", LieFamily::E6},       {"2E6", LieFamily::TwistedE6},
      {"E7", LieFamily::E7},      {"E8", LieFamily::E8}};
  auto it = kNames.find(s);
  if (it == kNames.end()) throw UnsupportedFamily("unknown Lie family '" + raw + "'");
  return it->second;
}

std::string to_string(LieFamily f) {
  switch (f) {
    case LieFamily::A:
      return "A";
    case LieFamily::TwistedA:
      return "2A";
    case LieFamily::B:
      return "B";
    case LieFamily::C:
      return "C";
    case LieFamily::D:
      return "D";
    case LieFamily::TwistedD:
      return "2D";
    case LieFamily::F4:
      return "F4";
    case LieFamily::E6:
      return "E6";
    case LieFamily::TwistedE6:
      return "2E6";
    case LieFamily::E7:
      return "E7";
    case LieFamily::E8:
      return "E8";
  }
  return "?";
}

TorusReport torus_orders(LieFamily family, unsigned n, u64 q) {
  if (!prime_power(q)) throw NotPrimePower("torus_orders: " + std::to_string(q) + " is not a prime power");
  TorusReport rep{family, n, q, {}, {}};
  const BigInt Q = to_big(q);
  auto pw = [&](unsigned k) { return big_pow(q, k); };
  auto phi = [&](unsigned k) { return cyclotomic_poly_value(k, Q); };
  auto unsupported = [&]() {
    return UnsupportedFamily("no torus row for " + to_string(family) + "_" + std::to_string(n));
  };
  std::vector<BigInt> tori;
  std::vector<unsigned> ls;
  const bool odd = n % 2 == 1;
  switch (family) {
    case LieFamily::A:
      if (n < 2) throw unsupported();
      tori = {BigInt((pw(n + 1) - 1) / (Q - 1)), BigInt(pw(n) - 1)};
      ls = {n + 1, n};
      break;
    case LieFamily::TwistedA:
      if (odd && n >= 3) {
        tori = {BigInt((pw(n + 1) - 1) / (Q + 1)), BigInt(pw(n) + 1)};
        ls = {n + 1, 2 * n};
      } else if (!odd && n >= 2) {
        tori = {BigInt((pw(n + 1) + 1) / (Q + 1)), BigInt(pw(n) - 1)};
        ls = {2 * n + 2, n};
      } else {
        throw unsupported();
      }
      break;
    case LieFamily::B:
    case LieFamily::C:
      if (odd && n >= 3) {
        tori = {BigInt(pw(n) + 1), BigInt(pw(n) - 1)};
        ls = {2 * n, n};
      } else if (!odd && n >= 2) {
        tori = {BigInt(pw(n) + 1), BigInt((pw(n - 1) + 1) * (Q + 1))};
        ls = {2 * n, 2 * n - 2};
      } else {
        throw unsupported();
      }
      break;
    case LieFamily::D:
      if (odd && n >= 5) {
        // The printed second entry has an unbalanced parenthesis; read as
        // (q^{n-1} + 1)(q + 1) like the even row.
        tori = {BigInt(pw(n) - 1), BigInt((pw(n - 1) + 1) * (Q + 1))};
        ls = {n, 2 * n - 2};
      } else if (!odd && n >= 4) {
        tori = {BigInt((pw(n - 1) - 1) * (Q - 1)), BigInt((pw(n - 1) + 1) * (Q + 1))};
        ls = {n - 1, 2 * n - 2};
      } else {
        throw unsupported();
      }
      break;
    case LieFamily::TwistedD:
      if (n < 4) throw unsupported();
      tori = {BigInt(pw(n) + 1), BigInt((pw(n - 1) + 1) * (Q - 1))};
      ls = {2 * n, 2 * n - 2};
      break;
    case LieFamily::F4:
      if (n != 4) throw unsupported();
      tori = {phi(12), phi(8)};
      ls = {12, 8};
      break;
    case LieFamily::E6:
      if (n != 6) throw unsupported();
      tori = {BigInt(phi(12) * phi(3)), phi(9), BigInt(phi(8) * phi(2) * phi(1))};
      ls = {12, 9, 8};
      break;
    case LieFamily::TwistedE6:
      if (n != 6) throw unsupported();
      tori = {phi(18), BigInt(phi(12) * phi(6)), BigInt(phi(8) * phi(2) * phi(1))};
      ls = {18, 12, 8};
      break;
    case LieFamily::E7:
      if (n != 7) throw unsupported();
      tori = {BigInt(phi(18) * phi(2)), BigInt(phi(14) * phi(2)), BigInt(phi(12) * phi(3) * phi(1))};
      ls = {18, 14, 12};
      break;
    case LieFamily::E8:
      if (n != 8) throw unsupported();
      tori = {phi(30), phi(24), phi(20)};
      ls = {30, 24, 20};
      break;
  }
  for (std::size_t i = 0; i < tori.size(); ++i) {
    rep.tori.push_back({"T" + std::to_string(i + 1), tori[i]});
  }
  for (std::size_t i = 0; i < ls.size(); ++i) {
    rep.primes.push_back({"l" + std::to_string(i + 1), ls[i], zsigmondy(q, ls[i])});
  }
  return rep;
}

BigInt lie_group_order(LieFamily family, unsigned n, u64 q) {
  auto pw = [&](unsigned k) { return big_pow(q, k); };
  auto product = [&](std::initializer_list<int> signed_degrees) {
    BigInt r = 1;
    for (int d : signed_degrees) r *= d > 0 ? BigInt(pw(d) - 1) : BigInt(pw(-d) + 1);
    return r;
  };
  BigInt r = 1;
  switch (family) {
    case LieFamily::A:
      r = pw(n * (n + 1) / 2);
      for (unsigned i = 2; i <= n + 1; ++i) r *= pw(i) - 1;
      return r;
    case LieFamily::TwistedA:
      r = pw(n * (n + 1) / 2);
      for (unsigned i = 2; i <= n + 1; ++i) r *= i % 2 == 0 ? BigInt(pw(i) - 1) : BigInt(pw(i) + 1);
      return r;
    case LieFamily::B:
    case LieFamily::C:
      r = pw(n * n);
      for (unsigned i = 1; i <= n; ++i) r *= pw(2 * i) - 1;
      return r;
    case LieFamily::D:
    case LieFamily::TwistedD:
      r = pw(n * (n - 1));
      r *= family == LieFamily::D ? BigInt(pw(n) - 1) : BigInt(pw(n) + 1);
      for (unsigned i = 1; i < n; ++i) r *= pw(2 * i) - 1;
      return r;
    case LieFamily::F4:
      return pw(24) * product({2, 6, 8, 12});
    case LieFamily::E6:
      return pw(36) * product({2, 5, 6, 8, 9, 12});
    case LieFamily::TwistedE6:
      return pw(36) * product({2, -5, 6, 8, -9, 12});
    case LieFamily::E7:
      return pw(63) * product({2, 6, 8, 10, 12, 14, 18});
    case LieFamily::E8:
      return pw(120) * product({2, 8, 12, 14, 18, 20, 24, 30});
  }
  return r;
}

}  // namespace charzero::nt
