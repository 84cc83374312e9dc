#include <doctest.h>

#include <complex>
#include <random>

#include "charzero/cyclo.hpp"
#include "charzero/errors.hpp"

using namespace charzero;

namespace {

unsigned euler_phi(unsigned m) {
  unsigned r = 0;
  for (unsigned k = 1; k <= m; ++k) {
    unsigned a = k, b = m;
    while (b) {
      unsigned t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) ++r;
  }
  return r;
}

CycloNum random_element(std::mt19937_64& rng, std::uint32_t m) {
  CycloNum::Terms raw;
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < terms; ++i) {
    const long num = static_cast<long>(rng() % 11) - 5;
    const long den = 1 + static_cast<long>(rng() % 3);
    Rational r(num, den);
    r.canonicalize();
    raw[static_cast<std::uint32_t>(rng() % m)] += r;
  }
  return CycloNum::from_terms(m, raw);
}

std::complex<long double> shadow(const CycloNum& a) { return a.evaluate(); }

}  // namespace

TEST_CASE("addition and multiplication examples") {
  const auto z5 = CycloNum::zeta(5);
  CHECK(cyclo_add(z5, CycloNum(0)) == z5);
  const auto z3 = CycloNum::zeta(3);
  CHECK(cyclo_mul(cyclo_mul(z3, z3), z3) == CycloNum(1));
  const auto lhs = CycloNum::zeta(5, 1) + CycloNum::zeta(5, 4);
  const auto rhs = CycloNum::zeta(5, 2) + CycloNum::zeta(5, 3);
  CHECK(lhs * rhs == CycloNum(-1));
  CHECK((lhs * rhs).is_rational());
  CHECK((lhs * rhs).rational_value() == -1);
}

TEST_CASE("conjugation examples") {
  CHECK(cyclo_conj(CycloNum(3)) == CycloNum(3));
  CHECK(cyclo_conj(CycloNum::zeta(7)) == CycloNum::zeta(7, 6));
  const auto a = CycloNum::zeta(5, 1) + CycloNum::zeta(5, 2).scaled(2);
  const auto b = CycloNum::zeta(5, 4) + CycloNum::zeta(5, 3).scaled(2);
  CHECK(cyclo_conj(a) == b);
}

TEST_CASE("zero tests") {
  CHECK(is_zero(CycloNum(0)));
  CHECK(is_zero(CycloNum(1) + CycloNum::zeta(3, 1) + CycloNum::zeta(3, 2)));
  CHECK_FALSE(is_zero(CycloNum::zeta(4)));
  CHECK(is_zero(CycloNum::zeta(4, 1) + CycloNum::zeta(4, 3)));
  // sum of all primitive 12th roots is mu(12) = 0
  CHECK(is_zero(CycloNum::zeta(12, 1) + CycloNum::zeta(12, 5) + CycloNum::zeta(12, 7) + CycloNum::zeta(12, 11)));
}

TEST_CASE("basis has Euler-phi many elements and the sum of all m-th roots is zero") {
  for (std::uint32_t m = 1; m <= 120; ++m) {
    CAPTURE(m);
    CHECK(zumbroich_basis(m).size() == euler_phi(m));
    CycloNum::Terms all;
    for (std::uint32_t e = 0; e < m; ++e) all[e] = 1;
    CHECK(is_zero(CycloNum::from_terms(m, all)) == (m > 1));
    // every zeta^e reduces to a combination of basis exponents only
    const auto basis = zumbroich_basis(m);
    for (std::uint32_t e = 0; e < m; ++e) {
      const auto z = CycloNum::zeta(m, e);
      for (const auto& kv : z.coeffs()) {
        CHECK(std::binary_search(basis.begin(), basis.end(), kv.first));
      }
    }
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint32_t m1 = 1 + static_cast<std::uint32_t>(rng() % 120);
    const std::uint32_t m2 = 1 + static_cast<std::uint32_t>(rng() % 120);
    const std::uint32_t m3 = trial % 3 == 0 ? m1 : 1 + static_cast<std::uint32_t>(rng() % 40);
    const auto a = random_element(rng, m1);
    const auto b = random_element(rng, m2);
    const auto c = random_element(rng, m3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(is_zero(a - a));
    CHECK(cyclo_conj(cyclo_conj(a)) == a);
  }
}

TEST_CASE("embedding round trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng() % 60);
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 8);
    const auto a = random_element(rng, m);
    const auto up = a.embed(m * k);
    CHECK(up.order() == m * k);
    const auto back = up.restrict_to(m);
    REQUIRE(back.has_value());
    CHECK(back->order() == m);
    CHECK(back->coeffs() == a.coeffs());
  }
  // an element that does not lie in the subfield
  CHECK_FALSE(CycloNum::zeta(12).restrict_to(4).has_value());
  CHECK(CycloNum::zeta(12, 3).restrict_to(4).has_value());
}

TEST_CASE("numerical shadow agrees with exact products") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng() % 120);
    const auto a = random_element(rng, m);
    const auto b = random_element(rng, 1 + static_cast<std::uint32_t>(rng() % 60));
    const auto exact = shadow(a * b);
    const auto approx = shadow(a) * shadow(b);
    CHECK(std::abs(exact - approx) < 1e-9L);
    CHECK(std::abs(shadow(a.conj()) - std::conj(shadow(a))) < 1e-9L);
  }
}

TEST_CASE("galois action") {
  const auto z = CycloNum::zeta(15);
  CHECK(z.galois(2) == CycloNum::zeta(15, 2));
  CHECK(z.galois(-1) == z.conj());
  CHECK_THROWS_AS(z.galois(3), PreconditionViolated);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_element(rng, 84);
    const auto b = random_element(rng, 84);
    for (std::int64_t k : {5, 11, 13, 25, 83}) {
      CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
      CHECK((a + b).galois(k) == a.galois(k) + b.galois(k));
    }
  }
}

TEST_CASE("serialization round trip") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_element(rng, 1 + static_cast<std::uint32_t>(rng() % 120));
    const std::string text = a.serialize();
    const auto b = CycloNum::parse(text);
    CHECK(b.order() == a.order());
    CHECK(b.coeffs() == a.coeffs());
    CHECK(b.serialize() == text);
  }
  CHECK(CycloNum(0).serialize() == R"({"m":1,"c":[]})");
  CHECK(CycloNum(Rational(3, 2)).serialize() == R"({"m":1,"c":[[0,3,2]]})");
  CHECK(CycloNum::zeta(3).serialize() == R"({"m":3,"c":[[1,1,1]]})");
  // 1 is not a basis element of Q(zeta_3): 1 = -z - z^2
  CHECK(CycloNum(Rational(1), 3).serialize() == R"({"m":3,"c":[[1,-1,1],[2,-1,1]]})");

  Rational huge(mpz_class("123456789012345678901234567890"), mpz_class(7));
  const auto h = CycloNum(huge);
  CHECK(CycloNum::parse(h.serialize()) == h);

  CHECK_THROWS_AS(CycloNum::parse("{"), ParseError);
  CHECK_THROWS_AS(CycloNum::parse(R"({"m":0,"c":[]})"), ParseError);
  CHECK_THROWS_AS(CycloNum::parse(R"({"m":3,"c":[[3,1,1]]})"), ParseError);
  CHECK_THROWS_AS(CycloNum::parse(R"({"m":3,"c":[[1,1,0]]})"), ParseError);
}

TEST_CASE("accumulator matches repeated addition") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t m = 60;
    CycloAccumulator acc(m);
    CycloNum direct(0);
    for (int i = 0; i < 10; ++i) {
      const auto a = random_element(rng, 12);
      const auto b = random_element(rng, 20);
      Rational s(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
      s.canonicalize();
      acc.add_product(a, b, s);
      direct += (a * b).scaled(s);
    }
    CHECK(acc.value() == direct);
    CHECK(acc.value().order() == m);
  }
}
