#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace charzero {

using Rational = mpq_class;

/// Exact element of the cyclotomic field Q(zeta_m).
///
/// Coefficients are kept on the Zumbroich basis of Q(zeta_m): writing
/// m = prod p^v and splitting an exponent e into its CRT components c_p
/// (zeta_m^e = prod zeta_{p^v}^{c_p}), e is a basis exponent iff for every p
///   p = 2:  the top binary digit of c_p (mod 2^v) is 0,
///   p odd:  the leading digit of c_p is nonzero, where the lower v-1 digits
///           are taken in the balanced range [-(p-1)/2, (p-1)/2].
/// Every field element has exactly one such expansion, so zero testing and
/// equality are syntactic.
class CycloNum {
 public:
  using Terms = std::map<std::uint32_t, Rational>;

  CycloNum() = default;
  CycloNum(long value);  // NOLINT(google-explicit-constructor)
  explicit CycloNum(const Rational& value, std::uint32_t order = 1);

  /// zeta_m^e, reduced.
  static CycloNum zeta(std::uint32_t m, std::int64_t e = 1);

  /// Sum of coeff * zeta_m^exp over raw (possibly non-basis) exponents.
  static CycloNum from_terms(std::uint32_t m, const Terms& raw);

  std::uint32_t order() const { return order_; }
  const Terms& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const;
  /// The value as a rational; throws if the element is not rational.
  Rational rational_value() const;
  /// True when every basis coefficient is an integer.
  bool has_integral_coeffs() const;

  /// Image in Q(zeta_target); target must be a multiple of order().
  CycloNum embed(std::uint32_t target) const;
  /// Preimage in Q(zeta_target) when the element lies in that subfield.
  std::optional<CycloNum> restrict_to(std::uint32_t target) const;

  /// Complex conjugate (zeta -> zeta^-1).
  CycloNum conj() const;
  /// Galois automorphism zeta -> zeta^k, gcd(k, order) = 1.
  CycloNum galois(std::int64_t k) const;

  std::complex<long double> evaluate() const;

  CycloNum& operator+=(const CycloNum& rhs);
  CycloNum& operator-=(const CycloNum& rhs);
  CycloNum& operator*=(const CycloNum& rhs);
  CycloNum operator-() const;
  CycloNum scaled(const Rational& r) const;

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  /// Field equality; mixed orders are compared inside Q(zeta_lcm).
  friend bool operator==(const CycloNum& a, const CycloNum& b);

  /// {"m":m,"c":[[e,num,den],...]}, exponents ascending.
  std::string serialize() const;
  static CycloNum parse(const std::string& text);

  std::string to_string() const;

 private:
  CycloNum(std::uint32_t order, Terms reduced) : order_(order), coeffs_(std::move(reduced)) {}

  std::uint32_t order_ = 1;
  Terms coeffs_;
};

inline bool is_zero(const CycloNum& a) { return a.is_zero(); }
inline CycloNum cyclo_add(const CycloNum& a, const CycloNum& b) { return a + b; }
inline CycloNum cyclo_mul(const CycloNum& a, const CycloNum& b) { return a * b; }
inline CycloNum cyclo_conj(const CycloNum& a) { return a.conj(); }

/// Unreduced sum of products in a fixed Q(zeta_m); reduction happens once in
/// value(). Used for orthogonality sums.
class CycloAccumulator {
 public:
  explicit CycloAccumulator(std::uint32_t order);
  void add_product(const CycloNum& a, const CycloNum& b, const Rational& scale = 1);
  void add(const CycloNum& a, const Rational& scale = 1);
  CycloNum value() const;

 private:
  std::uint32_t order_;
  std::vector<Rational> dense_;
};

/// Basis exponents of Q(zeta_m) in ascending order.
std::vector<std::uint32_t> zumbroich_basis(std::uint32_t m);

}  // namespace charzero
