#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace charzero {

/// Finite field F_q, q = p^f <= 2^16, defined by the Conway polynomial.
///
/// An element a_0 + a_1 x + ... + a_{f-1} x^{f-1} is encoded as the integer
/// sum a_i p^i, so 0 and 1 are the field's zero and one and the encodings
/// 0..q-1 give the canonical enumeration of the field.
class FqField {
 public:
  using Elt = std::uint32_t;

  /// Builds the field from a monic modulus (coefficients low to high) whose
  /// root x must be primitive. Used by gf() and by the polynomial search.
  FqField(std::uint32_t p, unsigned f, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  unsigned f() const { return f_; }
  std::uint32_t q() const { return q_; }
  /// Monic, coefficients low to high, length f + 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;  // throws PreconditionViolated on 0
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, std::int64_t k) const;
  Elt frobenius(Elt a) const { return pow(a, p_); }

  /// The class of x: a generator of the multiplicative group.
  Elt primitive() const { return exp_[1 % (q_ - 1)]; }
  Elt exp(std::uint32_t k) const { return exp_[k % (q_ - 1)]; }
  /// Discrete log base primitive(); throws on 0.
  std::uint32_t log(Elt a) const;

  std::vector<std::uint32_t> coeffs(Elt a) const;
  Elt from_coeffs(const std::vector<std::uint32_t>& c) const;
  Elt from_int(std::int64_t n) const;

  std::string to_string(Elt a) const;

 private:
  std::uint32_t p_, q_;
  unsigned f_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elt> exp_;            // exp_[k] = x^k, k < q - 1
  std::vector<std::uint32_t> log_;  // log_[a], a != 0
};

/// F_{p^f}. Throws NotPrime, TooLarge (p^f > 2^16), PreconditionViolated (f = 0).
const FqField& gf(std::uint64_t p, unsigned f);

/// Conway polynomial for (p, f): shipped table first, otherwise the least
/// compatible primitive polynomial in Conway order, found by search.
std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, unsigned f);

/// The search alone, ignoring the shipped table.
std::vector<std::uint32_t> search_conway_polynomial(std::uint32_t p, unsigned f);

/// True when the shipped table has an entry for (p, f).
bool conway_table_has(std::uint32_t p, unsigned f);

}  // namespace charzero
