#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace charzero {

using Point = std::uint16_t;

/// Bijection of {0, ..., n-1}. Composition reads left to right:
/// (a * b)[i] = b[a[i]], i.e. apply a first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// Throws PreconditionViolated unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Product of disjoint or overlapping cycles, applied left to right.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }
  std::span<const Point> span() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;
  bool is_identity() const;

  /// Cycle notation with 0-based points, "()" for the identity.
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

/// lcm of the cycle lengths.
std::uint64_t element_order(const Permutation& g);

/// Parses "(0 1 2)(3 4)" style text; "()" is the identity. Commas may
/// separate points. Rejects repeated points and points >= degree.
Permutation parse_cycles(const std::string& text, std::size_t degree);

}  // namespace charzero
