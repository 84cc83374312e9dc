#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charzero/chartab.hpp"
#include "charzero/group.hpp"

namespace charzero {

/// Classes where the character is exactly zero.
std::vector<std::size_t> vanishing_classes(const CharacterTable& t, std::size_t row);

struct StarReport {
  std::string group;
  std::size_t row = 0;
  std::uint64_t degree = 0;
  std::vector<std::size_t> vanishing;
  std::vector<std::uint64_t> vanishing_orders;  // element orders, same order as `vanishing`
  bool faithful = false;
  std::optional<std::uint64_t> p;
  bool cond_i = false, cond_ii = false, cond_iii = false;
  std::string why_i, why_ii, why_iii;
  bool holds = false;
};

/// The three conditions of (*) for one row. `out_order` is |Out(M/Z(M))|;
/// nullopt drops the bound of condition (ii).
StarReport star_check(const FiniteGroup& g, const CharacterTable& t, std::size_t row,
                      std::optional<std::uint64_t> out_order);

struct BurnsideReport {
  std::vector<std::size_t> violators;  // rows of degree > 1 vanishing nowhere
  bool ok() const { return violators.empty(); }
};

BurnsideReport burnside_check(const CharacterTable& t);

struct TwoPrimeFlag {
  std::size_t row = 0;
  std::uint64_t degree = 0;
  std::size_t vanishing_class = 0;
  bool excused = false;
};

struct TwoPrimeReport {
  std::string group;
  std::vector<TwoPrimeFlag> flags;
  std::string annotation;
  bool ok() const;
};

/// Flags rows whose degree has two distinct prime divisors and which vanish
/// on exactly one class. A flag is excused when its degree is listed in
/// `excused_degrees` for this group. Primitivity is not computed.
TwoPrimeReport two_prime_check(const CharacterTable& t, const std::vector<std::uint64_t>& excused_degrees);

struct OneClassRow {
  std::size_t row = 0;
  std::uint64_t degree = 0;
  std::size_t num_vanishing = 0;
  bool faithful = false;
};

struct OneClassReport {
  std::string group;
  std::vector<OneClassRow> rows;
  std::vector<OneClassRow> one_class_rows;  // exactly one vanishing class
  std::vector<std::uint64_t> faithful_degrees;  // distinct, ascending
  std::optional<std::vector<std::uint64_t>> expected;
  std::optional<bool> match;  // absent when nothing is expected
  std::string note;
};

OneClassReport classify_one_class(const CharacterTable& t, const std::optional<std::vector<std::uint64_t>>& expected);

struct SimpleOneClassEntry {
  std::string group;
  std::vector<std::uint64_t> degrees;   // distinct degrees of one-class rows
  std::vector<std::uint64_t> expected;  // empty when the group is not listed
  bool match = false;
};

struct CorollaryReport {
  std::vector<SimpleOneClassEntry> entries;
  bool ok() const;
};

/// `tables` must all belong to non-abelian simple groups.
CorollaryReport corollary_check(const std::vector<const CharacterTable*>& tables,
                                const std::vector<std::vector<std::uint64_t>>& expected);

/// Distinct degrees of faithful rows satisfying (*).
std::vector<std::uint64_t> star_degrees(const FiniteGroup& g, const CharacterTable& t, std::optional<std::uint64_t> out_order);

}  // namespace charzero
