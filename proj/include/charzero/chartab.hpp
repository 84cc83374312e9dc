#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "charzero/cyclo.hpp"
#include "charzero/group.hpp"

namespace charzero {

inline constexpr std::size_t kDefaultMaxClasses = 64;

/// Class multiplication constants c_ijk = #{(x, y) in C_i x C_j : xy = g_k},
/// g_k the representative of class k.
class ClassTensor {
 public:
  using Entry = std::pair<std::uint32_t, std::uint64_t>;  // (k, c_ijk), c_ijk > 0

  explicit ClassTensor(const FiniteGroup& g);

  std::size_t num_classes() const { return r_; }
  /// Nonzero constants for fixed (i, j), ascending k.
  const std::vector<Entry>& row(std::size_t i, std::size_t j) const { return rows_[i * r_ + j]; }
  std::uint64_t at(std::size_t i, std::size_t j, std::size_t k) const;

 private:
  std::size_t r_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

struct ClassSummary {
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  std::uint64_t centralizer_order = 0;
  std::string rep;  // cycle notation
};

struct Character {
  std::uint64_t degree = 0;
  std::vector<CycloNum> values;  // indexed by class, all in Q(zeta_m)
};

struct CharacterTable {
  std::string group;
  std::uint64_t order = 0;
  std::uint32_t m = 1;     // exponent of the group
  std::uint64_t prime = 0;  // working prime of the modular computation
  std::uint64_t seed = 0;
  std::vector<ClassSummary> classes;
  std::vector<Character> chars;  // row 0 is the trivial character
};

struct TableOptions {
  std::uint64_t seed = 0;
  std::size_t max_classes = kDefaultMaxClasses;
  std::string name;
};

/// Dixon-Schneider. Rows are sorted by degree, the trivial character first,
/// then by the serialized entries. The result has been verified exactly.
/// Throws BudgetExceeded, Degenerate, ValidationFailed.
CharacterTable character_table(const FiniteGroup& g, const TableOptions& opts = {});

/// Least prime l = 1 mod exponent with l > 2 sqrt(order).
std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent);

/// Orders rows canonically in place.
void canonicalize_rows(CharacterTable& t);

struct VerifyReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Row and column orthogonality, degree sum, integrality, class data.
VerifyReport verify_table(const CharacterTable& t);

/// Classes on which the character equals its degree.
std::vector<std::size_t> kernel_of(const CharacterTable& t, std::size_t row);
bool is_faithful(const CharacterTable& t, std::size_t row);

/// Versioned text format; write(read(s)) == s for every s read successfully.
std::string write_table(const CharacterTable& t);
CharacterTable read_table(const std::string& text);  // throws ParseError

}  // namespace charzero
