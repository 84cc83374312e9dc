#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "charzero/permutation.hpp"

namespace charzero {

inline constexpr std::uint64_t kDefaultMaxOrder = 200000;

struct ConjClass {
  Permutation rep;  // lexicographically least element of the class
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  std::uint64_t centralizer_order = 0;
};

/// A permutation group with every element enumerated.
///
/// Elements live in one flat array indexed 0..order-1 in breadth-first order
/// from the identity (index 0). Classes are sorted by element order, then
/// size, then least representative, so class 0 is the identity.
class FiniteGroup {
 public:
  using Index = std::uint32_t;

  /// Throws OrderBudgetExceeded once more than max_order elements are found.
  static FiniteGroup closure(const std::vector<Permutation>& generators, std::uint64_t max_order = kDefaultMaxOrder,
                             std::size_t degree = 0);

  std::size_t degree() const { return degree_; }
  std::uint64_t order() const { return count_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  std::span<const Point> images(Index i) const { return {store_.data() + std::size_t{i} * degree_, degree_}; }
  Permutation element(Index i) const;
  std::optional<Index> index_of(std::span<const Point> images) const;
  std::optional<Index> index_of(const Permutation& g) const { return index_of(g.span()); }
  bool contains(const Permutation& g) const { return g.degree() == degree_ && index_of(g).has_value(); }

  Index multiply(Index a, Index b) const;
  Index inverse(Index a) const;

  const std::vector<ConjClass>& classes() const { return classes_; }
  std::size_t num_classes() const { return classes_.size(); }
  std::size_t class_of(Index element) const { return class_of_[element]; }
  /// Throws PreconditionViolated if g is not in the group.
  std::size_t class_of(const Permutation& g) const;
  const std::vector<Index>& class_members(std::size_t c) const { return members_[c]; }
  Index class_rep_index(std::size_t c) const { return rep_index_[c]; }

  /// Class of rep^k for every class. Checks a second class member agrees.
  std::vector<std::size_t> power_map(std::int64_t k) const;
  /// Class of rep^k for a single class.
  std::size_t power_class(std::size_t c, std::int64_t k) const;
  std::vector<std::size_t> inverse_classes() const { return power_map(-1); }

  std::uint64_t exponent() const;
  bool is_abelian() const;

 private:
  Index insert(std::span<const Point> images);
  void rehash(std::size_t capacity);
  std::uint64_t hash(const Point* p) const;
  void compute_classes();

  std::size_t degree_ = 0;
  std::uint64_t count_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Point> store_;
  std::vector<Index> table_;  // open addressing; kEmpty marks a free slot
  std::vector<ConjClass> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<Index>> members_;
  std::vector<Index> rep_index_;
};

struct CenterInfo {
  std::vector<FiniteGroup::Index> elements;  // ascending element indices
  std::uint64_t order = 1;
  bool cyclic = true;
  std::optional<std::uint64_t> prime;  // set when order is a nontrivial prime power
};

CenterInfo center(const FiniteGroup& g);

/// Element indices of the smallest normal subgroup containing `seeds`.
std::vector<FiniteGroup::Index> normal_closure(const FiniteGroup& g, const std::vector<FiniteGroup::Index>& seeds);

/// Subgroup generated by the given elements, as ascending element indices.
std::vector<FiniteGroup::Index> subgroup_elements(const FiniteGroup& g, const std::vector<FiniteGroup::Index>& gens);

FiniteGroup derived_subgroup(const FiniteGroup& g, std::uint64_t max_order = kDefaultMaxOrder);

/// Action of G on the right cosets of the normal subgroup N (given by element
/// indices), cosets numbered in order of their least element index.
FiniteGroup quotient(const FiniteGroup& g, const std::vector<FiniteGroup::Index>& normal_subgroup,
                     std::uint64_t max_order = kDefaultMaxOrder);

bool is_normal(const FiniteGroup& g, const std::vector<FiniteGroup::Index>& subgroup);

bool is_simple(const FiniteGroup& g);
bool is_perfect(const FiniteGroup& g);
bool is_quasisimple(const FiniteGroup& g, std::uint64_t max_order = kDefaultMaxOrder);

/// Group file: optional "name <text>" line, "degree <n>", then one generator
/// per line in 0-based cycle notation. '#' starts a comment.
struct GroupFile {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

GroupFile parse_group_file(const std::string& text);
std::string format_group_file(const GroupFile& file);

}  // namespace charzero
