#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charzero/field.hpp"
#include "charzero/group.hpp"

namespace charzero {

enum class RecipeSource { ProjectiveLine, LinearAction, DataGenerators };

std::string to_string(RecipeSource s);
RecipeSource parse_recipe_source(const std::string& s);

/// How to build one named group and what it must look like afterwards.
struct GroupRecipe {
  std::string name;
  std::vector<std::string> aliases;
  RecipeSource source = RecipeSource::DataGenerators;
  std::string family;  // builder key, see build()
  std::uint64_t q = 0;
  unsigned n = 0;
  std::size_t degree = 0;               // data generators only
  std::vector<std::string> generators;  // data generators, cycle notation
  std::uint64_t expected_order = 0;
  std::uint64_t expected_out_order = 0;
  std::optional<std::uint64_t> expected_center;
  std::optional<std::uint64_t> expected_derived;
  std::optional<bool> expect_quasisimple;
  std::optional<std::uint64_t> outer_involutions;  // involutions outside the derived subgroup
  std::string note;
  std::vector<std::string> tags;
};

/// Families on the projective line / natural modules; 4 <= q <= 32.
FiniteGroup psl2(std::uint64_t q);
FiniteGroup sl2(std::uint64_t q);
FiniteGroup pgl2(std::uint64_t q);
/// 5 <= n <= 9.
FiniteGroup alternating(unsigned n);
FiniteGroup cyclic(unsigned n);

/// Builds the recipe's group and runs its validation hooks.
/// Throws ValidationFailed, OrderBudgetExceeded, Unsupported.
FiniteGroup build(const GroupRecipe& recipe, std::uint64_t max_order = kDefaultMaxOrder);

/// |Out(M/Z(M))| recorded for the recipe. Throws Unsupported when unknown.
std::uint64_t out_order(const GroupRecipe& recipe);

/// Recipes for the parameterised families, e.g. "PSL(2,11)", "A7", "C5".
std::optional<GroupRecipe> family_recipe(const std::string& name);

/// Generators of the fixed groups, each built from its geometry.
std::vector<Permutation> suzuki8_generators(bool with_field_automorphism);
std::vector<Permutation> psu3_4_generators();
std::vector<Permutation> three_a6_generators(bool with_outer_2_3);
std::vector<Permutation> psl2_8_3_generators();
std::vector<Permutation> a6_2_3_generators();

}  // namespace charzero
