#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "charzero/chartab.hpp"
#include "charzero/registry.hpp"
#include "charzero/vanishing.hpp"

namespace charzero {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::uint64_t max_order = kDefaultMaxOrder;
  std::size_t max_classes = kDefaultMaxClasses;
  std::vector<std::string> only;  // restrict to these names; empty means the whole corpus
};

/// Everything the suite learns about one corpus group.
struct GroupResult {
  std::string name;
  std::uint64_t order = 0;
  std::size_t degree = 0;
  std::size_t num_classes = 0;
  std::uint64_t center_order = 0;
  std::uint64_t out_order = 0;
  bool abelian = false;
  bool simple = false;
  std::string error;  // set when building or tabulating failed
  std::optional<CharacterTable> table;
  VerifyReport verify;
  BurnsideReport burnside;
  TwoPrimeReport two_prime;
  std::vector<StarReport> star;  // every row
  std::vector<std::uint64_t> star_degrees;
  std::optional<std::vector<std::uint64_t>> star_expected;
  bool star_ok = true;
  std::optional<OneClassReport> one_class;
  std::string note;
};

struct SuiteResult {
  std::vector<GroupResult> groups;  // sorted by name
  CorollaryReport corollary;

  bool tables_ok() const;
  bool star_ok() const;
  bool one_class_ok() const;
  bool burnside_ok() const;
  bool two_prime_ok() const;
  bool ok() const;
};

/// Full analysis of one recipe. Failures are recorded in `error`.
GroupResult analyse_group(const GroupRecipe& recipe, const Expectations& exp, const SuiteOptions& opts);

SuiteResult run_suite(const Registry& registry, const SuiteOptions& opts);

/// Writes one .tbl file per group plus report.txt and report.json.
void write_suite_files(const SuiteResult& result, const std::filesystem::path& dir);

/// File name used for a group's table, e.g. "PSL(2,7)" -> "PSL_2_7.tbl".
std::string table_file_name(const std::string& group);

}  // namespace charzero
