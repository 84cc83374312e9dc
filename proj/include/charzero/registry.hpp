#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "charzero/constructions.hpp"

namespace charzero {

struct Expectations {
  std::map<std::string, std::vector<std::uint64_t>> star;
  std::map<std::string, std::vector<std::uint64_t>> one_class;
  std::map<std::string, std::vector<std::uint64_t>> simple_one_class;
  std::map<std::string, std::vector<std::uint64_t>> two_prime_exceptions;
  std::map<std::string, std::string> notes;
};

/// Named groups and the expected results attached to them. Read-only once
/// loaded; the group order is the file order.
class Registry {
 public:
  /// Throws ParseError (message carries the file and line).
  static Registry parse(const std::string& groups_text, const std::string& expectations_text);
  /// Reads groups.txt and expectations.txt from `dir`.
  static Registry load_dir(const std::filesystem::path& dir);
  /// The copy compiled into the binary from data/.
  static const Registry& builtin();

  const std::vector<GroupRecipe>& groups() const { return groups_; }
  const Expectations& expectations() const { return expectations_; }

  /// Lookup by name or alias, ignoring spaces; nullptr when absent.
  const GroupRecipe* find(const std::string& name) const;
  /// find(), then the parameterised families. Throws Unsupported.
  GroupRecipe resolve(const std::string& name) const;
  std::vector<const GroupRecipe*> corpus() const;

 private:
  std::vector<GroupRecipe> groups_;
  Expectations expectations_;
};

}  // namespace charzero
