#include "charzero/registry.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "charzero/errors.hpp"
#include "registry_data.hpp"

namespace charzero {

namespace {

std::string squash(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) r.push_back(c);
  }
  return r;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct LineError {
  std::string file;
  std::size_t line;
  [[noreturn]] void operator()(const std::string& msg) const {
    throw ParseError(file + ":" + std::to_string(line) + ": " + msg);
  }
};

std::uint64_t to_u64(const std::string& v, const LineError& err) {
  if (v.empty() || v.size() > 18 || v.find_first_not_of("0123456789") != std::string::npos)
    err("expected a non-negative integer, got '" + v + "'");
  return std::stoull(v);
}

bool to_bool(const std::string& v, const LineError& err) {
  if (v == "yes" || v == "true") return true;
  if (v == "no" || v == "false") return false;
  err("expected yes or no, got '" + v + "'");
}

std::vector<GroupRecipe> parse_groups(const std::string& text) {
  std::vector<GroupRecipe> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  GroupRecipe* cur = nullptr;
  while (std::getline(in, raw)) {
    ++lineno;
    const LineError err{"groups.txt", lineno};
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) err("malformed section header");
      out.emplace_back();
      cur = &out.back();
      cur->name = line.substr(1, line.size() - 2);
      continue;
    }
    if (!cur) err("entry outside a [group] block");
    const auto sp = line.find_first_of(" \t");
    const std::string key = line.substr(0, sp);
    const std::string val = sp == std::string::npos ? "" : trim(line.substr(sp));
    if (val.empty()) err("missing value for '" + key + "'");
    if (key == "alias") {
      cur->aliases.push_back(val);
    } else if (key == "source") {
      try {
        cur->source = parse_recipe_source(val);
      } catch (const ParseError& e) {
        err(e.what());
      }
    } else if (key == "family") {
      cur->family = val;
    } else if (key == "q") {
      cur->q = to_u64(val, err);
    } else if (key == "n") {
      cur->n = static_cast<unsigned>(to_u64(val, err));
    } else if (key == "degree") {
      cur->degree = to_u64(val, err);
    } else if (key == "gen") {
      cur->generators.push_back(val);
    } else if (key == "order") {
      cur->expected_order = to_u64(val, err);
    } else if (key == "out") {
      cur->expected_out_order = to_u64(val, err);
    } else if (key == "center") {
      cur->expected_center = to_u64(val, err);
    } else if (key == "derived") {
      cur->expected_derived = to_u64(val, err);
    } else if (key == "quasisimple") {
      cur->expect_quasisimple = to_bool(val, err);
    } else if (key == "outer_involutions") {
      cur->outer_involutions = to_u64(val, err);
    } else if (key == "note") {
      cur->note = val;
    } else if (key == "corpus") {
      if (to_bool(val, err)) cur->tags.push_back("corpus");
    } else {
      err("unknown key '" + key + "'");
    }
  }
  for (const auto& r : out) {
    if (r.family.empty()) throw ParseError("groups.txt: [" + r.name + "] has no family");
    if (r.family == "DATA" && (r.degree == 0 || r.generators.empty()))
      throw ParseError("groups.txt: [" + r.name + "] needs degree and gen lines");
  }
  return out;
}

Expectations parse_expectations(const std::string& text) {
  Expectations e;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const LineError err{"expectations.txt", lineno};
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string key, name;
    words >> key >> name;
    if (name.empty()) err("missing group name");
    if (key == "note") {
      std::string rest;
      std::getline(words, rest);
      e.notes[name] = trim(rest);
      continue;
    }
    std::vector<std::uint64_t> degs;
    std::string w;
    while (words >> w) degs.push_back(to_u64(w, err));
    std::map<std::string, std::vector<std::uint64_t>>* slot = nullptr;
    if (key == "star") slot = &e.star;
    else if (key == "one_class") slot = &e.one_class;
    else if (key == "simple_one_class") slot = &e.simple_one_class;
    else if (key == "two_prime_exception") slot = &e.two_prime_exceptions;
    else err("unknown key '" + key + "'");
    if (degs.empty()) err("no degrees given");
    auto& v = (*slot)[name];
    v.insert(v.end(), degs.begin(), degs.end());
  }
  return e;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  if (!f) throw ParseError("cannot read " + p.string());
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

Registry Registry::parse(const std::string& groups_text, const std::string& expectations_text) {
  Registry r;
  r.groups_ = parse_groups(groups_text);
  r.expectations_ = parse_expectations(expectations_text);
  return r;
}

Registry Registry::load_dir(const std::filesystem::path& dir) {
  return parse(read_file(dir / "groups.txt"), read_file(dir / "expectations.txt"));
}

const Registry& Registry::builtin() {
  static const Registry r = parse(detail::kGroupsText, detail::kExpectationsText);
  return r;
}

const GroupRecipe* Registry::find(const std::string& name) const {
  const std::string key = squash(name);
  for (const auto& g : groups_) {
    if (squash(g.name) == key) return &g;
    for (const auto& a : g.aliases) {
      if (squash(a) == key) return &g;
    }
  }
  return nullptr;
}

GroupRecipe Registry::resolve(const std::string& name) const {
  if (const auto* r = find(name)) return *r;
  if (auto r = family_recipe(name)) return *r;
  throw Unsupported("unknown group '" + name + "'");
}

std::vector<const GroupRecipe*> Registry::corpus() const {
  std::vector<const GroupRecipe*> out;
  for (const auto& g : groups_) {
    if (std::find(g.tags.begin(), g.tags.end(), "corpus") != g.tags.end()) out.push_back(&g);
  }
  return out;
}

}  // namespace charzero
