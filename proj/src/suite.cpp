#include "charzero/suite.hpp"

#include <algorithm>
#include <fstream>

#include "charzero/errors.hpp"
#include "charzero/report.hpp"

namespace charzero {

namespace {

template <class Map>
std::optional<std::vector<std::uint64_t>> lookup(const Map& m, const std::string& name) {
  auto it = m.find(name);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

bool subset(const std::vector<std::uint64_t>& want, const std::vector<std::uint64_t>& have) {
  return std::all_of(want.begin(), want.end(),
                     [&](auto d) { return std::find(have.begin(), have.end(), d) != have.end(); });
}

}  // namespace

bool SuiteResult::tables_ok() const {
  return std::all_of(groups.begin(), groups.end(), [](const GroupResult& g) { return g.error.empty() && g.verify.ok(); });
}
bool SuiteResult::star_ok() const {
  return std::all_of(groups.begin(), groups.end(), [](const GroupResult& g) { return g.star_ok; });
}
bool SuiteResult::one_class_ok() const {
  return std::all_of(groups.begin(), groups.end(),
                     [](const GroupResult& g) { return !g.one_class || !g.one_class->match || *g.one_class->match; });
}
bool SuiteResult::burnside_ok() const {
  return std::all_of(groups.begin(), groups.end(), [](const GroupResult& g) { return g.burnside.ok(); });
}
bool SuiteResult::two_prime_ok() const {
  return std::all_of(groups.begin(), groups.end(), [](const GroupResult& g) { return g.two_prime.ok(); });
}
bool SuiteResult::ok() const {
  return tables_ok() && star_ok() && one_class_ok() && burnside_ok() && two_prime_ok() && corollary.ok();
}

GroupResult analyse_group(const GroupRecipe& recipe, const Expectations& exp, const SuiteOptions& opts) {
  GroupResult r;
  r.name = recipe.name;
  r.out_order = recipe.expected_out_order;
  if (auto it = exp.notes.find(recipe.name); it != exp.notes.end()) r.note = it->second;
  r.star_expected = lookup(exp.star, recipe.name);
  try {
    const FiniteGroup g = build(recipe, opts.max_order);
    r.order = g.order();
    r.degree = g.degree();
    r.num_classes = g.num_classes();
    r.center_order = center(g).order;
    r.abelian = g.is_abelian();
    r.simple = is_simple(g);
    TableOptions topts;
    topts.seed = opts.seed;
    topts.max_classes = opts.max_classes;
    topts.name = recipe.name;
    r.table = character_table(g, topts);
    const auto& t = *r.table;
    r.verify = verify_table(t);
    r.burnside = burnside_check(t);
    const auto excused = lookup(exp.two_prime_exceptions, recipe.name);
    r.two_prime = two_prime_check(t, excused ? *excused : std::vector<std::uint64_t>{});
    const std::optional<std::uint64_t> out =
        recipe.expected_out_order ? std::optional<std::uint64_t>(recipe.expected_out_order) : std::nullopt;
    for (std::size_t i = 0; i < t.chars.size(); ++i) r.star.push_back(star_check(g, t, i, out));
    for (const auto& s : r.star) {
      if (s.holds && std::find(r.star_degrees.begin(), r.star_degrees.end(), s.degree) == r.star_degrees.end())
        r.star_degrees.push_back(s.degree);
    }
    std::sort(r.star_degrees.begin(), r.star_degrees.end());
    r.star_ok = !r.star_expected || subset(*r.star_expected, r.star_degrees);
    r.one_class = classify_one_class(t, lookup(exp.one_class, recipe.name));
    r.one_class->note = r.note;
  } catch (const Error& e) {
    r.error = e.what();
    r.star_ok = false;
  }
  return r;
}

SuiteResult run_suite(const Registry& registry, const SuiteOptions& opts) {
  SuiteResult res;
  std::vector<const GroupRecipe*> recipes;
  if (opts.only.empty()) {
    recipes = registry.corpus();
  } else {
    for (const auto& n : opts.only) {
      const auto* r = registry.find(n);
      if (!r) throw Unsupported("unknown group '" + n + "'");
      recipes.push_back(r);
    }
  }
  std::sort(recipes.begin(), recipes.end(), [](const GroupRecipe* a, const GroupRecipe* b) { return a->name < b->name; });
  for (const auto* r : recipes) res.groups.push_back(analyse_group(*r, registry.expectations(), opts));

  std::vector<const CharacterTable*> simple;
  std::vector<std::vector<std::uint64_t>> expected;
  for (const auto& g : res.groups) {
    if (!g.table || !g.simple || g.abelian) continue;
    simple.push_back(&*g.table);
    expected.push_back(lookup(registry.expectations().simple_one_class, g.name).value_or(std::vector<std::uint64_t>{}));
  }
  res.corollary = corollary_check(simple, expected);
  return res;
}

std::string table_file_name(const std::string& group) {
  std::string s;
  for (char c : group) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      s.push_back(c);
    } else if (c != '.' && !s.empty() && s.back() != '_') {
      s.push_back('_');
    }
  }
  while (!s.empty() && s.back() == '_') s.pop_back();
  return s + ".tbl";
}

void write_suite_files(const SuiteResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto put = [&](const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw Error("cannot write " + p.string());
    f << text;
  };
  for (const auto& g : result.groups) {
    if (g.table) put(dir / table_file_name(g.name), write_table(*g.table));
  }
  put(dir / "report.txt", render_suite_text(result));
  put(dir / "report.json", suite_json(result).dump(2) + "\n");
}

}  // namespace charzero
