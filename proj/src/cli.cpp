#include "charzero/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "charzero/errors.hpp"
#include "charzero/numtheory.hpp"
#include "charzero/registry.hpp"
#include "charzero/report.hpp"

namespace charzero::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string format = "text";
  std::uint64_t max_order = kDefaultMaxOrder;
  std::size_t max_classes = kDefaultMaxClasses;
  std::uint64_t seed = 0;
  std::string registry_dir;
  std::string out;
  std::string out_dir;
  std::string target;
  std::optional<std::size_t> row;
  std::optional<std::uint64_t> out_order;
  std::vector<std::string> only;
  // numtheory
  std::string part = "a";
  std::uint64_t bound = 1000000;
  std::uint64_t q = 0, n = 0, l = 0;
  std::string family;
};

// Check failures carry exit code 1; everything else thrown from a command
// is mapped by the caller.
struct CheckFailed {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void write_output(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error("cannot write " + o.out);
  f << text;
}

bool is_table_file(const std::string& path) {
  if (!fs::is_regular_file(path)) return false;
  std::ifstream f(path);
  std::string first;
  std::getline(f, first);
  return first.rfind("charzero-table", 0) == 0;
}

struct Target {
  std::string name;
  std::optional<GroupRecipe> recipe;
  FiniteGroup group;
};

Target load_target(const Options& o, const Registry& reg) {
  Target t;
  if (fs::is_regular_file(o.target)) {
    const auto file = parse_group_file(read_file(o.target));
    t.name = file.name.empty() ? fs::path(o.target).stem().string() : file.name;
    t.group = FiniteGroup::closure(file.generators, o.max_order, file.degree);
    return t;
  }
  t.recipe = reg.resolve(o.target);
  t.name = t.recipe->name;
  t.group = build(*t.recipe, o.max_order);
  return t;
}

CharacterTable table_for(const Options& o, const Target& t) {
  TableOptions topts;
  topts.seed = o.seed;
  topts.max_classes = o.max_classes;
  topts.name = t.name;
  return character_table(t.group, topts);
}

std::optional<std::uint64_t> out_order_for(const Options& o, const Target& t) {
  if (o.out_order) return o.out_order;
  if (t.recipe && t.recipe->expected_out_order) return t.recipe->expected_out_order;
  throw Unsupported("no outer automorphism order known for " + t.name + "; pass --out-order");
}

std::vector<std::size_t> selected_rows(const Options& o, const CharacterTable& t) {
  if (o.row) {
    if (*o.row >= t.chars.size()) throw PreconditionViolated("row " + std::to_string(*o.row) + " out of range");
    return {*o.row};
  }
  std::vector<std::size_t> rows(t.chars.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return rows;
}

Json table_json(const CharacterTable& t) {
  Json j;
  j["group"] = t.group;
  j["order"] = t.order;
  j["exponent"] = t.m;
  j["prime"] = t.prime;
  j["seed"] = t.seed;
  Json cls = Json::array();
  for (const auto& c : t.classes)
    cls.push_back({{"size", c.size}, {"order", c.element_order}, {"centralizer", c.centralizer_order}, {"rep", c.rep}});
  j["classes"] = cls;
  Json rows = Json::array();
  for (const auto& ch : t.chars) {
    Json vals = Json::array();
    for (const auto& v : ch.values) vals.push_back(Json::parse(v.serialize()));
    rows.push_back({{"degree", ch.degree}, {"values", vals}});
  }
  j["characters"] = rows;
  return j;
}

// ---- verbs ----

void cmd_build(const Options& o, const Registry& reg, std::ostream& out) {
  const Target t = load_target(o, reg);
  const auto& g = t.group;
  const auto z = center(g);
  const FiniteGroup d = derived_subgroup(g, o.max_order);
  const bool simple = is_simple(g);
  if (!o.out.empty()) {
    GroupFile f{t.name, g.degree(), g.generators()};
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw Error("cannot write " + o.out);
    file << format_group_file(f);
  }
  if (o.format == "json") {
    Json j;
    j["group"] = t.name;
    j["degree"] = g.degree();
    j["order"] = g.order();
    Json cls = Json::array();
    for (const auto& c : g.classes())
      cls.push_back({{"size", c.size}, {"order", c.element_order}, {"centralizer", c.centralizer_order}, {"rep", c.rep.to_cycles()}});
    j["classes"] = cls;
    j["center_order"] = z.order;
    j["center_cyclic"] = z.cyclic;
    j["derived_order"] = d.order();
    j["simple"] = simple;
    if (t.recipe) {
      j["out_order"] = t.recipe->expected_out_order;
      j["source"] = to_string(t.recipe->source);
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "group " << t.name << '\n';
  if (t.recipe) out << "source " << to_string(t.recipe->source) << '\n';
  out << "degree " << g.degree() << '\n';
  out << "order " << g.order() << '\n';
  out << "classes " << g.num_classes() << '\n';
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    const auto& cl = g.classes()[c];
    out << fmt::format("  {:>3}  size {:>6}  order {:>3}  centralizer {:>6}  rep {}\n", c, cl.size, cl.element_order,
                       cl.centralizer_order, cl.rep.to_cycles());
  }
  out << "centre " << z.order << (z.cyclic ? " (cyclic)" : " (not cyclic)") << '\n';
  out << "derived subgroup " << d.order() << '\n';
  out << "simple " << (simple ? "yes" : "no") << '\n';
  if (t.recipe && t.recipe->expected_out_order) out << "|Out| " << t.recipe->expected_out_order << '\n';
}

void cmd_table(const Options& o, const Registry& reg, std::ostream& out) {
  const Target t = load_target(o, reg);
  const auto tab = table_for(o, t);
  write_output(o, o.format == "json" ? table_json(tab).dump(2) + "\n" : write_table(tab), out);
}

void cmd_verify(const Options& o, std::ostream& out) {
  const auto t = read_table(read_file(o.target));
  const auto rep = verify_table(t);
  if (o.format == "json") {
    Json j = to_json(rep);
    j["group"] = t.group;
    out << j.dump(2) << '\n';
  } else {
    out << "group " << t.group << '\n' << render_text(rep);
  }
  if (!rep.ok()) throw CheckFailed{"table verification failed"};
}

CharacterTable table_from_target(const Options& o, const Registry& reg) {
  if (is_table_file(o.target)) return read_table(read_file(o.target));
  return table_for(o, load_target(o, reg));
}

void cmd_zeros(const Options& o, const Registry& reg, std::ostream& out) {
  const auto t = table_from_target(o, reg);
  Json rows = Json::array();
  std::ostringstream text;
  text << "group " << t.group << '\n';
  for (auto i : selected_rows(o, t)) {
    const auto v = vanishing_classes(t, i);
    std::vector<std::uint64_t> orders;
    for (auto k : v) orders.push_back(t.classes[k].element_order);
    rows.push_back({{"row", i}, {"degree", t.chars[i].degree}, {"vanishing_classes", v}, {"orders", orders},
                    {"faithful", is_faithful(t, i)}});
    text << fmt::format("row {:>2} degree {:>4}: ", i, t.chars[i].degree);
    if (v.empty()) text << "none";
    for (std::size_t a = 0; a < v.size(); ++a) text << (a ? ", " : "") << fmt::format("{} (order {})", v[a], orders[a]);
    text << '\n';
  }
  if (o.format == "json") {
    out << Json{{"group", t.group}, {"rows", rows}}.dump(2) << '\n';
  } else {
    out << text.str();
  }
}

void cmd_star(const Options& o, const Registry& reg, std::ostream& out) {
  const Target target = load_target(o, reg);
  const auto out_order = out_order_for(o, target);
  const auto t = table_for(o, target);
  std::vector<StarReport> reps;
  for (auto i : selected_rows(o, t)) reps.push_back(star_check(target.group, t, i, out_order));
  std::vector<std::uint64_t> holds;
  for (const auto& r : reps) {
    if (r.holds && std::find(holds.begin(), holds.end(), r.degree) == holds.end()) holds.push_back(r.degree);
  }
  std::sort(holds.begin(), holds.end());
  std::optional<std::vector<std::uint64_t>> expected;
  if (auto it = reg.expectations().star.find(target.name); it != reg.expectations().star.end()) expected = it->second;
  bool ok = true;
  if (expected && !o.row) {
    for (auto d : *expected) ok = ok && std::find(holds.begin(), holds.end(), d) != holds.end();
  }
  if (o.format == "json") {
    Json j;
    j["group"] = target.name;
    j["out_order"] = *out_order;
    Json rs = Json::array();
    for (const auto& r : reps) rs.push_back(to_json(r));
    j["rows"] = rs;
    j["holds_degrees"] = holds;
    j["expected"] = expected ? Json(*expected) : Json(nullptr);
    j["ok"] = ok;
    out << j.dump(2) << '\n';
  } else {
    out << "group " << target.name << ", |Out| = " << *out_order << '\n';
    for (const auto& r : reps) out << render_text(r);
    out << "(*) holds for degrees: " << join_degrees(holds) << '\n';
    if (expected) out << "expected degrees: " << join_degrees(*expected) << (ok ? " (ok)" : " (MISSING)") << '\n';
  }
  if (!ok) throw CheckFailed{"an expected degree does not satisfy (*)"};
}

void cmd_classify(const Options& o, const Registry& reg, std::ostream& out) {
  const Target target = load_target(o, reg);
  const auto t = table_for(o, target);
  std::optional<std::vector<std::uint64_t>> expected;
  if (auto it = reg.expectations().one_class.find(target.name); it != reg.expectations().one_class.end())
    expected = it->second;
  auto rep = classify_one_class(t, expected);
  if (auto it = reg.expectations().notes.find(target.name); it != reg.expectations().notes.end()) rep.note = it->second;
  out << (o.format == "json" ? to_json(rep).dump(2) + "\n" : render_text(rep));
  if (rep.match && !*rep.match) throw CheckFailed{"one-class degrees differ from the expected list"};
}

void cmd_suite(const Options& o, const Registry& reg, std::ostream& out) {
  SuiteOptions so;
  so.seed = o.seed;
  so.max_order = o.max_order;
  so.max_classes = o.max_classes;
  so.only = o.only;
  const auto res = run_suite(reg, so);
  if (!o.out_dir.empty()) write_suite_files(res, o.out_dir);
  out << (o.format == "json" ? suite_json(res).dump(2) + "\n" : render_summary(res));
  if (!res.ok()) throw CheckFailed{"suite reported failures"};
}

std::vector<std::uint64_t> prime_powers_upto(std::uint64_t bound, std::vector<std::pair<std::uint64_t, unsigned>>& pf) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t k = p * p; k <= bound; k += p) composite[k] = true;
    std::uint64_t q = p;
    for (unsigned f = 1;; ++f) {
      out.push_back(q);
      pf.emplace_back(p, f);
      if (q > bound / p) break;
      q *= p;
    }
  }
  return out;
}

void cmd_lemma23(const Options& o, std::ostream& out) {
  const auto set = nt::lemma23_enumerate(nt::parse_lemma_part(o.part), o.bound);
  if (o.format == "json") {
    Json sols = Json::array();
    for (const auto& s : set.solutions) sols.push_back({{"q", s.q}, {"a", s.a}, {"b", s.b}, {"c", s.c}});
    out << Json{{"part", std::string(1, nt::to_char(set.part))}, {"bound", set.bound}, {"solutions", sols}}.dump(2) << '\n';
    return;
  }
  out << '{';
  for (std::size_t i = 0; i < set.solutions.size(); ++i) out << (i ? ", " : "") << set.solutions[i].q;
  out << "}\n";
}

void cmd_lemma22(const Options& o, std::ostream& out) {
  const auto part = nt::parse_lemma_part(o.part);
  std::vector<std::pair<std::uint64_t, unsigned>> pf;
  const auto qs = prime_powers_upto(o.bound, pf);
  std::uint64_t checked = 0;
  std::vector<std::uint64_t> failures;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const auto q = qs[i];
    const bool applies = part == nt::LemmaPart::A ? q > 11 : (q >= 7 && q % 2 == 1);
    if (!applies) continue;
    ++checked;
    if (!nt::lemma22_check(pf[i].first, pf[i].second, part)) failures.push_back(q);
  }
  if (o.format == "json") {
    out << Json{{"part", o.part}, {"bound", o.bound}, {"checked", checked}, {"failures", failures}}.dump(2) << '\n';
  } else {
    out << fmt::format("part {}: {} prime powers q <= {} checked, {} failures\n", o.part, checked, o.bound, failures.size());
    for (auto q : failures) out << "  fails at q = " << q << '\n';
  }
  if (!failures.empty()) throw CheckFailed{"inequality fails"};
}

void cmd_zsigmondy(const Options& o, std::ostream& out) {
  const auto z = nt::zsigmondy(o.q, static_cast<unsigned>(o.n));
  if (o.format == "json") {
    out << Json{{"q", z.q}, {"n", z.n}, {"prime", z.prime ? Json(z.prime->get_str()) : Json(nullptr)},
                {"exception", z.exception ? Json(nt::to_string(*z.exception)) : Json(nullptr)}}
               .dump(2)
        << '\n';
    return;
  }
  if (z.exception) {
    out << "exception " << nt::to_string(*z.exception) << '\n';
  } else {
    out << "prime " << z.prime->get_str() << '\n';
  }
}

void cmd_phi(const Options& o, std::ostream& out) {
  const auto v = nt::cyclotomic_poly_value(static_cast<unsigned>(o.n), o.q);
  out << (o.format == "json" ? Json{{"n", o.n}, {"q", o.q}, {"value", v.get_str()}}.dump(2) : v.get_str()) << '\n';
}

void cmd_order(const Options& o, std::ostream& out) {
  const auto v = nt::mult_order(o.q, o.l);
  out << (o.format == "json" ? Json{{"q", o.q}, {"l", o.l}, {"order", v}}.dump(2) : std::to_string(v)) << '\n';
}

void cmd_torus(const Options& o, std::ostream& out) {
  const auto rep = nt::torus_orders(nt::parse_lie_family(o.family), static_cast<unsigned>(o.n), o.q);
  if (o.format == "json") {
    Json tori = Json::array();
    for (const auto& t : rep.tori) tori.push_back({{"label", t.label}, {"order", t.order.get_str()}});
    Json primes = Json::array();
    for (const auto& p : rep.primes)
      primes.push_back({{"label", p.label},
                        {"k", p.index},
                        {"prime", p.outcome.prime ? Json(p.outcome.prime->get_str()) : Json(nullptr)},
                        {"exception", p.outcome.exception ? Json(nt::to_string(*p.outcome.exception)) : Json(nullptr)}});
    out << Json{{"family", nt::to_string(rep.family)}, {"n", rep.n}, {"q", rep.q}, {"tori", tori}, {"primes", primes}}.dump(2)
        << '\n';
    return;
  }
  out << fmt::format("{} n = {} q = {}\n", nt::to_string(rep.family), rep.n, rep.q);
  for (const auto& t : rep.tori) out << "  |" << t.label << "| = " << t.order.get_str() << '\n';
  for (const auto& p : rep.primes) {
    out << "  " << p.label << " = l(" << p.index << ") = ";
    out << (p.outcome.prime ? p.outcome.prime->get_str() : "none (" + nt::to_string(*p.outcome.exception) + ")") << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact character tables and vanishing-class checks for finite groups", "charzero"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "charzero 1.0");

  auto common = [&](CLI::App* sub, bool with_tables) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--registry", o.registry_dir, "Directory holding groups.txt and expectations.txt");
    sub->add_option("--max-order", o.max_order, "Largest group order to enumerate");
    if (with_tables) {
      sub->add_option("--max-classes", o.max_classes, "Largest number of classes to tabulate");
      sub->add_option("--seed", o.seed, "Seed for the eigenspace splitting");
    }
  };
  auto target = [&](CLI::App* sub, const char* what) { sub->add_option("target", o.target, what)->required(); };

  auto* build_cmd = app.add_subcommand("build", "Build a group and print its classes");
  target(build_cmd, "Group name or group file");
  common(build_cmd, false);
  build_cmd->add_option("--out", o.out, "Also write the generators as a group file");

  auto* table_cmd = app.add_subcommand("table", "Compute a character table");
  target(table_cmd, "Group name or group file");
  common(table_cmd, true);
  table_cmd->add_option("--out", o.out, "Write the table here instead of standard output");

  auto* verify_cmd = app.add_subcommand("verify", "Check a table file exactly");
  target(verify_cmd, "Table file");
  verify_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* zeros_cmd = app.add_subcommand("zeros", "List the vanishing classes of each character");
  target(zeros_cmd, "Group name, group file or table file");
  common(zeros_cmd, true);
  zeros_cmd->add_option("--row", o.row, "Only this character");

  auto* star_cmd = app.add_subcommand("star", "Evaluate property (*) for every character");
  target(star_cmd, "Group name or group file");
  common(star_cmd, true);
  star_cmd->add_option("--row", o.row, "Only this character");
  star_cmd->add_option("--out-order", o.out_order, "|Out(M/Z(M))| for groups outside the registry");

  auto* classify_cmd = app.add_subcommand("classify", "Faithful characters vanishing on exactly one class");
  target(classify_cmd, "Group name or group file");
  common(classify_cmd, true);

  auto* suite_cmd = app.add_subcommand("suite", "Run every check over the registry corpus");
  common(suite_cmd, true);
  suite_cmd->add_option("--out-dir", o.out_dir, "Write tables and reports into this directory");
  suite_cmd->add_option("--only", o.only, "Restrict to these groups");

  auto* nt_cmd = app.add_subcommand("numtheory", "Number-theoretic helpers");
  nt_cmd->require_subcommand(1);
  auto fmt_opt = [&](CLI::App* s) {
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto* l23 = nt_cmd->add_subcommand("lemma23", "Prime powers with q-1, q+1 of restricted shape");
  l23->add_option("--part", o.part, "a, b or c")->check(CLI::IsMember({"a", "b", "c", "A", "B", "C"}));
  l23->add_option("--bound", o.bound, "Search bound");
  fmt_opt(l23);
  auto* l22 = nt_cmd->add_subcommand("lemma22", "Sweep the class-count inequalities over prime powers");
  l22->add_option("--part", o.part, "a or b")->check(CLI::IsMember({"a", "b", "A", "B"}));
  l22->add_option("--bound", o.bound, "Largest q");
  fmt_opt(l22);
  auto* zs = nt_cmd->add_subcommand("zsigmondy", "Least primitive prime divisor of q^n - 1");
  zs->add_option("q", o.q)->required();
  zs->add_option("n", o.n)->required();
  fmt_opt(zs);
  auto* phi = nt_cmd->add_subcommand("phi", "Cyclotomic polynomial value Phi_n(q)");
  phi->add_option("n", o.n)->required();
  phi->add_option("q", o.q)->required();
  fmt_opt(phi);
  auto* ord = nt_cmd->add_subcommand("order", "Multiplicative order of q modulo the prime l");
  ord->add_option("q", o.q)->required();
  ord->add_option("l", o.l)->required();
  fmt_opt(ord);
  auto* tor = nt_cmd->add_subcommand("torus", "Maximal torus orders and Zsigmondy primes");
  tor->add_option("family", o.family)->required();
  tor->add_option("n", o.n)->required();
  tor->add_option("q", o.q)->required();
  fmt_opt(tor);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Registry local = o.registry_dir.empty() ? Registry() : Registry::load_dir(o.registry_dir);
    const Registry& reg = o.registry_dir.empty() ? Registry::builtin() : local;
    if (*build_cmd) cmd_build(o, reg, out);
    else if (*table_cmd) cmd_table(o, reg, out);
    else if (*verify_cmd) cmd_verify(o, out);
    else if (*zeros_cmd) cmd_zeros(o, reg, out);
    else if (*star_cmd) cmd_star(o, reg, out);
    else if (*classify_cmd) cmd_classify(o, reg, out);
    else if (*suite_cmd) cmd_suite(o, reg, out);
    else if (*l23) cmd_lemma23(o, out);
    else if (*l22) cmd_lemma22(o, out);
    else if (*zs) cmd_zsigmondy(o, out);
    else if (*phi) cmd_phi(o, out);
    else if (*ord) cmd_order(o, out);
    else if (*tor) cmd_torus(o, out);
  } catch (const CheckFailed& e) {
    err << "check failed: " << e.message << '\n';
    return kCheckFailed;
  } catch (const ValidationFailed& e) {
    err << "validation failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const OrderBudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const Degenerate& e) {
    err << "table computation failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace charzero::cli
