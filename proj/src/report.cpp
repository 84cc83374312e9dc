#include "charzero/report.hpp"

#include <fmt/format.h>

#include <sstream>

namespace charzero {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string vanishing_text(const std::vector<std::size_t>& cls, const std::vector<std::uint64_t>& orders) {
  if (cls.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (i) s += ", ";
    s += fmt::format("{} (order {})", cls[i], orders[i]);
  }
  return s;
}

}  // namespace

std::string join_degrees(const std::vector<std::uint64_t>& v) {
  if (v.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

Json to_json(const StarReport& r) {
  Json j;
  j["group"] = r.group;
  j["row"] = r.row;
  j["degree"] = r.degree;
  j["faithful"] = r.faithful;
  j["vanishing_classes"] = r.vanishing;
  j["vanishing_orders"] = r.vanishing_orders;
  j["p"] = r.p ? Json(*r.p) : Json(nullptr);
  j["cond_i"] = {{"ok", r.cond_i}, {"why", r.why_i}};
  j["cond_ii"] = {{"ok", r.cond_ii}, {"why", r.why_ii}};
  j["cond_iii"] = {{"ok", r.cond_iii}, {"why", r.why_iii}};
  j["holds"] = r.holds;
  return j;
}

Json to_json(const OneClassReport& r) {
  Json j;
  j["group"] = r.group;
  Json rows = Json::array();
  for (const auto& x : r.rows)
    rows.push_back({{"row", x.row}, {"degree", x.degree}, {"vanishing", x.num_vanishing}, {"faithful", x.faithful}});
  j["rows"] = rows;
  Json one = Json::array();
  for (const auto& x : r.one_class_rows) one.push_back({{"row", x.row}, {"degree", x.degree}, {"faithful", x.faithful}});
  j["one_class_rows"] = one;
  j["faithful_degrees"] = r.faithful_degrees;
  j["expected"] = r.expected ? Json(*r.expected) : Json(nullptr);
  j["match"] = r.match ? Json(*r.match) : Json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const BurnsideReport& r) { return {{"ok", r.ok()}, {"violators", r.violators}}; }

Json to_json(const TwoPrimeReport& r) {
  Json flags = Json::array();
  for (const auto& f : r.flags)
    flags.push_back({{"row", f.row}, {"degree", f.degree}, {"vanishing_class", f.vanishing_class}, {"excused", f.excused}});
  Json j{{"ok", r.ok()}, {"flags", flags}};
  if (!r.annotation.empty()) j["annotation"] = r.annotation;
  return j;
}

Json to_json(const CorollaryReport& r) {
  Json e = Json::array();
  for (const auto& x : r.entries)
    e.push_back({{"group", x.group}, {"degrees", x.degrees}, {"expected", x.expected}, {"match", x.match}});
  return {{"ok", r.ok()}, {"groups", e}};
}

Json to_json(const VerifyReport& r) { return {{"ok", r.ok()}, {"failures", r.failures}}; }

Json to_json(const GroupResult& r) {
  Json j;
  j["group"] = r.name;
  if (!r.error.empty()) {
    j["error"] = r.error;
    return j;
  }
  j["order"] = r.order;
  j["degree"] = r.degree;
  j["classes"] = r.num_classes;
  j["center_order"] = r.center_order;
  j["out_order"] = r.out_order;
  j["simple"] = r.simple;
  j["abelian"] = r.abelian;
  if (r.table) {
    j["table"] = {{"exponent", r.table->m}, {"prime", r.table->prime}, {"seed", r.table->seed}};
    Json degs = Json::array();
    for (const auto& c : r.table->chars) degs.push_back(c.degree);
    j["table"]["degrees"] = degs;
  }
  j["verify"] = to_json(r.verify);
  j["burnside"] = to_json(r.burnside);
  j["two_prime"] = to_json(r.two_prime);
  j["star_degrees"] = r.star_degrees;
  j["star_expected"] = r.star_expected ? Json(*r.star_expected) : Json(nullptr);
  j["star_ok"] = r.star_ok;
  Json holds = Json::array();
  for (const auto& s : r.star) {
    if (s.holds) holds.push_back(to_json(s));
  }
  j["star_witnesses"] = holds;
  if (r.one_class) j["one_class"] = to_json(*r.one_class);
  return j;
}

Json suite_json(const SuiteResult& r) {
  Json j;
  Json groups = Json::array();
  for (const auto& g : r.groups) groups.push_back(to_json(g));
  j["groups"] = groups;
  j["simple_groups"] = to_json(r.corollary);
  j["verdicts"] = {{"tables", r.tables_ok()},   {"star", r.star_ok()},           {"one_class", r.one_class_ok()},
                   {"burnside", r.burnside_ok()}, {"two_prime", r.two_prime_ok()}, {"simple_one_class", r.corollary.ok()}};
  j["ok"] = r.ok();
  return j;
}

std::string render_text(const StarReport& r) {
  std::ostringstream os;
  os << fmt::format("row {} degree {}: {}", r.row, r.degree, r.holds ? "HOLDS" : "fails");
  if (r.p) os << fmt::format(" (p = {})", *r.p);
  os << '\n';
  os << fmt::format("  faithful  {}\n", yes_no(r.faithful));
  os << fmt::format("  vanishing {}\n", vanishing_text(r.vanishing, r.vanishing_orders));
  os << fmt::format("  (i)   {}: {}\n", yes_no(r.cond_i), r.why_i);
  os << fmt::format("  (ii)  {}: {}\n", yes_no(r.cond_ii), r.why_ii);
  os << fmt::format("  (iii) {}: {}\n", yes_no(r.cond_iii), r.why_iii);
  return os.str();
}

std::string render_text(const OneClassReport& r) {
  std::ostringstream os;
  os << "group " << r.group << '\n';
  for (const auto& x : r.one_class_rows)
    os << fmt::format("  row {} degree {} vanishes on one class, faithful {}\n", x.row, x.degree, yes_no(x.faithful));
  if (r.one_class_rows.empty()) os << "  no character vanishes on exactly one class\n";
  os << "  faithful one-class degrees: " << join_degrees(r.faithful_degrees) << '\n';
  if (r.expected) {
    os << "  expected: " << join_degrees(*r.expected) << '\n';
    os << "  match: " << yes_no(*r.match) << '\n';
  } else {
    os << "  expected: not listed\n";
  }
  if (!r.note.empty()) os << "  note: " << r.note << '\n';
  return os.str();
}

std::string render_text(const VerifyReport& r) {
  if (r.ok()) return "table verified: orthogonality, degrees and integrality hold\n";
  std::string s = fmt::format("table has {} problem(s)\n", r.failures.size());
  for (const auto& f : r.failures) s += "  " + f + '\n';
  return s;
}

std::string render_text(const GroupResult& r) {
  std::ostringstream os;
  os << "== " << r.name << " ==\n";
  if (!r.error.empty()) {
    os << "error: " << r.error << '\n';
    return os.str();
  }
  os << fmt::format("order {}, degree {}, {} classes, centre {}, |Out| {}{}\n", r.order, r.degree, r.num_classes,
                    r.center_order, r.out_order, r.abelian ? ", abelian" : r.simple ? ", simple" : "");
  if (r.table) {
    std::vector<std::uint64_t> degs;
    for (const auto& c : r.table->chars) degs.push_back(c.degree);
    os << fmt::format("table: exponent {}, prime {}, degrees {}\n", r.table->m, r.table->prime, join_degrees(degs));
  }
  os << "verify: " << (r.verify.ok() ? "ok" : "FAILED") << '\n';
  for (const auto& f : r.verify.failures) os << "  " << f << '\n';
  os << "burnside: " << (r.burnside.ok() ? "ok" : "FAILED") << '\n';
  os << "(*) degrees: " << join_degrees(r.star_degrees);
  if (r.star_expected) os << "; expected " << join_degrees(*r.star_expected) << (r.star_ok ? ": ok" : ": MISSING");
  os << '\n';
  for (const auto& s : r.star) {
    if (s.holds) os << fmt::format("  row {} degree {}: p = {}, vanishing {}\n", s.row, s.degree, *s.p,
                                   vanishing_text(s.vanishing, s.vanishing_orders));
  }
  if (r.one_class) {
    os << "one-class faithful degrees: " << join_degrees(r.one_class->faithful_degrees);
    if (r.one_class->expected)
      os << "; expected " << join_degrees(*r.one_class->expected) << (*r.one_class->match ? ": match" : ": MISMATCH");
    os << '\n';
  }
  os << "two-prime flags: ";
  if (r.two_prime.flags.empty()) os << "none";
  for (std::size_t i = 0; i < r.two_prime.flags.size(); ++i) {
    const auto& f = r.two_prime.flags[i];
    os << (i ? ", " : "") << fmt::format("row {} degree {} ({})", f.row, f.degree, f.excused ? "excused" : "NOT EXCUSED");
  }
  os << '\n';
  if (!r.two_prime.annotation.empty()) os << "  " << r.two_prime.annotation << '\n';
  if (!r.note.empty()) os << "note: " << r.note << '\n';
  return os.str();
}

std::string render_text(const CorollaryReport& r) {
  std::ostringstream os;
  os << "== simple groups: characters vanishing on one class ==\n";
  for (const auto& e : r.entries)
    os << fmt::format("{:<12} found {:<8} expected {:<8} {}\n", e.group, join_degrees(e.degrees), join_degrees(e.expected),
                      e.match ? "ok" : "MISMATCH");
  return os.str();
}

std::string render_suite_text(const SuiteResult& r) {
  std::ostringstream os;
  for (const auto& g : r.groups) os << render_text(g) << '\n';
  os << render_text(r.corollary) << '\n';
  os << "== verdicts ==\n";
  os << "tables verified      " << yes_no(r.tables_ok()) << '\n';
  os << "(*) expectations     " << yes_no(r.star_ok()) << '\n';
  os << "one-class matches    " << yes_no(r.one_class_ok()) << '\n';
  os << "simple one-class     " << yes_no(r.corollary.ok()) << '\n';
  os << "burnside             " << yes_no(r.burnside_ok()) << '\n';
  os << "two-prime exceptions " << yes_no(r.two_prime_ok()) << '\n';
  return os.str();
}

std::string render_summary(const SuiteResult& r) {
  std::ostringstream os;
  os << fmt::format("{:<12} {:>6} {:>7} {:>6} {:>8} {:>9} {:>9} {:>9}\n", "group", "order", "classes", "table", "burnside",
                    "star", "one-class", "two-prime");
  for (const auto& g : r.groups) {
    if (!g.error.empty()) {
      os << fmt::format("{:<12} error: {}\n", g.name, g.error);
      continue;
    }
    const std::string star = g.star_expected ? (g.star_ok ? "ok" : "FAIL") : "-";
    const std::string one = g.one_class && g.one_class->match ? (*g.one_class->match ? "ok" : "FAIL") : "-";
    os << fmt::format("{:<12} {:>6} {:>7} {:>6} {:>8} {:>9} {:>9} {:>9}\n", g.name, g.order, g.num_classes,
                      g.verify.ok() ? "ok" : "FAIL", g.burnside.ok() ? "ok" : "FAIL", star, one,
                      g.two_prime.ok() ? "ok" : "FAIL");
  }
  os << fmt::format("simple-group one-class check: {}\n", r.corollary.ok() ? "ok" : "FAIL");
  os << fmt::format("overall: {}\n", r.ok() ? "PASS" : "FAIL");
  return os.str();
}

}  // namespace charzero
