#include <doctest.h>

#include <algorithm>

#include "charzero/constructions.hpp"
#include "charzero/registry.hpp"
#include "charzero/vanishing.hpp"
#include "oracle_regular.hpp"

using namespace charzero;

namespace {

struct Built {
  FiniteGroup g;
  CharacterTable t;
  std::uint64_t out;
};

Built load(const std::string& name) {
  const auto* r = Registry::builtin().find(name);
  REQUIRE(r != nullptr);
  Built b{build(*r), {}, r->expected_out_order};
  b.t = character_table(b.g, {0, kDefaultMaxClasses, r->name});
  return b;
}

std::vector<std::size_t> rows_of_degree(const CharacterTable& t, std::uint64_t d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.chars.size(); ++i) {
    if (t.chars[i].degree == d) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> brute_vanishing(const CharacterTable& t, std::size_t row) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    if (std::abs(t.chars[row].values[c].evaluate()) < 1e-9) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("vanishing classes of A5") {
  const auto b = load("A5");
  CHECK(vanishing_classes(b.t, 0).empty());
  const auto four = rows_of_degree(b.t, 4);
  REQUIRE(four.size() == 1);
  const auto v4 = vanishing_classes(b.t, four[0]);
  REQUIRE(v4.size() == 1);
  CHECK(b.t.classes[v4[0]].element_order == 2);
  const auto five = rows_of_degree(b.t, 5);
  REQUIRE(five.size() == 1);
  CHECK(vanishing_classes(b.t, five[0]).size() == 2);
}

TEST_CASE("vanishing sets agree with the floating point evaluation and the oracle") {
  for (const char* name : {"A5", "SL(2,5)", "PSL(2,7)", "PGL(2,5)", "C6"}) {
    CAPTURE(name);
    const auto b = load(name);
    const auto slow = oracle::regular_table(b.g);
    for (std::size_t i = 0; i < b.t.chars.size(); ++i) {
      CHECK(vanishing_classes(b.t, i) == brute_vanishing(b.t, i));
      CHECK(vanishing_classes(b.t, i) == vanishing_classes(slow, i));
    }
  }
}

TEST_CASE("star on named examples") {
  const auto sz = load("Sz(8)");
  const auto fourteen = rows_of_degree(sz.t, 14);
  REQUIRE(fourteen.size() == 2);
  for (auto i : fourteen) CHECK(star_check(sz.g, sz.t, i, sz.out).holds);

  const auto t = load("3.A6");
  bool nine = false;
  for (auto i : rows_of_degree(t.t, 9)) {
    const auto r = star_check(t.g, t.t, i, t.out);
    if (r.holds) {
      nine = true;
      CHECK(r.p == std::optional<std::uint64_t>(3));
      CHECK(r.faithful);
    }
  }
  CHECK(nine);

  // The degree-5 character of A5 vanishes on both classes of 5-elements:
  // one order, two classes, and |Out(A5)| = 2, so all three conditions hold.
  const auto a5 = load("A5");
  const auto r = star_check(a5.g, a5.t, rows_of_degree(a5.t, 5)[0], a5.out);
  CHECK(r.vanishing_orders == std::vector<std::uint64_t>{5, 5});
  CHECK(r.cond_i);
  CHECK(r.cond_ii);
  CHECK(r.holds);
  CHECK_FALSE(star_check(a5.g, a5.t, rows_of_degree(a5.t, 5)[0], 1).holds);
}

TEST_CASE("condition (i) needs one common order") {
  // PSL(2,7): the degree-8 character vanishes on classes of orders 2 and 4,
  // and the degree-6 one on orders 3 and 4.
  const auto b = load("PSL(2,7)");
  const auto r8 = star_check(b.g, b.t, rows_of_degree(b.t, 8)[0], b.out);
  CHECK(r8.vanishing_orders == std::vector<std::uint64_t>{2, 4});
  CHECK_FALSE(r8.cond_i);
  CHECK_FALSE(r8.holds);
  const auto r6 = star_check(b.g, b.t, rows_of_degree(b.t, 6)[0], b.out);
  CHECK_FALSE(r6.cond_i);
  // trivial character: no vanishing classes, not faithful
  const auto r1 = star_check(b.g, b.t, 0, b.out);
  CHECK_FALSE(r1.cond_i);
  CHECK_FALSE(r1.faithful);
  CHECK_FALSE(r1.holds);
}

TEST_CASE("condition (iii) ties the centre to the prime of (i)") {
  const auto b = load("SL(2,5)");
  std::size_t holds = 0;
  for (std::size_t i = 0; i < b.t.chars.size(); ++i) {
    const auto r = star_check(b.g, b.t, i, b.out);
    if (r.holds) {
      ++holds;
      CHECK(r.p == std::optional<std::uint64_t>(2));
      CHECK(r.cond_iii);
    }
    if (r.p && *r.p != 2) CHECK_FALSE(r.cond_iii);
  }
  CHECK(holds > 0);
}

TEST_CASE("dropping the bound of (ii) never breaks (*)") {
  for (const char* name : {"A5", "PSL(2,7)", "PSL(2,8)", "SL(2,5)", "3.A6", "PGL(2,7)", "A7"}) {
    CAPTURE(name);
    const auto b = load(name);
    for (std::size_t i = 0; i < b.t.chars.size(); ++i) {
      const auto bounded = star_check(b.g, b.t, i, b.out);
      const auto open = star_check(b.g, b.t, i, std::nullopt);
      if (bounded.holds) CHECK(open.holds);
      CHECK(bounded.holds == (bounded.faithful && bounded.cond_i && bounded.cond_ii && bounded.cond_iii));
    }
  }
}

TEST_CASE("Burnside") {
  for (const char* name : {"A5", "C12", "Sz(8):3", "A7"}) {
    CAPTURE(name);
    CHECK(burnside_check(load(name).t).ok());
  }
  auto t = load("A5").t;
  // a fake degree-3 row with no zeros must be reported
  auto fake = t;
  for (auto& v : fake.chars[1].values) {
    if (v.is_zero()) v = CycloNum(1);
  }
  CHECK(burnside_check(fake).violators == std::vector<std::size_t>{1});
}

TEST_CASE("two-prime flags") {
  CHECK(two_prime_check(load("PGL(2,7)").t, {}).flags.empty());
  CHECK(two_prime_check(load("A6").t, {}).flags.empty());

  const auto sz3 = load("Sz(8):3");
  const auto strict = two_prime_check(sz3.t, {});
  REQUIRE_FALSE(strict.flags.empty());
  CHECK_FALSE(strict.ok());
  for (const auto& f : strict.flags) CHECK(f.degree == 14);
  const auto excused = two_prime_check(sz3.t, {14});
  CHECK(excused.ok());
  CHECK_FALSE(excused.annotation.empty());
}

TEST_CASE("one-class classification") {
  const auto p5 = classify_one_class(load("PSL(2,5)").t, std::vector<std::uint64_t>{3, 4});
  CHECK(p5.faithful_degrees == std::vector<std::uint64_t>{3, 4});
  std::size_t threes = 0;
  for (const auto& r : p5.one_class_rows) threes += r.degree == 3;
  CHECK(threes == 2);
  CHECK(p5.match == std::optional<bool>(true));

  const auto pgl9 = classify_one_class(load("PGL(2,9)").t, std::vector<std::uint64_t>{9});
  CHECK(pgl9.faithful_degrees == std::vector<std::uint64_t>{9});
  CHECK(*pgl9.match);

  const auto a6 = classify_one_class(load("A6").t, std::nullopt);
  CHECK_FALSE(a6.match.has_value());
  CHECK(a6.faithful_degrees.empty());

  const auto wrong = classify_one_class(load("PGL(2,7)").t, std::vector<std::uint64_t>{7, 8});
  CHECK_FALSE(*wrong.match);
}

TEST_CASE("simple groups with one-class characters") {
  const auto l8 = load("PSL(2,8)");
  const auto l7 = load("PSL(2,7)");
  const auto sz = load("Sz(8)");
  const auto rep = corollary_check({&l8.t, &l7.t, &sz.t}, {{8}, {3}, {}});
  CHECK(rep.ok());
  REQUIRE(rep.entries.size() == 3);
  CHECK(rep.entries[0].degrees == std::vector<std::uint64_t>{8});
  CHECK(rep.entries[1].degrees == std::vector<std::uint64_t>{3});
  CHECK(rep.entries[2].degrees.empty());
  // Sz(8) listed with a degree it does not have
  CHECK_FALSE(corollary_check({&sz.t}, {{14}}).ok());
}
