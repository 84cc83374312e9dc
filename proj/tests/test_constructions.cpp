#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "charzero/constructions.hpp"
#include "charzero/errors.hpp"
#include "charzero/numtheory.hpp"
#include "charzero/registry.hpp"
#include "oracle_group.hpp"

using namespace charzero;

namespace {

std::uint64_t psl2_order(std::uint64_t q) { return q * (q * q - 1) / (q % 2 ? 2 : 1); }

// (element order, class size) multiset: a cheap isomorphism invariant.
std::multiset<std::pair<std::uint64_t, std::uint64_t>> class_profile(const FiniteGroup& g) {
  std::multiset<std::pair<std::uint64_t, std::uint64_t>> s;
  for (const auto& c : g.classes()) s.insert({c.element_order, c.size});
  return s;
}

bool is_union_of_classes(const FiniteGroup& g, const std::vector<FiniteGroup::Index>& sub) {
  const std::set<FiniteGroup::Index> in(sub.begin(), sub.end());
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    const auto& m = g.class_members(c);
    const auto k = std::count_if(m.begin(), m.end(), [&](auto x) { return in.count(x) > 0; });
    if (k != 0 && static_cast<std::size_t>(k) != m.size()) return false;
  }
  return true;
}

const GroupRecipe& recipe(const std::string& name) {
  const auto* r = Registry::builtin().find(name);
  REQUIRE(r != nullptr);
  return *r;
}

}  // namespace

TEST_CASE("projective and linear families have the standard orders") {
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16}) {
    CAPTURE(q);
    CHECK(psl2(q).order() == psl2_order(q));
    CHECK(psl2(q).degree() == q + 1);
    CHECK(pgl2(q).order() == q * (q * q - 1));
  }
  CHECK(psl2(5).num_classes() == 5);
  CHECK(pgl2(5).order() == 120);
  CHECK(pgl2(5).degree() == 6);
  for (std::uint64_t q : {5, 7, 9}) {
    const auto g = sl2(q);
    CHECK(g.order() == q * (q * q - 1));
    CHECK(g.degree() == q * q - 1);
  }
  CHECK_THROWS_AS(psl2(6), NotPrimePower);
  CHECK_THROWS_AS(psl2(64), Unsupported);
}

TEST_CASE("alternating and cyclic groups") {
  CHECK(alternating(5).order() == 60);
  CHECK(alternating(6).order() == 360);
  CHECK(alternating(7).order() == 2520);
  CHECK_THROWS_AS(alternating(4), Unsupported);
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic(12).num_classes() == 12);
}

TEST_CASE("SL2(q) has centre 2 and quotient PSL2(q)") {
  for (std::uint64_t q : {5, 7, 9}) {
    CAPTURE(q);
    const auto g = sl2(q);
    const auto z = center(g);
    CHECK(z.order == 2);
    CHECK(z.cyclic);
    const auto quo = quotient(g, z.elements);
    CHECK(quo.order() == psl2_order(q));
    CHECK(quo.num_classes() == psl2(q).num_classes());
    CHECK(class_profile(quo) == class_profile(psl2(q)));
  }
  CHECK(is_quasisimple(sl2(5)));
}

TEST_CASE("derived subgroup of PGL2(q) is PSL2(q) and simple") {
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11}) {
    CAPTURE(q);
    const auto d = derived_subgroup(pgl2(q));
    CHECK(d.order() == psl2_order(q));
    CHECK(is_simple(d));
  }
}

TEST_CASE("simplicity of small builds agrees with the lattice brute force") {
  CHECK(oracle::brute_is_simple(psl2(5)));
  CHECK(oracle::brute_is_simple(psl2(7)));
  CHECK_FALSE(oracle::brute_is_simple(pgl2(5)));
  CHECK_FALSE(oracle::brute_is_simple(sl2(5)));
}

TEST_CASE("fixed groups from their geometry") {
  const auto sz = FiniteGroup::closure(suzuki8_generators(false));
  CHECK(sz.order() == 29120);
  CHECK(sz.num_classes() == 11);
  CHECK(sz.degree() == 65);
  CHECK(is_simple(sz));

  const auto u = FiniteGroup::closure(psu3_4_generators());
  // q^3 (q^2 - 1)(q^3 + 1) / gcd(3, q + 1) at q = 4
  CHECK(u.order() == 64 * 15 * 65);
  CHECK(u.num_classes() == 22);

  const auto t = FiniteGroup::closure(three_a6_generators(false));
  CHECK(t.order() == 1080);
  const auto z = center(t);
  CHECK(z.order == 3);
  CHECK(z.cyclic);
  CHECK(z.prime == std::optional<std::uint64_t>(3));
  CHECK(is_quasisimple(t));
  CHECK(quotient(t, z.elements).order() == 360);

  CHECK(FiniteGroup::closure(psl2_8_3_generators()).order() == 1512);
  CHECK(FiniteGroup::closure(a6_2_3_generators()).order() == 720);
}

TEST_CASE("Sz(8):3 contains Sz(8) as a normal union of classes") {
  const auto g = FiniteGroup::closure(suzuki8_generators(true));
  REQUIRE(g.order() == 87360);
  std::vector<FiniteGroup::Index> commutators;
  const auto& gens = g.generators();
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      commutators.push_back(*g.index_of(a.inverse() * b.inverse() * a * b));
    }
  }
  const auto n = normal_closure(g, commutators);
  CHECK(n.size() == 29120);
  CHECK(is_normal(g, n));
  CHECK(is_union_of_classes(g, n));
}

TEST_CASE("registry data generators match the geometric builders") {
  const std::vector<std::pair<std::string, std::vector<Permutation>>> pairs{
      {"Sz(8)", suzuki8_generators(false)},     {"Sz(8):3", suzuki8_generators(true)},
      {"PSU(3,4)", psu3_4_generators()},       {"3.A6", three_a6_generators(false)},
      {"3.A6:2_3", three_a6_generators(true)}, {"PSL(2,8):3", psl2_8_3_generators()},
      {"A6:2_3", a6_2_3_generators()}};
  for (const auto& [name, gens] : pairs) {
    CAPTURE(name);
    const auto& r = recipe(name);
    CHECK(r.source == RecipeSource::DataGenerators);
    const auto from_data = build(r);
    const auto from_geometry = FiniteGroup::closure(gens);
    CHECK(from_data.order() == from_geometry.order());
    CHECK(from_data.order() == r.expected_order);
    CHECK(class_profile(from_data) == class_profile(from_geometry));
    CHECK(center(from_data).order == center(from_geometry).order);
  }
}

TEST_CASE("every registry group builds and validates") {
  for (const auto* r : Registry::builtin().corpus()) {
    CAPTURE(r->name);
    const auto g = build(*r);
    CHECK(g.order() == r->expected_order);
    if (r->expected_center) CHECK(center(g).order == *r->expected_center);
  }
}

TEST_CASE("A6 extensions are distinguished by their outer involutions") {
  // 2_2 = PGL(2,9) has involutions outside A6; 2_3 = M10 has none.
  auto outer_involutions = [](const FiniteGroup& g) {
    const auto d = derived_subgroup(g);
    std::size_t n = 0;
    for (const auto& c : g.classes()) {
      if (c.element_order == 2 && !d.contains(c.rep)) n += c.size;
    }
    return n;
  };
  const auto pgl = build(recipe("A6:2_2"));
  const auto m10 = build(recipe("A6:2_3"));
  CHECK(pgl.order() == 720);
  CHECK(m10.order() == 720);
  CHECK(outer_involutions(pgl) == 36);
  CHECK(outer_involutions(m10) == 0);
  CHECK(outer_involutions(build(recipe("3.A6:2_3"))) == 0);
}

TEST_CASE("out orders") {
  CHECK(out_order(recipe("PSL(2,7)")) == 2);
  CHECK(out_order(recipe("PSL(2,8)")) == 3);
  CHECK(out_order(recipe("PSL(2,9)")) == 4);
  CHECK(out_order(recipe("Sz(8)")) == 3);
  CHECK(out_order(recipe("PSU(3,4)")) == 4);
  CHECK(out_order(recipe("A6")) == 4);
  // gcd(2, q - 1) * f for PSL2(q)
  for (std::uint64_t q : {5, 7, 8, 9, 11, 13, 16}) {
    const auto pp = nt::prime_power(q);
    const std::uint64_t expect = (q % 2 ? 2 : 1) * pp->second;
    CHECK(out_order(recipe("PSL(2," + std::to_string(q) + ")")) == expect);
  }
}

TEST_CASE("family recipes") {
  auto r = family_recipe("PSL(2,11)");
  REQUIRE(r);
  CHECK(build(*r).order() == 660);
  r = family_recipe("L2(25)");
  REQUIRE(r);
  CHECK(r->q == 25);
  r = family_recipe("A8");
  REQUIRE(r);
  CHECK(build(*r).order() == 20160);
  CHECK_FALSE(family_recipe("M11"));
  CHECK(Registry::builtin().resolve("C 7").name == "C7");
  CHECK_THROWS_AS(Registry::builtin().resolve("M11"), Unsupported);
}

TEST_CASE("registry lookup by alias") {
  const auto& reg = Registry::builtin();
  CHECK(reg.find("L2(7)")->name == "PSL(2,7)");
  CHECK(reg.find("2.A5")->name == "SL(2,5)");
  CHECK(reg.find("M10")->name == "A6:2_3");
  CHECK(reg.find("PSL(2, 7)")->name == "PSL(2,7)");
  CHECK(reg.find("nothing") == nullptr);
}

TEST_CASE("registry parse errors carry file and line") {
  auto message = [](const std::string& groups, const std::string& exp) {
    try {
      Registry::parse(groups, exp);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("[X]\nfamily CYCLIC\nn 3\norder 3\nbogus 1\n", "").find("groups.txt:5") != std::string::npos);
  CHECK(message("family CYCLIC\n", "").find("groups.txt:1") != std::string::npos);
  CHECK(message("[X]\nfamily CYCLIC\nn 3\norder 3\n", "# c\nstar X three\n").find("expectations.txt:2") !=
        std::string::npos);
  CHECK(message("[X]\nfamily CYCLIC\nn 3\norder 3\n", "").empty());
}

TEST_CASE("tori of PSU(3,4) divide the group order") {
  const auto rep = nt::torus_orders(nt::LieFamily::TwistedA, 2, 4);
  const nt::BigInt su = nt::lie_group_order(nt::LieFamily::TwistedA, 2, 4);
  // gcd(3, q + 1) = 1, so SU(3,4) = PSU(3,4)
  CHECK(su == 62400);
  for (const auto& t : rep.tori) {
    CAPTURE(t.label);
    CHECK(su % t.order == 0);
  }
  const auto g = build(recipe("PSU(3,4)"));
  std::set<std::uint64_t> orders;
  for (const auto& c : g.classes()) orders.insert(c.element_order);
  CHECK(orders.count(13) == 1);
  CHECK(orders.count(15) == 1);
}
