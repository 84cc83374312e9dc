#include "charzero/vanishing.hpp"

#include <algorithm>
#include <set>

#include "charzero/numtheory.hpp"

namespace charzero {

std::vector<std::size_t> vanishing_classes(const CharacterTable& t, std::size_t row) {
  std::vector<std::size_t> out;
  const auto& vals = t.chars.at(row).values;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    if (is_zero(vals[k])) out.push_back(k);
  }
  return out;
}

StarReport star_check(const FiniteGroup& g, const CharacterTable& t, std::size_t row,
                      std::optional<std::uint64_t> out_order) {
  StarReport r;
  r.group = t.group;
  r.row = row;
  r.degree = t.chars.at(row).degree;
  r.vanishing = vanishing_classes(t, row);
  for (auto k : r.vanishing) r.vanishing_orders.push_back(t.classes[k].element_order);
  r.faithful = is_faithful(t, row);

  if (r.vanishing.empty()) {
    r.why_i = "vanishes on no class";
  } else {
    const std::uint64_t o = r.vanishing_orders.front();
    const bool same = std::all_of(r.vanishing_orders.begin(), r.vanishing_orders.end(), [&](auto x) { return x == o; });
    const auto pp = nt::prime_power(o);
    if (!same) {
      r.why_i = "vanishing elements have different orders";
    } else if (!pp) {
      r.why_i = "vanishing elements have order " + std::to_string(o) + ", not a prime power";
    } else {
      r.cond_i = true;
      r.p = pp->first;
      r.why_i = "all vanishing elements have order " + std::to_string(o);
    }
  }

  const std::size_t n = r.vanishing.size();
  if (!out_order) {
    r.cond_ii = true;
    r.why_ii = std::to_string(n) + " vanishing classes, bound not applied";
  } else {
    r.cond_ii = n <= *out_order;
    r.why_ii = std::to_string(n) + " vanishing classes, |Out| = " + std::to_string(*out_order);
  }

  const auto z = center(g);
  if (!z.cyclic) {
    r.why_iii = "centre of order " + std::to_string(z.order) + " is not cyclic";
  } else if (z.order == 1) {
    r.cond_iii = true;
    r.why_iii = "trivial centre";
  } else if (!z.prime) {
    r.why_iii = "centre of order " + std::to_string(z.order) + " is not of prime power order";
  } else if (r.p && *z.prime != *r.p) {
    r.why_iii = "centre is a " + std::to_string(*z.prime) + "-group, vanishing orders are powers of " + std::to_string(*r.p);
  } else {
    // with no p from (i) the condition is judged on its own
    r.cond_iii = true;
    r.why_iii = "centre cyclic of order " + std::to_string(z.order);
  }
  r.holds = r.faithful && r.cond_i && r.cond_ii && r.cond_iii;
  return r;
}

BurnsideReport burnside_check(const CharacterTable& t) {
  BurnsideReport rep;
  for (std::size_t i = 0; i < t.chars.size(); ++i) {
    if (t.chars[i].degree > 1 && vanishing_classes(t, i).empty()) rep.violators.push_back(i);
  }
  return rep;
}

bool TwoPrimeReport::ok() const {
  return std::all_of(flags.begin(), flags.end(), [](const TwoPrimeFlag& f) { return f.excused; });
}

TwoPrimeReport two_prime_check(const CharacterTable& t, const std::vector<std::uint64_t>& excused_degrees) {
  TwoPrimeReport rep;
  rep.group = t.group;
  for (std::size_t i = 0; i < t.chars.size(); ++i) {
    const auto d = t.chars[i].degree;
    if (nt::prime_divisors(d).size() < 2) continue;
    const auto v = vanishing_classes(t, i);
    if (v.size() != 1) continue;
    TwoPrimeFlag f;
    f.row = i;
    f.degree = d;
    f.vanishing_class = v[0];
    f.excused = std::find(excused_degrees.begin(), excused_degrees.end(), d) != excused_degrees.end();
    rep.flags.push_back(f);
  }
  if (!rep.flags.empty()) rep.annotation = "primitivity of flagged characters is assumed, not computed";
  return rep;
}

OneClassReport classify_one_class(const CharacterTable& t, const std::optional<std::vector<std::uint64_t>>& expected) {
  OneClassReport rep;
  rep.group = t.group;
  std::set<std::uint64_t> degs;
  for (std::size_t i = 0; i < t.chars.size(); ++i) {
    OneClassRow row{i, t.chars[i].degree, vanishing_classes(t, i).size(), is_faithful(t, i)};
    rep.rows.push_back(row);
    if (row.num_vanishing == 1) {
      rep.one_class_rows.push_back(row);
      if (row.faithful) degs.insert(row.degree);
    }
  }
  rep.faithful_degrees.assign(degs.begin(), degs.end());
  if (expected) {
    std::vector<std::uint64_t> e = *expected;
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    rep.expected = e;
    rep.match = e == rep.faithful_degrees;
  }
  return rep;
}

bool CorollaryReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const SimpleOneClassEntry& e) { return e.match; });
}

CorollaryReport corollary_check(const std::vector<const CharacterTable*>& tables,
                                const std::vector<std::vector<std::uint64_t>>& expected) {
  CorollaryReport rep;
  for (std::size_t n = 0; n < tables.size(); ++n) {
    const auto& t = *tables[n];
    SimpleOneClassEntry e;
    e.group = t.group;
    std::set<std::uint64_t> degs;
    for (std::size_t i = 0; i < t.chars.size(); ++i) {
      if (vanishing_classes(t, i).size() == 1) degs.insert(t.chars[i].degree);
    }
    e.degrees.assign(degs.begin(), degs.end());
    std::set<std::uint64_t> want(expected[n].begin(), expected[n].end());
    e.expected.assign(want.begin(), want.end());
    e.match = e.degrees == e.expected;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

std::vector<std::uint64_t> star_degrees(const FiniteGroup& g, const CharacterTable& t, std::optional<std::uint64_t> out_order) {
  std::set<std::uint64_t> out;
  for (std::size_t i = 0; i < t.chars.size(); ++i) {
    if (star_check(g, t, i, out_order).holds) out.insert(t.chars[i].degree);
  }
  return {out.begin(), out.end()};
}

}  // namespace charzero
