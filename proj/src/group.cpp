#include "charzero/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "charzero/errors.hpp"
#include "charzero/numtheory.hpp"

namespace charzero {

namespace {

constexpr FiniteGroup::Index kEmpty = std::numeric_limits<FiniteGroup::Index>::max();

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

std::uint64_t FiniteGroup::hash(const Point* p) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < degree_; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return mix(h);
}

void FiniteGroup::rehash(std::size_t capacity) {
  table_.assign(capacity, kEmpty);
  const std::size_t mask = capacity - 1;
  for (Index i = 0; i < count_; ++i) {
    std::size_t slot = hash(store_.data() + std::size_t{i} * degree_) & mask;
    while (table_[slot] != kEmpty) slot = (slot + 1) & mask;
    table_[slot] = i;
  }
}

std::optional<FiniteGroup::Index> FiniteGroup::index_of(std::span<const Point> images) const {
  if (images.size() != degree_ || table_.empty()) return std::nullopt;
  const std::size_t mask = table_.size() - 1;
  std::size_t slot = hash(images.data()) & mask;
  while (table_[slot] != kEmpty) {
    const Index i = table_[slot];
    if (std::equal(images.begin(), images.end(), store_.begin() + static_cast<std::ptrdiff_t>(std::size_t{i} * degree_)))
      return i;
    slot = (slot + 1) & mask;
  }
  return std::nullopt;
}

FiniteGroup::Index FiniteGroup::insert(std::span<const Point> images) {
  if ((count_ + 1) * 2 > table_.size()) rehash(std::max<std::size_t>(16, table_.size() * 2));
  const Index idx = static_cast<Index>(count_);
  store_.insert(store_.end(), images.begin(), images.end());
  ++count_;
  const std::size_t mask = table_.size() - 1;
  std::size_t slot = hash(images.data()) & mask;
  while (table_[slot] != kEmpty) slot = (slot + 1) & mask;
  table_[slot] = idx;
  return idx;
}

FiniteGroup FiniteGroup::closure(const std::vector<Permutation>& generators, std::uint64_t max_order,
                                 std::size_t degree) {
  FiniteGroup g;
  if (!generators.empty()) {
    if (degree != 0 && degree != generators.front().degree())
      throw PreconditionViolated("generator degree differs from the declared degree");
    degree = generators.front().degree();
  }
  for (const auto& gen : generators) {
    if (gen.degree() != degree) throw PreconditionViolated("generators have different degrees");
  }
  g.degree_ = degree;
  g.generators_ = generators;
  g.rehash(16);
  g.insert(Permutation(degree).span());

  std::vector<Point> buf(degree);
  for (Index i = 0; i < g.count_; ++i) {
    for (const auto& gen : generators) {
      const Point* x = g.store_.data() + std::size_t{i} * degree;
      for (std::size_t p = 0; p < degree; ++p) buf[p] = gen[x[p]];
      if (g.index_of(buf)) continue;
      if (g.count_ >= max_order)
        throw OrderBudgetExceeded("group order exceeds the budget of " + std::to_string(max_order));
      g.insert(buf);
    }
  }
  g.compute_classes();
  return g;
}

Permutation FiniteGroup::element(Index i) const {
  auto s = images(i);
  return Permutation(std::vector<Point>(s.begin(), s.end()));
}

FiniteGroup::Index FiniteGroup::multiply(Index a, Index b) const {
  thread_local std::vector<Point> buf;
  buf.resize(degree_);
  const Point* x = store_.data() + std::size_t{a} * degree_;
  const Point* y = store_.data() + std::size_t{b} * degree_;
  for (std::size_t p = 0; p < degree_; ++p) buf[p] = y[x[p]];
  return *index_of(buf);
}

FiniteGroup::Index FiniteGroup::inverse(Index a) const {
  thread_local std::vector<Point> buf;
  buf.resize(degree_);
  const Point* x = store_.data() + std::size_t{a} * degree_;
  for (std::size_t p = 0; p < degree_; ++p) buf[x[p]] = static_cast<Point>(p);
  return *index_of(buf);
}

void FiniteGroup::compute_classes() {
  std::vector<std::uint32_t> raw(count_, std::numeric_limits<std::uint32_t>::max());
  std::vector<std::vector<Index>> raw_members;
  std::vector<Permutation> inv;
  for (const auto& s : generators_) inv.push_back(s.inverse());
  std::vector<Point> buf(degree_);
  for (Index x = 0; x < count_; ++x) {
    if (raw[x] != std::numeric_limits<std::uint32_t>::max()) continue;
    const auto id = static_cast<std::uint32_t>(raw_members.size());
    raw_members.emplace_back();
    auto& mem = raw_members.back();
    raw[x] = id;
    mem.push_back(x);
    for (std::size_t head = 0; head < mem.size(); ++head) {
      const Point* y = store_.data() + std::size_t{mem[head]} * degree_;
      for (std::size_t s = 0; s < generators_.size(); ++s) {
        const auto& sg = generators_[s];
        const auto& si = inv[s];
        // s^-1 y s
        for (std::size_t p = 0; p < degree_; ++p) buf[p] = sg[y[si[p]]];
        const Index z = *index_of(buf);
        if (raw[z] == std::numeric_limits<std::uint32_t>::max()) {
          raw[z] = id;
          mem.push_back(z);
        }
      }
    }
  }

  struct Key {
    std::uint64_t order, size;
    Index least;
    std::uint32_t raw_id;
  };
  std::vector<Key> keys;
  for (std::uint32_t c = 0; c < raw_members.size(); ++c) {
    const auto& mem = raw_members[c];
    Index least = mem.front();
    for (Index m : mem) {
      auto a = images(m), b = images(least);
      if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) least = m;
    }
    keys.push_back({element_order(element(least)), mem.size(), least, c});
  }
  std::sort(keys.begin(), keys.end(), [&](const Key& a, const Key& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.size != b.size) return a.size < b.size;
    auto x = images(a.least), y = images(b.least);
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });

  std::vector<std::uint32_t> remap(raw_members.size());
  classes_.clear();
  members_.clear();
  rep_index_.clear();
  for (std::uint32_t c = 0; c < keys.size(); ++c) {
    remap[keys[c].raw_id] = c;
    ConjClass cc;
    cc.rep = element(keys[c].least);
    cc.size = keys[c].size;
    cc.element_order = keys[c].order;
    cc.centralizer_order = count_ / keys[c].size;
    classes_.push_back(std::move(cc));
    auto mem = std::move(raw_members[keys[c].raw_id]);
    std::sort(mem.begin(), mem.end());
    members_.push_back(std::move(mem));
    rep_index_.push_back(keys[c].least);
  }
  class_of_.resize(count_);
  for (Index x = 0; x < count_; ++x) class_of_[x] = remap[raw[x]];
}

std::size_t FiniteGroup::class_of(const Permutation& g) const {
  auto idx = index_of(g);
  if (!idx) throw PreconditionViolated("permutation is not an element of the group");
  return class_of_[*idx];
}

std::size_t FiniteGroup::power_class(std::size_t c, std::int64_t k) const {
  return class_of_[*index_of(classes_[c].rep.pow(k))];
}

std::vector<std::size_t> FiniteGroup::power_map(std::int64_t k) const {
  std::vector<std::size_t> out(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    out[c] = power_class(c, k);
    if (members_[c].size() > 1) {
      const std::size_t other = class_of_[*index_of(element(members_[c][1]).pow(k))];
      if (other != out[c]) throw ValidationFailed("power map is not constant on a class");
    }
  }
  return out;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (const auto& c : classes_) e = std::lcm(e, c.element_order);
  return e;
}

bool FiniteGroup::is_abelian() const { return classes_.size() == count_; }

CenterInfo center(const FiniteGroup& g) {
  CenterInfo info;
  std::uint64_t max_elt_order = 1;
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    if (g.classes()[c].size != 1) continue;
    info.elements.push_back(g.class_rep_index(c));
    max_elt_order = std::max(max_elt_order, g.classes()[c].element_order);
  }
  std::sort(info.elements.begin(), info.elements.end());
  info.order = info.elements.size();
  info.cyclic = max_elt_order == info.order;
  if (info.order > 1) {
    if (auto pp = nt::prime_power(info.order)) info.prime = pp->first;
  }
  return info;
}

namespace {

// Extends the subgroup `elems` (closed under right multiplication by `gens`)
// by one new generator.
void extend_closure(const FiniteGroup& g, std::vector<FiniteGroup::Index>& elems, std::vector<bool>& in,
                    std::vector<FiniteGroup::Index>& gens, FiniteGroup::Index t) {
  gens.push_back(t);
  const std::size_t old = elems.size();
  for (std::size_t i = 0; i < old; ++i) {
    const auto y = g.multiply(elems[i], t);
    if (!in[y]) {
      in[y] = true;
      elems.push_back(y);
    }
  }
  for (std::size_t i = old; i < elems.size(); ++i) {
    for (auto s : gens) {
      const auto y = g.multiply(elems[i], s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  }
}

struct Closure {
  std::vector<FiniteGroup::Index> gens;
  std::vector<FiniteGroup::Index> elems;
};

Closure normal_closure_impl(const FiniteGroup& g, const std::vector<FiniteGroup::Index>& seeds) {
  Closure cl;
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  cl.elems.push_back(0);
  std::vector<FiniteGroup::Index> ggens, ginv;
  for (const auto& s : g.generators()) {
    ggens.push_back(*g.index_of(s));
    ginv.push_back(g.inverse(ggens.back()));
  }
  for (auto s : seeds) {
    if (!in[s]) extend_closure(g, cl.elems, in, cl.gens, s);
  }
  for (std::size_t i = 0; i < cl.gens.size(); ++i) {
    for (std::size_t j = 0; j < ggens.size(); ++j) {
      const auto c = g.multiply(g.multiply(ginv[j], cl.gens[i]), ggens[j]);
      if (!in[c]) extend_closure(g, cl.elems, in, cl.gens, c);
    }
  }
  std::sort(cl.elems.begin(), cl.elems.end());
  return cl;
}

std::vector<FiniteGroup::Index> commutators_of_generators(const FiniteGroup& g) {
  std::vector<FiniteGroup::Index> gi;
  for (const auto& s : g.generators()) gi.push_back(*g.index_of(s));
  std::vector<FiniteGroup::Index> out;
  for (std::size_t a = 0; a < gi.size(); ++a) {
    for (std::size_t b = a + 1; b < gi.size(); ++b) {
      const auto x = gi[a], y = gi[b];
      out.push_back(g.multiply(g.multiply(g.inverse(x), g.inverse(y)), g.multiply(x, y)));
    }
  }
  return out;
}

}  // namespace

std::vector<FiniteGroup::Index> normal_closure(const FiniteGroup& g, const std::vector<FiniteGroup::Index>& seeds) {
  return normal_closure_impl(g, seeds).elems;
}

std::vector<FiniteGroup::Index> subgroup_elements(const FiniteGroup& g, const std::vector<FiniteGroup::Index>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<FiniteGroup::Index> elems{0}, used;
  in[0] = true;
  for (auto s : gens) {
    if (!in[s]) extend_closure(g, elems, in, used, s);
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

FiniteGroup derived_subgroup(const FiniteGroup& g, std::uint64_t max_order) {
  const Closure cl = normal_closure_impl(g, commutators_of_generators(g));
  std::vector<Permutation> gens;
  for (auto i : cl.gens) gens.push_back(g.element(i));
  return FiniteGroup::closure(gens, max_order, g.degree());
}

bool is_perfect(const FiniteGroup& g) {
  return normal_closure(g, commutators_of_generators(g)).size() == g.order();
}

bool is_normal(const FiniteGroup& g, const std::vector<FiniteGroup::Index>& subgroup) {
  std::vector<bool> in(g.order(), false);
  for (auto i : subgroup) in[i] = true;
  for (const auto& s : g.generators()) {
    const auto si = *g.index_of(s);
    const auto sinv = g.inverse(si);
    for (auto h : subgroup) {
      if (!in[g.multiply(g.multiply(sinv, h), si)]) return false;
    }
  }
  return true;
}

FiniteGroup quotient(const FiniteGroup& g, const std::vector<FiniteGroup::Index>& normal_subgroup,
                     std::uint64_t max_order) {
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> coset(g.order(), kUnset);
  std::vector<FiniteGroup::Index> reps;
  for (FiniteGroup::Index i = 0; i < g.order(); ++i) {
    if (coset[i] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(i);
    for (auto n : normal_subgroup) coset[g.multiply(n, i)] = id;
  }
  if (reps.size() > 65536) throw TooLarge("too many cosets for a permutation action");
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    const auto si = *g.index_of(s);
    std::vector<Point> img(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) img[c] = static_cast<Point>(coset[g.multiply(reps[c], si)]);
    gens.emplace_back(std::move(img));
  }
  return FiniteGroup::closure(gens, max_order, reps.size());
}

bool is_simple(const FiniteGroup& g) {
  if (g.order() == 1) return false;
  if (g.is_abelian()) return nt::is_prime(static_cast<nt::u64>(g.order()));
  // A nontrivial normal subgroup contains an element of prime order, and with
  // it that element's normal closure.
  for (std::size_t c = 1; c < g.num_classes(); ++c) {
    if (!nt::is_prime(static_cast<nt::u64>(g.classes()[c].element_order))) continue;
    if (normal_closure(g, {g.class_rep_index(c)}).size() != g.order()) return false;
  }
  return true;
}

bool is_quasisimple(const FiniteGroup& g, std::uint64_t max_order) {
  if (g.order() == 1 || !is_perfect(g)) return false;
  const CenterInfo z = center(g);
  if (z.order == 1) return is_simple(g);
  return is_simple(quotient(g, z.elements, max_order));
}

GroupFile parse_group_file(const std::string& text) {
  GroupFile file;
  bool have_degree = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (line.rfind("name", 0) == 0 && (line.size() == 4 || line[4] == ' ' || line[4] == '\t')) {
      const auto v = line.find_first_not_of(" \t", 4);
      file.name = v == std::string::npos ? "" : line.substr(v);
      continue;
    }
    if (line.rfind("degree", 0) == 0) {
      if (have_degree) throw ParseError(where + "degree given twice");
      std::istringstream ds(line.substr(6));
      long long d = -1;
      std::string rest;
      if (!(ds >> d) || (ds >> rest) || d < 0 || d > 65536) throw ParseError(where + "bad degree");
      file.degree = static_cast<std::size_t>(d);
      have_degree = true;
      continue;
    }
    if (!have_degree) throw ParseError(where + "generator before the degree line");
    try {
      file.generators.push_back(parse_cycles(line, file.degree));
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
  }
  if (!have_degree) throw ParseError("missing degree line");
  return file;
}

std::string format_group_file(const GroupFile& file) {
  std::ostringstream os;
  if (!file.name.empty()) os << "name " << file.name << '\n';
  os << "degree " << file.degree << '\n';
  for (const auto& g : file.generators) os << g.to_cycles() << '\n';
  return os.str();
}

}  // namespace charzero
