#include "charzero/chartab.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "charzero/errors.hpp"
#include "charzero/numtheory.hpp"

namespace charzero {

using u64 = std::uint64_t;

ClassTensor::ClassTensor(const FiniteGroup& g) : r_(g.num_classes()), rows_(r_ * r_) {
  std::vector<u64> count(r_ * r_);
  for (std::size_t k = 0; k < r_; ++k) {
    std::fill(count.begin(), count.end(), 0);
    const auto z = g.class_rep_index(k);
    for (FiniteGroup::Index x = 0; x < g.order(); ++x) {
      const auto y = g.multiply(g.inverse(x), z);
      ++count[g.class_of(x) * r_ + g.class_of(y)];
    }
    for (std::size_t ij = 0; ij < r_ * r_; ++ij) {
      if (count[ij] != 0) rows_[ij].emplace_back(static_cast<std::uint32_t>(k), count[ij]);
    }
  }
}

u64 ClassTensor::at(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [kk, c] : row(i, j)) {
    if (kk == k) return c;
  }
  return 0;
}

std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent) {
  for (u64 l = exponent + 1;; l += exponent) {
    if (l * l > 4 * order && nt::is_prime(l)) return l;
  }
}

namespace {

// Arithmetic in F_l, l < 2^32.
struct Fl {
  u64 l;
  u64 add(u64 a, u64 b) const { return (a + b) % l; }
  u64 sub(u64 a, u64 b) const { return (a + l - b) % l; }
  u64 mul(u64 a, u64 b) const { return a * b % l; }
  u64 inv(u64 a) const { return nt::powmod(a, l - 2, l); }
  u64 pow(u64 a, u64 k) const { return nt::powmod(a, k, l); }
};

using Matrix = std::vector<std::vector<u64>>;

u64 least_primitive_root(u64 l) {
  const auto qs = nt::prime_divisors(l - 1);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 q : qs) ok = ok && nt::powmod(g, (l - 1) / q, l) != 1;
    if (ok) return g;
  }
}

// Characteristic polynomial via Hessenberg form, coefficients low to high.
std::vector<u64> charpoly(Matrix h, const Fl& F) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (auto& row : h) std::swap(row[piv], row[m]);
    }
    const u64 pinv = F.inv(h[m][m - 1]);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (h[i][m - 1] == 0) continue;
      const u64 u = F.mul(h[i][m - 1], pinv);
      for (std::size_t j = 0; j < n; ++j) h[i][j] = F.sub(h[i][j], F.mul(u, h[m][j]));
      for (std::size_t j = 0; j < n; ++j) h[j][m] = F.add(h[j][m], F.mul(u, h[j][i]));
    }
  }
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    auto& cur = p[k];
    cur.assign(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      cur[i + 1] = F.add(cur[i + 1], p[k - 1][i]);
      cur[i] = F.sub(cur[i], F.mul(h[k - 1][k - 1], p[k - 1][i]));
    }
    u64 t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = F.mul(t, h[k - i][k - i - 1]);
      const u64 c = F.mul(t, h[k - i - 1][k - 1]);
      for (std::size_t j = 0; j < p[k - i - 1].size(); ++j) cur[j] = F.sub(cur[j], F.mul(c, p[k - i - 1][j]));
    }
  }
  return p[n];
}

std::vector<u64> roots(const std::vector<u64>& poly, const Fl& F) {
  std::vector<u64> out;
  for (u64 x = 0; x < F.l; ++x) {
    u64 v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = F.add(F.mul(v, x), poly[i]);
    if (v == 0) out.push_back(x);
  }
  return out;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, const Fl& F) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const u64 s = F.inv(a[row][c]);
    for (auto& x : a[row]) x = F.mul(x, s);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][c] == 0) continue;
      const u64 f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = F.sub(a[i][j], F.mul(f, a[row][j]));
    }
    pivots.push_back(c);
    ++row;
  }
  a.resize(row);
  return pivots;
}

// Null space of a (square) as row vectors.
Matrix nullspace(Matrix a, const Fl& F) {
  const std::size_t n = a[0].size();
  const auto piv = rref(a, F);
  Matrix out;
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.sub(0, a[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// A subspace of F_l^r invariant under all class matrices, kept in RREF.
struct Subspace {
  Matrix basis;
  std::vector<std::size_t> pivots;
};

class Splitter {
 public:
  Splitter(const ClassTensor& t, const Fl& F, u64 seed) : t_(t), F_(F), rng_(seed), r_(t.num_classes()) {}

  std::vector<std::vector<u64>> run() {
    std::vector<Subspace> todo;
    Matrix id(r_, std::vector<u64>(r_, 0));
    for (std::size_t i = 0; i < r_; ++i) id[i][i] = 1;
    todo.push_back(make_subspace(std::move(id)));
    std::vector<std::vector<u64>> done;
    while (!todo.empty()) {
      Subspace v = std::move(todo.back());
      todo.pop_back();
      if (v.basis.size() == 1) {
        done.push_back(v.basis[0]);
        continue;
      }
      auto parts = split(v);
      for (auto& p : parts) todo.push_back(std::move(p));
    }
    return done;
  }

 private:
  Subspace make_subspace(Matrix rows) {
    Subspace s;
    s.pivots = rref(rows, F_);
    s.basis = std::move(rows);
    return s;
  }

  // (sum_j r_j A_j)_{ik} with (A_j)_{ik} = c_jik
  Matrix random_combination() {
    Matrix a(r_, std::vector<u64>(r_, 0));
    for (std::size_t j = 0; j < r_; ++j) {
      const u64 c = rng_() % F_.l;
      if (c == 0) continue;
      for (std::size_t i = 0; i < r_; ++i) {
        for (const auto& [k, n] : t_.row(j, i)) a[i][k] = F_.add(a[i][k], F_.mul(c, n % F_.l));
      }
    }
    return a;
  }

  std::vector<Subspace> split(const Subspace& v) {
    const std::size_t d = v.basis.size();
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      const Matrix a = random_combination();
      // restricted matrix: column b = coordinates of A * basis_b
      Matrix res(d, std::vector<u64>(d, 0));
      for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t c = 0; c < d; ++c) {
          const std::size_t i = v.pivots[c];
          u64 s = 0;
          for (std::size_t k = 0; k < r_; ++k) s = F_.add(s, F_.mul(a[i][k], v.basis[b][k]));
          res[c][b] = s;
        }
      }
      const auto lambdas = roots(charpoly(res, F_), F_);
      if (lambdas.size() < 2) continue;
      std::vector<Subspace> parts;
      std::size_t total = 0;
      for (u64 lam : lambdas) {
        Matrix shifted = res;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = F_.sub(shifted[i][i], lam);
        Matrix rows;
        for (const auto& coord : nullspace(shifted, F_)) {
          std::vector<u64> w(r_, 0);
          for (std::size_t b = 0; b < d; ++b) {
            if (coord[b] == 0) continue;
            for (std::size_t k = 0; k < r_; ++k) w[k] = F_.add(w[k], F_.mul(coord[b], v.basis[b][k]));
          }
          rows.push_back(std::move(w));
        }
        total += rows.size();
        parts.push_back(make_subspace(std::move(rows)));
      }
      if (total != d) throw Degenerate("class matrices are not simultaneously diagonalisable mod " + std::to_string(F_.l));
      return parts;
    }
    throw Degenerate("eigenspace of dimension " + std::to_string(d) + " did not split");
  }

  static constexpr int kAttempts = 40;
  const ClassTensor& t_;
  Fl F_;
  std::mt19937_64 rng_;
  std::size_t r_;
};

std::string row_key(const Character& c) {
  std::string s;
  for (const auto& v : c.values) {
    s += v.serialize();
    s += '\x01';
  }
  return s;
}

bool is_trivial_row(const Character& c) {
  return std::all_of(c.values.begin(), c.values.end(), [](const CycloNum& v) { return v == CycloNum(1); });
}

CharacterTable compute(const FiniteGroup& g, const ClassTensor& tensor, const TableOptions& opts, u64 seed) {
  const std::size_t r = g.num_classes();
  const u64 e = g.exponent();
  const u64 l = dixon_prime(g.order(), e);
  if (l >= (u64{1} << 32)) throw BudgetExceeded("working prime too large");
  const Fl F{l};
  const auto inv_class = g.inverse_classes();

  Splitter splitter(tensor, F, seed);
  auto vectors = splitter.run();
  if (vectors.size() != r) throw Degenerate("found " + std::to_string(vectors.size()) + " characters, expected " + std::to_string(r));

  const u64 z = F.pow(least_primitive_root(l), (l - 1) / e);
  // power classes, per class: class of rep^s for s < element order
  std::vector<std::vector<std::size_t>> powers(r);
  for (std::size_t k = 0; k < r; ++k) {
    const u64 o = g.classes()[k].element_order;
    for (u64 s = 0; s < o; ++s) powers[k].push_back(g.power_class(k, static_cast<std::int64_t>(s)));
  }

  u64 sqrt_order = 0;
  while ((sqrt_order + 1) * (sqrt_order + 1) <= g.order()) ++sqrt_order;

  CharacterTable t;
  t.group = opts.name;
  t.order = g.order();
  t.m = static_cast<std::uint32_t>(e);
  t.prime = l;
  t.seed = seed;
  for (const auto& c : g.classes()) t.classes.push_back({c.size, c.element_order, c.centralizer_order, c.rep.to_cycles()});

  for (auto& w : vectors) {
    const u64 s0 = F.inv(w[0]);
    for (auto& x : w) x = F.mul(x, s0);
    u64 sum = 0;
    for (std::size_t k = 0; k < r; ++k)
      sum = F.add(sum, F.mul(F.mul(w[k], w[inv_class[k]]), F.inv(g.classes()[k].size % l)));
    if (sum == 0) throw Degenerate("zero norm for a central character");
    const u64 d2 = F.mul(g.order() % l, F.inv(sum));
    u64 d = 0;
    for (u64 x = 1; x <= sqrt_order; ++x) {
      if (F.mul(x, x) == d2) {
        d = x;
        break;
      }
    }
    if (d == 0) throw Degenerate("no degree matches the central character");
    std::vector<u64> chi(r);
    for (std::size_t k = 0; k < r; ++k) chi[k] = F.mul(F.mul(w[k], d), F.inv(g.classes()[k].size % l));

    Character row;
    row.degree = d;
    for (std::size_t k = 0; k < r; ++k) {
      const u64 o = g.classes()[k].element_order;
      const u64 step = e / o;
      const u64 oinv = F.inv(o % l);
      CycloNum::Terms terms;
      for (u64 tt = 0; tt < o; ++tt) {
        u64 a = 0;
        for (u64 s = 0; s < o; ++s) {
          const u64 ex = (e - (step * tt * s) % e) % e;
          a = F.add(a, F.mul(chi[powers[k][s]], F.pow(z, ex)));
        }
        a = F.mul(a, oinv);
        if (a > d) throw Degenerate("eigenvalue multiplicity out of range");
        if (a != 0) terms[static_cast<std::uint32_t>(tt * step)] = Rational(static_cast<unsigned long>(a));
      }
      row.values.push_back(CycloNum::from_terms(t.m, terms));
    }
    t.chars.push_back(std::move(row));
  }
  canonicalize_rows(t);
  return t;
}

// Sparse integer form of an algebraic integer in Q(zeta_m).
using IntTerms = std::vector<std::pair<std::uint32_t, __int128>>;

std::optional<IntTerms> int_terms(const CycloNum& v, std::uint32_t m) {
  if (m % v.order() != 0) return std::nullopt;
  const CycloNum w = v.order() == m ? v : v.embed(m);
  IntTerms out;
  for (const auto& [ex, c] : w.coeffs()) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) return std::nullopt;
    out.emplace_back(ex, static_cast<__int128>(c.get_num().get_si()));
  }
  return out;
}

Rational from_int128(__int128 x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  std::string s;
  do {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  } while (u != 0);
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return Rational(mpz_class(s));
}

}  // namespace

void canonicalize_rows(CharacterTable& t) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < t.chars.size(); ++i) keys.emplace_back(row_key(t.chars[i]), i);
  std::vector<std::size_t> order(t.chars.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<bool> trivial(t.chars.size());
  for (std::size_t i = 0; i < t.chars.size(); ++i) trivial[i] = is_trivial_row(t.chars[i]);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ca = t.chars[a];
    const auto& cb = t.chars[b];
    if (ca.degree != cb.degree) return ca.degree < cb.degree;
    if (trivial[a] != trivial[b]) return static_cast<bool>(trivial[a]);
    return keys[a].first < keys[b].first;
  });
  std::vector<Character> sorted;
  for (auto i : order) sorted.push_back(std::move(t.chars[i]));
  t.chars = std::move(sorted);
}

CharacterTable character_table(const FiniteGroup& g, const TableOptions& opts) {
  if (g.num_classes() > opts.max_classes)
    throw BudgetExceeded(std::to_string(g.num_classes()) + " classes exceed the budget of " + std::to_string(opts.max_classes));
  const ClassTensor tensor(g);
  std::optional<Degenerate> last;
  for (u64 attempt = 0; attempt < 3; ++attempt) {
    try {
      CharacterTable t = compute(g, tensor, opts, opts.seed + attempt);
      const auto rep = verify_table(t);
      if (!rep.ok()) throw ValidationFailed("computed table failed verification: " + rep.failures.front());
      return t;
    } catch (const Degenerate& e) {
      last = e;
    }
  }
  throw *last;
}

VerifyReport verify_table(const CharacterTable& t) {
  VerifyReport rep;
  auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };
  const std::size_t r = t.classes.size();
  if (t.chars.size() != r) {
    fail("table has " + std::to_string(t.chars.size()) + " rows for " + std::to_string(r) + " classes");
    return rep;
  }
  if (r == 0) {
    fail("table is empty");
    return rep;
  }
  u64 class_total = 0;
  for (std::size_t k = 0; k < r; ++k) {
    const auto& c = t.classes[k];
    class_total += c.size;
    if (c.size * c.centralizer_order != t.order) fail("class " + std::to_string(k) + ": size times centralizer order is not |G|");
    if (c.element_order == 0 || t.m % c.element_order != 0) fail("class " + std::to_string(k) + ": element order does not divide m");
  }
  if (class_total != t.order) fail("class sizes sum to " + std::to_string(class_total) + ", not |G|");
  if (t.classes[0].size != 1 || t.classes[0].element_order != 1) fail("class 0 is not the identity class");

  u64 deg2 = 0;
  bool integral = true;
  std::vector<std::vector<IntTerms>> ints(r, std::vector<IntTerms>(r));
  for (std::size_t i = 0; i < r; ++i) {
    const auto& ch = t.chars[i];
    if (ch.values.size() != r) {
      fail("row " + std::to_string(i) + " has " + std::to_string(ch.values.size()) + " entries");
      return rep;
    }
    deg2 += ch.degree * ch.degree;
    if (ch.degree == 0) fail("row " + std::to_string(i) + " has degree 0");
    if (!(ch.values[0] == CycloNum(static_cast<long>(ch.degree))))
      fail("row " + std::to_string(i) + ": value at the identity differs from the degree");
    for (std::size_t k = 0; k < r; ++k) {
      auto it = int_terms(ch.values[k], t.m);
      if (!it) {
        integral = false;
        fail("entry (" + std::to_string(i) + "," + std::to_string(k) + ") is not an algebraic integer of Q(zeta_" +
             std::to_string(t.m) + ")");
      } else {
        ints[i][k] = std::move(*it);
      }
    }
  }
  if (deg2 != t.order) fail("sum of squared degrees is " + std::to_string(deg2) + ", not |G| = " + std::to_string(t.order));
  if (!is_trivial_row(t.chars[0])) fail("row 0 is not the trivial character");

  const std::uint32_t m = t.m;
  std::vector<__int128> acc(m);
  auto reduce = [&]() {
    CycloNum::Terms terms;
    for (std::uint32_t e = 0; e < m; ++e) {
      if (acc[e] != 0) terms[e] = from_int128(acc[e]);
      acc[e] = 0;
    }
    return CycloNum::from_terms(m, terms);
  };
  // sum over a of w * x_a * conj(y_a)
  auto add = [&](const IntTerms& x, const IntTerms& y, __int128 w) {
    for (const auto& [ex, cx] : x) {
      for (const auto& [ey, cy] : y) acc[(ex + m - ey) % m] += w * cx * cy;
    }
  };
  auto slow = [&](const CycloNum& x, const CycloNum& y, const Rational& w, CycloAccumulator& a) {
    a.add_product(x.order() == m ? x : x.embed(m), (y.order() == m ? y : y.embed(m)).conj(), w);
  };
  const bool mixed = std::any_of(t.chars.begin(), t.chars.end(), [&](const Character& c) {
    return std::any_of(c.values.begin(), c.values.end(), [&](const CycloNum& v) { return m % v.order() != 0; });
  });
  if (mixed) {
    fail("some entries do not lie in Q(zeta_" + std::to_string(m) + ")");
    return rep;
  }

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      CycloNum v;
      if (integral) {
        for (std::size_t k = 0; k < r; ++k) add(ints[i][k], ints[j][k], static_cast<__int128>(t.classes[k].size));
        v = reduce();
      } else {
        CycloAccumulator a(m);
        for (std::size_t k = 0; k < r; ++k) slow(t.chars[i].values[k], t.chars[j].values[k], Rational(static_cast<unsigned long>(t.classes[k].size)), a);
        v = a.value();
      }
      const CycloNum want(i == j ? static_cast<long>(t.order) : 0L);
      if (!(v == want)) fail("row orthogonality fails for rows " + std::to_string(i) + " and " + std::to_string(j));
    }
  }
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = k; l < r; ++l) {
      CycloNum v;
      if (integral) {
        for (std::size_t i = 0; i < r; ++i) add(ints[i][k], ints[i][l], 1);
        v = reduce();
      } else {
        CycloAccumulator a(m);
        for (std::size_t i = 0; i < r; ++i) slow(t.chars[i].values[k], t.chars[i].values[l], Rational(1), a);
        v = a.value();
      }
      const CycloNum want(k == l ? static_cast<long>(t.classes[k].centralizer_order) : 0L);
      if (!(v == want)) fail("column orthogonality fails for classes " + std::to_string(k) + " and " + std::to_string(l));
    }
  }
  return rep;
}

std::vector<std::size_t> kernel_of(const CharacterTable& t, std::size_t row) {
  const auto& ch = t.chars.at(row);
  const CycloNum deg(static_cast<long>(ch.degree));
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < ch.values.size(); ++k) {
    if (ch.values[k] == deg) out.push_back(k);
  }
  return out;
}

bool is_faithful(const CharacterTable& t, std::size_t row) {
  const auto k = kernel_of(t, row);
  return k.size() == 1 && k[0] == 0;
}

namespace {

constexpr const char* kMagic = "charzero-table";
constexpr int kFormat = 1;

}  // namespace

std::string write_table(const CharacterTable& t) {
  std::ostringstream os;
  os << kMagic << " format " << kFormat << '\n';
  os << "group " << t.group << '\n';
  os << "order " << t.order << '\n';
  os << "exponent " << t.m << '\n';
  os << "prime " << t.prime << '\n';
  os << "seed " << t.seed << '\n';
  os << "classes " << t.classes.size() << '\n';
  for (const auto& c : t.classes)
    os << "class " << c.size << ' ' << c.element_order << ' ' << c.centralizer_order << ' ' << c.rep << '\n';
  os << "characters " << t.chars.size() << '\n';
  for (const auto& ch : t.chars) {
    os << "char " << ch.degree;
    for (const auto& v : ch.values) os << ' ' << v.serialize();
    os << '\n';
  }
  os << "end\n";
  return os.str();
}

CharacterTable read_table(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto next = [&](const std::string& key) -> std::string {
    if (!std::getline(in, line)) throw ParseError("table ends early, expected '" + key + "'");
    ++lineno;
    if (line.rfind(key + " ", 0) != 0 && line != key)
      throw ParseError("line " + std::to_string(lineno) + ": expected '" + key + "'");
    return line.size() > key.size() ? line.substr(key.size() + 1) : "";
  };
  auto number = [&](const std::string& s) -> u64 {
    if (s.empty() || s.size() > 19 || s.find_first_not_of("0123456789") != std::string::npos ||
        (s.size() > 1 && s[0] == '0'))
      throw ParseError("line " + std::to_string(lineno) + ": bad number '" + s + "'");
    return std::stoull(s);
  };
  if (next(kMagic) != "format " + std::to_string(kFormat)) throw ParseError("unsupported table format");
  CharacterTable t;
  t.group = next("group");
  t.order = number(next("order"));
  const u64 m = number(next("exponent"));
  if (m == 0 || m > 0xffffffffULL) throw ParseError("bad exponent");
  t.m = static_cast<std::uint32_t>(m);
  t.prime = number(next("prime"));
  t.seed = number(next("seed"));
  const u64 r = number(next("classes"));
  if (r > 4096) throw ParseError("too many classes");
  for (u64 k = 0; k < r; ++k) {
    std::istringstream ls(next("class"));
    std::string a, b, c;
    ls >> a >> b >> c;
    ClassSummary cs;
    cs.size = number(a);
    cs.element_order = number(b);
    cs.centralizer_order = number(c);
    std::getline(ls, cs.rep);
    if (cs.rep.empty() || cs.rep[0] != ' ') throw ParseError("line " + std::to_string(lineno) + ": missing representative");
    cs.rep.erase(0, 1);
    t.classes.push_back(std::move(cs));
  }
  const u64 n = number(next("characters"));
  if (n > 4096) throw ParseError("too many characters");
  for (u64 i = 0; i < n; ++i) {
    const std::string body = next("char");
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      const auto sp = body.find(' ', pos);
      fields.push_back(body.substr(pos, sp == std::string::npos ? std::string::npos : sp - pos));
      if (sp == std::string::npos) break;
      pos = sp + 1;
    }
    Character ch;
    ch.degree = number(fields[0]);
    for (std::size_t f = 1; f < fields.size(); ++f) {
      CycloNum v = CycloNum::parse(fields[f]);
      if (v.serialize() != fields[f])
        throw ParseError("line " + std::to_string(lineno) + ": entry is not in canonical form");
      ch.values.push_back(std::move(v));
    }
    t.chars.push_back(std::move(ch));
  }
  next("end");
  if (std::getline(in, line)) throw ParseError("trailing data after 'end'");
  return t;
}

}  // namespace charzero
