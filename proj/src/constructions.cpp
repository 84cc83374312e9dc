#include "charzero/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <regex>

#include "charzero/errors.hpp"
#include "charzero/numtheory.hpp"

namespace charzero {

namespace {

using Elt = FqField::Elt;

const FqField& field_of_order(std::uint64_t q) {
  const auto pp = nt::prime_power(q);
  if (!pp) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  return gf(pp->first, pp->second);
}

void check_line_budget(std::uint64_t q) {
  if (!nt::prime_power(q)) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  if (q < 4 || q > 32) throw Unsupported("q = " + std::to_string(q) + " is outside 4..32");
}

// x -> (a x^s + b) / (c x^s + d) on the projective line, where s = p^frob.
// Point 0 is infinity and point 1 + e is the field element e.
Permutation mobius(const FqField& F, Elt a, Elt b, Elt c, Elt d, unsigned frob = 0) {
  const std::uint32_t q = F.q();
  std::vector<Point> img(q + 1);
  img[0] = c == 0 ? 0 : static_cast<Point>(1 + F.div(a, c));
  for (Elt x0 = 0; x0 < q; ++x0) {
    Elt x = x0;
    for (unsigned i = 0; i < frob; ++i) x = F.frobenius(x);
    const Elt num = F.add(F.mul(a, x), b);
    const Elt den = F.add(F.mul(c, x), d);
    img[1 + x0] = den == 0 ? 0 : static_cast<Point>(1 + F.div(num, den));
  }
  return Permutation(std::move(img));
}

// Adds candidates one at a time, skipping those already generated, until
// the closure reaches `target` elements.
std::vector<Permutation> greedy_generators(const std::vector<Permutation>& candidates, std::uint64_t target) {
  std::vector<Permutation> gens;
  std::optional<FiniteGroup> cur;
  for (const auto& c : candidates) {
    if (c.is_identity()) continue;
    if (cur && cur->contains(c)) continue;
    gens.push_back(c);
    try {
      cur = FiniteGroup::closure(gens, target);
    } catch (const OrderBudgetExceeded&) {
      throw ValidationFailed("generated group exceeds the expected order " + std::to_string(target));
    }
    if (cur->order() == target) return gens;
  }
  throw ValidationFailed("candidates generate a group of order " + std::to_string(cur ? cur->order() : 1) +
                         ", expected " + std::to_string(target));
}

template <std::size_t N>
using Vec = std::array<Elt, N>;

template <std::size_t N>
using Mat = std::array<std::array<Elt, N>, N>;

template <std::size_t N>
Vec<N> apply(const FqField& F, const Mat<N>& M, const Vec<N>& v) {
  Vec<N> w{};
  for (std::size_t i = 0; i < N; ++i) {
    Elt s = 0;
    for (std::size_t j = 0; j < N; ++j) s = F.add(s, F.mul(M[i][j], v[j]));
    w[i] = s;
  }
  return w;
}

// Scales so the first nonzero coordinate is 1.
template <std::size_t N>
Vec<N> normalise(const FqField& F, Vec<N> v) {
  for (std::size_t i = 0; i < N; ++i) {
    if (v[i] != 0) {
      const Elt s = F.inv(v[i]);
      for (auto& x : v) x = F.mul(s, x);
      break;
    }
  }
  return v;
}

template <std::size_t N>
Vec<N> frobenius(const FqField& F, Vec<N> v) {
  for (auto& x : v) x = F.frobenius(x);
  return v;
}

Elt det3(const FqField& F, const Mat<3>& M) {
  auto m = [&](Elt a, Elt b) { return F.mul(a, b); };
  const Elt t1 = m(M[0][0], F.sub(m(M[1][1], M[2][2]), m(M[1][2], M[2][1])));
  const Elt t2 = m(M[0][1], F.sub(m(M[1][0], M[2][2]), m(M[1][2], M[2][0])));
  const Elt t3 = m(M[0][2], F.sub(m(M[1][0], M[2][1]), m(M[1][1], M[2][0])));
  return F.add(F.sub(t1, t2), t3);
}

// (M^{-1})^T, i.e. cofactor matrix over the determinant.
Mat<3> inverse_transpose(const FqField& F, const Mat<3>& M) {
  const Elt dinv = F.inv(det3(F, M));
  Mat<3> C{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const int r1 = (r + 1) % 3, r2 = (r + 2) % 3, c1 = (c + 1) % 3, c2 = (c + 2) % 3;
      // cyclic minors already carry the cofactor sign
      C[r][c] = F.mul(dinv, F.sub(F.mul(M[r1][c1], M[r2][c2]), F.mul(M[r1][c2], M[r2][c1])));
    }
  }
  return C;
}

template <std::size_t N>
std::optional<Permutation> action_on(const FqField& F, const Mat<N>& M, const std::vector<Vec<N>>& pts,
                                     const std::map<Vec<N>, Point>& index, bool projective) {
  std::vector<Point> img(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Vec<N> w = apply(F, M, pts[i]);
    if (projective) w = normalise(F, w);
    auto it = index.find(w);
    if (it == index.end()) return std::nullopt;
    img[i] = it->second;
  }
  return Permutation(std::move(img));
}

template <std::size_t N>
std::map<Vec<N>, Point> index_points(const std::vector<Vec<N>>& pts) {
  std::map<Vec<N>, Point> idx;
  for (std::size_t i = 0; i < pts.size(); ++i) idx[pts[i]] = static_cast<Point>(i);
  return idx;
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// The 3 x 3 matrices over F_4 preserving the hyperoval H projectively.
struct Hyperoval {
  const FqField& F = gf(2, 2);
  std::vector<Vec<3>> H;        // normalised points
  std::vector<Vec<3>> E;        // normalised external lines (as dual vectors)
  std::vector<Vec<3>> vectors;  // all nonzero multiples of H, sorted
  std::vector<Vec<3>> covectors;
  std::vector<Mat<3>> stabiliser;  // determinant 1

  Hyperoval() {
    for (Elt t = 0; t < 4; ++t) H.push_back({1, t, F.mul(t, t)});
    H.push_back({0, 0, 1});
    H.push_back({0, 1, 0});
    for (Elt a = 0; a < 4; ++a) {
      for (Elt b = 0; b < 4; ++b) {
        for (Elt c = 0; c < 4; ++c) {
          Vec<3> l{a, b, c};
          if (l == Vec<3>{0, 0, 0} || normalise(F, l) != l) continue;
          bool external = true;
          for (const auto& h : H) {
            if (F.add(F.add(F.mul(a, h[0]), F.mul(b, h[1])), F.mul(c, h[2])) == 0) external = false;
          }
          if (external) E.push_back(l);
        }
      }
    }
    for (Elt s = 1; s < 4; ++s) {
      for (const auto& h : H) vectors.push_back({F.mul(s, h[0]), F.mul(s, h[1]), F.mul(s, h[2])});
      for (const auto& e : E) covectors.push_back({F.mul(s, e[0]), F.mul(s, e[1]), F.mul(s, e[2])});
    }
    std::sort(vectors.begin(), vectors.end());
    std::sort(covectors.begin(), covectors.end());
    std::sort(H.begin(), H.end());
    std::sort(E.begin(), E.end());

    for_each_invertible([&](const Mat<3>& M, Elt det) {
      if (det == 1 && maps(M, H, H, false)) stabiliser.push_back(M);
    });
  }

  template <class Fn>
  void for_each_invertible(Fn&& fn) const {
    Mat<3> M{};
    for (std::uint32_t code = 0; code < (1u << 18); ++code) {
      for (int k = 0; k < 9; ++k) M[k / 3][k % 3] = (code >> (2 * k)) & 3;
      const Elt d = det3(F, M);
      if (d != 0) fn(M, d);
    }
  }

  bool maps(const Mat<3>& M, const std::vector<Vec<3>>& from, const std::vector<Vec<3>>& to, bool frob) const {
    for (const auto& h : from) {
      const auto w = normalise(F, apply(F, M, frob ? frobenius(F, h) : h));
      if (!std::binary_search(to.begin(), to.end(), w)) return false;
    }
    return true;
  }
};

}  // namespace

std::string to_string(RecipeSource s) {
  switch (s) {
    case RecipeSource::ProjectiveLine:
      return "PROJECTIVE_LINE";
    case RecipeSource::LinearAction:
      return "LINEAR_ACTION";
    case RecipeSource::DataGenerators:
      return "DATA_GENERATORS";
  }
  return "?";
}

RecipeSource parse_recipe_source(const std::string& s) {
  if (s == "PROJECTIVE_LINE") return RecipeSource::ProjectiveLine;
  if (s == "LINEAR_ACTION") return RecipeSource::LinearAction;
  if (s == "DATA_GENERATORS") return RecipeSource::DataGenerators;
  throw ParseError("unknown recipe source '" + s + "'");
}

FiniteGroup psl2(std::uint64_t q) {
  check_line_budget(q);
  const auto& F = field_of_order(q);
  const Elt w = F.primitive();
  return FiniteGroup::closure({mobius(F, 1, 1, 0, 1), mobius(F, F.mul(w, w), 0, 0, 1), mobius(F, 0, F.neg(1), 1, 0)});
}

FiniteGroup pgl2(std::uint64_t q) {
  check_line_budget(q);
  const auto& F = field_of_order(q);
  return FiniteGroup::closure({mobius(F, 1, 1, 0, 1), mobius(F, F.primitive(), 0, 0, 1), mobius(F, 0, 1, 1, 0)});
}

FiniteGroup sl2(std::uint64_t q) {
  check_line_budget(q);
  const auto& F = field_of_order(q);
  const std::uint32_t n = F.q();
  // row vector (a, b) -> (a, b) M; point index a*q + b - 1
  auto act = [&](const Mat<2>& M) {
    std::vector<Point> img(std::size_t{n} * n - 1);
    for (Elt a = 0; a < n; ++a) {
      for (Elt b = 0; b < n; ++b) {
        if (a == 0 && b == 0) continue;
        const Elt x = F.add(F.mul(a, M[0][0]), F.mul(b, M[1][0]));
        const Elt y = F.add(F.mul(a, M[0][1]), F.mul(b, M[1][1]));
        img[a * n + b - 1] = static_cast<Point>(x * n + y - 1);
      }
    }
    return Permutation(std::move(img));
  };
  const Elt w = F.primitive();
  return FiniteGroup::closure({act({{{1, 1}, {0, 1}}}), act({{{w, 0}, {0, F.inv(w)}}}), act({{{0, 1}, {F.neg(1), 0}}})});
}

FiniteGroup alternating(unsigned n) {
  if (n < 5 || n > 9) throw Unsupported("alternating groups are built for 5 <= n <= 9");
  std::vector<Point> big;
  for (unsigned i = n % 2 == 1 ? 0 : 1; i < n; ++i) big.push_back(static_cast<Point>(i));
  return FiniteGroup::closure({Permutation::from_cycles(n, {{0, 1, 2}}), Permutation::from_cycles(n, {big})});
}

FiniteGroup cyclic(unsigned n) {
  if (n == 0) throw PreconditionViolated("cyclic group of order 0");
  if (n == 1) return FiniteGroup::closure({}, kDefaultMaxOrder, 1);
  std::vector<Point> c(n);
  std::iota(c.begin(), c.end(), Point{0});
  return FiniteGroup::closure({Permutation::from_cycles(n, {c})});
}

std::vector<Permutation> suzuki8_generators(bool with_field_automorphism) {
  const auto& F = gf(2, 3);
  // Ovoid in PG(3,8): (0,0,0,1) and (1, x, y, xy + x^6 + y^4).
  std::vector<Vec<4>> pts{{0, 0, 0, 1}};
  for (Elt x = 0; x < 8; ++x) {
    for (Elt y = 0; y < 8; ++y) pts.push_back({1, x, y, F.add(F.add(F.mul(x, y), F.pow(x, 6)), F.pow(y, 4))});
  }
  const auto idx = index_points(pts);
  std::vector<Permutation> cands;
  Mat<4> M{};
  for (std::uint32_t code = 0; code < (1u << 18); ++code) {
    M = {};
    for (int i = 0; i < 4; ++i) M[i][i] = 1;
    M[1][0] = code & 7;
    M[2][0] = (code >> 3) & 7;
    M[2][1] = (code >> 6) & 7;
    M[3][0] = (code >> 9) & 7;
    M[3][1] = (code >> 12) & 7;
    M[3][2] = (code >> 15) & 7;
    if (auto p = action_on(F, M, pts, idx, true)) cands.push_back(*p);
  }
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    for (std::uint32_t code = 0; code < 7 * 7 * 7 * 7; ++code) {
      M = {};
      std::uint32_t c = code;
      for (int i = 0; i < 4; ++i) {
        M[i][perm[i]] = 1 + c % 7;
        c /= 7;
      }
      if (auto p = action_on(F, M, pts, idx, true)) cands.push_back(*p);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  auto gens = greedy_generators(cands, 29120);
  if (with_field_automorphism) {
    std::vector<Point> img(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) img[i] = idx.at(frobenius(F, pts[i]));
    gens.emplace_back(std::move(img));
  }
  return gens;
}

std::vector<Permutation> psu3_4_generators() {
  const auto& F = gf(2, 4);
  auto bar = [&](Elt a) { return F.pow(a, 4); };
  // Hermitian form u0 bar(v2) + u1 bar(v1) + u2 bar(v0).
  std::vector<Vec<3>> pts;
  for (Elt a = 0; a < 16; ++a) {
    for (Elt b = 0; b < 16; ++b) {
      for (Elt c = 0; c < 16; ++c) {
        const Vec<3> v{a, b, c};
        if (v == Vec<3>{0, 0, 0} || normalise(F, v) != v) continue;
        const Elt h = F.add(F.add(F.mul(a, bar(c)), F.mul(b, bar(b))), F.mul(c, bar(a)));
        if (h == 0) pts.push_back(v);
      }
    }
  }
  if (pts.size() != 65) throw ValidationFailed("expected 65 isotropic points");
  const auto idx = index_points(pts);
  auto unitary = [&](const Mat<3>& M) {
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < 3; ++k) {
        Elt s = 0;
        for (int j = 0; j < 3; ++j) s = F.add(s, F.mul(M[j][i], bar(M[2 - j][k])));
        if (s != (i + k == 2 ? 1u : 0u)) return false;
      }
    }
    return true;
  };
  std::vector<Permutation> cands;
  for (std::uint32_t code = 0; code < 4096; ++code) {
    Mat<3> M{{{1, 0, 0}, {code & 15, 1, 0}, {(code >> 4) & 15, (code >> 8) & 15, 1}}};
    if (unitary(M)) cands.push_back(*action_on(F, M, pts, idx, true));
  }
  for (Elt a = 1; a < 16; ++a) {
    for (Elt b = 1; b < 16; ++b) {
      for (Elt c = 1; c < 16; ++c) {
        Mat<3> M{{{a, 0, 0}, {0, b, 0}, {0, 0, c}}};
        if (F.mul(F.mul(a, b), c) == 1 && unitary(M)) cands.push_back(*action_on(F, M, pts, idx, true));
      }
    }
  }
  const Mat<3> J{{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};
  cands.push_back(*action_on(F, J, pts, idx, true));
  return greedy_generators(cands, 62400);
}

std::vector<Permutation> three_a6_generators(bool with_outer_2_3) {
  static const Hyperoval hyp;
  const auto& F = hyp.F;
  if (!with_outer_2_3) {
    const auto idx = index_points(hyp.vectors);
    std::vector<Permutation> cands;
    for (const auto& M : hyp.stabiliser) cands.push_back(*action_on(F, M, hyp.vectors, idx, false));
    return greedy_generators(cands, 1080);
  }

  // 36 points: the 18 vectors over H, then the 18 covectors over the
  // external lines. Linear maps act by M and M^{-T}; the outer element is
  // semilinear and swaps the two halves.
  std::vector<Vec<3>> pts = hyp.vectors;
  pts.insert(pts.end(), hyp.covectors.begin(), hyp.covectors.end());
  auto vec_index = index_points(hyp.vectors);
  auto cov_index = index_points(hyp.covectors);
  auto action36 = [&](const Mat<3>& M, bool swap) -> std::optional<Permutation> {
    const Mat<3> T = inverse_transpose(F, M);
    std::vector<Point> img(36);
    for (std::size_t i = 0; i < 18; ++i) {
      const auto v = swap ? frobenius(F, hyp.vectors[i]) : hyp.vectors[i];
      const auto w = swap ? frobenius(F, hyp.covectors[i]) : hyp.covectors[i];
      const auto a = apply(F, M, v);
      const auto b = apply(F, T, w);
      const auto& ia = swap ? cov_index : vec_index;
      const auto& ib = swap ? vec_index : cov_index;
      auto ita = ia.find(a);
      auto itb = ib.find(b);
      if (ita == ia.end() || itb == ib.end()) return std::nullopt;
      img[i] = static_cast<Point>(ita->second + (swap ? 18 : 0));
      img[18 + i] = static_cast<Point>(itb->second + (swap ? 0 : 18));
    }
    return Permutation(std::move(img));
  };
  std::vector<Permutation> cands;
  for (const auto& M : hyp.stabiliser) cands.push_back(*action36(M, false));
  auto gens = greedy_generators(cands, 1080);

  std::optional<Permutation> outer;
  hyp.for_each_invertible([&](const Mat<3>& M, Elt) {
    if (outer || !hyp.maps(M, hyp.H, hyp.E, true)) return;
    auto x = action36(M, true);
    if (!x) return;
    auto trial = gens;
    trial.push_back(*x);
    try {
      const auto g = FiniteGroup::closure(trial, 2160);
      if (g.order() == 2160 && center(g).order == 3) outer = *x;
    } catch (const OrderBudgetExceeded&) {
    }
  });
  if (!outer) throw ValidationFailed("no semilinear element of the expected kind was found");
  gens.push_back(*outer);
  return gens;
}

std::vector<Permutation> psl2_8_3_generators() {
  const auto& F = gf(2, 3);
  const Elt w = F.primitive();
  return {mobius(F, 1, 1, 0, 1), mobius(F, F.mul(w, w), 0, 0, 1), mobius(F, 0, 1, 1, 0), mobius(F, 1, 0, 0, 1, 1)};
}

std::vector<Permutation> a6_2_3_generators() {
  const auto& F = gf(3, 2);
  const Elt w = F.primitive();
  // PSL(2,9) together with x -> w x^3
  return {mobius(F, 1, 1, 0, 1), mobius(F, F.mul(w, w), 0, 0, 1), mobius(F, 0, F.neg(1), 1, 0),
          mobius(F, w, 0, 0, 1, 1)};
}

namespace {

FiniteGroup build_unchecked(const GroupRecipe& r, std::uint64_t max_order) {
  const std::string& f = r.family;
  if (f == "PSL2") return psl2(r.q);
  if (f == "SL2") return sl2(r.q);
  if (f == "PGL2") return pgl2(r.q);
  if (f == "ALT") return alternating(r.n);
  if (f == "CYCLIC") return cyclic(r.n);
  if (f == "PSL2_8_3") return FiniteGroup::closure(psl2_8_3_generators(), max_order);
  if (f == "A6_2_3") return FiniteGroup::closure(a6_2_3_generators(), max_order);
  if (f == "SZ8") return FiniteGroup::closure(suzuki8_generators(false), max_order);
  if (f == "SZ8_3") return FiniteGroup::closure(suzuki8_generators(true), max_order);
  if (f == "PSU3_4") return FiniteGroup::closure(psu3_4_generators(), max_order);
  if (f == "3A6") return FiniteGroup::closure(three_a6_generators(false), max_order);
  if (f == "3A6_2_3") return FiniteGroup::closure(three_a6_generators(true), max_order);
  if (f == "DATA") {
    std::vector<Permutation> gens;
    for (const auto& g : r.generators) {
      try {
        gens.push_back(parse_cycles(g, r.degree));
      } catch (const ParseError& e) {
        throw ValidationFailed(r.name + ": corrupt generator data: " + e.what());
      }
    }
    return FiniteGroup::closure(gens, max_order, r.degree);
  }
  throw Unsupported("unknown group family '" + f + "'");
}

}  // namespace

FiniteGroup build(const GroupRecipe& r, std::uint64_t max_order) {
  if (r.expected_order > max_order)
    throw OrderBudgetExceeded(r.name + " has order " + std::to_string(r.expected_order) + " above the budget");
  FiniteGroup g = build_unchecked(r, max_order);
  auto fail = [&](const std::string& what, std::uint64_t got, std::uint64_t want) {
    throw ValidationFailed(r.name + ": " + what + " is " + std::to_string(got) + ", expected " + std::to_string(want));
  };
  if (r.expected_order != 0 && g.order() != r.expected_order) fail("order", g.order(), r.expected_order);
  if (r.expected_center) {
    const auto z = center(g).order;
    if (z != *r.expected_center) fail("centre order", z, *r.expected_center);
  }
  if (r.expected_derived || r.outer_involutions) {
    const FiniteGroup d = derived_subgroup(g, max_order);
    if (r.expected_derived && d.order() != *r.expected_derived) fail("derived subgroup order", d.order(), *r.expected_derived);
    if (r.outer_involutions) {
      std::uint64_t count = 0;
      for (std::size_t c = 0; c < g.num_classes(); ++c) {
        if (g.classes()[c].element_order == 2 && !d.contains(g.classes()[c].rep)) count += g.classes()[c].size;
      }
      if (count != *r.outer_involutions) fail("number of outer involutions", count, *r.outer_involutions);
    }
  }
  if (r.expect_quasisimple && is_quasisimple(g, max_order) != *r.expect_quasisimple)
    throw ValidationFailed(r.name + ": quasisimplicity differs from the registry");
  return g;
}

std::uint64_t out_order(const GroupRecipe& r) {
  if (r.expected_out_order == 0) throw Unsupported("no outer automorphism order recorded for " + r.name);
  return r.expected_out_order;
}

std::optional<GroupRecipe> family_recipe(const std::string& raw) {
  std::string name;
  for (char c : raw) {
    if (c != ' ') name.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  std::smatch m;
  GroupRecipe r;
  static const std::regex line(R"((PSL|SL|PGL)\(2,(\d+)\)|(PSL|SL|PGL)2\((\d+)\)|L2\((\d+)\))");
  static const std::regex alt(R"(A(\d+))");
  static const std::regex cyc(R"(C(\d+))");
  if (std::regex_match(name, m, line)) {
    std::string kind = m[1].matched ? m[1].str() : m[3].matched ? m[3].str() : "PSL";
    const std::string qs = m[2].matched ? m[2].str() : m[4].matched ? m[4].str() : m[5].str();
    if (qs.size() > 6) return std::nullopt;
    const std::uint64_t q = std::stoull(qs);
    const auto pp = nt::prime_power(q);
    if (!pp) return std::nullopt;
    const std::uint64_t g2 = q % 2 == 1 ? 2 : 1;
    r.name = kind + "(2," + std::to_string(q) + ")";
    r.source = kind == "SL" ? RecipeSource::LinearAction : RecipeSource::ProjectiveLine;
    r.family = kind + "2";
    r.q = q;
    const std::uint64_t full = q * (q * q - 1);
    r.expected_order = kind == "PSL" ? full / g2 : full;
    r.expected_out_order = g2 * pp->second;
    r.expected_center = kind == "SL" ? g2 : 1;
    return r;
  }
  if (std::regex_match(name, m, alt)) {
    if (m[1].str().size() > 2) return std::nullopt;
    const unsigned n = static_cast<unsigned>(std::stoul(m[1].str()));
    r.name = "A" + std::to_string(n);
    r.source = RecipeSource::DataGenerators;
    r.family = "ALT";
    r.n = n;
    r.expected_order = n >= 2 ? factorial(n) / 2 : 1;
    r.expected_out_order = n == 6 ? 4 : 2;
    r.expected_center = 1;
    return r;
  }
  if (std::regex_match(name, m, cyc)) {
    if (m[1].str().size() > 4) return std::nullopt;
    const unsigned n = static_cast<unsigned>(std::stoul(m[1].str()));
    if (n == 0) return std::nullopt;
    r.name = "C" + std::to_string(n);
    r.source = RecipeSource::DataGenerators;
    r.family = "CYCLIC";
    r.n = n;
    r.expected_order = n;
    r.expected_out_order = 1;  // M/Z(M) is trivial
    r.expected_center = n;
    return r;
  }
  return std::nullopt;
}

}  // namespace charzero
