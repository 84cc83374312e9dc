#pragma once

// Slow, independent character tables: simultaneous eigenvectors of the class
// sums acting on the complex regular representation, found with a Hermitian
// eigensolver, then rounded to exact cyclotomic values through the
// root-of-unity multiplicities on each cyclic subgroup.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "charzero/chartab.hpp"
#include "charzero/group.hpp"

namespace oracle {

using cd = std::complex<double>;
using CMat = Eigen::MatrixXcd;

inline std::vector<CMat> regular_class_sums(const charzero::FiniteGroup& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  std::vector<CMat> out;
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    CMat m = CMat::Zero(n, n);
    for (auto x : g.class_members(c)) {
      for (charzero::FiniteGroup::Index y = 0; y < g.order(); ++y) m(g.multiply(x, y), y) += 1.0;
    }
    out.push_back(std::move(m));
  }
  return out;
}

// One approximate row of central characters omega_j per irreducible character,
// plus the dimension of its isotypic block (= d^2).
struct Block {
  std::vector<cd> omega;
  std::size_t dim = 0;
};

inline std::vector<Block> eigen_blocks(const std::vector<CMat>& sums, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto n = sums[0].rows();
  CMat h = CMat::Zero(n, n);
  for (const auto& s : sums) {
    const CMat sa = s.adjoint();
    h += u(rng) * (s + sa);
    h += cd(0, u(rng)) * (s - sa);
  }
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  const auto& ev = es.eigenvalues();
  std::vector<Block> blocks;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i < n && std::abs(ev(i) - ev(i - 1)) < 1e-7) continue;
    const Eigen::VectorXcd v = es.eigenvectors().col(start);
    Block b;
    b.dim = static_cast<std::size_t>(i - start);
    for (const auto& s : sums) b.omega.push_back(v.dot(s * v) / v.squaredNorm());
    blocks.push_back(std::move(b));
    start = i;
  }
  return blocks;
}

inline charzero::CharacterTable regular_table(const charzero::FiniteGroup& g, const std::string& name = "") {
  const auto sums = regular_class_sums(g);
  const std::size_t r = g.num_classes();
  std::vector<Block> blocks;
  for (unsigned seed = 1; seed < 20; ++seed) {
    blocks = eigen_blocks(sums, seed);
    if (blocks.size() == r) break;
  }
  if (blocks.size() != r) throw std::runtime_error("oracle: eigenvalue clusters did not separate");

  const std::uint32_t m = static_cast<std::uint32_t>(g.exponent());
  charzero::CharacterTable t;
  t.group = name;
  t.order = g.order();
  t.m = m;
  for (const auto& c : g.classes()) t.classes.push_back({c.size, c.element_order, c.centralizer_order, c.rep.to_cycles()});

  for (const auto& b : blocks) {
    const double d = std::sqrt(static_cast<double>(b.dim));
    const auto deg = static_cast<std::uint64_t>(std::llround(d));
    if (deg * deg != b.dim) throw std::runtime_error("oracle: block dimension is not a square");
    std::vector<cd> approx(r);
    for (std::size_t j = 0; j < r; ++j) approx[j] = b.omega[j] * static_cast<double>(deg) / static_cast<double>(g.classes()[j].size);
    charzero::Character ch;
    ch.degree = deg;
    for (std::size_t j = 0; j < r; ++j) {
      const auto& rep = g.classes()[j].rep;
      const std::uint64_t o = g.classes()[j].element_order;
      // a_t = (1/o) sum_s chi(g^s) zeta_o^{-ts}: multiplicity of zeta_o^t
      charzero::CycloNum::Terms terms;
      for (std::uint64_t t_ = 0; t_ < o; ++t_) {
        cd acc = 0;
        for (std::uint64_t s = 0; s < o; ++s) {
          const auto cls = g.class_of(rep.pow(static_cast<std::int64_t>(s)));
          const double ang = -2.0 * std::numbers::pi * static_cast<double>((t_ * s) % o) / static_cast<double>(o);
          acc += approx[cls] * cd(std::cos(ang), std::sin(ang));
        }
        acc /= static_cast<double>(o);
        const double a = std::round(acc.real());
        if (std::abs(acc.real() - a) > 1e-4 || std::abs(acc.imag()) > 1e-4)
          throw std::runtime_error("oracle: multiplicity is not an integer");
        if (a != 0) terms[static_cast<std::uint32_t>(t_ * (m / o))] = static_cast<long>(a);
      }
      ch.values.push_back(charzero::CycloNum::from_terms(m, terms));
    }
    t.chars.push_back(std::move(ch));
  }
  charzero::canonicalize_rows(t);
  return t;
}

}  // namespace oracle
