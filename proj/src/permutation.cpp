#include "charzero/permutation.hpp"

#include <numeric>
#include <sstream>

#include "charzero/errors.hpp"

namespace charzero {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > 65536) throw TooLarge("permutation degree above 65536");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw PreconditionViolated("permutation images are not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation result(degree);
  for (const auto& cyc : cycles) {
    if (cyc.size() < 2) continue;
    Permutation c(degree);
    std::vector<bool> seen(degree, false);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (cyc[i] >= degree) throw PreconditionViolated("cycle point out of range");
      if (seen[cyc[i]]) throw PreconditionViolated("point repeated inside a cycle");
      seen[cyc[i]] = true;
      c.images_[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    result = result * c;
  }
  return result;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw PreconditionViolated("degree mismatch in permutation product");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = rhs.images_[images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(std::int64_t k) const {
  const std::int64_t o = static_cast<std::int64_t>(element_order(*this));
  std::int64_t e = k % o;
  if (e < 0) e += o;
  // Each point just walks e steps along its cycle.
  Permutation r;
  r.images_.resize(images_.size());
  std::vector<bool> done(images_.size(), false);
  std::vector<Point> cyc;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start]) continue;
    cyc.clear();
    for (Point p = static_cast<Point>(start); !done[p]; p = images_[p]) {
      done[p] = true;
      cyc.push_back(p);
    }
    const std::size_t len = cyc.size();
    for (std::size_t i = 0; i < len; ++i) r.images_[cyc[i]] = cyc[(i + static_cast<std::size_t>(e)) % len];
  }
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Permutation::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> done(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    any = true;
    os << '(';
    Point p = static_cast<Point>(start);
    bool first = true;
    while (!done[p]) {
      done[p] = true;
      if (!first) os << ' ';
      first = false;
      os << p;
      p = images_[p];
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

std::uint64_t element_order(const Permutation& g) {
  std::uint64_t order = 1;
  std::vector<bool> done(g.degree(), false);
  for (std::size_t start = 0; start < g.degree(); ++start) {
    if (done[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t p = start; !done[p]; p = g[p]) {
      done[p] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Permutation parse_cycles(const std::string& text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip_space();
  if (i == text.size()) throw ParseError("empty generator");
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw ParseError("unterminated cycle: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') throw ParseError("unexpected character in cycle: " + text);
      unsigned long v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        if (v > 65535) throw ParseError("point out of range: " + text);
        ++i;
      }
      if (v >= degree) throw ParseError("point " + std::to_string(v) + " outside degree " + std::to_string(degree));
      if (used[v]) throw ParseError("point " + std::to_string(v) + " appears twice; not a bijection");
      used[v] = true;
      cyc.push_back(static_cast<Point>(v));
    }
    cycles.push_back(std::move(cyc));
    skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace charzero
