#include "charzero/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "charzero/errors.hpp"
#include "charzero/numtheory.hpp"

namespace charzero {

namespace {

struct ConwayEntry {
  std::uint32_t p;
  unsigned f;
  std::vector<std::uint32_t> coeffs;  // low to high, monic
};

// Published Conway polynomials for the fields the constructions touch.
const std::vector<ConwayEntry>& conway_table() {
  static const std::vector<ConwayEntry> table{
      {2, 1, {1, 1}},       {2, 2, {1, 1, 1}},       {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}}, {2, 5, {1, 0, 1, 0, 0, 1}},
      {3, 1, {1, 1}},       {3, 2, {2, 2, 1}},       {3, 3, {1, 2, 0, 1}},
      {5, 1, {3, 1}},       {5, 2, {2, 4, 1}},
      {7, 1, {4, 1}},       {7, 2, {3, 6, 1}},
      {11, 1, {9, 1}},      {13, 1, {11, 1}},        {17, 1, {14, 1}},
      {19, 1, {17, 1}},     {23, 1, {18, 1}},        {29, 1, {27, 1}},
      {31, 1, {28, 1}},
  };
  return table;
}

}  // namespace

FqField::FqField(std::uint32_t p, unsigned f, std::vector<std::uint32_t> modulus)
    : p_(p), q_(1), f_(f), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < f; ++i) q_ *= p;
  if (modulus_.size() != f + 1 || modulus_.back() != 1) throw PreconditionViolated("modulus must be monic of degree f");
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  std::vector<std::uint32_t> c(f, 0);
  c[0] = 1;
  std::vector<bool> seen(q_, false);
  for (std::uint32_t k = 0; k < q_ - 1; ++k) {
    const Elt e = from_coeffs(c);
    if (seen[e] || e == 0) throw PreconditionViolated("modulus root is not a primitive element");
    seen[e] = true;
    exp_[k] = e;
    log_[e] = k;
    // multiply by x and reduce by the monic modulus
    const std::uint32_t top = c[f - 1];
    for (unsigned i = f - 1; i > 0; --i) c[i] = c[i - 1];
    c[0] = 0;
    for (unsigned i = 0; i < f; ++i) c[i] = (c[i] + (p - top) * modulus_[i]) % p;
  }
  if (from_coeffs(c) != 1) throw PreconditionViolated("modulus root is not a primitive element");
}

std::vector<std::uint32_t> FqField::coeffs(Elt a) const {
  std::vector<std::uint32_t> c(f_);
  for (unsigned i = 0; i < f_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

FqField::Elt FqField::from_coeffs(const std::vector<std::uint32_t>& c) const {
  Elt a = 0;
  for (unsigned i = f_; i-- > 0;) a = a * p_ + (i < c.size() ? c[i] % p_ : 0);
  return a;
}

FqField::Elt FqField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elt>(r);
}

FqField::Elt FqField::add(Elt a, Elt b) const {
  if (p_ == 2) return a ^ b;
  Elt r = 0, scale = 1;
  for (unsigned i = 0; i < f_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FqField::Elt FqField::neg(Elt a) const {
  if (p_ == 2) return a;
  Elt r = 0, scale = 1;
  for (unsigned i = 0; i < f_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

FqField::Elt FqField::sub(Elt a, Elt b) const { return add(a, neg(b)); }

FqField::Elt FqField::mul(Elt a, Elt b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FqField::Elt FqField::inv(Elt a) const {
  if (a == 0) throw PreconditionViolated("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FqField::Elt FqField::pow(Elt a, std::int64_t k) const {
  if (a == 0) {
    if (k < 0) throw PreconditionViolated("negative power of zero");
    return k == 0 ? 1 : 0;
  }
  const std::int64_t n = q_ - 1;
  std::int64_t e = (static_cast<std::int64_t>(log_[a]) * (k % n)) % n;
  if (e < 0) e += n;
  return exp_[static_cast<std::size_t>(e)];
}

std::uint32_t FqField::log(Elt a) const {
  if (a == 0) throw PreconditionViolated("log of zero");
  return log_[a];
}

std::string FqField::to_string(Elt a) const {
  if (f_ == 1) return std::to_string(a);
  return "x^" + (a == 0 ? std::string("-inf") : std::to_string(log_[a]));
}

std::string FqField::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = f_ + 1; i-- > 0;) {
    const auto c = modulus_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

bool conway_table_has(std::uint32_t p, unsigned f) {
  for (const auto& e : conway_table()) {
    if (e.p == p && e.f == f) return true;
  }
  return false;
}

std::vector<std::uint32_t> search_conway_polynomial(std::uint32_t p, unsigned f) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < f; ++i) q *= p;
  if (q > 65536) throw TooLarge("field order above 2^16");
  std::vector<std::uint32_t> alpha(f, 0);  // alpha_1..alpha_f, lexicographic
  for (;;) {
    // advance to the next tuple (the all-zero tuple is never valid)
    unsigned i = f;
    while (i > 0) {
      --i;
      if (++alpha[i] < p) break;
      alpha[i] = 0;
      if (i == 0) throw Error("no primitive polynomial found");
    }
    if (alpha[f - 1] == 0) continue;
    std::vector<std::uint32_t> poly(f + 1, 0);
    poly[f] = 1;
    for (unsigned k = 1; k <= f; ++k) {
      const std::uint32_t a = alpha[k - 1] % p;
      poly[f - k] = (k % 2 == 0) ? a : (p - a) % p;
    }
    std::unique_ptr<FqField> field;
    try {
      field = std::make_unique<FqField>(p, f, poly);
    } catch (const PreconditionViolated&) {
      continue;
    }
    bool compatible = true;
    for (unsigned m = 1; m < f && compatible; ++m) {
      if (f % m != 0) continue;
      std::uint64_t pm = 1;
      for (unsigned j = 0; j < m; ++j) pm *= p;
      const auto sub = conway_polynomial(p, m);
      const FqField::Elt y = field->pow(field->primitive(), static_cast<std::int64_t>((q - 1) / (pm - 1)));
      FqField::Elt acc = 0;
      for (unsigned j = sub.size(); j-- > 0;) acc = field->add(field->mul(acc, y), field->from_int(sub[j]));
      compatible = acc == 0;
    }
    if (compatible) return poly;
  }
}

std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, unsigned f) {
  for (const auto& e : conway_table()) {
    if (e.p == p && e.f == f) return e.coeffs;
  }
  return search_conway_polynomial(p, f);
}

const FqField& gf(std::uint64_t p, unsigned f) {
  if (f == 0) throw PreconditionViolated("field degree must be >= 1");
  if (!nt::is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < f; ++i) {
    q *= p;
    if (q > 65536) throw TooLarge("field order above 2^16");
  }
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<FqField>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{p, f}];
  if (!slot) {
    const auto p32 = static_cast<std::uint32_t>(p);
    slot = std::make_unique<FqField>(p32, f, conway_polynomial(p32, f));
  }
  return *slot;
}

}  // namespace charzero
