#include "charzero/cyclo.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "charzero/errors.hpp"

namespace charzero {

namespace {

struct PrimeInfo {
  std::uint32_t p;
  std::uint32_t step;  // m / p
};

struct BasisInfo {
  std::uint32_t m = 1;
  std::vector<PrimeInfo> primes;
  std::vector<std::uint16_t> bad;  // bit i set: exponent is not a basis exponent for primes[i]
};

std::int64_t inverse_mod(std::int64_t a, std::int64_t mod) {
  std::int64_t g = mod, x = 0, x1 = 1, a1 = a % mod;
  if (a1 < 0) a1 += mod;
  std::int64_t b = a1;
  while (b != 0) {
    std::int64_t q = g / b;
    std::int64_t t = g - q * b;
    g = b;
    b = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  return ((x % mod) + mod) % mod;
}

std::unique_ptr<BasisInfo> make_basis(std::uint32_t m) {
  auto info = std::make_unique<BasisInfo>();
  info->m = m;
  info->bad.assign(m, 0);
  std::uint32_t rest = m;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pp;  // (p, p^v)
  for (std::uint32_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    std::uint32_t pv = 1;
    while (rest % p == 0) {
      rest /= p;
      pv *= p;
    }
    pp.emplace_back(p, pv);
  }
  if (rest > 1) pp.emplace_back(rest, rest);
  if (pp.size() > 16) throw Unsupported("cyclotomic order has too many prime factors");
  for (std::size_t i = 0; i < pp.size(); ++i) {
    const auto [p, pv] = pp[i];
    info->primes.push_back({p, m / p});
    const std::int64_t cof_inv = inverse_mod(static_cast<std::int64_t>(m / pv), pv);
    const std::int64_t lower = pv / p;
    for (std::uint32_t e = 0; e < m; ++e) {
      const std::int64_t c = (static_cast<std::int64_t>(e % pv) * cof_inv) % pv;
      bool bad = false;
      if (p == 2) {
        bad = c >= static_cast<std::int64_t>(pv / 2);
      } else {
        std::int64_t r = c % lower;
        if (r > (lower - 1) / 2) r -= lower;
        std::int64_t lead = ((c - r) / lower) % p;
        if (lead < 0) lead += p;
        bad = lead == 0;
      }
      if (bad) info->bad[e] |= static_cast<std::uint16_t>(1u << i);
    }
  }
  return info;
}

const BasisInfo& basis_info(std::uint32_t m) {
  static std::mutex mutex;
  static std::unordered_map<std::uint32_t, std::unique_ptr<BasisInfo>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = make_basis(m);
  return *slot;
}

void drop_zeros(CycloNum::Terms& t) {
  for (auto it = t.begin(); it != t.end();) {
    if (sgn(it->second) == 0)
      it = t.erase(it);
    else
      ++it;
  }
}

CycloNum::Terms reduce_terms(const BasisInfo& b, CycloNum::Terms t) {
  drop_zeros(t);
  for (std::size_t i = 0; i < b.primes.size(); ++i) {
    const std::uint16_t bit = static_cast<std::uint16_t>(1u << i);
    bool any = false;
    for (const auto& kv : t) {
      if (b.bad[kv.first] & bit) {
        any = true;
        break;
      }
    }
    if (!any) continue;
    const auto [p, step] = b.primes[i];
    CycloNum::Terms out;
    for (const auto& [e, c] : t) {
      if (!(b.bad[e] & bit)) {
        out[e] += c;
        continue;
      }
      // zeta^e = -(sum over the other p-1 shifts by m/p)
      for (std::uint32_t k = 1; k < p; ++k) {
        out[static_cast<std::uint32_t>((static_cast<std::uint64_t>(e) + static_cast<std::uint64_t>(k) * step) % b.m)] -= c;
      }
    }
    drop_zeros(out);
    t = std::move(out);
  }
  return t;
}

void reduce_dense(const BasisInfo& b, std::vector<Rational>& d) {
  for (std::size_t i = 0; i < b.primes.size(); ++i) {
    const std::uint16_t bit = static_cast<std::uint16_t>(1u << i);
    const auto [p, step] = b.primes[i];
    for (std::uint32_t e = 0; e < b.m; ++e) {
      if (!(b.bad[e] & bit) || sgn(d[e]) == 0) continue;
      for (std::uint32_t k = 1; k < p; ++k) {
        d[static_cast<std::uint32_t>((static_cast<std::uint64_t>(e) + static_cast<std::uint64_t>(k) * step) % b.m)] -= d[e];
      }
      d[e] = 0;
    }
  }
}

std::uint32_t lcm32(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t l = std::lcm<std::uint64_t>(a, b);
  if (l > 0xffffffffu) throw Unsupported("cyclotomic order overflow");
  return static_cast<std::uint32_t>(l);
}

nlohmann::ordered_json integer_json(const mpz_class& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

mpz_class integer_from_json(const nlohmann::ordered_json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw ParseError("cyclotomic coefficient must be an integer or a digit string");
}

}  // namespace

CycloNum::CycloNum(long value) : CycloNum(Rational(value), 1) {}

CycloNum::CycloNum(const Rational& value, std::uint32_t order) : order_(order) {
  if (order == 0) throw PreconditionViolated("cyclotomic order must be >= 1");
  if (sgn(value) == 0) return;
  Terms t;
  t[0] = value;
  t[0].canonicalize();
  coeffs_ = order == 1 ? std::move(t) : reduce_terms(basis_info(order), std::move(t));
}

CycloNum CycloNum::zeta(std::uint32_t m, std::int64_t e) {
  if (m == 0) throw PreconditionViolated("cyclotomic order must be >= 1");
  std::int64_t r = e % static_cast<std::int64_t>(m);
  if (r < 0) r += m;
  Terms t;
  t[static_cast<std::uint32_t>(r)] = 1;
  return CycloNum(m, reduce_terms(basis_info(m), std::move(t)));
}

CycloNum CycloNum::from_terms(std::uint32_t m, const Terms& raw) {
  if (m == 0) throw PreconditionViolated("cyclotomic order must be >= 1");
  Terms t;
  for (const auto& [e, c] : raw) {
    Rational v = c;
    v.canonicalize();
    t[e % m] += v;
  }
  return CycloNum(m, reduce_terms(basis_info(m), std::move(t)));
}

bool CycloNum::is_rational() const { return restrict_to(1).has_value(); }

Rational CycloNum::rational_value() const {
  auto r = restrict_to(1);
  if (!r) throw PreconditionViolated("cyclotomic number is not rational: " + to_string());
  if (r->is_zero()) return 0;
  return r->coeffs_.begin()->second;
}

bool CycloNum::has_integral_coeffs() const {
  for (const auto& kv : coeffs_) {
    if (kv.second.get_den() != 1) return false;
  }
  return true;
}

CycloNum CycloNum::embed(std::uint32_t target) const {
  if (target == 0 || target % order_ != 0)
    throw PreconditionViolated("embed: target order must be a multiple of " + std::to_string(order_));
  if (target == order_) return *this;
  const std::uint64_t k = target / order_;
  Terms t;
  for (const auto& [e, c] : coeffs_) t[static_cast<std::uint32_t>(e * k)] = c;
  return CycloNum(target, reduce_terms(basis_info(target), std::move(t)));
}

std::optional<CycloNum> CycloNum::restrict_to(std::uint32_t target) const {
  if (target == 0 || order_ % target != 0)
    throw PreconditionViolated("restrict_to: target order must divide " + std::to_string(order_));
  if (target == order_) return *this;
  Terms result;
  for (std::uint32_t f : zumbroich_basis(target)) {
    const CycloNum image = zeta(target, f).embed(order_);
    const auto pivot = image.coeffs_.begin();
    auto it = coeffs_.find(pivot->first);
    if (it == coeffs_.end()) continue;
    result[f] = it->second / pivot->second;
  }
  CycloNum candidate(target, reduce_terms(basis_info(target), std::move(result)));
  if (!(candidate.embed(order_) == *this)) return std::nullopt;
  return candidate;
}

CycloNum CycloNum::conj() const { return galois(-1); }

CycloNum CycloNum::galois(std::int64_t k) const {
  const std::int64_t m = order_;
  std::int64_t kk = k % m;
  if (kk < 0) kk += m;
  if (std::gcd(kk, m) != 1 && m != 1) throw PreconditionViolated("galois: exponent must be a unit mod the order");
  if (m == 1) return *this;
  Terms t;
  for (const auto& [e, c] : coeffs_) t[static_cast<std::uint32_t>((e * kk) % m)] = c;
  return CycloNum(order_, reduce_terms(basis_info(order_), std::move(t)));
}

std::complex<long double> CycloNum::evaluate() const {
  std::complex<long double> sum = 0;
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  for (const auto& [e, c] : coeffs_) {
    const long double angle = two_pi * static_cast<long double>(e) / static_cast<long double>(order_);
    const long double v = static_cast<long double>(c.get_d());
    sum += std::complex<long double>(v * std::cos(angle), v * std::sin(angle));
  }
  return sum;
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
  if (rhs.order_ == order_) {
    for (const auto& [e, c] : rhs.coeffs_) coeffs_[e] += c;
    drop_zeros(coeffs_);
    return *this;
  }
  const std::uint32_t l = lcm32(order_, rhs.order_);
  *this = embed(l);
  return *this += rhs.embed(l);
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) { return *this += -rhs; }

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& kv : r.coeffs_) kv.second = -kv.second;
  return r;
}

CycloNum CycloNum::scaled(const Rational& r) const {
  if (sgn(r) == 0) return CycloNum(Rational(0), order_);
  Rational rr = r;
  rr.canonicalize();
  CycloNum out = *this;
  for (auto& kv : out.coeffs_) kv.second *= rr;
  return out;
}

CycloNum& CycloNum::operator*=(const CycloNum& rhs) {
  const std::uint32_t l = lcm32(order_, rhs.order_);
  const std::uint64_t ka = l / order_, kb = l / rhs.order_;
  Terms t;
  for (const auto& [ea, ca] : coeffs_) {
    for (const auto& [eb, cb] : rhs.coeffs_) {
      t[static_cast<std::uint32_t>((ea * ka + eb * kb) % l)] += ca * cb;
    }
  }
  order_ = l;
  coeffs_ = reduce_terms(basis_info(l), std::move(t));
  return *this;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const std::uint32_t l = lcm32(a.order_, b.order_);
  return a.embed(l).coeffs_ == b.embed(l).coeffs_;
}

std::string CycloNum::serialize() const {
  nlohmann::ordered_json j;
  j["m"] = order_;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [e, c] : coeffs_) {
    arr.push_back(nlohmann::ordered_json::array({e, integer_json(c.get_num()), integer_json(c.get_den())}));
  }
  j["c"] = std::move(arr);
  return j.dump();
}

CycloNum CycloNum::parse(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed cyclotomic number: ") + e.what());
  }
  if (!j.is_object() || !j.contains("m") || !j.contains("c") || !j["m"].is_number_integer() || !j["c"].is_array())
    throw ParseError("cyclotomic number needs integer \"m\" and array \"c\"");
  const auto m = j["m"].get<std::int64_t>();
  if (m < 1 || m > 0xffffffffLL) throw ParseError("cyclotomic order out of range");
  Terms t;
  for (const auto& term : j["c"]) {
    if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer())
      throw ParseError("cyclotomic term must be [exponent, numerator, denominator]");
    const auto e = term[0].get<std::int64_t>();
    if (e < 0 || e >= m) throw ParseError("cyclotomic exponent out of range");
    const mpz_class den = integer_from_json(term[2]);
    if (sgn(den) == 0) throw ParseError("zero denominator");
    t[static_cast<std::uint32_t>(e)] += Rational(integer_from_json(term[1]), den);
  }
  return from_terms(static_cast<std::uint32_t>(m), t);
}

std::string CycloNum::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Rational v = c;
    if (!first) {
      os << (sgn(v) < 0 ? " - " : " + ");
      v = abs(v);
    }
    first = false;
    if (e == 0) {
      os << v.get_str();
      continue;
    }
    if (v != 1) os << (v == -1 ? "-" : v.get_str() + "*");
    os << "z" << order_ << "^" << e;
  }
  return os.str();
}

CycloAccumulator::CycloAccumulator(std::uint32_t order) : order_(order), dense_(order) {}

void CycloAccumulator::add_product(const CycloNum& a, const CycloNum& b, const Rational& scale) {
  if (order_ % a.order() != 0 || order_ % b.order() != 0)
    throw PreconditionViolated("accumulator order must be a multiple of the operand orders");
  const std::uint64_t ka = order_ / a.order(), kb = order_ / b.order();
  Rational s = scale;
  s.canonicalize();
  for (const auto& [ea, ca] : a.coeffs()) {
    for (const auto& [eb, cb] : b.coeffs()) {
      dense_[(ea * ka + eb * kb) % order_] += ca * cb * s;
    }
  }
}

void CycloAccumulator::add(const CycloNum& a, const Rational& scale) {
  if (order_ % a.order() != 0) throw PreconditionViolated("accumulator order must be a multiple of the operand order");
  const std::uint64_t ka = order_ / a.order();
  Rational s = scale;
  s.canonicalize();
  for (const auto& [e, c] : a.coeffs()) dense_[(e * ka) % order_] += c * s;
}

CycloNum CycloAccumulator::value() const {
  std::vector<Rational> d = dense_;
  reduce_dense(basis_info(order_), d);
  CycloNum::Terms t;
  for (std::uint32_t e = 0; e < order_; ++e) {
    if (sgn(d[e]) != 0) t[e] = d[e];
  }
  return CycloNum::from_terms(order_, t);
}

std::vector<std::uint32_t> zumbroich_basis(std::uint32_t m) {
  const BasisInfo& b = basis_info(m);
  std::vector<std::uint32_t> out;
  for (std::uint32_t e = 0; e < m; ++e) {
    if (b.bad[e] == 0) out.push_back(e);
  }
  return out;
}

}  // namespace charzero
