#include "rsdh/field.hpp"

#include <algorithm>
#include <sstream>

namespace rsdh {

namespace {

constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31);

bool is_prime_trial(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// Dense univariate arithmetic over F_p on raw coefficient vectors, used only
// for modulus validation. Vectors are ascending-degree and normalized.

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  // reduce modulo the monic f
  const std::size_t df = f.size() - 1;
  for (std::size_t i = r.size(); i-- > df;) {
    const std::uint64_t c = r[i];
    if (c == 0) continue;
    r[i] = 0;
    for (std::size_t j = 0; j < df; ++j) {
      const std::uint64_t sub = c * f[j] % p;
      r[i - df + j] = (r[i - df + j] + p - sub) % p;
    }
  }
  trim(r);
  return r;
}

Coeffs powmod(Coeffs base, std::uint64_t e, const Coeffs& f, std::uint64_t p) {
  Coeffs r{1};
  while (e) {
    if (e & 1) r = mulmod(r, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Coeffs polygcd(Coeffs a, Coeffs b, std::uint64_t p) {
  auto invmod = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  while (!b.empty()) {
    // a mod b
    const std::uint64_t lead_inv = invmod(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      const std::uint64_t c = a.back() * lead_inv % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) {
        const std::uint64_t sub = c * b[j] % p;
        a[shift + j] = (a[shift + j] + p - sub) % p;
      }
      trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

// f monic of degree m >= 2 over F_p: irreducible iff gcd(x^{p^i} - x, f) = 1
// for every i <= m/2 (catches any irreducible factor of degree <= m/2).
bool is_irreducible(const Coeffs& f, std::uint64_t p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  Coeffs xq{0, 1};  // x^{p^i} mod f, starting at i = 0
  for (unsigned i = 1; i <= m / 2; ++i) {
    xq = powmod(xq, p, f, p);
    Coeffs diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    Coeffs g = polygcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

FieldPtr Field::make(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus) {
  if (p >= kMaxPrime) throw std::invalid_argument("field: characteristic must be below 2^31");
  if (!is_prime_trial(p)) throw std::invalid_argument("field: characteristic is not prime");
  if (m < 1) throw std::invalid_argument("field: extension degree must be positive");

  FieldSpec spec;
  spec.p = p;
  spec.m = m;
  spec.q = checked_pow_u64(p, m);

  if (m == 1) {
    if (!modulus.empty())
      throw std::invalid_argument("field: prime field takes no modulus");
  } else {
    if (modulus.size() != m + 1)
      throw std::invalid_argument("field: modulus degree does not match extension degree");
    for (auto& c : modulus)
      if (c >= p) throw std::invalid_argument("field: modulus coefficient out of range");
    if (modulus.back() != 1)
      throw std::invalid_argument("field: modulus must be monic");
    if (!is_irreducible(modulus, p))
      throw std::invalid_argument("field: modulus is reducible over F_p");
    spec.modulus = std::move(modulus);
  }
  // Construct non-const so enable_shared_from_this is wired up, return as const.
  return std::make_shared<Field>(Key{}, std::move(spec));
}

std::vector<std::uint64_t> Field::find_irreducible_modulus(std::uint64_t p, unsigned m) {
  if (!is_prime_trial(p)) throw std::invalid_argument("field: characteristic is not prime");
  if (m < 2) throw std::invalid_argument("field: modulus search needs degree >= 2");
  const std::uint64_t span = checked_pow_u64(p, m);
  for (std::uint64_t low = 0; low < span; ++low) {
    std::vector<std::uint64_t> f(m + 1, 0);
    std::uint64_t rest = low;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = rest % p;
      rest /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("field: no irreducible polynomial found");  // unreachable
}

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t p = spec_.p;
  if (spec_.m == 1) {
    const std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t r = 0, scale = 1;
  for (unsigned i = 0; i < spec_.m; ++i) {
    std::uint64_t s = a % p + b % p;
    if (s >= p) s -= p;
    r += s * scale;
    scale *= p;
    a /= p;
    b /= p;
  }
  return r;
}

std::uint64_t Field::neg(std::uint64_t a) const {
  const std::uint64_t p = spec_.p;
  if (spec_.m == 1) return a == 0 ? 0 : p - a;
  std::uint64_t r = 0, scale = 1;
  for (unsigned i = 0; i < spec_.m; ++i) {
    const std::uint64_t c = a % p;
    r += (c == 0 ? 0 : p - c) * scale;
    scale *= p;
    a /= p;
  }
  return r;
}

std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const {
  return add(a, neg(b));
}

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t p = spec_.p;
  if (spec_.m == 1) return a * b % p;
  if (a == 0 || b == 0) return 0;

  const unsigned m = spec_.m;
  std::uint64_t ac[64], bc[64], rc[128] = {0};
  for (unsigned i = 0; i < m; ++i) {
    ac[i] = a % p;
    a /= p;
    bc[i] = b % p;
    b /= p;
  }
  for (unsigned i = 0; i < m; ++i) {
    if (ac[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j)
      rc[i + j] = (rc[i + j] + ac[i] * bc[j]) % p;
  }
  const auto& f = spec_.modulus;
  for (unsigned i = 2 * m - 2; i >= m && i < 128; --i) {
    const std::uint64_t c = rc[i];
    if (c == 0) continue;
    rc[i] = 0;
    for (unsigned j = 0; j < m; ++j) {
      const std::uint64_t s = c * f[j] % p;
      rc[i - m + j] = (rc[i - m + j] + p - s) % p;
    }
  }
  std::uint64_t r = 0, scale = 1;
  for (unsigned i = 0; i < m; ++i) {
    r += rc[i] * scale;
    scale *= p;
  }
  return r;
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Field::inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("field: inversion of zero");
  return pow(a, spec_.q - 2);
}

std::uint64_t Field::from_int(std::int64_t n) const {
  const std::int64_t p = static_cast<std::int64_t>(spec_.p);
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::vector<std::uint64_t> Field::decode(std::uint64_t enc) const {
  if (enc >= spec_.q) throw std::invalid_argument("field: encoding out of range");
  std::vector<std::uint64_t> c(spec_.m);
  for (unsigned i = 0; i < spec_.m; ++i) {
    c[i] = enc % spec_.p;
    enc /= spec_.p;
  }
  return c;
}

std::uint64_t Field::encode(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() != spec_.m) throw std::invalid_argument("field: coefficient count mismatch");
  std::uint64_t enc = 0, scale = 1;
  for (unsigned i = 0; i < spec_.m; ++i) {
    if (coeffs[i] >= spec_.p) throw std::invalid_argument("field: coefficient out of range");
    enc += coeffs[i] * scale;
    scale *= spec_.p;
  }
  return enc;
}

FieldElement Field::element(std::uint64_t enc) const {
  if (enc >= spec_.q) throw std::invalid_argument("field: encoding out of range");
  return {shared_from_this(), enc};
}

FieldElement Field::zero() const { return element(0); }
FieldElement Field::one() const { return element(1); }

std::vector<std::uint64_t> Field::element_encodings(bool nonzero_only) const {
  std::vector<std::uint64_t> out;
  out.reserve(spec_.q - (nonzero_only ? 1 : 0));
  for (std::uint64_t e = nonzero_only ? 1 : 0; e < spec_.q; ++e) out.push_back(e);
  return out;
}

std::vector<FieldElement> Field::elements(bool nonzero_only) const {
  std::vector<FieldElement> out;
  out.reserve(spec_.q - (nonzero_only ? 1 : 0));
  const FieldPtr self = shared_from_this();
  for (std::uint64_t e = nonzero_only ? 1 : 0; e < spec_.q; ++e) out.emplace_back(self, e);
  return out;
}

std::string Field::to_string(std::uint64_t enc) const {
  if (spec_.m == 1) return std::to_string(enc);
  const auto c = decode(enc);
  std::ostringstream os;
  bool first = true;
  for (unsigned i = spec_.m; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    if (c[i] != 1 || i == 0) os << c[i];
    if (i >= 1) {
      if (c[i] != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

FieldElement::FieldElement(FieldPtr field, std::uint64_t enc)
    : field_(std::move(field)), enc_(enc) {
  if (!field_) throw std::invalid_argument("element: null field");
  if (enc_ >= field_->q()) throw std::invalid_argument("element: encoding out of range");
}

void check_same_field(const Field& a, const Field& b, const char* op) {
  if (!a.same_as(b)) {
    throw std::invalid_argument(std::string(op) + ": operands belong to different fields");
  }
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same_field(a.field(), b.field(), "add");
  return {a.field_, a.field_->add(a.enc_, b.enc_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  check_same_field(a.field(), b.field(), "sub");
  return {a.field_, a.field_->sub(a.enc_, b.enc_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same_field(a.field(), b.field(), "mul");
  return {a.field_, a.field_->mul(a.enc_, b.enc_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  check_same_field(a.field(), b.field(), "div");
  return {a.field_, a.field_->mul(a.enc_, b.field_->inv(b.enc_))};
}

}  // namespace rsdh
