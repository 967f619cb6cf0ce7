#include "rsdh/upoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rsdh {

namespace {

void trim(std::vector<std::uint64_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

UPoly UPoly::constant(FieldPtr field, std::uint64_t c) {
  UPoly r(std::move(field));
  if (c != 0) {
    if (c >= r.field_->q()) throw std::invalid_argument("upoly: coefficient out of range");
    r.coeffs_ = {c};
  }
  return r;
}

UPoly UPoly::monomial(FieldPtr field, unsigned deg, std::uint64_t c) {
  UPoly r(std::move(field));
  if (c != 0) {
    if (c >= r.field_->q()) throw std::invalid_argument("upoly: coefficient out of range");
    r.coeffs_.assign(deg + 1, 0);
    r.coeffs_[deg] = c;
  }
  return r;
}

UPoly UPoly::from_coeffs(FieldPtr field, std::vector<std::uint64_t> coeffs) {
  UPoly r(std::move(field));
  for (auto c : coeffs)
    if (c >= r.field_->q()) throw std::invalid_argument("upoly: coefficient out of range");
  r.coeffs_ = std::move(coeffs);
  trim(r.coeffs_);
  return r;
}

std::uint64_t UPoly::leading() const {
  if (is_zero()) throw std::domain_error("upoly: zero polynomial has no leading coefficient");
  return coeffs_.back();
}

UPoly UPoly::operator-() const {
  UPoly r(field_);
  r.coeffs_.reserve(coeffs_.size());
  for (auto c : coeffs_) r.coeffs_.push_back(field_->neg(c));
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  check_same_field(*a.field_, *b.field_, "upoly add");
  UPoly r(a.field_);
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
    r.coeffs_[i] = a.field_->add(a.coeff(static_cast<unsigned>(i)), b.coeff(static_cast<unsigned>(i)));
  trim(r.coeffs_);
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  check_same_field(*a.field_, *b.field_, "upoly mul");
  UPoly r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  const Field& F = *a.field_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] = F.add(r.coeffs_[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return r;
}

UPoly UPoly::scaled(std::uint64_t c) const {
  if (c >= field_->q()) throw std::invalid_argument("upoly: scalar out of range");
  UPoly r(field_);
  if (c == 0) return r;
  r.coeffs_.reserve(coeffs_.size());
  for (auto x : coeffs_) r.coeffs_.push_back(field_->mul(x, c));
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  check_same_field(*a.field_, *b.field_, "upoly divmod");
  if (b.is_zero()) throw std::domain_error("upoly: division by zero polynomial");
  const Field& F = *a.field_;
  UPoly quo(a.field_);
  UPoly rem = a;
  if (a.degree() < b.degree()) return {std::move(quo), std::move(rem)};

  quo.coeffs_.assign(a.coeffs_.size() - b.coeffs_.size() + 1, 0);
  const std::uint64_t lead_inv = F.inv(b.leading());
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const std::size_t shift = rem.coeffs_.size() - b.coeffs_.size();
    const std::uint64_t c = F.mul(rem.coeffs_.back(), lead_inv);
    quo.coeffs_[shift] = c;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      rem.coeffs_[shift + j] = F.sub(rem.coeffs_[shift + j], F.mul(c, b.coeffs_[j]));
    trim(rem.coeffs_);
  }
  trim(quo.coeffs_);
  return {std::move(quo), std::move(rem)};
}

std::uint64_t UPoly::eval(std::uint64_t x) const {
  const Field& F = *field_;
  std::uint64_t acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = F.add(F.mul(acc, x), coeffs_[i]);
  return acc;
}

FieldElement UPoly::eval(const FieldElement& x) const {
  check_same_field(*field_, x.field(), "upoly eval");
  return field_->element(eval(x.enc()));
}

UPoly UPoly::interpolate(const FieldPtr& field,
                         std::span<const std::pair<std::uint64_t, std::uint64_t>> points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("upoly: repeated interpolation node");

  const Field& F = *field;
  UPoly acc(field);
  for (std::size_t i = 0; i < points.size(); ++i) {
    // y_i * prod_{j != i} (x - x_j) / (x_i - x_j)
    if (points[i].second == 0) continue;
    UPoly basis = UPoly::constant(field, 1);
    std::uint64_t denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * UPoly::from_coeffs(field, {F.neg(points[j].first), 1});
      denom = F.mul(denom, F.sub(points[i].first, points[j].first));
    }
    acc = acc + basis.scaled(F.mul(points[i].second, F.inv(denom)));
  }
  return acc;
}

std::vector<std::uint64_t> UPoly::roots_in(std::span<const std::uint64_t> S) const {
  if (is_zero())
    throw std::domain_error("upoly: root set of the zero polynomial is degenerate");
  std::vector<std::uint64_t> out;
  for (auto s : S)
    if (eval(s) == 0) out.push_back(s);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string UPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    if (i == 0 || coeffs_[i] != 1) os << coeffs_[i];
    if (i >= 1) {
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

namespace {

struct PolyParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return text[pos];
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::uint64_t integer() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw std::invalid_argument("poly parse: expected integer at position " + std::to_string(pos));
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (v > (std::uint64_t{1} << 62)) throw std::invalid_argument("poly parse: integer overflow");
      ++pos;
    }
    return v;
  }
};

}  // namespace

UPoly parse_upoly(const FieldPtr& field, std::string_view text) {
  PolyParser ps{text};
  UPoly acc(field);
  bool expect_term = true;
  bool negate = false;

  if (ps.eof()) throw std::invalid_argument("poly parse: empty input");
  if (ps.accept('-')) negate = true;

  while (true) {
    // term: INT ['*']? ['x' ['^' INT]]  |  'x' ['^' INT]
    std::uint64_t coeff = 1;
    bool saw_coeff = false;
    ps.skip_ws();
    if (!ps.eof() && std::isdigit(static_cast<unsigned char>(ps.peek()))) {
      coeff = ps.integer();
      saw_coeff = true;
      if (coeff >= field->q())
        throw std::invalid_argument("poly parse: coefficient not in [0, q)");
      ps.accept('*');
    }
    unsigned deg = 0;
    if (!ps.eof() && ps.peek() == 'x') {
      ps.accept('x');
      deg = 1;
      if (ps.accept('^')) {
        const std::uint64_t e = ps.integer();
        if (e > 1u << 20) throw std::invalid_argument("poly parse: exponent too large");
        deg = static_cast<unsigned>(e);
      }
    } else if (!saw_coeff) {
      throw std::invalid_argument("poly parse: expected term at position " + std::to_string(ps.pos));
    }
    if (negate) coeff = field->neg(coeff);
    acc = acc + UPoly::monomial(field, deg, coeff);

    if (ps.eof()) break;
    if (ps.accept('+'))
      negate = false;
    else if (ps.accept('-'))
      negate = true;
    else
      throw std::invalid_argument("poly parse: unexpected character at position " +
                                  std::to_string(ps.pos));
    if (ps.eof()) throw std::invalid_argument("poly parse: trailing operator");
    (void)expect_term;
  }
  return acc;
}

}  // namespace rsdh
