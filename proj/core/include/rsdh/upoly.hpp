#ifndef RSDH_UPOLY_HPP
#define RSDH_UPOLY_HPP

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rsdh/field.hpp"

namespace rsdh {

// Normalized univariate polynomial over a field. Coefficients are stored in
// ascending degree as canonical encodings; the vector is empty exactly for
// the zero polynomial, otherwise the last entry is nonzero.
//
// The zero polynomial's degree is the sentinel kZeroDegree, which compares
// below every true degree so that guards like `degree() <= k - 1` behave.
class UPoly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min() / 2;

  explicit UPoly(FieldPtr field) : field_(std::move(field)) {}

  static UPoly zero(FieldPtr field) { return UPoly(std::move(field)); }
  static UPoly constant(FieldPtr field, std::uint64_t c);
  // c * x^deg
  static UPoly monomial(FieldPtr field, unsigned deg, std::uint64_t c = 1);
  // Ascending coefficients; trailing zeros are trimmed.
  static UPoly from_coeffs(FieldPtr field, std::vector<std::uint64_t> coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  std::uint64_t coeff(unsigned i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }
  std::uint64_t leading() const;
  const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(std::uint64_t c) const;

  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.field_->same_as(*b.field_) && a.coeffs_ == b.coeffs_;
  }

  // Euclidean division a = q*b + r with deg(r) < deg(b); b must be nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

  std::uint64_t eval(std::uint64_t x) const;  // Horner
  FieldElement eval(const FieldElement& x) const;

  // Unique polynomial of degree < #points through the given (x, y) pairs,
  // built from the Lagrange basis. Throws on repeated x-coordinates.
  static UPoly interpolate(const FieldPtr& field,
                           std::span<const std::pair<std::uint64_t, std::uint64_t>> points);

  // { s in S : this(s) = 0 }, in increasing encoding order. Rejects the zero
  // polynomial, whose root set would be all of S.
  std::vector<std::uint64_t> roots_in(std::span<const std::uint64_t> S) const;

  std::string to_string(std::string_view var = "x") const;

 private:
  FieldPtr field_;
  std::vector<std::uint64_t> coeffs_;
};

// Parses text like "x^3 + 2x + 1" (coefficients are canonical encodings in
// [0, q); '-' negates in the field). Throws std::invalid_argument on syntax
// errors or out-of-range coefficients.
UPoly parse_upoly(const FieldPtr& field, std::string_view text);

}  // namespace rsdh

#endif
