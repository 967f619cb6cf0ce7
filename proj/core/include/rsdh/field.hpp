#ifndef RSDH_FIELD_HPP
#define RSDH_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "rsdh/common.hpp"

namespace rsdh {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

// Plain description of F_{p^m}. `modulus` holds the monic irreducible
// polynomial as ascending coefficients [c0, ..., cm] and is empty iff m == 1.
struct FieldSpec {
  std::uint64_t p = 0;
  unsigned m = 0;
  std::vector<std::uint64_t> modulus;
  std::uint64_t q = 0;

  bool operator==(const FieldSpec&) const = default;
};

// Exact arithmetic in F_{p^m}. Elements are identified with their canonical
// encoding sum(a_i * p^i) in [0, q); the coefficient view is recovered with
// decode(). Construction validates that p is prime (trial division, p < 2^31)
// and that the modulus is monic, of degree m, and irreducible over F_p.
//
// Field objects are immutable and always shared_ptr-managed; all operations
// are pure and safe for unrestricted concurrent use.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr make(std::uint64_t p, unsigned m = 1,
                       std::vector<std::uint64_t> modulus = {});
  static FieldPtr prime_field(std::uint64_t p) { return make(p); }

  // Least (by canonical coefficient encoding) monic irreducible polynomial of
  // degree m over F_p, found by exhaustive search. Intended for desk-scale
  // fields where no modulus has been fixed externally.
  static std::vector<std::uint64_t> find_irreducible_modulus(std::uint64_t p, unsigned m);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint64_t p() const noexcept { return spec_.p; }
  unsigned m() const noexcept { return spec_.m; }
  std::uint64_t q() const noexcept { return spec_.q; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return spec_.modulus; }

  bool same_as(const Field& other) const noexcept {
    return this == &other || spec_ == other.spec_;
  }

  // Arithmetic on canonical encodings. These are the unchecked fast path for
  // exhaustive scans; FieldElement wraps them with cross-field checks.
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;  // throws std::domain_error on 0
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  // Image of the integer n under Z -> F_q (n mod p in the constant coefficient).
  std::uint64_t from_int(std::int64_t n) const;

  std::vector<std::uint64_t> decode(std::uint64_t enc) const;
  std::uint64_t encode(std::span<const std::uint64_t> coeffs) const;

  FieldElement element(std::uint64_t enc) const;
  FieldElement zero() const;
  FieldElement one() const;

  // All field elements (or all nonzero ones) in increasing encoding order.
  std::vector<FieldElement> elements(bool nonzero_only = false) const;
  std::vector<std::uint64_t> element_encodings(bool nonzero_only = false) const;

  std::string to_string(std::uint64_t enc) const;  // e.g. "t^2+t+1" for m > 1

 private:
  struct Key {
    explicit Key() = default;
  };

 public:
  // make_shared needs a public constructor; Key keeps it unusable externally.
  Field(Key, FieldSpec spec) : spec_(std::move(spec)) {}

 private:
  FieldSpec spec_;
};

// A field element bound to its field; mixed-field arithmetic throws.
class FieldElement {
 public:
  FieldElement(FieldPtr field, std::uint64_t enc);

  std::uint64_t enc() const noexcept { return enc_; }
  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::vector<std::uint64_t> coeffs() const { return field_->decode(enc_); }
  bool is_zero() const noexcept { return enc_ == 0; }

  FieldElement operator-() const { return {field_, field_->neg(enc_)}; }
  FieldElement inverse() const { return {field_, field_->inv(enc_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(enc_, e)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_->same_as(*b.field_) && a.enc_ == b.enc_;
  }

  std::string to_string() const { return field_->to_string(enc_); }

 private:
  FieldPtr field_;
  std::uint64_t enc_;
};

// Throws std::invalid_argument if a and b live in different fields.
void check_same_field(const Field& a, const Field& b, const char* op);

}  // namespace rsdh

#endif
