#ifndef RSDH_MPOLY_HPP
#define RSDH_MPOLY_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "rsdh/field.hpp"
#include "rsdh/upoly.hpp"

namespace rsdh {

// Constraint on evaluation points of a multivariate polynomial.
enum class PointConstraint {
  none,              // all tuples
  distinct_only,     // pairwise distinct coordinates
  nonzero_distinct,  // pairwise distinct and all nonzero
};
const char* to_string(PointConstraint c);

// Graded lexicographic order on exponent vectors: first by total degree,
// then lexicographically. This is the canonical term order used for
// printing, equality of serialized forms, and JSON output.
struct GradedLex {
  bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    const unsigned long long sa = std::accumulate(a.begin(), a.end(), 0ull);
    const unsigned long long sb = std::accumulate(b.begin(), b.end(), 0ull);
    if (sa != sb) return sa < sb;
    return a < b;
  }
};

// Sparse multivariate polynomial over a field, in variables x1..xv
// (1-based, matching the usual x_1..x_{k+1} indexing; index 0 is an error).
// Terms map exponent vectors (length v) to nonzero coefficient encodings.
class MPoly {
 public:
  static constexpr int kZeroDegree = UPoly::kZeroDegree;
  using Exps = std::vector<unsigned>;
  using TermMap = std::map<Exps, std::uint64_t, GradedLex>;

  MPoly(FieldPtr field, unsigned nvars);

  static MPoly zero(FieldPtr field, unsigned nvars) { return MPoly(std::move(field), nvars); }
  static MPoly constant(FieldPtr field, unsigned nvars, std::uint64_t c);
  // x_i, 1-based.
  static MPoly variable(FieldPtr field, unsigned nvars, unsigned i);
  static MPoly monomial(FieldPtr field, unsigned nvars, Exps exps, std::uint64_t c = 1);

  // e_i(x1..xv): sum of all products of i distinct variables; e_0 = 1.
  static MPoly elementary_symmetric(FieldPtr field, unsigned nvars, unsigned i);
  // h_d(x1..xv): sum of all monomials of total degree exactly d; h_0 = 1.
  // Built by direct enumeration — used as an independent oracle in tests.
  static MPoly complete_homogeneous(FieldPtr field, unsigned nvars, unsigned d);

  const FieldPtr& field() const noexcept { return field_; }
  unsigned nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  int total_degree() const noexcept;
  std::uint64_t coeff(const Exps& exps) const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(std::uint64_t c) const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.field_->same_as(*b.field_) && a.terms_ == b.terms_;
  }

  // Sum of the terms of total degree exactly d (zero polynomial if none).
  MPoly homogeneous_component(unsigned d) const;

  // Partial substitution x_i := value for each (i, value) in the assignment;
  // unassigned variables stay symbolic. A ring homomorphism.
  MPoly substitute(const std::map<unsigned, std::uint64_t>& values) const;

  // Full evaluation; point holds encodings for x1..xv in order.
  std::uint64_t eval(std::span<const std::uint64_t> point) const;

  // Variable renaming x_i -> x_{perm[i-1]}; perm must be a permutation of 1..v.
  MPoly permute_vars(std::span<const unsigned> perm) const;

  // Formal partial derivative with respect to x_i (1-based).
  MPoly derivative(unsigned i) const;

  std::string to_string() const;

 private:
  void add_term(Exps exps, std::uint64_t c);
  void check_var(unsigned i) const;

  FieldPtr field_;
  unsigned nvars_;
  TermMap terms_;
};

}  // namespace rsdh

#endif
