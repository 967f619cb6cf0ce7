#ifndef RSDH_BOUNDS_HPP
#define RSDH_BOUNDS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "rsdh/mpoly.hpp"

namespace rsdh {

using BigInt = boost::multiprecision::cpp_int;

// ceil(x^{a/b}): the smallest t >= 0 with t^b >= x^a. Pure integer
// arithmetic, so every fractional power is bounded from above and a positive
// margin is a mathematically valid conclusion, never a float artifact.
BigInt ceil_root_pow(const BigInt& x, unsigned a, unsigned b);

// Degree of the distinctness product prod x_i * prod_{i<j} (x_i - x_j) in
// k+1 variables: `published` uses (k^2+k+2)/2 as printed in the source
// material; `corrected` uses the direct count (k+1) + k(k+1)/2 =
// (k+1)(k+2)/2. The two disagree for every k >= 1; both are exposed.
enum class MarginVariant { published, corrected };
const char* to_string(MarginVariant v);

struct BoundReport {
  std::uint64_t q;
  unsigned k;
  unsigned d;
  MarginVariant variant;
  BigInt main_term;         // q^k (exact)
  BigInt weil_term;         // ceil((d-1)(d-2) q^{k-1/2})
  BigInt d133_term;         // ceil(5 d^{13/3} q^{k-1})
  BigInt common_zero_term;  // 2(k+1) max(d, M)^3 q^{k-1} (exact)
  BigInt margin;            // main - weil - d133 - common_zero
  bool applies;             // margin > 0
};

// Lower bound on the rational points of an absolutely irreducible degree-d
// hypersurface in n variables over F_q:
// q^{n-1} - ceil((d-1)(d-2) q^{n-3/2}) - ceil(5 d^{13/3} q^{n-2}).
// May be negative (vacuous) for small q.
BigInt cafure_matera_lower(std::uint64_t q, unsigned n, unsigned d);

// Upper bound 2 n D^3 q^{n-2} on the common zeros of two coprime degree-<=D
// polynomials in n variables over F_q.
BigInt schmidt_upper(std::uint64_t q, unsigned n, unsigned D);

// Positivity margin of the deep-hole criterion: points of the
// leading-coefficient hypersurface minus the Weil-type defect, the d^{13/3}
// defect, and the points lost to the distinctness product. applies == true
// certifies that a pairwise-distinct nonzero point exists for every
// degree-(k+d) tail of the given shape.
BoundReport theorem_margin(std::uint64_t q, unsigned k, unsigned d,
                           MarginVariant variant = MarginVariant::corrected);

// Exact number of zeros of P over F^vars under the constraint, by exhaustive
// scan (budget q^vars <= 10^8). Workers partition the first coordinate;
// counts merge additively.
std::uint64_t exact_point_count(const MPoly& P, PointConstraint constraint, unsigned jobs = 1);

}  // namespace rsdh

#endif
