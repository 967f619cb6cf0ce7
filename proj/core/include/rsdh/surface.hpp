#ifndef RSDH_SURFACE_HPP
#define RSDH_SURFACE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rsdh/mpoly.hpp"
#include "rsdh/rscode.hpp"
#include "rsdh/upoly.hpp"

namespace rsdh {

// f = x^{k+d} + f_{d-1} x^{k+d-1} + ... + f_0 x^k: the high-degree part of a
// word's interpolant with the degree <= k-1 part stripped.
struct MonicTail {
  unsigned k;
  unsigned d;
  std::vector<std::uint64_t> lows;  // f_0..f_{d-1}, length d

  UPoly to_poly(const FieldPtr& field) const;
};

// L = coefficient of x^k in (f mod prod(x - x_i)), as a polynomial in the
// k+1 symbolic roots x_1..x_{k+1}. Its vanishing at a point with pairwise
// distinct coordinates inside the evaluation set certifies that the word
// generated by f (plus any degree <= k-1 tail) is not a deep hole. top_form
// is the degree-d homogeneous part, which does not depend on the lows.
struct HypersurfaceInstance {
  unsigned k;
  unsigned d;
  FieldPtr field;
  MPoly L;
  MPoly top_form;
};

// Symbolic division of f by Pi = prod_{i=1..k+1} (x - x_i), carried out with
// coefficients in F[x_1..x_{k+1}]. Pi's x-coefficients are signed elementary
// symmetric polynomials: Pi = x^{k+1} + pi_1 x^k + ... + pi_{k+1} with
// pi_i = (-1)^i e_i — the sign is applied explicitly here, once.
// Budget: every intermediate coefficient stays within 10^6 terms.
HypersurfaceInstance compute_L(const MonicTail& f, const FieldPtr& field);

struct IndependenceReport {
  unsigned k;
  unsigned d;
  unsigned trials;
  bool all_equal;
  // The offending coefficient vectors, if any trial's top form differed.
  std::vector<std::vector<std::uint64_t>> counterexamples;
};

// Checks that homogeneous_component(L_f, d) equals homogeneous_component(L_0, d)
// for `trials` random low-coefficient vectors.
IndependenceReport verify_top_form_independence(unsigned k, unsigned d, unsigned trials,
                                                const FieldPtr& field, Rng& rng);

// Direct construction of sum_{i+j<=d} x1^i x2^j in two variables.
MPoly chi_specialized(unsigned d, const FieldPtr& field);

// Recomputes the same polynomial through the symbolic pipeline: top form of
// compute_L(x^{k+d}) specialized at x3 := 1, x4..x_{k+1} := 0, compared with
// the direct construction embedded in k+1 variables. Requires k >= 2.
bool chi_companion_check(unsigned k, unsigned d, const FieldPtr& field);

// Lexicographically smallest zero of P whose coordinates satisfy the
// constraint (pairwise distinct, and nonzero when required), or nullopt.
// Exhaustive depth-first scan; budget q^vars <= 10^8. Workers partition the
// first coordinate's range; the merge keeps the lexicographic minimum, so
// the result is schedule-independent.
std::optional<std::vector<std::uint64_t>> find_distinct_point(const MPoly& P,
                                                              PointConstraint constraint,
                                                              unsigned jobs = 1);

// Randomized variant: samples constraint-satisfying tuples and returns the
// first zero found (re-verified by direct evaluation before returning), or
// nullopt after max_trials. Not guaranteed minimal.
std::optional<std::vector<std::uint64_t>> find_distinct_point_randomized(
    const MPoly& P, PointConstraint constraint, Rng& rng, std::uint64_t max_trials);

struct WitnessResult {
  UPoly generator;    // g = t + (f mod Pi), degree <= k-1
  unsigned distance;  // Hamming distance between word(f + t) and word(g)
};

// Builds Pi numerically from the point, reduces f modulo Pi, and returns the
// nearby codeword generator together with the achieved distance (<= n-k-1
// whenever the point lies on L). Throws if coordinates repeat, lie outside
// the code's evaluation set, or the remainder has degree k (i.e. the point
// is not on the hypersurface).
WitnessResult witness_from_point(const MonicTail& f, std::span<const std::uint64_t> point,
                                 const RSCode& code, const UPoly& t);

struct SmoothnessReport {
  unsigned d;
  std::uint64_t p;
  unsigned e;
  std::uint64_t q;
  std::uint64_t points_scanned;       // q^2 affine pairs
  std::uint64_t singular_affine;      // common zeros of f, df/dx, df/dy
  std::vector<std::array<std::uint64_t, 2>> singular_affine_samples;
  std::uint64_t gradient_zeros;       // common zeros of the two partials alone
  std::vector<std::array<std::uint64_t, 2>> gradient_zero_samples;
  std::uint64_t singular_at_infinity; // (x:y:0) killing both top forms
  bool p_divides_d_plus_1;
  bool p_divides_d_plus_2;
};

// Exhaustive smoothness check of the curve f = sum_{i+j<=d} x^i y^j over
// F_{p^e} (budget p^{2e} <= 10^8): scans the affine plane for singular
// points and checks the projective points at infinity by testing whether the
// degree-d and degree-(d-1) homogeneous parts vanish simultaneously. The
// characteristic cases p | d+1 and p | d+2 are flagged for the caller.
SmoothnessReport curve_smoothness_scan(unsigned d, std::uint64_t p, unsigned e,
                                       unsigned jobs = 1);

}  // namespace rsdh

#endif
