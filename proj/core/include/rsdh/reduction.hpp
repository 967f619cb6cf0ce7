#ifndef RSDH_REDUCTION_HPP
#define RSDH_REDUCTION_HPP

#include <cstdint>
#include <vector>

#include "rsdh/rscode.hpp"

namespace rsdh {

// "Is there a size-s subset of A summing to b?" over the given field.
struct SubsetSumInstance {
  FieldPtr field;
  std::vector<std::uint64_t> set;  // A, distinct element encodings
  std::uint64_t target;            // b
  unsigned size;                   // s, 2 <= s <= |A|
};

// The deep-hole side of the reduction: a generalized [|A|, s-1] code with
// evaluation set A and the word generated by f = x^s + b x^{s-1}.
struct DeepHoleMapping {
  RSCodePtr code;
  ReceivedWord word;
  UPoly f;
};

// Maps the instance to (code, word). Contract: the word is NOT a deep hole
// iff some size-s subset of A sums to -b. Matching x^{s-1} coefficients of
// the monic product gives the sign: f - g = prod_{i in S}(x - a_i) forces
// b = -sum(S). In characteristic 2 the two targets coincide, which is the
// source material's setting; odd characteristic needs the negation.
// Requires s >= 2 (code dimension s-1 >= 1) and |A| > s (deg f < n).
DeepHoleMapping subset_sum_to_deephole(const SubsetSumInstance& inst);

// Enumerates size-s subsets of A in lexicographic index order; returns the
// first subset (by that order) summing to `target`, as element encodings.
// Budget C(|A|, s) <= 10^6.
struct SubsetSearchResult {
  bool found;
  std::vector<std::uint64_t> subset;  // element values, empty when not found
};
SubsetSearchResult find_subset_with_sum(const FieldPtr& field,
                                        const std::vector<std::uint64_t>& A, std::uint64_t target,
                                        unsigned size);

struct EquivalenceReport {
  std::uint64_t effective_target;  // -b, the sum actually searched for
  bool subset_exists;
  std::vector<std::uint64_t> witness_subset;  // empty when none exists
  bool is_deep_hole;
  unsigned distance;
  bool equivalence_holds;  // subset_exists == !is_deep_hole
};

// Runs both sides independently — subset enumeration against the exhaustive
// codeword-enumeration distance oracle — and reports whether they satisfy
// the iff. Budgets: C(|A|, s) <= 10^6 and q^{s-1} <= 10^6.
EquivalenceReport verify_equivalence(const SubsetSumInstance& inst, unsigned jobs = 1);

}  // namespace rsdh

#endif
