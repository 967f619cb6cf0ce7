#include "rsdh/reduction.hpp"

#include <numeric>
#include <stdexcept>

namespace rsdh {

namespace {

constexpr std::uint64_t kSubsetBudget = 1'000'000;  // C(|A|, s)
constexpr std::uint64_t kOracleBudget = 1'000'000;  // q^{s-1}

void validate(const SubsetSumInstance& inst) {
  if (!inst.field) throw std::invalid_argument("subset sum: null field");
  if (inst.size < 2)
    throw std::invalid_argument("subset sum: size must be >= 2 (code dimension s-1 >= 1)");
  if (inst.set.size() <= inst.size)
    throw std::invalid_argument("subset sum: needs |A| > s so the word's generator has degree < n");
  if (inst.target >= inst.field->q())
    throw std::invalid_argument("subset sum: target out of range");
  // Distinctness and range of A are enforced by the code constructor.
}

}  // namespace

DeepHoleMapping subset_sum_to_deephole(const SubsetSumInstance& inst) {
  validate(inst);
  RSCodePtr code = RSCode::make(inst.field, inst.set, inst.size - 1);
  std::vector<std::uint64_t> coeffs(inst.size + 1, 0);
  coeffs[inst.size] = 1;
  coeffs[inst.size - 1] = inst.target;
  UPoly f = UPoly::from_coeffs(inst.field, std::move(coeffs));
  ReceivedWord word = code->word_from_poly(f);
  return {std::move(code), std::move(word), std::move(f)};
}

SubsetSearchResult find_subset_with_sum(const FieldPtr& field,
                                        const std::vector<std::uint64_t>& A, std::uint64_t target,
                                        unsigned size) {
  if (size == 0 || size > A.size())
    throw std::invalid_argument("subset search: size must satisfy 1 <= s <= |A|");
  if (binomial_u64(A.size(), size) > kSubsetBudget)
    throw BudgetExceeded("subset enumeration budget C(|A|, s) <= 10^6 exceeded");
  const Field& F = *field;
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    std::uint64_t sum = 0;
    for (auto i : idx) sum = F.add(sum, A[i]);
    if (sum == target) {
      std::vector<std::uint64_t> subset(size);
      for (std::size_t i = 0; i < size; ++i) subset[i] = A[idx[i]];
      return {true, std::move(subset)};
    }
  } while (next_combination(idx, A.size()));
  return {false, {}};
}

EquivalenceReport verify_equivalence(const SubsetSumInstance& inst, unsigned jobs) {
  validate(inst);
  const Field& F = *inst.field;
  {
    std::uint64_t r = 1;
    for (unsigned i = 0; i + 1 < inst.size; ++i) {
      if (r > kOracleBudget / F.q() || (r *= F.q()) > kOracleBudget)
        throw BudgetExceeded("deep-hole oracle budget q^{s-1} <= 10^6 exceeded");
    }
  }

  const std::uint64_t effective = F.neg(inst.target);
  const SubsetSearchResult subset = find_subset_with_sum(inst.field, inst.set, effective, inst.size);

  const DeepHoleMapping mapped = subset_sum_to_deephole(inst);
  const DeepHoleVerdict verdict =
      mapped.code->distance_to_code(mapped.word, DistanceOracle::codeword_enumeration, jobs);

  EquivalenceReport rep{effective,
                        subset.found,
                        subset.subset,
                        verdict.is_deep_hole,
                        verdict.distance,
                        subset.found == !verdict.is_deep_hole};
  return rep;
}

}  // namespace rsdh
