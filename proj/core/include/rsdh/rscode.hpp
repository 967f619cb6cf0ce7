#ifndef RSDH_RSCODE_HPP
#define RSDH_RSCODE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "rsdh/field.hpp"
#include "rsdh/upoly.hpp"

namespace rsdh {

class RSCode;
using RSCodePtr = std::shared_ptr<const RSCode>;

// How the evaluation set relates to the field: an arbitrary subset
// (generalized), all of F_q* in canonical order (standard), or all of F_q in
// canonical order (extended).
enum class CodeFlavor { generalized, standard, extended };
const char* to_string(CodeFlavor f);

enum class DistanceOracle { subset_interpolation, codeword_enumeration };

// A received word, position-aligned with the code's evaluation set.
struct ReceivedWord {
  RSCodePtr code;
  std::vector<std::uint64_t> values;  // canonical encodings, length n

  // Sum of values[i] * q^i; throws std::overflow_error if q^n does not fit.
  std::uint64_t encoding() const;
};

// Result of an exact distance computation. The witness generates a nearest
// codeword (degree <= k-1); among all nearest codewords it is the one whose
// message encoding (sum of coeff_i * q^i) is smallest, so both oracles and
// any worker partitioning return the identical verdict.
struct DeepHoleVerdict {
  bool is_deep_hole;
  unsigned distance;
  unsigned max_agreement;
  UPoly witness;
};

struct CensusResult {
  std::uint64_t total_words = 0;
  std::uint64_t deep_holes = 0;
  std::vector<ReceivedWord> sample;  // lowest-encoding deep holes, up to the limit
};

// Reed-Solomon code over an ordered evaluation set D = (x_1..x_n) of distinct
// field elements; messages are coefficient vectors of polynomials of degree
// <= k-1. The evaluation-set order is part of the code's identity. Covering
// radius is n-k; a deep hole is a word at exactly that distance.
class RSCode : public std::enable_shared_from_this<RSCode> {
  struct Key {
    explicit Key() = default;
  };

 public:
  RSCode(Key, FieldPtr field, std::vector<std::uint64_t> eval_set, unsigned k);

  static RSCodePtr make(FieldPtr field, std::vector<std::uint64_t> eval_set, unsigned k);
  // D = F_q^* in canonical encoding order.
  static RSCodePtr standard(const FieldPtr& field, unsigned k);
  // D = F_q in canonical encoding order.
  static RSCodePtr extended(const FieldPtr& field, unsigned k);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<std::uint64_t>& eval_set() const noexcept { return eval_set_; }
  unsigned k() const noexcept { return k_; }
  unsigned n() const noexcept { return static_cast<unsigned>(eval_set_.size()); }
  unsigned covering_radius() const noexcept { return n() - k_; }
  CodeFlavor flavor() const noexcept { return flavor_; }
  bool same_as(const RSCode& other) const;

  // Wraps raw values (encodings) after validation.
  ReceivedWord word(std::vector<std::uint64_t> values) const;
  // Message (a_1..a_k) are the ascending coefficients of f = a_k x^{k-1} + ... + a_1.
  ReceivedWord encode(std::span<const std::uint64_t> message) const;
  // (g(x_1)..g(x_n)); requires deg g < n.
  ReceivedWord word_from_poly(const UPoly& g) const;
  // Unique interpolant of degree < n through (x_i, y_i); the word is a
  // codeword iff the result has degree <= k-1.
  UPoly word_poly(const ReceivedWord& w) const;

  // Exact minimum distance from w to the code, with deep-hole verdict and a
  // deterministic nearest-codeword witness.
  //
  // codeword_enumeration walks all q^k codewords (budget q^k <= 10^7).
  // subset_interpolation walks (k+1)-subsets of positions (budget
  // C(n, k+1) <= 10^7): max agreement >= k+1 iff some subset interpolates to
  // degree <= k-1; otherwise max agreement is exactly k for a non-codeword,
  // and the witness is recovered from k-subsets. Workers partition candidate
  // ranges; merge keeps the smallest message encoding, so the result is
  // schedule-independent.
  DeepHoleVerdict distance_to_code(const ReceivedWord& w, DistanceOracle oracle,
                                   unsigned jobs = 1) const;

  // Exhaustive deep-hole census over all q^n words (budget q^n <= 10^7).
  // Walks words coset-by-coset (distance is invariant under adding a
  // codeword), reporting per-word rows in increasing word-encoding order via
  // the optional callback(encoding, distance, is_deep_hole).
  CensusResult enumerate_deep_holes(
      std::size_t sample_limit = 8, unsigned jobs = 1,
      const std::function<void(std::uint64_t, unsigned, bool)>& per_word = nullptr) const;

 private:
  FieldPtr field_;
  std::vector<std::uint64_t> eval_set_;
  unsigned k_;
  CodeFlavor flavor_;
};

}  // namespace rsdh

#endif
