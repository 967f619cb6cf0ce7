#ifndef RSDH_COMMON_HPP
#define RSDH_COMMON_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsdh {

// Thrown when an exhaustive operation would exceed its declared work budget.
// Callers are expected to fall back to another oracle or decline the request.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

// Uniform draw from [0, n) that is reproducible across platforms
// (std::uniform_int_distribution is not portable).
inline std::uint64_t uniform_u64(Rng& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_u64: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// p^e with overflow detection; throws std::overflow_error past 2^63.
std::uint64_t checked_pow_u64(std::uint64_t base, unsigned exp);

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

// If n = p^e for a prime p, returns {p, e}; otherwise {0, 0}.
std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t n);

// Advances an index combination c (strictly increasing, values in [0, n)).
// Returns false once the last combination has been visited.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t s = c.size();
  for (std::size_t i = s; i-- > 0;) {
    if (c[i] + (s - i) < n) {
      ++c[i];
      for (std::size_t j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// C(n, k) saturating at UINT64_MAX, for budget checks.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

// Splits [0, total) into `jobs` contiguous chunks and runs `body(begin, end)`
// on each, using real threads when jobs > 1. Bodies must not share state.
void run_partitioned(std::uint64_t total, unsigned jobs,
                     const std::function<void(unsigned worker, std::uint64_t begin,
                                              std::uint64_t end)>& body);

}  // namespace rsdh

#endif
