#include "rsdh/common.hpp"

#include <thread>

namespace rsdh {

std::uint64_t checked_pow_u64(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > (std::uint64_t{1} << 63) / base)
      throw std::overflow_error("checked_pow_u64: result exceeds 2^63");
    r *= base;
  }
  return r;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all 64-bit integers.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// floor(n^(1/e)) by Newton-free binary search.
std::uint64_t floor_root_u64(std::uint64_t n, unsigned e) {
  if (e == 1 || n < 2) return n;
  std::uint64_t lo = 1, hi = n;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    bool ok = true;
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < e; ++i) {
      if (acc > n / mid) {
        ok = false;
        break;
      }
      acc *= mid;
    }
    if (ok)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace

std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t n) {
  if (n < 2) return {0, 0};
  for (unsigned e = 63; e >= 1; --e) {
    const std::uint64_t r = floor_root_u64(n, e);
    std::uint64_t acc = 1;
    bool exact = true;
    for (unsigned i = 0; i < e && exact; ++i) {
      if (r != 0 && acc > n / r) exact = false;
      acc *= r;
    }
    if (exact && acc == n && is_prime_u64(r)) return {r, e};
  }
  return {0, 0};
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t f = n - k + i;
    if (r > UINT64_MAX / f) return UINT64_MAX;
    r = r * f / i;
  }
  return r;
}

void run_partitioned(std::uint64_t total, unsigned jobs,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& body) {
  if (jobs <= 1 || total < 2) {
    body(0, 0, total);
    return;
  }
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, total));
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  const std::uint64_t chunk = total / jobs;
  const std::uint64_t rem = total % jobs;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t end = begin + chunk + (w < rem ? 1 : 0);
    workers.emplace_back([&body, w, begin, end] { body(w, begin, end); });
    begin = end;
  }
  for (auto& t : workers) t.join();
}

}  // namespace rsdh
