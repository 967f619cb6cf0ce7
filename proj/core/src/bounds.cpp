#include "rsdh/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rsdh {

namespace {

constexpr std::uint64_t kCountBudget = 100'000'000;

void require_prime_power(std::uint64_t q, const char* who) {
  if (prime_power_decompose(q).first == 0)
    throw std::invalid_argument(std::string(who) + ": q must be a prime power");
}

BigInt pow_big(const BigInt& base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

const char* to_string(MarginVariant v) {
  return v == MarginVariant::published ? "published" : "corrected";
}

BigInt ceil_root_pow(const BigInt& x, unsigned a, unsigned b) {
  if (x < 0) throw std::invalid_argument("ceil_root_pow: negative base");
  if (b == 0) throw std::invalid_argument("ceil_root_pow: zero root index");
  if (x == 0) return 0;
  const BigInt target = pow_big(x, a);
  // Binary search the least t with t^b >= target.
  BigInt hi = 1;
  while (pow_big(hi, b) < target) hi <<= 1;
  BigInt lo = hi >> 1;
  while (lo < hi) {
    const BigInt mid = (lo + hi) / 2;
    if (pow_big(mid, b) >= target)
      hi = mid;
    else
      lo = mid + 1;
  }
  return hi;
}

BigInt cafure_matera_lower(std::uint64_t q, unsigned n, unsigned d) {
  require_prime_power(q, "cafure_matera_lower");
  if (n < 2) throw std::invalid_argument("cafure_matera_lower: n must be >= 2");
  if (d < 1) throw std::invalid_argument("cafure_matera_lower: d must be >= 1");
  const BigInt Q = q;
  const BigInt main = pow_big(Q, n - 1);
  // (d-1)(d-2) q^{n-3/2} = (d-1)(d-2) q^{n-2} sqrt(q); ceil via the exact
  // square root of the squared product.
  const BigInt weil_factor = BigInt(d - 1) * BigInt(d >= 2 ? d - 2 : 0) * pow_big(Q, n - 2);
  const BigInt weil = ceil_root_pow(weil_factor * weil_factor * Q, 1, 2);
  // 5 d^{13/3} q^{n-2}: cube the integer parts, leave d^13 under the radical.
  const BigInt d133 =
      ceil_root_pow(pow_big(5, 3) * pow_big(BigInt(d), 13) * pow_big(pow_big(Q, n - 2), 3), 1, 3);
  return main - weil - d133;
}

BigInt schmidt_upper(std::uint64_t q, unsigned n, unsigned D) {
  if (q < 2) throw std::invalid_argument("schmidt_upper: q must be >= 2");
  if (n < 2) throw std::invalid_argument("schmidt_upper: n must be >= 2");
  return BigInt(2) * n * pow_big(BigInt(D), 3) * pow_big(BigInt(q), n - 2);
}

BoundReport theorem_margin(std::uint64_t q, unsigned k, unsigned d, MarginVariant variant) {
  require_prime_power(q, "theorem_margin");
  if (k < 1) throw std::invalid_argument("theorem_margin: k must be >= 1");
  if (d < 1) throw std::invalid_argument("theorem_margin: d must be >= 1");
  const BigInt Q = q;

  BoundReport rep{q, k, d, variant, 0, 0, 0, 0, 0, false};
  rep.main_term = pow_big(Q, k);

  const BigInt weil_factor = BigInt(d - 1) * BigInt(d >= 2 ? d - 2 : 0) * pow_big(Q, k - 1);
  rep.weil_term = ceil_root_pow(weil_factor * weil_factor * Q, 1, 2);

  rep.d133_term =
      ceil_root_pow(pow_big(5, 3) * pow_big(BigInt(d), 13) * pow_big(pow_big(Q, k - 1), 3), 1, 3);

  const std::uint64_t M = variant == MarginVariant::published
                              ? (static_cast<std::uint64_t>(k) * k + k + 2) / 2
                              : (static_cast<std::uint64_t>(k) + 1) * (k + 2) / 2;
  const BigInt deg = std::max<BigInt>(BigInt(d), BigInt(M));
  rep.common_zero_term = BigInt(2) * (k + 1) * pow_big(deg, 3) * pow_big(Q, k - 1);

  rep.margin = rep.main_term - rep.weil_term - rep.d133_term - rep.common_zero_term;
  rep.applies = rep.margin > 0;
  return rep;
}

std::uint64_t exact_point_count(const MPoly& P, PointConstraint constraint, unsigned jobs) {
  if (jobs == 0) jobs = 1;
  const unsigned vars = P.nvars();
  const std::uint64_t q = P.field()->q();
  {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < vars; ++i) {
      if (r > kCountBudget / q) throw BudgetExceeded("point count budget q^vars <= 10^8 exceeded");
      r *= q;
      if (r > kCountBudget) throw BudgetExceeded("point count budget q^vars <= 10^8 exceeded");
    }
  }

  // Depth-first count with one variable substituted per level; constraint
  // pruning happens before recursion.
  struct Walker {
    PointConstraint constraint;
    unsigned vars;
    std::uint64_t q;
    std::vector<bool> used;

    std::uint64_t walk(const MPoly& P, unsigned depth) {
      if (depth == vars) return P.is_zero() ? 1 : 0;
      const std::uint64_t lo = constraint == PointConstraint::nonzero_distinct ? 1 : 0;
      std::uint64_t count = 0;
      for (std::uint64_t v = lo; v < q; ++v) {
        if (constraint != PointConstraint::none && used[v]) continue;
        used[v] = true;
        count += walk(P.substitute({{depth + 1, v}}), depth + 1);
        used[v] = false;
      }
      return count;
    }
  };

  std::vector<std::uint64_t> partial(jobs, 0);
  run_partitioned(q, jobs, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
    Walker w{constraint, vars, q, std::vector<bool>(q, false)};
    const std::uint64_t lo = constraint == PointConstraint::nonzero_distinct
                                 ? std::max<std::uint64_t>(begin, 1)
                                 : begin;
    for (std::uint64_t v = lo; v < end; ++v) {
      if (constraint != PointConstraint::none) w.used[v] = true;
      partial[worker] += w.walk(P.substitute({{1, v}}), 1);
      if (constraint != PointConstraint::none) w.used[v] = false;
    }
  });

  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

}  // namespace rsdh
