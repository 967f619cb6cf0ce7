#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rsdh/bounds.hpp"
#include "rsdh/surface.hpp"

using namespace rsdh;

TEST_CASE("ceil_root_pow computes exact integer ceilings") {
  CHECK(ceil_root_pow(8, 1, 3) == 2);
  CHECK(ceil_root_pow(9, 1, 2) == 3);
  CHECK(ceil_root_pow(10, 1, 2) == 4);
  CHECK(ceil_root_pow(2, 3, 2) == 3);  // ceil(2^{3/2}) = ceil(2.828...)
  CHECK(ceil_root_pow(0, 5, 3) == 0);
  CHECK(ceil_root_pow(1, 5, 7) == 1);
  CHECK(ceil_root_pow(125 * (BigInt(1) << 13), 1, 3) == 101);  // ceil(5 * 2^{13/3})
  CHECK(ceil_root_pow(64, 2, 3) == 16);
  CHECK(ceil_root_pow(7, 2, 2) == 7);
  CHECK_THROWS_AS(ceil_root_pow(2, 1, 0), std::invalid_argument);
}

TEST_CASE("ceil_root_pow brackets the real root from above") {
  Rng rng(5501);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t x = 1 + uniform_u64(rng, 1'000'000);
    const unsigned a = 1 + static_cast<unsigned>(uniform_u64(rng, 4));
    const unsigned b = 1 + static_cast<unsigned>(uniform_u64(rng, 4));
    const BigInt t = ceil_root_pow(x, a, b);
    // t^b >= x^a and (t-1)^b < x^a.
    BigInt tb = 1, xa = 1, sb = 1;
    for (unsigned j = 0; j < b; ++j) tb *= t;
    for (unsigned j = 0; j < a; ++j) xa *= x;
    CHECK(tb >= xa);
    if (t > 0) {
      for (unsigned j = 0; j < b; ++j) sb *= t - 1;
      CHECK(sb < xa);
    }
    // Cross-check against floating point within its accuracy.
    const double approx = std::pow(static_cast<double>(x), static_cast<double>(a) / b);
    CHECK(t.convert_to<double>() >= approx - 1e-6 * approx - 1);
    CHECK(t.convert_to<double>() <= approx + 1e-6 * approx + 2);
  }
}

TEST_CASE("lower bound values for small parameters") {
  CHECK(cafure_matera_lower(103, 2, 2) == 2);
  CHECK(cafure_matera_lower(127, 2, 2) == 26);
  CHECK(cafure_matera_lower(251, 2, 2) == 150);
  CHECK(cafure_matera_lower(101, 3, 2) == 20);
  CHECK(cafure_matera_lower(7, 2, 3) == -584);  // vacuous at small q
  CHECK(cafure_matera_lower(5, 2, 1) == 0);
  CHECK_THROWS_AS(cafure_matera_lower(6, 2, 2), std::invalid_argument);
}

TEST_CASE("upper bound on common zeros of coprime pairs") {
  CHECK(schmidt_upper(7, 3, 4) == 2688);  // 2 * 3 * 4^3 * 7
  CHECK(schmidt_upper(5, 2, 1) == 4);
  CHECK(schmidt_upper(4, 3, 2) == 192);
}

TEST_CASE("margin report: published variant on the worked example") {
  const BoundReport r = theorem_margin(401, 2, 1, MarginVariant::published);
  CHECK(r.main_term == 160801);
  CHECK(r.weil_term == 0);
  CHECK(r.d133_term == 2005);
  CHECK(r.common_zero_term == 153984);  // 2(k+1) M^3 q with M = (k^2+k+2)/2 = 4
  CHECK(r.margin == 4812);
  CHECK(r.applies);
}

TEST_CASE("margin report: corrected variant counts the distinctness degree directly") {
  const BoundReport r = theorem_margin(401, 2, 1, MarginVariant::corrected);
  CHECK(r.common_zero_term == 519696);  // M = (k+1)(k+2)/2 = 6
  CHECK(r.margin == -360900);
  CHECK_FALSE(r.applies);

  // The corrected variant needs a larger field before it applies.
  CHECK_FALSE(theorem_margin(1301, 2, 1, MarginVariant::corrected).applies);
  const BoundReport r2 = theorem_margin(1303, 2, 1, MarginVariant::corrected);
  CHECK(r2.margin == 2606);
  CHECK(r2.applies);
}

TEST_CASE("margin grows with q once inside the asymptotic regime") {
  // Not monotone globally: below the positive threshold the d^{13/3} and
  // distinctness terms dominate and the margin *decreases* in q.
  const BigInt m2 = theorem_margin(2, 2, 1, MarginVariant::published).margin;
  const BigInt m3 = theorem_margin(3, 2, 1, MarginVariant::published).margin;
  CHECK(m2 == -774);
  CHECK(m3 == -1158);
  CHECK(m3 < m2);

  // Inside the regime (primes past the threshold) it is strictly increasing.
  const std::vector<std::uint64_t> primes{397, 401, 409, 419, 421};
  const std::vector<long> expect{3176, 4812, 8180, 12570, 13472};
  BigInt prev = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const BoundReport r = theorem_margin(primes[i], 2, 1, MarginVariant::published);
    CHECK(r.margin == expect[i]);
    CHECK(r.applies);
    if (i > 0) CHECK(r.margin > prev);
    prev = r.margin;
  }
  for (std::uint64_t q : {1303ull, 1307ull, 1319ull, 1321ull}) {
    CHECK(theorem_margin(q, 2, 1, MarginVariant::corrected).applies);
  }
}

TEST_CASE("margin validates its inputs") {
  CHECK_THROWS_AS(theorem_margin(6, 2, 1), std::invalid_argument);   // not a prime power
  CHECK_THROWS_AS(theorem_margin(7, 0, 1), std::invalid_argument);   // k >= 1
  CHECK_THROWS_AS(theorem_margin(7, 2, 0), std::invalid_argument);   // d >= 1
  CHECK_NOTHROW(theorem_margin(8, 2, 1));                            // prime powers allowed
}

TEST_CASE("exact point count over small planes") {
  auto f5 = Field::prime_field(5);

  const MPoly line = MPoly::variable(f5, 2, 1) + MPoly::variable(f5, 2, 2);
  CHECK(exact_point_count(line, PointConstraint::none) == 5);
  CHECK(exact_point_count(line, PointConstraint::distinct_only) == 4);
  CHECK(exact_point_count(line, PointConstraint::nonzero_distinct) == 4);

  const MPoly zero = MPoly::zero(f5, 2);
  CHECK(exact_point_count(zero, PointConstraint::none) == 25);
  CHECK(exact_point_count(zero, PointConstraint::distinct_only) == 20);
  CHECK(exact_point_count(zero, PointConstraint::nonzero_distinct) == 12);

  CHECK(exact_point_count(MPoly::constant(f5, 2, 1), PointConstraint::none) == 0);
}

TEST_CASE("exact count dominates the lower bound on the worked curves") {
  for (std::uint64_t q : {103ull, 127ull}) {
    auto f = Field::prime_field(q);
    MPoly curve = MPoly::zero(f, 2);
    for (unsigned i = 0; i <= 2; ++i)
      for (unsigned j = 0; i + j <= 2; ++j) curve = curve + MPoly::monomial(f, 2, {i, j}, 1);
    const std::uint64_t count = exact_point_count(curve, PointConstraint::none, 2);
    CHECK(BigInt(count) >= cafure_matera_lower(q, 2, 2));
  }
}

TEST_CASE("point counts are worker-count independent and budget-limited") {
  auto f11 = Field::prime_field(11);
  const auto H = compute_L(MonicTail{2, 2, {3, 1}}, f11);
  CHECK(exact_point_count(H.L, PointConstraint::nonzero_distinct, 1) ==
        exact_point_count(H.L, PointConstraint::nonzero_distinct, 4));

  auto f101 = Field::prime_field(101);
  const MPoly big = MPoly::variable(f101, 5, 1);  // 101^5 > 10^8
  CHECK_THROWS_AS(exact_point_count(big, PointConstraint::none), BudgetExceeded);
}
