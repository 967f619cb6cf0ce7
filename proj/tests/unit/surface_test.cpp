#include <doctest.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "rsdh/surface.hpp"

using namespace rsdh;

namespace {

// Numeric cross-check of the symbolic division: substitute a concrete root
// tuple into L and compare with the x^k coefficient of f mod prod(x - x_i).
std::uint64_t l_by_numeric_division(const MonicTail& tail, const FieldPtr& f,
                                    std::span<const std::uint64_t> roots) {
  UPoly pi = UPoly::constant(f, 1);
  for (auto r : roots) pi = pi * UPoly::from_coeffs(f, {f->neg(r), 1});
  const UPoly rem = UPoly::divmod(tail.to_poly(f), pi).second;
  return rem.coeff(tail.k);
}

std::vector<std::uint64_t> random_tuple(const FieldPtr& f, Rng& rng, unsigned n) {
  std::vector<std::uint64_t> v(n);
  for (auto& x : v) x = uniform_u64(rng, f->q());
  return v;
}

}  // namespace

TEST_CASE("compute_L: worked examples for small k and d") {
  auto f7 = Field::prime_field(7);

  // k = 2, d = 1, no lows: L = x1 + x2 + x3.
  const auto H1 = compute_L(MonicTail{2, 1, {0}}, f7);
  CHECK(H1.L == MPoly::elementary_symmetric(f7, 3, 1));
  CHECK(H1.top_form == H1.L);

  // Adding the low coefficient f0 shifts L by the constant f0.
  const auto H1b = compute_L(MonicTail{2, 1, {3}}, f7);
  CHECK(H1b.L == MPoly::elementary_symmetric(f7, 3, 1) + MPoly::constant(f7, 3, 3));
  CHECK(H1b.top_form == H1.top_form);

  // k = 2, d = 2, no lows: L = h_2 = e1^2 - e2.
  const auto H2 = compute_L(MonicTail{2, 2, {0, 0}}, f7);
  const MPoly e1 = MPoly::elementary_symmetric(f7, 3, 1);
  const MPoly e2 = MPoly::elementary_symmetric(f7, 3, 2);
  CHECK(H2.L == e1 * e1 - e2);
  CHECK(H2.L == MPoly::complete_homogeneous(f7, 3, 2));
  CHECK(H2.top_form == H2.L);

  // With lows f = x^4 + 5x^3 + 3x^2: L picks up 5*e1 + 3 below the top form.
  const auto H2b = compute_L(MonicTail{2, 2, {3, 5}}, f7);
  CHECK(H2b.L == H2.L + e1.scaled(5) + MPoly::constant(f7, 3, 3));
  CHECK(H2b.top_form == H2.top_form);

  CHECK_THROWS_AS(compute_L(MonicTail{2, 1, {0, 0}}, f7), std::invalid_argument);
  CHECK_THROWS_AS(compute_L(MonicTail{0, 1, {0}}, f7), std::invalid_argument);
  CHECK_THROWS_AS(compute_L(MonicTail{2, 0, {}}, f7), std::invalid_argument);
}

TEST_CASE("compute_L agrees with numeric division at random points") {
  Rng rng(4401);
  for (const auto& f : {Field::prime_field(7), Field::prime_field(11)}) {
    for (unsigned k = 1; k <= 4; ++k) {
      for (unsigned d = 1; d <= 4; ++d) {
        std::vector<std::uint64_t> lows(d);
        for (auto& c : lows) c = uniform_u64(rng, f->q());
        const MonicTail tail{k, d, lows};
        const auto H = compute_L(tail, f);
        REQUIRE(H.L.nvars() == k + 1);
        CHECK(H.L.total_degree() == static_cast<int>(d));
        for (int trial = 0; trial < 15; ++trial) {
          const auto roots = random_tuple(f, rng, k + 1);
          CHECK(H.L.eval(roots) == l_by_numeric_division(tail, f, roots));
        }
      }
    }
  }
}

TEST_CASE("L is symmetric in the roots") {
  auto f7 = Field::prime_field(7);
  Rng rng(4402);
  for (unsigned k = 1; k <= 3; ++k) {
    std::vector<std::uint64_t> lows(2);
    for (auto& c : lows) c = uniform_u64(rng, 7);
    const auto H = compute_L(MonicTail{k, 2, lows}, f7);
    std::vector<unsigned> rotate(k + 1);
    for (unsigned i = 0; i < k + 1; ++i) rotate[i] = (i + 1) % (k + 1) + 1;
    CHECK(H.L.permute_vars(rotate) == H.L);
    if (k >= 1) {
      std::vector<unsigned> swap01(k + 1);
      for (unsigned i = 0; i < k + 1; ++i) swap01[i] = i + 1;
      std::swap(swap01[0], swap01[1]);
      CHECK(H.L.permute_vars(swap01) == H.L);
    }
  }
}

TEST_CASE("top form is independent of the low coefficients") {
  Rng rng(4403);
  for (const auto& f : {Field::prime_field(101), Field::prime_field(7)}) {
    for (unsigned k = 2; k <= 3; ++k) {
      for (unsigned d = 2; d <= 3; ++d) {
        const auto rep = verify_top_form_independence(k, d, 10, f, rng);
        CHECK(rep.all_equal);
        CHECK(rep.counterexamples.empty());
        CHECK(rep.trials == 10);
      }
    }
  }
}

TEST_CASE("top form equals the complete homogeneous sum of degree d") {
  auto f101 = Field::prime_field(101);
  for (unsigned k = 2; k <= 5; ++k)
    for (unsigned d = 1; d <= 5; ++d) {
      const auto H = compute_L(MonicTail{k, d, std::vector<std::uint64_t>(d, 0)}, f101);
      CHECK(H.top_form == MPoly::complete_homogeneous(f101, k + 1, d));
    }
}

TEST_CASE("chi_specialized matches the pipeline specialization") {
  auto f7 = Field::prime_field(7);
  const MPoly chi2 = chi_specialized(2, f7);
  // sum_{i+j<=2} x1^i x2^j has 6 terms, all coefficient 1.
  CHECK(chi2.nvars() == 2);
  CHECK(chi2.num_terms() == 6);
  CHECK(chi2.coeff({0, 0}) == 1);
  CHECK(chi2.coeff({1, 1}) == 1);
  CHECK(chi2.coeff({2, 0}) == 1);

  for (unsigned k = 2; k <= 4; ++k)
    for (unsigned d = 1; d <= 4; ++d) CHECK(chi_companion_check(k, d, f7));
  CHECK_THROWS_AS(chi_companion_check(1, 2, f7), std::invalid_argument);
}

TEST_CASE("find_distinct_point returns the lexicographic minimum") {
  auto f7 = Field::prime_field(7);
  const auto H = compute_L(MonicTail{2, 1, {0}}, f7);

  const auto pt = find_distinct_point(H.L, PointConstraint::nonzero_distinct);
  REQUIRE(pt.has_value());
  CHECK(*pt == std::vector<std::uint64_t>{1, 2, 4});
  CHECK(H.L.eval(*pt) == 0);

  // Distinct-only admits zero coordinates and finds an earlier point.
  const auto pt0 = find_distinct_point(H.L, PointConstraint::distinct_only);
  REQUIRE(pt0.has_value());
  CHECK(*pt0 == std::vector<std::uint64_t>{0, 1, 6});

  // Over F_5, e1 = x1+x2+x3 has no nonzero-distinct zero: the only candidate
  // triples exhaust {1..4} three at a time and none sums to 0.
  auto f5 = Field::prime_field(5);
  const auto H5 = compute_L(MonicTail{2, 1, {0}}, f5);
  CHECK_FALSE(find_distinct_point(H5.L, PointConstraint::nonzero_distinct).has_value());

  // Too few elements to satisfy the constraint at all.
  auto f3 = Field::prime_field(3);
  const auto H3 = compute_L(MonicTail{2, 1, {0}}, f3);
  CHECK_FALSE(find_distinct_point(H3.L, PointConstraint::nonzero_distinct).has_value());
}

TEST_CASE("find_distinct_point is schedule-independent") {
  auto f11 = Field::prime_field(11);
  const auto H = compute_L(MonicTail{3, 2, {0, 0}}, f11);
  const auto a = find_distinct_point(H.L, PointConstraint::nonzero_distinct, 1);
  const auto b = find_distinct_point(H.L, PointConstraint::nonzero_distinct, 4);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(*a == *b);
}

TEST_CASE("randomized point search only returns verified zeros") {
  auto f11 = Field::prime_field(11);
  const auto H = compute_L(MonicTail{2, 2, {1, 3}}, f11);
  Rng rng(4404);
  const auto pt = find_distinct_point_randomized(H.L, PointConstraint::nonzero_distinct, rng, 20000);
  REQUIRE(pt.has_value());
  CHECK(H.L.eval(*pt) == 0);
  for (std::size_t i = 0; i < pt->size(); ++i) {
    CHECK((*pt)[i] != 0);
    for (std::size_t j = i + 1; j < pt->size(); ++j) CHECK((*pt)[i] != (*pt)[j]);
  }

  // A polynomial with no zeros at all: x1*0 + 1.
  const MPoly one = MPoly::constant(f11, 2, 1);
  Rng rng2(4405);
  CHECK_FALSE(find_distinct_point_randomized(one, PointConstraint::distinct_only, rng2, 500)
                  .has_value());
}

TEST_CASE("witness_from_point produces a codeword within the covering radius") {
  auto f7 = Field::prime_field(7);
  auto code = RSCode::standard(f7, 2);
  const MonicTail tail{2, 1, {0}};  // f = x^3
  const std::vector<std::uint64_t> pt{1, 2, 4};

  const WitnessResult res = witness_from_point(tail, pt, *code, UPoly::zero(f7));
  CHECK(res.generator == UPoly::constant(f7, 1));
  CHECK(res.distance == 3);
  CHECK(res.distance <= code->covering_radius() - 1);

  // The verdict from the exact oracle must agree that x^3 is not a deep hole.
  const auto v = code->distance_to_code(code->word_from_poly(parse_upoly(f7, "x^3")),
                                        DistanceOracle::codeword_enumeration);
  CHECK_FALSE(v.is_deep_hole);
  CHECK(v.distance <= code->covering_radius() - 1);

  // Adding a low-degree tail t shifts the word and the generator together.
  const UPoly t = parse_upoly(f7, "2x + 5");
  const WitnessResult res_t = witness_from_point(tail, pt, *code, t);
  CHECK(res_t.generator == t + UPoly::constant(f7, 1));
  CHECK(res_t.distance == 3);
}

TEST_CASE("witness_from_point validates its inputs") {
  auto f7 = Field::prime_field(7);
  auto code = RSCode::standard(f7, 2);
  const MonicTail tail{2, 1, {0}};
  const UPoly z = UPoly::zero(f7);
  // Repeated coordinates.
  CHECK_THROWS_AS(witness_from_point(tail, std::vector<std::uint64_t>{1, 1, 2}, *code, z),
                  std::invalid_argument);
  // 0 is outside the standard evaluation set.
  CHECK_THROWS_AS(witness_from_point(tail, std::vector<std::uint64_t>{0, 1, 2}, *code, z),
                  std::invalid_argument);
  // Wrong arity.
  CHECK_THROWS_AS(witness_from_point(tail, std::vector<std::uint64_t>{1, 2}, *code, z),
                  std::invalid_argument);
  // deg t must stay below k.
  CHECK_THROWS_AS(
      witness_from_point(tail, std::vector<std::uint64_t>{1, 2, 4}, *code, parse_upoly(f7, "x^2")),
      std::invalid_argument);
  // (1, 2, 3) is off the hypersurface (1 + 2 + 3 = 6 != 0 in F_7).
  CHECK_THROWS_AS(witness_from_point(tail, std::vector<std::uint64_t>{1, 2, 3}, *code, z),
                  std::domain_error);
}

TEST_CASE("smoothness scan over a small field") {
  const SmoothnessReport rep = curve_smoothness_scan(2, 7, 1);
  CHECK(rep.q == 7);
  CHECK(rep.points_scanned == 49);
  CHECK(rep.singular_affine == 0);
  CHECK(rep.singular_at_infinity == 0);
  CHECK(rep.gradient_zeros == 1);  // the gradient vanishes off the curve at (2, 2)
  REQUIRE(rep.gradient_zero_samples.size() == 1);
  CHECK(rep.gradient_zero_samples[0] == std::array<std::uint64_t, 2>{2, 2});
  CHECK_FALSE(rep.p_divides_d_plus_1);
  CHECK_FALSE(rep.p_divides_d_plus_2);

  const SmoothnessReport rep9 = curve_smoothness_scan(2, 3, 2);
  CHECK(rep9.q == 9);
  CHECK(rep9.points_scanned == 81);
  CHECK(rep9.singular_affine == 0);

  // Characteristic cases p | (d+1)(d+2): the curve picks up a genuine
  // singular point at (1, 1), because f(1,1) = C(d+2,2) and
  // f_x(1,1) = f_y(1,1) = C(d+2,3) all vanish mod p there. (For d = 3,
  // p = 5: x^4+x^3+x^2+x+1 = (x-1)^4, so the "no multiple root" argument
  // that rules such points out in the generic case does not go through.)
  const SmoothnessReport rep5 = curve_smoothness_scan(3, 5, 1);
  CHECK(rep5.p_divides_d_plus_2);
  CHECK(rep5.singular_affine == 1);
  REQUIRE(rep5.singular_affine_samples.size() == 1);
  CHECK(rep5.singular_affine_samples[0] == std::array<std::uint64_t, 2>{1, 1});
  CHECK(rep5.singular_at_infinity == 0);

  const SmoothnessReport rep45 = curve_smoothness_scan(4, 5, 1);
  CHECK(rep45.p_divides_d_plus_1);
  CHECK(rep45.singular_affine == 1);

  // Same singular point persists in the extension field F_25.
  const SmoothnessReport rep25 = curve_smoothness_scan(3, 5, 2);
  CHECK(rep25.singular_affine == 1);
  REQUIRE(rep25.singular_affine_samples.size() == 1);
  CHECK(rep25.singular_affine_samples[0] == std::array<std::uint64_t, 2>{1, 1});

  // Away from the characteristic cases the affine curve really is smooth.
  for (std::uint64_t p : {7, 11, 13})
    for (unsigned d = 2; d <= 4; ++d) CHECK(curve_smoothness_scan(d, p, 1).singular_affine == 0);
}

TEST_CASE("smoothness scan is worker-count independent") {
  const SmoothnessReport a = curve_smoothness_scan(3, 11, 1, 1);
  const SmoothnessReport b = curve_smoothness_scan(3, 11, 1, 4);
  CHECK(a.singular_affine == b.singular_affine);
  CHECK(a.gradient_zeros == b.gradient_zeros);
  CHECK(a.singular_at_infinity == b.singular_at_infinity);
  CHECK(a.gradient_zero_samples == b.gradient_zero_samples);
}
