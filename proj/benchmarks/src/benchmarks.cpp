#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "rsdh/bounds.hpp"
#include "rsdh/rscode.hpp"
#include "rsdh/surface.hpp"

using namespace rsdh;

namespace {

void BM_field_mul(benchmark::State& state) {
  const auto f = state.range(0) == 256 ? Field::make(2, 8, Field::find_irreducible_modulus(2, 8))
                                       : Field::prime_field(state.range(0));
  const std::uint64_t q = f->q();
  std::uint64_t a = 1, b = q - 1;
  for (auto _ : state) {
    a = f->mul(a, b);
    b = f->add(b, 1);
    if (b == 0) b = 1;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_field_mul)->Arg(101)->Arg(65521)->Arg(256);

void BM_field_inv(benchmark::State& state) {
  const auto f = Field::prime_field(65521);
  std::uint64_t a = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f->inv(a));
    a = a % 65520 + 1;
  }
}
BENCHMARK(BM_field_inv);

void BM_distance_enumeration(benchmark::State& state) {
  const auto f = Field::prime_field(state.range(0));
  const auto code = RSCode::standard(f, static_cast<unsigned>(state.range(1)));
  std::vector<std::uint64_t> values(code->n());
  for (unsigned i = 0; i < code->n(); ++i) values[i] = (i * i + 1) % f->q();
  const ReceivedWord w = code->word(values);
  for (auto _ : state) {
    const auto v = code->distance_to_code(w, DistanceOracle::codeword_enumeration);
    benchmark::DoNotOptimize(v.distance);
  }
}
BENCHMARK(BM_distance_enumeration)->Args({7, 2})->Args({11, 3})->Args({13, 4});

void BM_distance_subset(benchmark::State& state) {
  const auto f = Field::prime_field(state.range(0));
  const auto code = RSCode::standard(f, static_cast<unsigned>(state.range(1)));
  std::vector<std::uint64_t> values(code->n());
  for (unsigned i = 0; i < code->n(); ++i) values[i] = (i * i + 1) % f->q();
  const ReceivedWord w = code->word(values);
  for (auto _ : state) {
    const auto v = code->distance_to_code(w, DistanceOracle::subset_interpolation);
    benchmark::DoNotOptimize(v.distance);
  }
}
BENCHMARK(BM_distance_subset)->Args({7, 2})->Args({11, 3})->Args({13, 4});

void BM_census(benchmark::State& state) {
  const auto code = RSCode::standard(Field::prime_field(5), 2);
  for (auto _ : state) {
    const CensusResult r = code->enumerate_deep_holes(1);
    benchmark::DoNotOptimize(r.deep_holes);
  }
}
BENCHMARK(BM_census);

void BM_compute_L(benchmark::State& state) {
  const auto f = Field::prime_field(101);
  const unsigned k = static_cast<unsigned>(state.range(0));
  const unsigned d = static_cast<unsigned>(state.range(1));
  const MonicTail tail{k, d, std::vector<std::uint64_t>(d, 3)};
  for (auto _ : state) {
    const auto H = compute_L(tail, f);
    benchmark::DoNotOptimize(H.L.num_terms());
  }
}
BENCHMARK(BM_compute_L)->Args({2, 2})->Args({3, 3})->Args({4, 4})->Args({5, 6});

void BM_find_point(benchmark::State& state) {
  const auto f = Field::prime_field(static_cast<std::uint64_t>(state.range(0)));
  const auto H = compute_L(MonicTail{2, 2, {3, 1}}, f);
  for (auto _ : state) {
    const auto pt = find_distinct_point(H.L, PointConstraint::nonzero_distinct);
    benchmark::DoNotOptimize(pt);
  }
}
BENCHMARK(BM_find_point)->Arg(11)->Arg(101)->Arg(251);

void BM_exact_point_count(benchmark::State& state) {
  const auto f = Field::prime_field(static_cast<std::uint64_t>(state.range(0)));
  MPoly curve = MPoly::zero(f, 2);
  for (unsigned i = 0; i <= 2; ++i)
    for (unsigned j = 0; i + j <= 2; ++j) curve = curve + MPoly::monomial(f, 2, {i, j}, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_point_count(curve, PointConstraint::none));
  }
}
BENCHMARK(BM_exact_point_count)->Arg(103)->Arg(251);

}  // namespace

BENCHMARK_MAIN();
