#include "rsdh/surface.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsdh {

namespace {

constexpr std::size_t kTermBudget = 1'000'000;        // symbolic-division coefficients
constexpr std::uint64_t kScanBudget = 100'000'000;    // q^vars point scans

void check_terms(const MPoly& p) {
  if (p.num_terms() > kTermBudget)
    throw BudgetExceeded("symbolic division intermediate exceeds 10^6 terms");
}

std::optional<std::uint64_t> pow_at_most(std::uint64_t q, unsigned e, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > limit / q) return std::nullopt;
    r *= q;
    if (r > limit) return std::nullopt;
  }
  return r;
}

}  // namespace

UPoly MonicTail::to_poly(const FieldPtr& field) const {
  if (lows.size() != d) throw std::invalid_argument("monic tail: coefficient list must have length d");
  std::vector<std::uint64_t> coeffs(k + d + 1, 0);
  for (unsigned i = 0; i < d; ++i) coeffs[k + i] = lows[i];
  coeffs[k + d] = 1;
  return UPoly::from_coeffs(field, std::move(coeffs));
}

HypersurfaceInstance compute_L(const MonicTail& f, const FieldPtr& field) {
  if (f.k < 1 || f.d < 1) throw std::invalid_argument("compute_L: requires k >= 1 and d >= 1");
  if (f.lows.size() != f.d)
    throw std::invalid_argument("compute_L: coefficient list must have length d");
  for (auto c : f.lows)
    if (c >= field->q()) throw std::invalid_argument("compute_L: coefficient out of range");

  const unsigned vars = f.k + 1;

  // Pi = x^{k+1} + pi_1 x^k + ... + pi_{k+1}, pi_i = (-1)^i e_i. pi_coeff[j]
  // is the coefficient of x^j, j = 0..k (the leading 1 is handled implicitly
  // by the monic division below).
  std::vector<MPoly> pi_coeff;
  pi_coeff.reserve(vars);
  for (unsigned j = 0; j < vars; ++j) {
    const unsigned i = vars - j;  // pi_i multiplies x^{k+1-i}
    MPoly e = MPoly::elementary_symmetric(field, vars, i);
    pi_coeff.push_back(i % 2 == 1 ? -e : std::move(e));
  }

  // f with coefficients lifted into F[x_1..x_{k+1}].
  std::vector<MPoly> rem(f.k + f.d + 1, MPoly::zero(field, vars));
  for (unsigned i = 0; i < f.d; ++i) rem[f.k + i] = MPoly::constant(field, vars, f.lows[i]);
  rem[f.k + f.d] = MPoly::constant(field, vars, 1);

  // Long division by the monic Pi: cancel the x^deg coefficient against
  // x^{deg-(k+1)} * Pi.
  for (unsigned deg = f.k + f.d; deg >= vars; --deg) {
    MPoly c = std::move(rem[deg]);
    if (c.is_zero()) continue;
    const unsigned shift = deg - vars;
    for (unsigned j = 0; j < vars; ++j) {
      rem[shift + j] = rem[shift + j] - c * pi_coeff[j];
      check_terms(rem[shift + j]);
    }
    rem[deg] = MPoly::zero(field, vars);
  }

  HypersurfaceInstance H{f.k, f.d, field, std::move(rem[f.k]), MPoly::zero(field, vars)};
  H.top_form = H.L.homogeneous_component(f.d);
  if (H.L.total_degree() != static_cast<int>(f.d))
    throw std::logic_error("compute_L: leading coefficient degree != d");
  return H;
}

IndependenceReport verify_top_form_independence(unsigned k, unsigned d, unsigned trials,
                                                const FieldPtr& field, Rng& rng) {
  const MPoly base = compute_L(MonicTail{k, d, std::vector<std::uint64_t>(d, 0)}, field).top_form;
  IndependenceReport rep{k, d, trials, true, {}};
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<std::uint64_t> lows(d);
    for (auto& c : lows) c = uniform_u64(rng, field->q());
    const MPoly top = compute_L(MonicTail{k, d, lows}, field).top_form;
    if (!(top == base)) {
      rep.all_equal = false;
      rep.counterexamples.push_back(lows);
    }
  }
  return rep;
}

MPoly chi_specialized(unsigned d, const FieldPtr& field) {
  if (d < 1) throw std::invalid_argument("chi: requires d >= 1");
  MPoly r = MPoly::zero(field, 2);
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned j = 0; i + j <= d; ++j)
      r = r + MPoly::monomial(field, 2, {i, j}, 1);
  return r;
}

bool chi_companion_check(unsigned k, unsigned d, const FieldPtr& field) {
  if (k < 2) throw std::invalid_argument("chi companion check: requires k >= 2");
  const HypersurfaceInstance H =
      compute_L(MonicTail{k, d, std::vector<std::uint64_t>(d, 0)}, field);
  std::map<unsigned, std::uint64_t> assignment;
  assignment[3] = 1;
  for (unsigned v = 4; v <= k + 1; ++v) assignment[v] = 0;
  const MPoly specialized = H.top_form.substitute(assignment);

  MPoly expected = MPoly::zero(field, k + 1);
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned j = 0; i + j <= d; ++j) {
      MPoly::Exps e(k + 1, 0);
      e[0] = i;
      e[1] = j;
      expected = expected + MPoly::monomial(field, k + 1, std::move(e), 1);
    }
  return specialized == expected;
}

namespace {

// Depth-first scan in ascending coordinate order. P_partial has variables
// 1..depth already substituted; because values are tried in increasing order
// the first full assignment found is the lexicographic minimum of the block.
bool dfs_point(const MPoly& P, PointConstraint constraint, unsigned depth,
               std::vector<std::uint64_t>& point, std::vector<bool>& used) {
  const unsigned vars = P.nvars();
  if (depth == vars) return P.is_zero();
  const std::uint64_t q = P.field()->q();
  const std::uint64_t lo = constraint == PointConstraint::nonzero_distinct ? 1 : 0;
  for (std::uint64_t v = lo; v < q; ++v) {
    if (constraint != PointConstraint::none && used[v]) continue;
    point[depth] = v;
    used[v] = true;
    const MPoly next = P.substitute({{depth + 1, v}});
    if (dfs_point(next, constraint, depth + 1, point, used)) return true;
    used[v] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::uint64_t>> find_distinct_point(const MPoly& P,
                                                              PointConstraint constraint,
                                                              unsigned jobs) {
  if (constraint == PointConstraint::none)
    throw std::invalid_argument("point search requires a distinctness constraint");
  if (jobs == 0) jobs = 1;
  const unsigned vars = P.nvars();
  const std::uint64_t q = P.field()->q();
  if (!pow_at_most(q, vars, kScanBudget))
    throw BudgetExceeded("point search budget q^vars <= 10^8 exceeded");
  const std::uint64_t needed = vars + (constraint == PointConstraint::nonzero_distinct ? 1 : 0);
  if (needed > q) return std::nullopt;  // not enough distinct values exist

  // Workers own contiguous ranges of x_1; each returns its block's
  // lexicographic minimum, and the block layout makes the global minimum the
  // smallest of those.
  std::vector<std::optional<std::vector<std::uint64_t>>> found(jobs);
  run_partitioned(q, jobs, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> point(vars);
    std::vector<bool> used(q, false);
    const std::uint64_t lo = constraint == PointConstraint::nonzero_distinct
                                 ? std::max<std::uint64_t>(begin, 1)
                                 : begin;
    for (std::uint64_t v = lo; v < end; ++v) {
      point[0] = v;
      used[v] = true;
      const MPoly next = P.substitute({{1, v}});
      if (dfs_point(next, constraint, 1, point, used)) {
        found[worker] = point;
        return;
      }
      used[v] = false;
    }
  });

  std::optional<std::vector<std::uint64_t>> best;
  for (const auto& f : found)
    if (f && (!best || *f < *best)) best = f;
  return best;
}

std::optional<std::vector<std::uint64_t>> find_distinct_point_randomized(
    const MPoly& P, PointConstraint constraint, Rng& rng, std::uint64_t max_trials) {
  if (constraint == PointConstraint::none)
    throw std::invalid_argument("point search requires a distinctness constraint");
  const unsigned vars = P.nvars();
  const Field& F = *P.field();
  const std::uint64_t q = F.q();
  const std::uint64_t lo = constraint == PointConstraint::nonzero_distinct ? 1 : 0;
  if (vars > q - lo) return std::nullopt;

  // Pool of admissible values; a partial Fisher-Yates shuffle draws a
  // distinct tuple per trial.
  std::vector<std::uint64_t> pool;
  for (std::uint64_t v = lo; v < q; ++v) pool.push_back(v);

  std::vector<std::uint64_t> point(vars);
  for (std::uint64_t trial = 0; trial < max_trials; ++trial) {
    for (unsigned i = 0; i < vars; ++i) {
      const std::uint64_t j = i + uniform_u64(rng, pool.size() - i);
      std::swap(pool[i], pool[j]);
      point[i] = pool[i];
    }
    if (P.eval(point) != 0) continue;
    // Re-verify the candidate before returning it: constraint and zero.
    std::vector<std::uint64_t> sorted = point;
    std::sort(sorted.begin(), sorted.end());
    const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    const bool nonzero = constraint != PointConstraint::nonzero_distinct ||
                         std::all_of(point.begin(), point.end(), [](auto v) { return v != 0; });
    if (distinct && nonzero && P.eval(point) == 0) return point;
  }
  return std::nullopt;
}

WitnessResult witness_from_point(const MonicTail& f, std::span<const std::uint64_t> point,
                                 const RSCode& code, const UPoly& t) {
  const FieldPtr& field = code.field();
  check_same_field(*field, *t.field(), "witness_from_point");
  if (code.k() != f.k) throw std::invalid_argument("witness: code dimension must equal the tail's k");
  if (point.size() != f.k + 1)
    throw std::invalid_argument("witness: point must have k+1 coordinates");
  if (!t.is_zero() && t.degree() > static_cast<int>(f.k) - 1)
    throw std::invalid_argument("witness: t must have degree <= k-1");

  for (std::size_t i = 0; i < point.size(); ++i)
    for (std::size_t j = i + 1; j < point.size(); ++j)
      if (point[i] == point[j]) throw std::invalid_argument("witness: repeated coordinates");
  const auto& D = code.eval_set();
  for (auto x : point)
    if (std::find(D.begin(), D.end(), x) == D.end())
      throw std::invalid_argument("witness: coordinate outside the evaluation set");

  const UPoly fx = f.to_poly(field);
  UPoly pi = UPoly::constant(field, 1);
  for (auto x : point) pi = pi * UPoly::from_coeffs(field, {field->neg(x), 1});

  const UPoly R = UPoly::divmod(fx, pi).second;
  if (R.degree() == static_cast<int>(f.k))
    throw std::domain_error(
        "witness: remainder has degree k — the point does not lie on the hypersurface");

  const UPoly g = t + R;
  const ReceivedWord w = code.word_from_poly(fx + t);
  const ReceivedWord cw = code.word_from_poly(g);
  unsigned dist = 0;
  for (unsigned i = 0; i < code.n(); ++i)
    if (w.values[i] != cw.values[i]) ++dist;
  return {g, dist};
}

SmoothnessReport curve_smoothness_scan(unsigned d, std::uint64_t p, unsigned e, unsigned jobs) {
  if (d < 1) throw std::invalid_argument("smoothness scan: requires d >= 1");
  if (e < 1) throw std::invalid_argument("smoothness scan: requires e >= 1");
  if (jobs == 0) jobs = 1;
  const FieldPtr field =
      e == 1 ? Field::prime_field(p) : Field::make(p, e, Field::find_irreducible_modulus(p, e));
  const std::uint64_t q = field->q();
  if (!pow_at_most(q, 2, kScanBudget))
    throw BudgetExceeded("smoothness scan budget p^{2e} <= 10^8 exceeded");

  MPoly f = MPoly::zero(field, 2);
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned j = 0; i + j <= d; ++j) f = f + MPoly::monomial(field, 2, {i, j}, 1);
  const MPoly fx = f.derivative(1);
  const MPoly fy = f.derivative(2);

  constexpr std::size_t kSampleLimit = 8;
  struct Partial {
    std::uint64_t singular = 0, gradient = 0;
    std::vector<std::array<std::uint64_t, 2>> singular_samples, gradient_samples;
  };
  std::vector<Partial> parts(jobs);

  run_partitioned(q, jobs, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
    Partial& pr = parts[worker];
    for (std::uint64_t x = begin; x < end; ++x) {
      // Specialize x once; the remaining scans are univariate in y.
      const MPoly fx_x = fx.substitute({{1, x}});
      const MPoly fy_x = fy.substitute({{1, x}});
      const MPoly f_x = f.substitute({{1, x}});
      for (std::uint64_t y = 0; y < q; ++y) {
        const std::array<std::uint64_t, 2> pt{x, y};
        const std::uint64_t point[2] = {x, y};
        if (fx_x.eval(point) != 0 || fy_x.eval(point) != 0) continue;
        ++pr.gradient;
        if (pr.gradient_samples.size() < kSampleLimit) pr.gradient_samples.push_back(pt);
        if (f_x.eval(point) == 0) {
          ++pr.singular;
          if (pr.singular_samples.size() < kSampleLimit) pr.singular_samples.push_back(pt);
        }
      }
    }
  });

  SmoothnessReport rep{};
  rep.d = d;
  rep.p = p;
  rep.e = e;
  rep.q = q;
  rep.points_scanned = q * q;
  for (auto& pr : parts) {
    rep.singular_affine += pr.singular;
    rep.gradient_zeros += pr.gradient;
    for (auto& s : pr.singular_samples)
      if (rep.singular_affine_samples.size() < kSampleLimit)
        rep.singular_affine_samples.push_back(s);
    for (auto& s : pr.gradient_samples)
      if (rep.gradient_zero_samples.size() < kSampleLimit) rep.gradient_zero_samples.push_back(s);
  }

  // Points at infinity (x:y:0): the curve's projective closure is singular
  // there only if the degree-d and degree-(d-1) parts vanish together.
  const MPoly top = f.homogeneous_component(d);
  const MPoly sub = f.homogeneous_component(d - 1);
  const auto check_infinity = [&](std::uint64_t x, std::uint64_t y) {
    const std::uint64_t point[2] = {x, y};
    if (top.eval(point) == 0 && sub.eval(point) == 0) ++rep.singular_at_infinity;
  };
  for (std::uint64_t t = 0; t < q; ++t) check_infinity(1, t);
  check_infinity(0, 1);

  rep.p_divides_d_plus_1 = (d + 1) % p == 0;
  rep.p_divides_d_plus_2 = (d + 2) % p == 0;
  return rep;
}

}  // namespace rsdh
