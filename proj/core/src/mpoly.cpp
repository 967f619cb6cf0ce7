#include "rsdh/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rsdh {

const char* to_string(PointConstraint c) {
  switch (c) {
    case PointConstraint::distinct_only:
      return "distinct_only";
    case PointConstraint::nonzero_distinct:
      return "nonzero_distinct";
    default:
      return "none";
  }
}

MPoly::MPoly(FieldPtr field, unsigned nvars) : field_(std::move(field)), nvars_(nvars) {
  if (nvars_ == 0) throw std::invalid_argument("mpoly: variable count must be >= 1");
}

void MPoly::check_var(unsigned i) const {
  if (i == 0) throw std::invalid_argument("mpoly: variable index 0 is reserved; indices are 1-based");
  if (i > nvars_)
    throw std::invalid_argument("mpoly: variable index " + std::to_string(i) + " exceeds count " +
                                std::to_string(nvars_));
}

void MPoly::add_term(Exps exps, std::uint64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
  if (!inserted) {
    it->second = field_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::constant(FieldPtr field, unsigned nvars, std::uint64_t c) {
  MPoly r(std::move(field), nvars);
  if (c >= r.field_->q()) throw std::invalid_argument("mpoly: coefficient out of range");
  r.add_term(Exps(nvars, 0), c);
  return r;
}

MPoly MPoly::variable(FieldPtr field, unsigned nvars, unsigned i) {
  MPoly r(std::move(field), nvars);
  r.check_var(i);
  Exps e(nvars, 0);
  e[i - 1] = 1;
  r.add_term(std::move(e), 1);
  return r;
}

MPoly MPoly::monomial(FieldPtr field, unsigned nvars, Exps exps, std::uint64_t c) {
  MPoly r(std::move(field), nvars);
  if (exps.size() != nvars) throw std::invalid_argument("mpoly: exponent vector length mismatch");
  if (c >= r.field_->q()) throw std::invalid_argument("mpoly: coefficient out of range");
  r.add_term(std::move(exps), c);
  return r;
}

MPoly MPoly::elementary_symmetric(FieldPtr field, unsigned nvars, unsigned i) {
  MPoly r(std::move(field), nvars);
  if (i > nvars)
    throw std::invalid_argument("mpoly: elementary symmetric index exceeds variable count");
  if (i == 0) return constant(r.field_, nvars, 1);
  // Enumerate all i-subsets of {1..v}.
  std::vector<std::size_t> idx(i);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    Exps e(nvars, 0);
    for (auto j : idx) e[j] = 1;
    r.add_term(std::move(e), 1);
  } while (next_combination(idx, nvars));
  return r;
}

MPoly MPoly::complete_homogeneous(FieldPtr field, unsigned nvars, unsigned d) {
  MPoly r(std::move(field), nvars);
  // Walk all exponent vectors with sum exactly d.
  Exps e(nvars, 0);
  while (true) {
    const unsigned long long s = std::accumulate(e.begin(), e.end(), 0ull);
    if (s == d) r.add_term(e, 1);
    // Odometer over {0..d}^v.
    std::size_t pos = 0;
    while (pos < nvars && e[pos] == d) e[pos++] = 0;
    if (pos == nvars) break;
    ++e[pos];
  }
  return r;
}

int MPoly::total_degree() const noexcept {
  if (terms_.empty()) return kZeroDegree;
  // Map ordered by graded lex: last key has the maximal total degree.
  const auto& e = terms_.rbegin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), 0ull));
}

std::uint64_t MPoly::coeff(const Exps& exps) const {
  if (exps.size() != nvars_) throw std::invalid_argument("mpoly: exponent vector length mismatch");
  const auto it = terms_.find(exps);
  return it == terms_.end() ? 0 : it->second;
}

MPoly MPoly::operator-() const {
  MPoly r(field_, nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, field_->neg(c));
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  check_same_field(*a.field_, *b.field_, "mpoly add");
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("mpoly: variable count mismatch");
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  check_same_field(*a.field_, *b.field_, "mpoly mul");
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("mpoly: variable count mismatch");
  MPoly r(a.field_, a.nvars_);
  const Field& F = *a.field_;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exps e(a.nvars_);
      for (unsigned i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(std::move(e), F.mul(ca, cb));
    }
  }
  return r;
}

MPoly MPoly::scaled(std::uint64_t c) const {
  if (c >= field_->q()) throw std::invalid_argument("mpoly: scalar out of range");
  MPoly r(field_, nvars_);
  if (c == 0) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e, field_->mul(x, c));
  return r;
}

MPoly MPoly::homogeneous_component(unsigned d) const {
  MPoly r(field_, nvars_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0ull) == d) r.terms_.emplace(e, c);
  return r;
}

MPoly MPoly::substitute(const std::map<unsigned, std::uint64_t>& values) const {
  for (const auto& [i, v] : values) {
    check_var(i);
    if (v >= field_->q()) throw std::invalid_argument("mpoly: substituted value out of range");
  }
  MPoly r(field_, nvars_);
  const Field& F = *field_;
  for (const auto& [e, c] : terms_) {
    Exps ne = e;
    std::uint64_t factor = c;
    for (const auto& [i, v] : values) {
      const unsigned exp = ne[i - 1];
      if (exp > 0) {
        factor = F.mul(factor, F.pow(v, exp));
        ne[i - 1] = 0;
      }
      if (factor == 0) break;
    }
    r.add_term(std::move(ne), factor);
  }
  return r;
}

std::uint64_t MPoly::eval(std::span<const std::uint64_t> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("mpoly: evaluation point length mismatch");
  const Field& F = *field_;
  std::uint64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t t = c;
    for (unsigned i = 0; i < nvars_ && t != 0; ++i)
      if (e[i] > 0) t = F.mul(t, F.pow(point[i], e[i]));
    acc = F.add(acc, t);
  }
  return acc;
}

MPoly MPoly::permute_vars(std::span<const unsigned> perm) const {
  if (perm.size() != nvars_) throw std::invalid_argument("mpoly: permutation length mismatch");
  std::vector<bool> seen(nvars_, false);
  for (auto p : perm) {
    if (p == 0 || p > nvars_ || seen[p - 1])
      throw std::invalid_argument("mpoly: not a permutation of 1..v");
    seen[p - 1] = true;
  }
  MPoly r(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    Exps ne(nvars_, 0);
    for (unsigned i = 0; i < nvars_; ++i) ne[perm[i] - 1] = e[i];
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

MPoly MPoly::derivative(unsigned i) const {
  check_var(i);
  MPoly r(field_, nvars_);
  const Field& F = *field_;
  for (const auto& [e, c] : terms_) {
    const unsigned exp = e[i - 1];
    if (exp == 0) continue;
    const std::uint64_t factor = F.mul(c, F.from_int(static_cast<std::int64_t>(exp)));
    if (factor == 0) continue;
    Exps ne = e;
    --ne[i - 1];
    r.add_term(std::move(ne), factor);
  }
  return r;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest-degree terms first for readability.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    const bool is_const = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
    bool wrote = false;
    if (is_const || c != 1) {
      os << c;
      wrote = true;
    }
    for (unsigned i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace rsdh
