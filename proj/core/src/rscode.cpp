#include "rsdh/rscode.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <unordered_set>

namespace rsdh {

namespace {

constexpr std::uint64_t kEnumBudget = 10'000'000;    // q^k for codeword enumeration
constexpr std::uint64_t kSubsetBudget = 10'000'000;  // C(n, k+1) for subset interpolation
constexpr std::uint64_t kCensusBudget = 10'000'000;  // q^n for the full census

// q^e, or nullopt as soon as the running product exceeds `limit`.
std::optional<std::uint64_t> pow_at_most(std::uint64_t q, unsigned e, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > limit / q) return std::nullopt;
    r *= q;
    if (r > limit) return std::nullopt;
  }
  return r;
}

// Horner evaluation of ascending coefficients at x, all in encodings.
std::uint64_t eval_coeffs(const Field& F, std::span<const std::uint64_t> coeffs,
                          std::uint64_t x) {
  std::uint64_t acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = F.add(F.mul(acc, x), coeffs[i]);
  return acc;
}

void decode_base_q(std::uint64_t enc, std::uint64_t q, std::span<std::uint64_t> digits) {
  for (auto& d : digits) {
    d = enc % q;
    enc /= q;
  }
}

// Candidate nearest codeword: higher agreement wins, then smaller message
// encoding. Workers enumerate encodings in increasing order, so a strict
// improvement test keeps the minimum encoding per agreement level.
struct Best {
  unsigned agreement = 0;
  std::uint64_t msg_enc = 0;
  bool valid = false;

  void offer(unsigned agr, std::uint64_t enc) {
    if (!valid || agr > agreement || (agr == agreement && enc < msg_enc)) {
      agreement = agr;
      msg_enc = enc;
      valid = true;
    }
  }
  void merge(const Best& other) {
    if (other.valid) offer(other.agreement, other.msg_enc);
  }
};

}  // namespace

const char* to_string(CodeFlavor f) {
  switch (f) {
    case CodeFlavor::standard:
      return "standard";
    case CodeFlavor::extended:
      return "extended";
    default:
      return "generalized";
  }
}

std::uint64_t ReceivedWord::encoding() const {
  const std::uint64_t q = code->field()->q();
  std::uint64_t enc = 0, place = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      if (place > std::numeric_limits<std::uint64_t>::max() / q)
        throw std::overflow_error("word encoding exceeds 64 bits");
      place *= q;
    }
    const std::uint64_t term = values[i] * place;
    if (values[i] != 0 && term / values[i] != place)
      throw std::overflow_error("word encoding exceeds 64 bits");
    if (enc > std::numeric_limits<std::uint64_t>::max() - term)
      throw std::overflow_error("word encoding exceeds 64 bits");
    enc += term;
  }
  return enc;
}

RSCode::RSCode(Key, FieldPtr field, std::vector<std::uint64_t> eval_set, unsigned k)
    : field_(std::move(field)), eval_set_(std::move(eval_set)), k_(k) {
  if (!field_) throw std::invalid_argument("rscode: null field");
  const std::uint64_t q = field_->q();
  const std::size_t n = eval_set_.size();
  if (n < 2) throw std::invalid_argument("rscode: evaluation set needs at least 2 points");
  if (n > q) throw std::invalid_argument("rscode: evaluation set larger than the field");
  std::unordered_set<std::uint64_t> seen;
  for (auto x : eval_set_) {
    if (x >= q) throw std::invalid_argument("rscode: evaluation point out of range");
    if (!seen.insert(x).second)
      throw std::invalid_argument("rscode: evaluation points must be distinct");
  }
  if (k_ < 1 || k_ >= n) throw std::invalid_argument("rscode: dimension must satisfy 1 <= k < n");

  flavor_ = CodeFlavor::generalized;
  if (n == q) {
    bool canonical = true;
    for (std::size_t i = 0; i < n; ++i) canonical &= (eval_set_[i] == i);
    if (canonical) flavor_ = CodeFlavor::extended;
  } else if (n == q - 1) {
    bool canonical = true;
    for (std::size_t i = 0; i < n; ++i) canonical &= (eval_set_[i] == i + 1);
    if (canonical) flavor_ = CodeFlavor::standard;
  }
}

RSCodePtr RSCode::make(FieldPtr field, std::vector<std::uint64_t> eval_set, unsigned k) {
  return std::make_shared<RSCode>(Key{}, std::move(field), std::move(eval_set), k);
}

RSCodePtr RSCode::standard(const FieldPtr& field, unsigned k) {
  std::vector<std::uint64_t> D(field->q() - 1);
  for (std::size_t i = 0; i < D.size(); ++i) D[i] = i + 1;
  return make(field, std::move(D), k);
}

RSCodePtr RSCode::extended(const FieldPtr& field, unsigned k) {
  std::vector<std::uint64_t> D(field->q());
  for (std::size_t i = 0; i < D.size(); ++i) D[i] = i;
  return make(field, std::move(D), k);
}

bool RSCode::same_as(const RSCode& other) const {
  if (this == &other) return true;
  return field_->same_as(*other.field_) && k_ == other.k_ && eval_set_ == other.eval_set_;
}

ReceivedWord RSCode::word(std::vector<std::uint64_t> values) const {
  if (values.size() != n()) throw std::invalid_argument("rscode: word length must equal n");
  for (auto v : values)
    if (v >= field_->q()) throw std::invalid_argument("rscode: word value out of range");
  return {shared_from_this(), std::move(values)};
}

ReceivedWord RSCode::encode(std::span<const std::uint64_t> message) const {
  if (message.size() != k_) throw std::invalid_argument("rscode: message length must equal k");
  std::vector<std::uint64_t> vals(n());
  for (std::size_t i = 0; i < vals.size(); ++i)
    vals[i] = eval_coeffs(*field_, message, eval_set_[i]);
  return word(std::move(vals));
}

ReceivedWord RSCode::word_from_poly(const UPoly& g) const {
  check_same_field(*field_, *g.field(), "rscode word_from_poly");
  if (!g.is_zero() && g.degree() >= static_cast<int>(n()))
    throw std::invalid_argument("rscode: generator degree must be < n");
  std::vector<std::uint64_t> vals(n());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = g.eval(eval_set_[i]);
  return word(std::move(vals));
}

UPoly RSCode::word_poly(const ReceivedWord& w) const {
  if (!w.code || !same_as(*w.code)) throw std::invalid_argument("rscode: word from another code");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pts(n());
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = {eval_set_[i], w.values[i]};
  return UPoly::interpolate(field_, pts);
}

namespace {

// Message encoding of a degree <= k-1 generator: sum of coeff_i * q^i.
std::uint64_t message_encoding(const UPoly& g, unsigned k, std::uint64_t q) {
  std::uint64_t enc = 0, place = 1;
  for (unsigned i = 0; i < k; ++i) {
    enc += g.coeff(i) * place;
    place *= q;
  }
  return enc;
}

UPoly poly_from_message_encoding(const FieldPtr& field, unsigned k, std::uint64_t enc) {
  std::vector<std::uint64_t> coeffs(k);
  decode_base_q(enc, field->q(), coeffs);
  return UPoly::from_coeffs(field, std::move(coeffs));
}

}  // namespace

DeepHoleVerdict RSCode::distance_to_code(const ReceivedWord& w, DistanceOracle oracle,
                                         unsigned jobs) const {
  if (!w.code || !same_as(*w.code)) throw std::invalid_argument("rscode: word from another code");
  if (jobs == 0) jobs = 1;
  const Field& F = *field_;
  const std::uint64_t q = F.q();
  const unsigned nn = n();

  const auto agreement_of = [&](std::span<const std::uint64_t> coeffs) {
    unsigned agr = 0;
    for (unsigned i = 0; i < nn; ++i)
      if (eval_coeffs(F, coeffs, eval_set_[i]) == w.values[i]) ++agr;
    return agr;
  };

  Best best;

  if (oracle == DistanceOracle::codeword_enumeration) {
    const auto total = pow_at_most(q, k_, kEnumBudget);
    if (!total) throw BudgetExceeded("codeword enumeration budget q^k <= 10^7 exceeded");
    std::vector<Best> partial(jobs);
    run_partitioned(*total, jobs, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
      std::vector<std::uint64_t> coeffs(k_);
      for (std::uint64_t enc = begin; enc < end; ++enc) {
        decode_base_q(enc, q, coeffs);
        partial[worker].offer(agreement_of(coeffs), enc);
      }
    });
    for (const auto& b : partial) best.merge(b);
  } else {
    if (binomial_u64(nn, k_ + 1) > kSubsetBudget)
      throw BudgetExceeded("subset interpolation budget C(n, k+1) <= 10^7 exceeded");
    const UPoly g = word_poly(w);
    if (g.degree() <= static_cast<int>(k_) - 1)
      return {false, 0, nn, g};  // codeword: nearest codeword is itself

    // Any codeword agreeing with w on >= k+1 positions is the interpolant of
    // each (k+1)-subset of its agreement set, so this scan is exhaustive for
    // max agreement >= k+1. Workers own contiguous ranges of the subset's
    // smallest index (lexicographic blocks).
    std::vector<Best> partial(jobs);
    run_partitioned(nn - k_, jobs, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
      std::vector<std::size_t> c(k_ + 1);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = begin + i;
      std::vector<std::pair<std::uint64_t, std::uint64_t>> pts(k_ + 1);
      if (begin >= end) return;
      do {
        if (c[0] >= end) break;
        for (std::size_t i = 0; i < c.size(); ++i)
          pts[i] = {eval_set_[c[i]], w.values[c[i]]};
        const UPoly h = UPoly::interpolate(field_, pts);
        if (h.degree() <= static_cast<int>(k_) - 1) {
          std::vector<std::uint64_t> coeffs(k_);
          for (unsigned i = 0; i < k_; ++i) coeffs[i] = h.coeff(i);
          partial[worker].offer(agreement_of(coeffs), message_encoding(h, k_, q));
        }
      } while (next_combination(c, nn));
    });
    for (const auto& b : partial) best.merge(b);

    if (!best.valid) {
      // Non-codeword with no agreement above k: max agreement is exactly k
      // (any k positions interpolate within degree k-1). Every codeword with
      // agreement k is the interpolant of its own agreement set, so the
      // k-subset scan recovers the same minimal witness the enumeration
      // oracle would.
      if (binomial_u64(nn, k_) > kSubsetBudget)
        throw BudgetExceeded("subset interpolation budget C(n, k) <= 10^7 exceeded");
      std::vector<Best> kpart(jobs);
      run_partitioned(nn - k_ + 1, jobs,
                      [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
                        std::vector<std::size_t> c(k_);
                        for (std::size_t i = 0; i < c.size(); ++i) c[i] = begin + i;
                        std::vector<std::pair<std::uint64_t, std::uint64_t>> pts(k_);
                        if (begin >= end) return;
                        do {
                          if (c[0] >= end) break;
                          for (std::size_t i = 0; i < c.size(); ++i)
                            pts[i] = {eval_set_[c[i]], w.values[c[i]]};
                          const UPoly h = UPoly::interpolate(field_, pts);
                          kpart[worker].offer(k_, message_encoding(h, k_, q));
                        } while (next_combination(c, nn));
                      });
      for (const auto& b : kpart) best.merge(b);
    }
  }

  const unsigned dist = nn - best.agreement;
  return {dist == covering_radius(), dist, best.agreement,
          poly_from_message_encoding(field_, k_, best.msg_enc)};
}

CensusResult RSCode::enumerate_deep_holes(
    std::size_t sample_limit, unsigned jobs,
    const std::function<void(std::uint64_t, unsigned, bool)>& per_word) const {
  if (jobs == 0) jobs = 1;
  const Field& F = *field_;
  const std::uint64_t q = F.q();
  const unsigned nn = n();
  const auto total = pow_at_most(q, nn, kCensusBudget);
  if (!total) throw BudgetExceeded("census budget q^n <= 10^7 exceeded");
  const std::uint64_t num_msgs = checked_pow_u64(q, k_);
  const std::uint64_t num_tails = *total / num_msgs;

  // Words are walked as interpolant = low (degree < k) + tail (degrees
  // k..n-1). Adding a codeword does not change the distance, so one verdict
  // per tail covers its whole coset; the per-word table then reports every
  // word in encoding order.
  std::vector<std::uint8_t> dist(*total);
  std::vector<std::uint64_t> deep_per_worker(jobs, 0);

  run_partitioned(num_tails, jobs, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> coeffs(nn);  // ascending, low digits first
    std::vector<std::uint64_t> tail_vals(nn);
    std::vector<std::uint64_t> msg(k_);
    for (std::uint64_t t = begin; t < end; ++t) {
      decode_base_q(t, q, std::span(coeffs).subspan(k_));
      std::fill(coeffs.begin(), coeffs.begin() + k_, 0);
      for (unsigned i = 0; i < nn; ++i) tail_vals[i] = eval_coeffs(F, coeffs, eval_set_[i]);

      // Exact distance of the coset representative by full codeword scan.
      unsigned max_agr = 0;
      for (std::uint64_t l = 0; l < num_msgs; ++l) {
        decode_base_q(l, q, msg);
        unsigned agr = 0;
        for (unsigned i = 0; i < nn; ++i)
          if (eval_coeffs(F, msg, eval_set_[i]) == tail_vals[i]) ++agr;
        max_agr = std::max(max_agr, agr);
      }
      const auto d = static_cast<std::uint8_t>(nn - max_agr);
      if (d == covering_radius()) deep_per_worker[worker] += num_msgs;

      // Every word of the coset: tail values plus each codeword.
      for (std::uint64_t l = 0; l < num_msgs; ++l) {
        decode_base_q(l, q, msg);
        std::uint64_t enc = 0, place = 1;
        for (unsigned i = 0; i < nn; ++i) {
          const std::uint64_t y = F.add(tail_vals[i], eval_coeffs(F, msg, eval_set_[i]));
          enc += y * place;
          place *= q;
        }
        dist[enc] = d;
      }
    }
  });

  CensusResult res;
  res.total_words = *total;
  for (auto d : deep_per_worker) res.deep_holes += d;

  std::vector<std::uint64_t> vals(nn);
  for (std::uint64_t enc = 0; enc < *total; ++enc) {
    const bool deep = dist[enc] == covering_radius();
    if (deep && res.sample.size() < sample_limit) {
      decode_base_q(enc, q, vals);
      res.sample.push_back(word(vals));
    }
    if (per_word) per_word(enc, dist[enc], deep);
  }
  return res;
}

}  // namespace rsdh
