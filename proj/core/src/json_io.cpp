#include "rsdh/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace rsdh::jsonio {

namespace {

std::uint64_t get_u64(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("json: missing key '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() && !v.is_number_integer())
    throw std::invalid_argument(std::string("json: key '") + key + "' must be an integer");
  if (v.is_number_integer() && v.get<std::int64_t>() < 0)
    throw std::invalid_argument(std::string("json: key '") + key + "' must be nonnegative");
  return v.get<std::uint64_t>();
}

std::vector<std::uint64_t> get_u64_array(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("json: expected an integer array");
  std::vector<std::uint64_t> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_unsigned() && !v.is_number_integer())
      throw std::invalid_argument("json: array entries must be integers");
    if (v.is_number_integer() && v.get<std::int64_t>() < 0)
      throw std::invalid_argument("json: array entries must be nonnegative");
    out.push_back(v.get<std::uint64_t>());
  }
  return out;
}

}  // namespace

json field_to_json(const Field& f) {
  json j{{"p", f.p()}, {"m", f.m()}};
  if (f.m() > 1) j["modulus"] = f.modulus();
  return j;
}

FieldPtr field_from_json(const json& j) {
  const std::uint64_t p = get_u64(j, "p");
  const auto m = static_cast<unsigned>(j.contains("m") ? get_u64(j, "m") : 1);
  std::vector<std::uint64_t> modulus;
  if (j.contains("modulus")) modulus = get_u64_array(j.at("modulus"));
  return Field::make(p, m, modulus);
}

json upoly_to_json(const UPoly& u) {
  return json{{"field", field_to_json(*u.field())}, {"coeffs", u.coeffs()}};
}

UPoly upoly_from_json(const json& j) {
  FieldPtr f = field_from_json(j.at("field"));
  return UPoly::from_coeffs(std::move(f), get_u64_array(j.at("coeffs")));
}

json mpoly_to_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json{{"exp", e}, {"coeff", c}});
  return json{{"field", field_to_json(*p.field())}, {"vars", p.nvars()}, {"terms", terms}};
}

MPoly mpoly_from_json(const json& j) {
  FieldPtr f = field_from_json(j.at("field"));
  const auto vars = static_cast<unsigned>(get_u64(j, "vars"));
  MPoly p = MPoly::zero(f, vars);
  if (!j.contains("terms") || !j.at("terms").is_array())
    throw std::invalid_argument("json: mpoly needs a 'terms' array");
  for (const auto& t : j.at("terms")) {
    const auto exps64 = get_u64_array(t.at("exp"));
    MPoly::Exps exps(exps64.begin(), exps64.end());
    p = p + MPoly::monomial(f, vars, std::move(exps), get_u64(t, "coeff"));
  }
  return p;
}

json code_to_json(const RSCode& c) {
  json j{{"field", field_to_json(*c.field())}, {"k", c.k()}};
  switch (c.flavor()) {
    case CodeFlavor::standard:
      j["eval_set"] = "star";
      break;
    case CodeFlavor::extended:
      j["eval_set"] = "full";
      break;
    default:
      j["eval_set"] = c.eval_set();
  }
  return j;
}

RSCodePtr code_from_json(const json& j) {
  FieldPtr f = field_from_json(j.at("field"));
  const auto k = static_cast<unsigned>(get_u64(j, "k"));
  const auto& ev = j.at("eval_set");
  if (ev.is_string()) {
    const auto s = ev.get<std::string>();
    if (s == "star") return RSCode::standard(f, k);
    if (s == "full") return RSCode::extended(f, k);
    throw std::invalid_argument("json: eval_set string must be 'star' or 'full'");
  }
  return RSCode::make(std::move(f), get_u64_array(ev), k);
}

json word_values(const ReceivedWord& w) { return json(w.values); }

json tail_to_json(const MonicTail& t, const Field& f) {
  return json{{"k", t.k}, {"d", t.d}, {"coeffs", t.lows}, {"field", field_to_json(f)}};
}

std::pair<MonicTail, FieldPtr> tail_from_json(const json& j) {
  FieldPtr f = field_from_json(j.at("field"));
  MonicTail t{static_cast<unsigned>(get_u64(j, "k")), static_cast<unsigned>(get_u64(j, "d")),
              get_u64_array(j.at("coeffs"))};
  return {std::move(t), std::move(f)};
}

json subset_instance_to_json(const SubsetSumInstance& inst) {
  return json{{"field", field_to_json(*inst.field)},
              {"set", inst.set},
              {"target", inst.target},
              {"size", inst.size}};
}

SubsetSumInstance subset_instance_from_json(const json& j) {
  return SubsetSumInstance{field_from_json(j.at("field")), get_u64_array(j.at("set")),
                           get_u64(j, "target"), static_cast<unsigned>(get_u64(j, "size"))};
}

json bigint_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

json bound_report_to_json(const BoundReport& r) {
  return json{{"q", r.q},
              {"k", r.k},
              {"d", r.d},
              {"variant", to_string(r.variant)},
              {"terms",
               {{"main", bigint_to_json(r.main_term)},
                {"weil", bigint_to_json(r.weil_term)},
                {"d_13_3", bigint_to_json(r.d133_term)},
                {"common_zero", bigint_to_json(r.common_zero_term)}}},
              {"margin", bigint_to_json(r.margin)},
              {"applies", r.applies}};
}

json verdict_to_json(const DeepHoleVerdict& v) {
  return json{{"deep_hole", v.is_deep_hole},
              {"distance", v.distance},
              {"max_agreement", v.max_agreement},
              {"witness", v.witness.coeffs()}};
}

json smoothness_report_to_json(const SmoothnessReport& r) {
  return json{{"d", r.d},
              {"p", r.p},
              {"e", r.e},
              {"q", r.q},
              {"points_scanned", r.points_scanned},
              {"singular_affine", r.singular_affine},
              {"singular_affine_samples", r.singular_affine_samples},
              {"gradient_zeros", r.gradient_zeros},
              {"gradient_zero_samples", r.gradient_zero_samples},
              {"singular_at_infinity", r.singular_at_infinity},
              {"p_divides_d_plus_1", r.p_divides_d_plus_1},
              {"p_divides_d_plus_2", r.p_divides_d_plus_2}};
}

json independence_report_to_json(const IndependenceReport& r) {
  return json{{"k", r.k},
              {"d", r.d},
              {"trials", r.trials},
              {"all_equal", r.all_equal},
              {"counterexamples", r.counterexamples}};
}

json equivalence_report_to_json(const EquivalenceReport& r) {
  return json{{"effective_target", r.effective_target},
              {"subset_exists", r.subset_exists},
              {"witness_subset", r.witness_subset},
              {"deep_hole", r.is_deep_hole},
              {"distance", r.distance},
              {"equivalence_holds", r.equivalence_holds}};
}

}  // namespace rsdh::jsonio
