// rsdh: deep holes of Reed-Solomon codes — exact decision oracles, the
// leading-coefficient hypersurface pipeline, point-count bounds, and the
// subset-sum reduction, with JSON payloads for scripting.
//
// Exit codes: 0 = success / positive answer, 1 = mathematically negative
// answer (not a deep hole, no point, equivalence fails, bound does not
// apply, singular point found), 2 = invalid input, 3 = work budget exceeded.
// JSON goes to stdout only for exits 0 and 1; diagnostics go to stderr.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rsdh/bounds.hpp"
#include "rsdh/json_io.hpp"
#include "rsdh/reduction.hpp"
#include "rsdh/rscode.hpp"
#include "rsdh/surface.hpp"

namespace {

using nlohmann::json;
using namespace rsdh;
namespace jio = rsdh::jsonio;

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open JSON file: " + path);
  json j;
  in >> j;
  return j;
}

// Field selection shared by most subcommands: --field takes the order q
// (prime power); a non-prime q picks the lexicographically least irreducible
// modulus unless --modulus spells one out.
struct FieldOpts {
  std::uint64_t q = 0;
  std::vector<std::uint64_t> modulus;

  void attach(CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--field", q, "Field order q (a prime power)");
    if (required) opt->required();
    cmd->add_option("--modulus", modulus,
                    "Extension modulus coefficients c0,...,cm (ascending, monic)")
        ->delimiter(',');
  }

  FieldPtr make() const {
    const auto [p, m] = prime_power_decompose(q);
    if (p == 0) throw std::invalid_argument("--field must be a prime power");
    if (m == 1) {
      if (!modulus.empty())
        throw std::invalid_argument("--modulus is only meaningful for extension fields");
      return Field::prime_field(p);
    }
    return Field::make(p, m, modulus.empty() ? Field::find_irreducible_modulus(p, m) : modulus);
  }
};

int run_field(const FieldOpts& fopts, bool list_elements) {
  const FieldPtr f = fopts.make();
  json payload{{"field", jio::field_to_json(*f)}, {"q", f->q()}, {"flavor_note", nullptr}};
  payload.erase("flavor_note");
  if (list_elements) {
    json els = json::array();
    for (const auto& e : f->elements())
      els.push_back(json{{"enc", e.enc()}, {"repr", e.to_string()}});
    payload["elements"] = els;
  }
  emit(payload);
  return kExitPositive;
}

int run_poly(const FieldOpts& fopts, const std::string& poly_text, const std::string& divisor_text,
             std::optional<std::uint64_t> eval_at) {
  const FieldPtr f = fopts.make();
  const UPoly u = parse_upoly(f, poly_text);
  json payload{{"poly", jio::upoly_to_json(u)},
               {"degree", u.is_zero() ? json(nullptr) : json(u.degree())},
               {"text", u.to_string()}};
  if (eval_at) {
    if (*eval_at >= f->q()) throw std::invalid_argument("--eval value out of range");
    payload["eval"] = json{{"at", *eval_at}, {"value", u.eval(*eval_at)}};
  }
  if (!divisor_text.empty()) {
    const UPoly b = parse_upoly(f, divisor_text);
    const auto [quo, rem] = UPoly::divmod(u, b);
    payload["divmod"] = json{{"divisor", jio::upoly_to_json(b)},
                             {"quotient", jio::upoly_to_json(quo)},
                             {"remainder", jio::upoly_to_json(rem)}};
  }
  emit(payload);
  return kExitPositive;
}

RSCodePtr make_code(const FieldPtr& f, const std::string& eval_spec, unsigned k) {
  if (eval_spec == "star") return RSCode::standard(f, k);
  if (eval_spec == "full") return RSCode::extended(f, k);
  std::vector<std::uint64_t> D;
  std::size_t pos = 0;
  const std::string& s = eval_spec;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    D.push_back(std::stoull(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return RSCode::make(f, std::move(D), k);
}

int run_deephole_check(const FieldOpts& fopts, const std::string& eval_spec, unsigned k,
                       const std::string& poly_text, const std::vector<std::uint64_t>& word_vals,
                       const std::string& json_path, const std::string& oracle_name,
                       unsigned jobs) {
  RSCodePtr code;
  std::optional<ReceivedWord> w;
  if (!json_path.empty()) {
    const json j = load_json_file(json_path);
    code = jio::code_from_json(j.at("code"));
    if (j.contains("poly"))
      w = code->word_from_poly(
          UPoly::from_coeffs(code->field(), j.at("poly").get<std::vector<std::uint64_t>>()));
    else
      w = code->word(j.at("word").get<std::vector<std::uint64_t>>());
  } else {
    code = make_code(fopts.make(), eval_spec, k);
    if (!poly_text.empty() && !word_vals.empty())
      throw std::invalid_argument("give either --poly or --word, not both");
    if (!poly_text.empty())
      w = code->word_from_poly(parse_upoly(code->field(), poly_text));
    else if (!word_vals.empty())
      w = code->word(word_vals);
    else
      throw std::invalid_argument("a word is required: --poly, --word, or --json");
  }

  json oracles = json::object();
  std::optional<DeepHoleVerdict> verdict;
  const auto run_oracle = [&](DistanceOracle o, const char* name) {
    const DeepHoleVerdict v = code->distance_to_code(*w, o, jobs);
    oracles[name] = jio::verdict_to_json(v);
    if (!verdict) verdict = v;
  };
  if (oracle_name == "subset" || oracle_name == "both")
    run_oracle(DistanceOracle::subset_interpolation, "subset_interpolation");
  if (oracle_name == "enum" || oracle_name == "both")
    run_oracle(DistanceOracle::codeword_enumeration, "codeword_enumeration");

  json payload = jio::verdict_to_json(*verdict);
  payload["code"] = jio::code_to_json(*code);
  payload["n"] = code->n();
  payload["k"] = code->k();
  payload["word"] = jio::word_values(*w);
  payload["oracles"] = oracles;
  if (oracle_name == "both") {
    const auto& a = oracles["subset_interpolation"];
    const auto& b = oracles["codeword_enumeration"];
    payload["oracles_agree"] =
        a.at("distance") == b.at("distance") && a.at("witness") == b.at("witness");
  }
  emit(payload);
  return verdict->is_deep_hole ? kExitPositive : kExitNegative;
}

int run_deephole_census(const FieldOpts& fopts, const std::string& eval_spec, unsigned k,
                        std::size_t sample_limit, const std::string& csv_path, unsigned jobs) {
  const RSCodePtr code = make_code(fopts.make(), eval_spec, k);
  std::ofstream csv;
  std::function<void(std::uint64_t, unsigned, bool)> per_word;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    if (!csv) throw std::invalid_argument("cannot open CSV output file: " + csv_path);
    csv << "word_encoding,distance,is_deep_hole\n";
    per_word = [&csv](std::uint64_t enc, unsigned dist, bool deep) {
      csv << enc << "," << dist << "," << (deep ? 1 : 0) << "\n";
    };
  }
  const CensusResult res = code->enumerate_deep_holes(sample_limit, jobs, per_word);
  json samples = json::array();
  for (const auto& s : res.sample) samples.push_back(jio::word_values(s));
  json payload{{"code", jio::code_to_json(*code)},
               {"total_words", res.total_words},
               {"deep_holes", res.deep_holes},
               {"covering_radius", code->covering_radius()},
               {"sample", samples}};
  if (!csv_path.empty()) payload["csv"] = csv_path;
  emit(payload);
  return kExitPositive;
}

MonicTail tail_from_opts(unsigned k, unsigned d, std::vector<std::uint64_t> coeffs) {
  if (coeffs.empty()) coeffs.assign(d, 0);
  return MonicTail{k, d, std::move(coeffs)};
}

int run_surface_compute_l(const FieldOpts& fopts, unsigned k, unsigned d,
                          std::vector<std::uint64_t> coeffs) {
  const FieldPtr f = fopts.make();
  const MonicTail tail = tail_from_opts(k, d, std::move(coeffs));
  const HypersurfaceInstance H = compute_L(tail, f);
  emit(json{{"tail", jio::tail_to_json(tail, *f)},
            {"L", jio::mpoly_to_json(H.L)},
            {"L_text", H.L.to_string()},
            {"top_form", jio::mpoly_to_json(H.top_form)},
            {"total_degree", H.L.total_degree()},
            {"terms", H.L.num_terms()}});
  return kExitPositive;
}

int run_surface_chi(const FieldOpts& fopts, unsigned d, unsigned companion_k) {
  const FieldPtr f = fopts.make();
  const MPoly chi = chi_specialized(d, f);
  json payload{{"d", d}, {"chi", jio::mpoly_to_json(chi)}, {"chi_text", chi.to_string()}};
  bool ok = true;
  if (companion_k >= 2) {
    ok = chi_companion_check(companion_k, d, f);
    payload["companion_k"] = companion_k;
    payload["companion_check"] = ok;
  }
  emit(payload);
  return ok ? kExitPositive : kExitNegative;
}

int run_surface_find_point(const FieldOpts& fopts, unsigned k, unsigned d,
                           std::vector<std::uint64_t> coeffs, const std::string& json_path,
                           const std::string& constraint_name, bool randomized,
                           std::uint64_t seed, std::uint64_t trials, unsigned jobs) {
  MPoly P = [&] {
    if (!json_path.empty()) return jio::mpoly_from_json(load_json_file(json_path));
    const FieldPtr f = fopts.make();
    return compute_L(tail_from_opts(k, d, std::move(coeffs)), f).L;
  }();
  const PointConstraint constraint = constraint_name == "distinct"
                                         ? PointConstraint::distinct_only
                                         : PointConstraint::nonzero_distinct;
  std::optional<std::vector<std::uint64_t>> point;
  if (randomized) {
    Rng rng(seed);
    point = find_distinct_point_randomized(P, constraint, rng, trials);
  } else {
    point = find_distinct_point(P, constraint, jobs);
  }
  json payload{{"constraint", to_string(constraint)},
               {"randomized", randomized},
               {"seed", seed},
               {"point", point ? json(*point) : json(nullptr)}};
  emit(payload);
  return point ? kExitPositive : kExitNegative;
}

int run_surface_smooth_scan(unsigned d, std::uint64_t p, unsigned e, unsigned jobs) {
  const SmoothnessReport rep = curve_smoothness_scan(d, p, e, jobs);
  emit(jio::smoothness_report_to_json(rep));
  return rep.singular_affine == 0 && rep.singular_at_infinity == 0 ? kExitPositive
                                                                   : kExitNegative;
}

int run_bounds_margin(std::uint64_t q, unsigned k, unsigned d, const std::string& variant_name) {
  const MarginVariant variant =
      variant_name == "published" ? MarginVariant::published : MarginVariant::corrected;
  const BoundReport rep = theorem_margin(q, k, d, variant);
  emit(jio::bound_report_to_json(rep));
  return rep.applies ? kExitPositive : kExitNegative;
}

int run_bounds_count(const FieldOpts& fopts, const std::string& json_path, unsigned curve_d,
                     const std::string& constraint_name, unsigned jobs) {
  MPoly P = [&] {
    if (!json_path.empty()) return jio::mpoly_from_json(load_json_file(json_path));
    if (curve_d == 0)
      throw std::invalid_argument("either --json MPOLY_FILE or --curve-d D is required");
    const FieldPtr f = fopts.make();
    MPoly c = MPoly::zero(f, 2);
    for (unsigned i = 0; i <= curve_d; ++i)
      for (unsigned j = 0; i + j <= curve_d; ++j) c = c + MPoly::monomial(f, 2, {i, j}, 1);
    return c;
  }();
  PointConstraint constraint = PointConstraint::none;
  if (constraint_name == "nonzero-distinct") constraint = PointConstraint::nonzero_distinct;
  else if (constraint_name == "distinct") constraint = PointConstraint::distinct_only;
  else if (constraint_name != "none") throw std::invalid_argument("unknown --constraint");
  const std::uint64_t count = exact_point_count(P, constraint, jobs);
  emit(json{{"vars", P.nvars()},
            {"q", P.field()->q()},
            {"constraint", to_string(constraint)},
            {"count", count}});
  return kExitPositive;
}

int run_reduce_subset_sum(const FieldOpts& fopts, const std::vector<std::uint64_t>& set,
                          std::uint64_t target, unsigned size, const std::string& json_path,
                          bool map_only, unsigned jobs) {
  const SubsetSumInstance inst = [&] {
    if (!json_path.empty()) return jio::subset_instance_from_json(load_json_file(json_path));
    return SubsetSumInstance{fopts.make(), set, target, size};
  }();
  const DeepHoleMapping mapped = subset_sum_to_deephole(inst);
  json payload{{"instance", jio::subset_instance_to_json(inst)},
               {"code", jio::code_to_json(*mapped.code)},
               {"word", jio::word_values(mapped.word)},
               {"f", jio::upoly_to_json(mapped.f)}};
  if (map_only) {
    emit(payload);
    return kExitPositive;
  }
  const EquivalenceReport rep = verify_equivalence(inst, jobs);
  payload["report"] = jio::equivalence_report_to_json(rep);
  emit(payload);
  return rep.equivalence_holds ? kExitPositive : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deep holes of Reed-Solomon codes: exact oracles, the leading-coefficient "
               "hypersurface, point-count bounds, and the subset-sum reduction"};
  app.require_subcommand(1);

  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for partitioned scans")->capture_default_str();

  // field
  auto* field_cmd = app.add_subcommand("field", "Describe a finite field");
  FieldOpts field_fopts;
  field_fopts.attach(field_cmd);
  bool field_list = false;
  field_cmd->add_flag("--list-elements", field_list, "Include every element in the payload");

  // poly
  auto* poly_cmd = app.add_subcommand("poly", "Univariate polynomial utilities");
  FieldOpts poly_fopts;
  poly_fopts.attach(poly_cmd);
  std::string poly_text, poly_divisor;
  std::optional<std::uint64_t> poly_eval;
  poly_cmd->add_option("--poly", poly_text, "Polynomial text, e.g. \"x^3 + 2x + 1\"")->required();
  poly_cmd->add_option("--divmod", poly_divisor, "Divide by this polynomial");
  poly_cmd->add_option("--eval", poly_eval, "Evaluate at this element encoding");

  // deephole check | census
  auto* deephole = app.add_subcommand("deephole", "Deep-hole decisions");
  deephole->require_subcommand(1);
  auto* check = deephole->add_subcommand("check", "Exact distance / deep-hole verdict");
  FieldOpts check_fopts;
  check_fopts.attach(check, /*required=*/false);
  std::string check_eval = "star", check_poly, check_json, check_oracle = "both";
  std::vector<std::uint64_t> check_word;
  unsigned check_k = 1;
  check->add_option("--eval", check_eval, "Evaluation set: star, full, or x1,x2,...")
      ->capture_default_str();
  check->add_option("--k", check_k, "Code dimension");
  check->add_option("--poly", check_poly, "Word generator polynomial text");
  check->add_option("--word", check_word, "Word values y1,...,yn")->delimiter(',');
  check->add_option("--json", check_json, "JSON file: {\"code\":..., \"word\"|\"poly\":...}");
  check->add_option("--oracle", check_oracle, "subset | enum | both")->capture_default_str();

  auto* census = deephole->add_subcommand("census", "Exhaustive deep-hole census");
  FieldOpts census_fopts;
  census_fopts.attach(census);
  std::string census_eval = "star", census_csv;
  unsigned census_k = 1;
  std::size_t census_samples = 8;
  census->add_option("--eval", census_eval, "Evaluation set: star, full, or x1,x2,...")
      ->capture_default_str();
  census->add_option("--k", census_k, "Code dimension")->required();
  census->add_option("--samples", census_samples, "Deep holes to include in the payload")
      ->capture_default_str();
  census->add_option("--csv", census_csv, "Write per-word rows to this CSV file");

  // surface compute-l | chi | find-point | smooth-scan
  auto* surface = app.add_subcommand("surface", "Leading-coefficient hypersurface pipeline");
  surface->require_subcommand(1);

  auto* computel = surface->add_subcommand("compute-l", "Symbolic division: L and its top form");
  FieldOpts computel_fopts;
  computel_fopts.attach(computel);
  unsigned cl_k = 1, cl_d = 1;
  std::vector<std::uint64_t> cl_coeffs;
  computel->add_option("--k", cl_k, "Code dimension k")->required();
  computel->add_option("--d", cl_d, "Tail degree above k")->required();
  computel->add_option("--coeffs", cl_coeffs, "Low coefficients f0,...,f_{d-1} (default zeros)")
      ->delimiter(',');

  auto* chi = surface->add_subcommand("chi", "Specialized top form in two variables");
  FieldOpts chi_fopts;
  chi_fopts.attach(chi);
  unsigned chi_d = 1, chi_companion = 0;
  chi->add_option("--d", chi_d, "Degree")->required();
  chi->add_option("--companion-k", chi_companion,
                  "Also recompute through the symbolic pipeline at this k (>= 2)");

  auto* findp = surface->add_subcommand("find-point", "Distinct(-nonzero) rational point on L");
  FieldOpts findp_fopts;
  findp_fopts.attach(findp, /*required=*/false);
  unsigned fp_k = 1, fp_d = 1;
  std::vector<std::uint64_t> fp_coeffs;
  std::string fp_json, fp_constraint = "nonzero-distinct";
  bool fp_random = false;
  std::uint64_t fp_seed = 0, fp_trials = 100000;
  findp->add_option("--k", fp_k, "Code dimension k");
  findp->add_option("--d", fp_d, "Tail degree above k");
  findp->add_option("--coeffs", fp_coeffs, "Low coefficients f0,...,f_{d-1}")->delimiter(',');
  findp->add_option("--json", fp_json, "JSON file holding an arbitrary multivariate polynomial");
  findp->add_option("--constraint", fp_constraint, "nonzero-distinct | distinct")
      ->capture_default_str();
  findp->add_flag("--randomized", fp_random, "Random sampling instead of exhaustive scan");
  findp->add_option("--seed", fp_seed, "Random seed (echoed in the payload)")
      ->capture_default_str();
  findp->add_option("--trials", fp_trials, "Random trials before giving up")
      ->capture_default_str();

  auto* smooth = surface->add_subcommand("smooth-scan", "Exhaustive curve smoothness check");
  unsigned sm_d = 2, sm_e = 1;
  std::uint64_t sm_p = 5;
  smooth->add_option("--d", sm_d, "Curve degree")->required();
  smooth->add_option("--p", sm_p, "Characteristic (prime)")->required();
  smooth->add_option("--e", sm_e, "Extension degree")->capture_default_str();

  // bounds margin | count
  auto* bounds = app.add_subcommand("bounds", "Point-count bounds and exact counts");
  bounds->require_subcommand(1);

  auto* margin = bounds->add_subcommand("margin", "Positivity margin of the existence bound");
  std::uint64_t mg_q = 0;
  unsigned mg_k = 1, mg_d = 1;
  std::string mg_variant = "corrected";
  margin->add_option("--q", mg_q, "Field order (prime power)")->required();
  margin->add_option("--k", mg_k, "Code dimension k")->required();
  margin->add_option("--d", mg_d, "Tail degree d")->required();
  margin->add_option("--variant", mg_variant, "published | corrected")->capture_default_str();

  auto* count = bounds->add_subcommand("count", "Exact rational point count by exhaustive scan");
  FieldOpts count_fopts;
  count_fopts.attach(count, /*required=*/false);
  std::string count_json, count_constraint = "none";
  unsigned count_curve_d = 0;
  count->add_option("--json", count_json, "JSON file holding a multivariate polynomial");
  count->add_option("--curve-d", count_curve_d,
                    "Count zeros of the standard degree-D plane curve instead");
  count->add_option("--constraint", count_constraint, "none | distinct | nonzero-distinct")
      ->capture_default_str();

  // reduce subset-sum
  auto* reduce = app.add_subcommand("reduce", "Reductions between decision problems");
  reduce->require_subcommand(1);
  auto* subset = reduce->add_subcommand(
      "subset-sum", "Subset-sum instance to deep-hole instance, with verification");
  FieldOpts subset_fopts;
  subset_fopts.attach(subset, /*required=*/false);
  std::vector<std::uint64_t> ss_set;
  std::uint64_t ss_target = 0;
  unsigned ss_size = 2;
  std::string ss_json;
  bool ss_map_only = false;
  subset->add_option("--set", ss_set, "Distinct element encodings a1,...,an")->delimiter(',');
  subset->add_option("--target", ss_target, "Target sum b");
  subset->add_option("--size", ss_size, "Subset size s")->capture_default_str();
  subset->add_option("--json", ss_json, "JSON instance file");
  subset->add_flag("--map-only", ss_map_only, "Emit the mapped code and word without verifying");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message to stderr
    return kExitInvalid;
  }

  try {
    if (field_cmd->parsed()) return run_field(field_fopts, field_list);
    if (poly_cmd->parsed()) return run_poly(poly_fopts, poly_text, poly_divisor, poly_eval);
    if (deephole->parsed()) {
      if (check->parsed())
        return run_deephole_check(check_fopts, check_eval, check_k, check_poly, check_word,
                                  check_json, check_oracle, jobs);
      return run_deephole_census(census_fopts, census_eval, census_k, census_samples, census_csv,
                                 jobs);
    }
    if (surface->parsed()) {
      if (computel->parsed()) return run_surface_compute_l(computel_fopts, cl_k, cl_d, cl_coeffs);
      if (chi->parsed()) return run_surface_chi(chi_fopts, chi_d, chi_companion);
      if (findp->parsed())
        return run_surface_find_point(findp_fopts, fp_k, fp_d, fp_coeffs, fp_json, fp_constraint,
                                      fp_random, fp_seed, fp_trials, jobs);
      return run_surface_smooth_scan(sm_d, sm_p, sm_e, jobs);
    }
    if (bounds->parsed()) {
      if (margin->parsed()) return run_bounds_margin(mg_q, mg_k, mg_d, mg_variant);
      return run_bounds_count(count_fopts, count_json, count_curve_d, count_constraint, jobs);
    }
    if (reduce->parsed())
      return run_reduce_subset_sum(subset_fopts, ss_set, ss_target, ss_size, ss_json, ss_map_only,
                                   jobs);
    std::cerr << "error: no subcommand\n";
    return kExitInvalid;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid JSON input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
