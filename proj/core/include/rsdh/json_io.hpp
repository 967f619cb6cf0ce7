#ifndef RSDH_JSON_IO_HPP
#define RSDH_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "rsdh/bounds.hpp"
#include "rsdh/field.hpp"
#include "rsdh/mpoly.hpp"
#include "rsdh/reduction.hpp"
#include "rsdh/rscode.hpp"
#include "rsdh/surface.hpp"
#include "rsdh/upoly.hpp"

// JSON forms used by the CLI and any scripted caller. Shapes:
//   field:   {"p": int, "m": int, "modulus": [c0..cm]}   (modulus iff m > 1)
//   upoly:   {"field": field, "coeffs": [c0, c1, ...]}   (ascending)
//   mpoly:   {"field": field, "vars": v,
//             "terms": [{"exp": [e1..ev], "coeff": int}, ...]} (graded-lex)
//   code:    {"field": field, "eval_set": "star" | "full" | [int...], "k": int}
//   words:   plain integer arrays of canonical encodings
//   tail:    {"k": int, "d": int, "coeffs": [f0..f_{d-1}], "field": field}
//   subset:  {"field": field, "set": [int...], "target": int, "size": int}
// Big integers serialize as JSON numbers when they fit in int64, otherwise
// as decimal strings.
namespace rsdh::jsonio {

using nlohmann::json;

json field_to_json(const Field& f);
FieldPtr field_from_json(const json& j);

json upoly_to_json(const UPoly& u);
UPoly upoly_from_json(const json& j);

json mpoly_to_json(const MPoly& p);
MPoly mpoly_from_json(const json& j);

json code_to_json(const RSCode& c);
RSCodePtr code_from_json(const json& j);

json word_values(const ReceivedWord& w);

json tail_to_json(const MonicTail& t, const Field& f);
std::pair<MonicTail, FieldPtr> tail_from_json(const json& j);

json subset_instance_to_json(const SubsetSumInstance& inst);
SubsetSumInstance subset_instance_from_json(const json& j);

json bigint_to_json(const BigInt& v);
json bound_report_to_json(const BoundReport& r);

json verdict_to_json(const DeepHoleVerdict& v);
json smoothness_report_to_json(const SmoothnessReport& r);
json independence_report_to_json(const IndependenceReport& r);
json equivalence_report_to_json(const EquivalenceReport& r);

}  // namespace rsdh::jsonio

#endif
