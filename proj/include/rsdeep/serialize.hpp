#ifndef RSDEEP_SERIALIZE_HPP
#define RSDEEP_SERIALIZE_HPP

#include "json.hpp"

#include "rsdeep/constructions.hpp"
#include "rsdeep/deep_ball.hpp"

namespace rsdeep {

using json = nlohmann::ordered_json;

/// {"p": p, "tower": [modulus coefficients per level, innermost first]}
json field_to_json(const FieldCtx& ctx);
FieldCtx field_from_json(const json& j);

/// Coefficient indices, constant term first.
json poly_to_json(const Poly& p);
Poly poly_from_json(const FieldCtx& ctx, const json& j);

/// Exact rational as {"num": "...", "den": "..."} with decimal strings.
json rational_to_json(const mpq_class& v);
mpq_class rational_from_json(const json& j);

struct CenterRecord {
  DeepBallParams params;
  Word center;
};
json center_to_json(const DeepBallParams& params, const Word& center);
/// Rebuilds the field tower and checks that the stored center matches a
/// recomputation; throws Parse on malformed or inconsistent input.
CenterRecord center_from_json(const json& j);

json record_to_json(const ConstructionRecord& rec);
ConstructionRecord record_from_json(const json& j);

}  // namespace rsdeep

#endif  // RSDEEP_SERIALIZE_HPP
