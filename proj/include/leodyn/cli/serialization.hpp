#pragma once
// JSON encodings of the library's value types.  Rationals are "p/q"
// strings; an interval is ["lo","hi"] when half-open and carries a third
// element such as "()" or "[]" for other endpoint flags.

#include <json.hpp>

#include "leodyn/constructions/feliks.hpp"
#include "leodyn/interval/affine_map.hpp"
#include "leodyn/interval/beta_expansion.hpp"
#include "leodyn/specification/systems.hpp"
#include "leodyn/symbolic/cylinder_set.hpp"

namespace leodyn::cli {

using json = nlohmann::json;

json encode(const Rational& q);
Rational decode_rational(const json& j);

json encode(const interval::Interval& iv);
interval::Interval decode_interval(const json& j);
json encode(const interval::IntervalSet& s);
interval::IntervalSet decode_interval_set(const json& j);

json encode(const interval::PiecewiseAffineMap& f);
interval::PiecewiseAffineMap decode_map(const json& j);

json encode(const symbolic::ShiftSpace& space);
symbolic::ShiftSpace decode_shift_space(const json& j);
json encode(const symbolic::SequencePoint& p);
symbolic::SequencePoint decode_sequence_point(const json& j);
json encode(const symbolic::CylinderSet& c);
symbolic::CylinderSet decode_cylinder_set(const symbolic::ShiftSpace& space, const json& j);

// Segments are [a, b, x] triples, with a fourth element true for anchored
// segments.
json encode(const spec::SpecificationInstance<Rational>& s);
json encode(const spec::SpecificationInstance<symbolic::SequencePoint>& s);
spec::SpecificationInstance<Rational> decode_interval_spec(const json& j);
spec::SpecificationInstance<symbolic::SequencePoint> decode_shift_spec(const json& j);

json encode(const spec::ShadowResult<spec::IntervalSystem>& r);
json encode(const spec::ShadowResult<spec::ShiftSystem>& r);
spec::ShadowResult<spec::IntervalSystem> decode_interval_shadow(const json& j);
spec::ShadowResult<spec::ShiftSystem> decode_shift_shadow(const symbolic::ShiftSpace& space, const json& j);

json encode(const constructions::CantorApprox& a);
constructions::CantorApprox decode_cantor(const json& j);

json encode(const interval::BetaValue& b);
interval::BetaValue decode_beta_value(const json& j);
json encode(const interval::BetaExpansion& e);
interval::BetaExpansion decode_beta_expansion(const json& j);

}  // namespace leodyn::cli
