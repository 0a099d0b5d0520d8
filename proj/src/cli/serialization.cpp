#include "leodyn/cli/serialization.hpp"

#include "leodyn/core/errors.hpp"

namespace leodyn::cli {

using interval::Interval;
using interval::IntervalSet;
using symbolic::SequencePoint;

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field \"") + key + "\": " + e.what());
  }
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

json encode_point(const Rational& x) { return encode(x); }
json encode_point(const SequencePoint& p) { return encode(p); }

template <class Point>
json encode_spec(const spec::SpecificationInstance<Point>& s) {
  json segments = json::array();
  for (const auto& seg : s.segments) {
    json triple = json::array({seg.a, seg.b, encode_point(seg.x)});
    if (seg.anchored) triple.push_back(true);
    segments.push_back(std::move(triple));
  }
  return {{"gap", s.gap}, {"eps", encode(s.eps)}, {"segments", std::move(segments)}};
}

template <class Point, class DecodePoint>
spec::SpecificationInstance<Point> decode_spec(const json& j, DecodePoint decode_point) {
  spec::SpecificationInstance<Point> s;
  s.gap = field<int>(j, "gap");
  s.eps = decode_rational(member(j, "eps"));
  const json& segments = member(j, "segments");
  if (!segments.is_array()) throw ParseError("segments must be an array");
  for (const json& t : segments) {
    if (!t.is_array() || t.size() < 3 || t.size() > 4 || !t[0].is_number_integer() || !t[1].is_number_integer()) {
      throw ParseError("segment must be [a, b, x] with integer a, b");
    }
    spec::OrbitSegment<Point> seg;
    seg.a = t[0].get<int>();
    seg.b = t[1].get<int>();
    seg.x = decode_point(t[2]);
    seg.anchored = t.size() == 4 && t[3].is_boolean() && t[3].get<bool>();
    s.segments.push_back(std::move(seg));
  }
  return s;
}

template <class S, class EncodeRegion>
json encode_shadow(const spec::ShadowResult<S>& r, EncodeRegion encode_region) {
  json certificate = json::array();
  for (const auto& region : r.certificate) certificate.push_back(encode_region(region));
  json out = {{"certificate", std::move(certificate)},
              {"anchor_time", r.anchor_time},
              {"anchor_point", encode_point(r.anchor_point)},
              {"representative", encode_point(r.representative)},
              {"max_deviation", encode(r.max_deviation)},
              {"covering_time", r.covering_time}};
  out["period"] = r.period ? json(*r.period) : json(nullptr);
  return out;
}

template <class S, class DecodeRegion, class DecodePoint>
spec::ShadowResult<S> decode_shadow(const json& j, DecodeRegion decode_region, DecodePoint decode_point) {
  spec::ShadowResult<S> r;
  for (const json& region : member(j, "certificate")) r.certificate.push_back(decode_region(region));
  r.anchor_time = field<int>(j, "anchor_time");
  r.anchor_point = decode_point(member(j, "anchor_point"));
  r.representative = decode_point(member(j, "representative"));
  r.max_deviation = decode_rational(member(j, "max_deviation"));
  r.covering_time = field<int>(j, "covering_time");
  if (j.contains("period") && !j.at("period").is_null()) r.period = field<int>(j, "period");
  return r;
}

symbolic::Word decode_word(const json& j) {
  if (!j.is_array()) throw ParseError("word must be an array of symbols");
  symbolic::Word w;
  for (const json& s : j) {
    if (!s.is_number_integer()) throw ParseError("symbols must be integers");
    w.push_back(s.get<int>());
  }
  return w;
}

}  // namespace

json encode(const Rational& q) { return format_rational(q); }

Rational decode_rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a \"p/q\" string or an integer");
}

json encode(const Interval& iv) {
  json out = json::array({encode(iv.lo), encode(iv.hi)});
  if (!iv.lo_closed || iv.hi_closed) {
    out.push_back(std::string{iv.lo_closed ? '[' : '(', iv.hi_closed ? ']' : ')'});
  }
  return out;
}

Interval decode_interval(const json& j) {
  if (!j.is_array() || j.size() < 2 || j.size() > 3) throw ParseError("interval must be [lo, hi] or [lo, hi, flags]");
  Interval iv{decode_rational(j[0]), decode_rational(j[1]), true, false};
  if (j.size() == 3) {
    if (!j[2].is_string()) throw ParseError("interval flags must be a string");
    const std::string flags = j[2].get<std::string>();
    if (flags.size() != 2 || (flags[0] != '[' && flags[0] != '(') || (flags[1] != ']' && flags[1] != ')')) {
      throw ParseError("interval flags must be one of [) [] (] ()");
    }
    iv.lo_closed = flags[0] == '[';
    iv.hi_closed = flags[1] == ']';
  }
  return iv;
}

json encode(const IntervalSet& s) {
  json out = json::array();
  for (const Interval& iv : s.parts()) out.push_back(encode(iv));
  return out;
}

IntervalSet decode_interval_set(const json& j) {
  if (!j.is_array()) throw ParseError("interval set must be an array of intervals");
  std::vector<Interval> parts;
  for (const json& iv : j) parts.push_back(decode_interval(iv));
  return IntervalSet(parts);
}

json encode(const interval::PiecewiseAffineMap& f) {
  json branches = json::array();
  for (const auto& b : f.branches()) {
    branches.push_back(
        {{"lo", encode(b.lo)}, {"hi", encode(b.hi)}, {"slope", encode(b.slope)}, {"intercept", encode(b.intercept)}});
  }
  return {{"topology", interval::to_string(f.topology())},
          {"reduce_mod_one", f.reduces_mod_one()},
          {"branches", std::move(branches)}};
}

interval::PiecewiseAffineMap decode_map(const json& j) {
  std::vector<interval::AffineBranch> branches;
  const json& table = member(j, "branches");
  if (!table.is_array()) throw ParseError("branches must be an array");
  for (const json& b : table) {
    branches.push_back({decode_rational(member(b, "lo")), decode_rational(member(b, "hi")),
                        decode_rational(member(b, "slope")), decode_rational(member(b, "intercept"))});
  }
  const bool reduce = j.contains("reduce_mod_one") ? field<bool>(j, "reduce_mod_one") : false;
  return interval::PiecewiseAffineMap(std::move(branches), interval::parse_topology(field<std::string>(j, "topology")),
                                      reduce);
}

json encode(const symbolic::ShiftSpace& space) {
  if (space.kind() == symbolic::ShiftSpace::Kind::countdown_graph) {
    return {{"kind", "countdown_graph"}, {"truncation", space.truncation()}};
  }
  return {{"kind", "finite_type"}, {"matrix", space.matrix()}};
}

symbolic::ShiftSpace decode_shift_space(const json& j) {
  const auto kind = field<std::string>(j, "kind");
  if (kind == "countdown_graph") return symbolic::ShiftSpace::countdown_graph(field<int>(j, "truncation"));
  if (kind == "finite_type") return symbolic::ShiftSpace::finite_type(field<std::vector<std::vector<int>>>(j, "matrix"));
  throw ParseError("unknown shift space kind \"" + kind + "\"");
}

json encode(const SequencePoint& p) { return {{"prefix", p.prefix}, {"cycle", p.cycle}}; }

SequencePoint decode_sequence_point(const json& j) {
  SequencePoint p{decode_word(member(j, "prefix")), decode_word(member(j, "cycle"))};
  if (p.cycle.empty()) throw ParseError("sequence cycle must be nonempty");
  return p;
}

json encode(const symbolic::CylinderSet& c) { return c.words(); }

symbolic::CylinderSet decode_cylinder_set(const symbolic::ShiftSpace& space, const json& j) {
  if (!j.is_array()) throw ParseError("cylinder set must be an array of words");
  std::vector<symbolic::Word> words;
  for (const json& w : j) words.push_back(decode_word(w));
  if (words.size() == 1 && words.front().empty()) return symbolic::CylinderSet::whole();
  return symbolic::CylinderSet(space, std::move(words));
}

json encode(const spec::SpecificationInstance<Rational>& s) { return encode_spec(s); }
json encode(const spec::SpecificationInstance<SequencePoint>& s) { return encode_spec(s); }

spec::SpecificationInstance<Rational> decode_interval_spec(const json& j) {
  return decode_spec<Rational>(j, [](const json& x) { return decode_rational(x); });
}

spec::SpecificationInstance<SequencePoint> decode_shift_spec(const json& j) {
  return decode_spec<SequencePoint>(j, [](const json& x) { return decode_sequence_point(x); });
}

json encode(const spec::ShadowResult<spec::IntervalSystem>& r) {
  return encode_shadow(r, [](const IntervalSet& s) { return encode(s); });
}

json encode(const spec::ShadowResult<spec::ShiftSystem>& r) {
  return encode_shadow(r, [](const symbolic::CylinderSet& c) { return encode(c); });
}

spec::ShadowResult<spec::IntervalSystem> decode_interval_shadow(const json& j) {
  return decode_shadow<spec::IntervalSystem>(
      j, [](const json& r) { return decode_interval_set(r); }, [](const json& x) { return decode_rational(x); });
}

spec::ShadowResult<spec::ShiftSystem> decode_shift_shadow(const symbolic::ShiftSpace& space, const json& j) {
  return decode_shadow<spec::ShiftSystem>(
      j, [&](const json& r) { return decode_cylinder_set(space, r); },
      [](const json& x) { return decode_sequence_point(x); });
}

json encode(const constructions::CantorApprox& a) {
  json ledger = json::array();
  for (const auto& e : a.ledger) {
    ledger.push_back({{"point", encode(e.point)},
                      {"radius", encode(e.radius)},
                      {"enumeration_index", e.enumeration_index},
                      {"period", e.period},
                      {"removed_pieces", e.removed_pieces}});
  }
  return {{"level", a.level},
          {"depth", a.depth},
          {"zeta0", encode(a.zeta0)},
          {"ratio", encode(a.ratio)},
          {"max_period", a.max_period},
          {"remaining", encode(a.remaining)},
          {"ledger", std::move(ledger)}};
}

constructions::CantorApprox decode_cantor(const json& j) {
  constructions::CantorApprox a;
  a.level = field<int>(j, "level");
  a.depth = field<int>(j, "depth");
  a.zeta0 = decode_rational(member(j, "zeta0"));
  a.ratio = decode_rational(member(j, "ratio"));
  a.max_period = field<int>(j, "max_period");
  a.remaining = decode_interval_set(member(j, "remaining"));
  for (const json& e : member(j, "ledger")) {
    a.ledger.push_back({decode_rational(member(e, "point")), decode_rational(member(e, "radius")),
                        field<std::size_t>(e, "enumeration_index"), field<int>(e, "period"),
                        field<std::size_t>(e, "removed_pieces")});
  }
  return a;
}

json encode(const interval::BetaValue& b) {
  return {{"lower", encode(b.lower())}, {"upper", encode(b.upper())}, {"precision_bits", b.precision_bits()}};
}

interval::BetaValue decode_beta_value(const json& j) {
  Rational lo = decode_rational(member(j, "lower"));
  Rational hi = decode_rational(member(j, "upper"));
  if (lo == hi) return interval::BetaValue::exact(lo);
  return interval::BetaValue::enclosure(lo, hi, field<int>(j, "precision_bits"));
}

json encode(const interval::BetaExpansion& e) {
  json out = {{"beta", encode(e.beta)}, {"digits", e.digits}, {"convention", interval::to_string(e.convention)}};
  out["period"] = e.period ? json{{"start", e.period->start}, {"length", e.period->length}} : json(nullptr);
  return out;
}

interval::BetaExpansion decode_beta_expansion(const json& j) {
  const auto convention = field<std::string>(j, "convention");
  if (convention != "greedy" && convention != "quasi-greedy") throw ParseError("unknown convention " + convention);
  interval::BetaExpansion e{decode_beta_value(member(j, "beta")), field<std::vector<int>>(j, "digits"),
                            convention == "greedy" ? interval::ExpansionConvention::greedy
                                                   : interval::ExpansionConvention::quasi_greedy,
                            std::nullopt};
  if (j.contains("period") && !j.at("period").is_null()) {
    const json& p = j.at("period");
    e.period = interval::Periodicity{field<std::size_t>(p, "start"), field<std::size_t>(p, "length")};
  }
  return e;
}

}  // namespace leodyn::cli
