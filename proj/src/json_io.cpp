#include "powerseq/json_io.hpp"

namespace powerseq {

Json rat_json(const Rat& r) { return to_text(r); }

namespace {

Json rats_json(const std::vector<Rat>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(rat_json(x));
  return a;
}

Json curves_json(const std::vector<std::pair<CurveSpec, int>>& cs, const char* field) {
  Json a = Json::array();
  for (const auto& [c, m] : cs) a.push_back({{"curve", to_text(c)}, {field, m}});
  return a;
}

}  // namespace

Json to_json(const ProjPoint& p) {
  Json coords = Json::array();
  for (const auto& c : p.coords()) {
    if (auto r = c.as_rational()) {
      coords.push_back(rat_json(*r));
    } else {
      coords.push_back({{"value", to_text(c)}, {"tower", tower_text(c)}});
    }
  }
  return {{"text", to_text(p)}, {"coords", coords}};
}

Json to_json(const CertificateRecord& c) {
  return {{"curve_spec", to_text(c.spec)}, {"k", c.k},           {"chart", c.chart.name()}, {"curve", c.curve},
          {"criterion", c.criterion},      {"quotient", c.quotient}, {"verified", c.verified}};
}

Json to_json(const ThroughPointReport& r) {
  return {{"point", to_json(r.point)},
          {"k", r.k},
          {"on_delta", r.on_delta},
          {"alpha_quadratic", to_text(r.alpha_quadratic, "alpha")},
          {"curves", curves_json(r.curves, "multiplicity")},
          {"total_multiplicity", r.total_multiplicity}};
}

Json to_json(const JacobianReport& r) {
  Json j = {{"point", to_json(r.point)},
            {"rank", r.rank},
            {"expected", r.expected},
            {"minor_rows", r.minor_rows},
            {"minor_cols", r.minor_cols},
            {"coefficient_det", to_text(r.coefficient_det)}};
  j["minor_det"] = r.minor_det ? Json(rat_json(*r.minor_det)) : Json(nullptr);
  return j;
}

Json to_json(const PullbackLedger& l) {
  Json ids = Json::array();
  for (const auto& d : l.identities)
    ids.push_back({{"label", d.label}, {"lhs", to_text(d.lhs)}, {"rhs", to_text(d.rhs)}, {"balanced", d.balanced()}});
  Json j = {{"base", to_text(l.base)},
            {"n", l.n},
            {"components", curves_json(l.components, "count")},
            {"degree_check", {to_text(l.degree_check.first), to_text(l.degree_check.second)}},
            {"identities", ids},
            {"verified", l.verified},
            {"notes", l.notes}};
  j["reduces_to"] = l.reduces_to ? Json(to_text(*l.reduces_to)) : Json(nullptr);
  return j;
}

Json to_json(const LowGenusReport& r) {
  Json cs = Json::array();
  for (const auto& [c, g] : r.curves) cs.push_back({{"curve", to_text(c)}, {"genus", rat_json(g)}});
  return {{"n", r.surface.n}, {"k", r.surface.k}, {"g", r.g}, {"below_threshold", r.below_threshold}, {"curves", cs}};
}

Json to_json(const TwistLedger& t, const SurfaceId& s, int g) {
  return {{"n", s.n},
          {"k", s.k},
          {"g", g},
          {"start", t.start},
          {"subtracted", t.subtracted},
          {"final_twist", t.final_twist},
          {"degree_bound", rat_json(t.degree_bound)},
          {"degree_bound_literal", rat_json(t.degree_bound_literal)},
          {"negative", t.negative}};
}

Json to_json(const SeqRecord& r) {
  Json j = {{"entries", rats_json(r.entries)}, {"k", r.k}, {"powers", rats_json(r.powers)}, {"classification", to_text(r.cls)}};
  j["second_diff"] = r.second_diff ? Json(rat_json(*r.second_diff)) : Json(nullptr);
  if (r.ap) j["ap"] = {{"a", rat_json(r.ap->first)}, {"b", rat_json(r.ap->second)}};
  return j;
}

Json to_json(const YapRecord& r) {
  Json pts = Json::array();
  for (const auto& [x, y] : r.points) pts.push_back({rat_json(x), rat_json(y)});
  return {{"k", r.k}, {"b", rat_json(r.b)}, {"u", rat_json(r.u)}, {"v", rat_json(r.v)}, {"points", pts}};
}

Json to_json(const PolySeq& p) {
  Json es = Json::array();
  for (const auto& f : p.entries) es.push_back(to_text(f, "t"));
  Json j = {{"entries", es}, {"k", p.k}, {"classification", to_text(p.cls)}, {"second_diff", to_text(p.second_diff, "t")}};
  if (p.a) {
    j["a"] = to_text(*p.a, "t");
    j["b"] = to_text(*p.b, "t");
    j["signs"] = p.signs;
  }
  return j;
}

}  // namespace powerseq
