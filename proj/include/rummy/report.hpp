#pragma once

// Structured (JSON) records for every result type. Field names are stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "rummy/constructions.hpp"
#include "rummy/declare.hpp"
#include "rummy/mindist.hpp"
#include "rummy/montecarlo.hpp"
#include "rummy/verifiers.hpp"

namespace rummy {

using Json = nlohmann::ordered_json;

inline Json cards_json(const std::vector<Card>& cards) {
  Json out = Json::array();
  for (Card c : cards) out.push_back(c.token());
  return out;
}

inline Json replacements_json(const std::vector<std::pair<Card, Card>>& reps) {
  Json out = Json::array();
  for (const auto& [removed, added] : reps) out.push_back({{"removed", removed.token()}, {"added", added.token()}});
  return out;
}

inline Json to_json(const MinDistResult& r, const Hand& h, const JokerContext& ctx) {
  return Json{{"hand", h.render()},
              {"wcj", ctx.wcj().token()},
              {"mindist", r.value},
              {"kept", cards_json(r.kept)},
              {"replacements", replacements_json(r.replacements)},
              {"target", r.target.render()},
              {"witness_melds", render_declaration(r.witness, ctx)}};
}

inline Json to_json(const DeclareResult& r, const Hand& h, const JokerContext& ctx) {
  Json out{{"hand", h.render()}, {"wcj", ctx.wcj().token()}, {"declarable", r.declarable}};
  out["witness_melds"] = r.witness ? Json(render_declaration(*r.witness, ctx)) : Json::array();
  return out;
}

inline Json to_json(const Certificate& c, const CertificateCheck& chk, const Hand& h, const JokerContext& ctx) {
  return Json{{"hand", h.render()},
              {"wcj", ctx.wcj().token()},
              {"bound_source", to_string(c.source)},
              {"bound", bound_of(c.source)},
              {"claimed_distance", c.claimed_distance},
              {"split_case", to_string(c.split)},
              {"fallback", c.fallback},
              {"kept", cards_json(c.kept)},
              {"replacements", replacements_json(c.replacements)},
              {"target", c.target.render()},
              {"witness_melds", render_declaration(c.witness, ctx)},
              {"verified", chk.valid},
              {"fault", to_string(chk.fault)}};
}

inline Json to_json(const CaseReport& r) {
  Json esc = Json::array();
  for (const auto& e : r.escalated) esc.push_back({{"id", e.id}, {"min_dist", e.value}, {"passed", e.passed}});
  Json figures = Json::object();
  for (const auto& [k, v] : r.figures) figures[k] = v;
  return Json{{"universe", r.universe},
              {"cases_enumerated", r.cases_enumerated},
              {"cases_passed", r.cases_passed},
              {"failures", r.failures},
              {"escalations", r.escalations},
              {"escalated", esc},
              {"figures", figures},
              {"passed", r.passed()}};
}

inline Json to_json(const ExtremalReport& r) {
  Json variants = Json::array();
  for (const auto& v : r.variants)
    variants.push_back({{"label", v.label}, {"hand", v.hand}, {"wcj", v.wcj}, {"min_dist", v.value}});
  return Json{{"hand", r.hand},
              {"wcj", r.wcj},
              {"min_dist", r.min_dist},
              {"witness_melds", render_declaration(r.solution.witness, JokerContext(parse_card(r.wcj)))},
              {"target_melds", r.target_melds},
              {"target_valid", r.target_valid},
              {"target_distance", r.target_distance},
              {"construction_matches_target", r.construction_matches},
              {"construction_distance", r.construction_distance},
              {"variants", variants},
              {"passed", r.passed()}};
}

inline Json to_json(const DistributionReport& r) {
  Json hist = Json::object();
  for (const auto& [v, c] : r.histogram) hist[std::to_string(v)] = c;
  return Json{{"sample_size", r.sample_size},
              {"seed", r.seed},
              {"histogram", hist},
              {"mass_2_to_4", r.mass_2_to_4},
              {"max_observed", r.max_observed},
              {"max_example", {{"hand", r.max_hand}, {"wcj", r.max_wcj}}}};
}

}  // namespace rummy
