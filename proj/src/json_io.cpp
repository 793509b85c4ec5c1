#include "msum/json_io.hpp"

namespace msum {

Json to_json(const IntSet& s) {
  return Json{{"horizon", s.horizon()},
              {"elements", std::vector<Value>(s.elements().begin(), s.elements().end())}};
}

Json to_json(const Classification& c) {
  Json j{{"is_sum_closed", c.is_sum_closed},
         {"is_multisum_closed", c.is_multisum_closed},
         {"is_vacuously_multisum", c.is_vacuously_multisum},
         {"is_sum_free", c.is_sum_free},
         {"is_multisum_free", c.is_multisum_free}};
  j["complete_from"] = c.complete_from ? Json(*c.complete_from) : Json(nullptr);
  return j;
}

Json closure_stats_json(const ClosureResult& r) {
  return Json{{"rounds", r.rounds},
              {"added_per_round", r.added_per_round},
              {"saturated", r.saturated},
              {"near_horizon_growth", r.near_horizon_growth}};
}

Json to_json(const LinearityResult& r) {
  Json j;
  if (r.certificate) {
    j["k"] = r.certificate->k;
    j["N"] = r.certificate->N;
    j["horizon"] = r.certificate->horizon;
    j["window_count"] = r.certificate->window_count;
  } else {
    j["k"] = nullptr;
    j["N"] = nullptr;
    j["horizon"] = nullptr;
    j["window_count"] = nullptr;
  }
  j["status"] = to_string(r.status);
  return j;
}

Json to_json(const ConditionReport& r) {
  return Json{{"passed", r.passed},
              {"c1_checked_range", {r.c1_first, r.c1_last}},
              {"c1_violations", r.c1_violations},
              {"c2_checked_max", r.c2_checked_max},
              {"c2_violations", r.c2_violations}};
}

namespace {

Json witness_json(const Lemma1Witness& w) { return Json::array({w.d, w.a, w.b, w.k}); }

}  // namespace

Json to_json(const PartOneTrace& t) {
  Json j;
  j["M"] = t.M;
  Json triples = Json::array();
  for (const auto& c : t.T) triples.push_back({c.t, c.x, c.y, c.w, c.z});
  j["T"] = std::move(triples);
  j["D"] = t.D;
  Json alts = Json::array();
  for (const auto& a : t.alt) alts.push_back({a.d, a.tag, a.r, a.s, a.t});
  j["alt"] = std::move(alts);
  Json pairs = Json::array();
  for (const auto& [d, x] : t.S) pairs.push_back({d, x});
  j["S"] = std::move(pairs);
  j["collision"] = t.collision ? Json::array({t.collision->first, t.collision->second}) : Json(nullptr);
  j["lemma2_case"] = t.lemma2 ? Json(to_string(t.lemma2->which)) : Json(nullptr);
  const Lemma1Witness& w = t.direct_witness ? *t.direct_witness : t.lemma2->witness;
  j["witness"] = witness_json(w);
  j["k"] = t.k;
  return j;
}

Json to_json(const MinimalPeriodTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back({s.r, s.x, s.s, s.c, s.k_next});
  return Json{{"k0", t.k0}, {"steps", std::move(steps)}, {"k_final", t.k_final}};
}

Json to_json(const Lemma1Trace& t) {
  Json j{{"witness", witness_json(t.witness)},
         {"ok", t.ok},
         {"steps", t.steps.size()},
         {"confirmed_multiples", t.confirmed_multiples.size()}};
  if (!t.confirmed_multiples.empty()) j["largest_confirmed"] = t.confirmed_multiples.back();
  if (t.failure) {
    j["failure"] = Json{{"value", t.failure->value},
                        {"identity", t.failure->identity},
                        {"present", t.failure->present},
                        {"distinct", t.failure->distinct}};
  }
  return j;
}

Json to_json(const ExtractionResult& r) {
  return Json{{"conditions", to_json(r.conditions)},
              {"part_one", to_json(r.part_one)},
              {"lemma1", to_json(r.lemma1)},
              {"part_two", to_json(r.part_two)},
              {"linearity", to_json(r.linearity)},
              {"k_final", r.k},
              {"consistent", r.consistent}};
}

Json to_json(const CensusRecord& r) {
  return Json{{"family", to_string(r.family)},
              {"B", r.B},
              {"count", r.count},
              {"max_size", r.max_size},
              {"witnesses", r.witnesses}};
}

}  // namespace msum
