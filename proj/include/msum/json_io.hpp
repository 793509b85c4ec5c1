#pragma once

#include "json.hpp"
#include "msum/census.hpp"
#include "msum/closure.hpp"
#include "msum/intset.hpp"
#include "msum/linearity.hpp"
#include "msum/schmerl.hpp"

namespace msum {

using Json = nlohmann::ordered_json;

Json to_json(const IntSet& s);
Json to_json(const Classification& c);
/// {rounds, added_per_round, saturated, near_horizon_growth}
Json closure_stats_json(const ClosureResult& r);
/// {k, N, horizon, window_count, status}; numeric fields are null without a certificate.
Json to_json(const LinearityResult& r);
Json to_json(const ConditionReport& r);
Json to_json(const PartOneTrace& t);
Json to_json(const MinimalPeriodTrace& t);
Json to_json(const Lemma1Trace& t);
/// {conditions, part_one, lemma1, part_two, linearity, k_final, consistent}
Json to_json(const ExtractionResult& r);
Json to_json(const CensusRecord& r);

}  // namespace msum
